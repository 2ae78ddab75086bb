#include "acfu/construct.hpp"

#include <algorithm>
#include <numeric>

#include "acfu/error.hpp"
#include "acfu/finite_field.hpp"
#include "acfu/verify.hpp"

namespace acfu {
namespace {

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::vector<std::string> product_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(pair_label(x, y));
  }
  return out;
}

class SeedExtensionRule final : public HashRule {
 public:
  SeedExtensionRule(HashFamily g, Quasigroup q) : g_(std::move(g)), q_(std::move(q)) {}
  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const auto n = q_.order();
    return q_.mul(g_(x, s / n), static_cast<std::uint32_t>(s % n));
  }

 private:
  HashFamily g_;
  Quasigroup q_;
};

class PointExtensionRule final : public HashRule {
 public:
  PointExtensionRule(HashFamily g, Quasigroup q) : g_(std::move(g)), q_(std::move(q)) {}
  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const auto n = q_.order();
    return q_.mul(g_(x / n, s), static_cast<std::uint32_t>(x % n));
  }

 private:
  HashFamily g_;
  Quasigroup q_;
};

class ConcatRule final : public HashRule {
 public:
  ConcatRule(HashFamily f1, HashFamily f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}
  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const auto n = f2_.s_size();
    return f2_(f1_(x, s / n), s % n);
  }

 private:
  HashFamily f1_;
  HashFamily f2_;
};

void require_carrier(const HashFamily& g, const Quasigroup& q) {
  if (g.a_labels() != q.labels()) {
    throw Error(ErrorCode::CarrierMismatch, "value set of " + g.descriptor() + " differs from the quasigroup carrier");
  }
}

}  // namespace

Quasigroup::Quasigroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotLatinSquare, "empty carrier");
  if (table_.size() != n) throw Error(ErrorCode::NotLatinSquare, "table is not |A| x |A|");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::NotLatinSquare, "table is not |A| x |A|");
  }
  division_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> seen_col(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      const auto a = table_[c][b];
      if (a >= n || seen_col[a]++) {
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + " is not a permutation");
      }
      division_[a][b] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0);
    for (auto v : table_[a]) {
      if (seen_row[v]++) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " repeats a symbol");
    }
  }
}

Quasigroup Quasigroup::from_table(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels) {
  return Quasigroup(std::move(table), std::move(labels));
}

Quasigroup Quasigroup::cyclic(std::uint32_t n) { return cyclic(index_labels(n)); }

Quasigroup Quasigroup::cyclic(std::vector<std::string> labels) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  return from_group(AbelianGroup::cyclic(n), std::move(labels));
}

Quasigroup Quasigroup::elementary(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p) || m == 0) throw Error(ErrorCode::UnsupportedParameters, "elementary group needs prime p, m >= 1");
  const auto group = AbelianGroup::elementary(p, m);
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < group.size(); ++i) labels.push_back(vector_label(to_digits(i, p, m)));
  return from_group(group, std::move(labels));
}

Quasigroup Quasigroup::from_group(const AbelianGroup& group, std::vector<std::string> labels) {
  const auto n = static_cast<std::uint32_t>(group.size());
  if (labels.size() != n) throw Error(ErrorCode::NotLatinSquare, "label count differs from group order");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = group.add(a, b);
  }
  return Quasigroup(std::move(table), std::move(labels));
}

Quasigroup Quasigroup::random(std::vector<std::string> labels, std::mt19937_64& rng) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  std::vector<std::uint32_t> rows(n), cols(n), symbols(n);
  std::iota(rows.begin(), rows.end(), 0u);
  std::iota(cols.begin(), cols.end(), 0u);
  std::iota(symbols.begin(), symbols.end(), 0u);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(symbols.begin(), symbols.end(), rng);
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = symbols[(rows[a] + cols[b]) % n];
  }
  return Quasigroup(std::move(table), std::move(labels));
}

HashFamily seed_extension(const HashFamily& g, const Quasigroup& q) {
  require_carrier(g, q);
  HashFamily f(g.x_labels(), product_labels(g.s_labels(), q.labels()), g.a_labels(),
               std::make_shared<SeedExtensionRule>(g, q), "seed_extension(" + g.descriptor() + ")");
  f.with_groups(g.x_group(), g.a_group());
  return f;
}

HashFamily point_extension(const HashFamily& g, const Quasigroup& q) {
  require_carrier(g, q);
  HashFamily f(product_labels(g.x_labels(), q.labels()), g.s_labels(), g.a_labels(),
               std::make_shared<PointExtensionRule>(g, q), "point_extension(" + g.descriptor() + ")");
  f.with_groups(std::nullopt, g.a_group());
  if (!regularity_check(g).regular) f.annotate("input is not regular, so the point extension is not regular either");
  return f;
}

HashFamily concatenate(const HashFamily& f1, const HashFamily& f2) {
  if (f1.a_labels() != f2.x_labels()) {
    throw Error(ErrorCode::DomainMismatch, "value set of " + f1.descriptor() + " differs from the point set of " +
                                               f2.descriptor());
  }
  HashFamily f(f1.x_labels(), product_labels(f1.s_labels(), f2.s_labels()), f2.a_labels(),
               std::make_shared<ConcatRule>(f1, f2), "concatenate(" + f1.descriptor() + "," + f2.descriptor() + ")");
  f.with_groups(std::nullopt, f2.a_group());
  if (const auto bound = concatenation_bound(f1, f2)) f.annotate("acfu_bound " + to_fraction_string(*bound));
  return f;
}

std::optional<Rational> concatenation_bound(const HashFamily& f1, const HashFamily& f2) {
  if (!regularity_check(f1).regular || !regularity_check(f2).regular) return std::nullopt;
  const Rational e1 = min_epsilon(f1, HashClass::ASU).eps;
  const Rational e2 = min_epsilon(f2, HashClass::ACFU).eps;
  Rational bound = e1 * e2 * (static_cast<long>(f1.a_size()) - 1) + e1;
  bound.canonicalize();
  return bound;
}

LiftResult krawczyk_lift(const HashFamily& g, std::optional<Rational> eps) {
  const Rational measured = min_epsilon(g, HashClass::Balanced).eps;
  if (eps && measured > *eps) {
    throw Error(ErrorCode::NotBalanced, "balancedness is " + to_fraction_string(measured) + " > " +
                                            to_fraction_string(*eps));
  }
  const Rational e = eps.value_or(measured);
  auto lifted = seed_extension(g, Quasigroup::from_group(*g.a_group(), g.a_labels()));
  const Rational asu = min_epsilon(lifted, HashClass::ASU).eps;
  if (asu > e) {
    throw Error(ErrorCode::TheoremViolation, "lift has eps_asu = " + to_fraction_string(asu) +
                                                 " above the balancedness " + to_fraction_string(e));
  }
  lifted.annotate("asu_bound " + to_fraction_string(e));
  return {std::move(lifted), e};
}

DoubleExtension double_extension(const HashFamily& a, std::optional<Rational> eps) {
  if (!a.a_group()) throw Error(ErrorCode::NotBalanced, "value set carries no group");
  const Rational measured = balanced_epsilon(a).eps;
  if (eps && measured > *eps) {
    throw Error(ErrorCode::NotBalanced, "balancedness is " + to_fraction_string(measured) + " > " +
                                            to_fraction_string(*eps));
  }
  const auto q = Quasigroup::from_group(*a.a_group(), a.a_labels());
  auto g1 = point_extension(a, q);
  auto g2 = seed_extension(a, q);
  auto f = seed_extension(g1, q);
  const Rational e = eps.value_or(measured);
  f.annotate("acfu_bound " + to_fraction_string(e));
  return {std::move(f), std::move(g1), std::move(g2), e};
}

}  // namespace acfu
