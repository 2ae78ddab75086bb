#include "acfu/hash_family.hpp"

#include <algorithm>

#include "acfu/error.hpp"
#include "acfu/finite_field.hpp"

namespace acfu {
namespace {

class TableRule final : public HashRule {
 public:
  explicit TableRule(FunctionTable table) : table_(std::move(table)) {}
  std::uint32_t value(std::size_t x, std::size_t s) const override { return table_.at(x, s); }

 private:
  FunctionTable table_;
};

class TransposeRule final : public HashRule {
 public:
  explicit TransposeRule(HashFamily inner) : inner_(std::move(inner)) {}
  std::uint32_t value(std::size_t x, std::size_t s) const override { return inner_(s, x); }

 private:
  HashFamily inner_;
};

std::vector<std::string> vector_labels(std::uint32_t q, std::uint32_t len) {
  const auto field = field_of_order(q);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < len; ++i) total *= q;
  std::vector<std::string> labels;
  labels.reserve(total);
  if (field.m == 1) {
    for (std::uint64_t i = 0; i < total; ++i) labels.push_back(vector_label(to_digits(i, q, len)));
    return labels;
  }
  // non-prime q: each coordinate is a field element label, e.g. ((0,1),(1,0))
  const GaloisField gf(field);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto digits = to_digits(i, q, len);
    if (len == 1) {
      labels.push_back(gf.label(digits[0]));
      continue;
    }
    std::string s = "(";
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (k) s += ',';
      s += gf.label(digits[k]);
    }
    labels.push_back(s + ")");
  }
  return labels;
}

AbelianGroup additive_group(std::uint32_t q, std::uint32_t dim) {
  const auto pp = prime_power(q);
  return AbelianGroup::elementary(pp->first, pp->second * dim);
}

std::shared_ptr<const GaloisField> make_field(std::uint32_t q) {
  if (!prime_power(q)) throw Error(ErrorCode::UnsupportedParameters, std::to_string(q) + " is not a prime power");
  try {
    return std::make_shared<const GaloisField>(field_of_order(q));
  } catch (const Error& e) {
    throw Error(ErrorCode::UnsupportedParameters, e.what());
  }
}

std::uint64_t checked_power(std::uint32_t q, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= q;
    if (r > kDefaultTableBudget) throw Error(ErrorCode::UnsupportedParameters, "domain too large");
  }
  return r;
}

// f(x; h, beta) = <h, x> + beta, or with point/seed roles swapped.
class AffineRule final : public HashRule {
 public:
  AffineRule(std::shared_ptr<const GaloisField> gf, std::uint32_t t, bool dual, bool with_offset)
      : gf_(std::move(gf)), t_(t), dual_(dual), with_offset_(with_offset),
        h_(normalized_vectors(gf_->order(), t)) {}

  std::uint32_t value(std::size_t x, std::size_t s) const override {
    if (dual_) std::swap(x, s);
    const std::uint32_t q = gf_->order();
    const std::size_t h_index = with_offset_ ? s / q : s;
    const auto point = to_digits(x, q, t_);
    std::uint32_t acc = with_offset_ ? static_cast<std::uint32_t>(s % q) : 0;
    const auto& h = h_[h_index];
    for (std::uint32_t i = 0; i < t_; ++i) acc = gf_->add(acc, gf_->mul(h[i], point[i]));
    return acc;
  }

 private:
  std::shared_ptr<const GaloisField> gf_;
  std::uint32_t t_;
  bool dual_;
  bool with_offset_;
  std::vector<std::vector<std::uint32_t>> h_;
};

class TransversalRule final : public HashRule {
 public:
  TransversalRule(std::shared_ptr<const GaloisField> gf, std::vector<std::uint32_t> h)
      : gf_(std::move(gf)), h_(std::move(h)) {}

  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const std::uint32_t q = gf_->order();
    const std::size_t cls = x / q;
    const auto y = static_cast<std::uint32_t>(x % q);
    const auto s1 = static_cast<std::uint32_t>(s / q);
    const auto s2 = static_cast<std::uint32_t>(s % q);
    if (cls == h_.size()) return gf_->add(s1, y);  // infinity class
    return gf_->add(gf_->sub(s2, gf_->mul(h_[cls], s1)), y);
  }

 private:
  std::shared_ptr<const GaloisField> gf_;
  std::vector<std::uint32_t> h_;
};

// g(x, h) = T_h x with t_ij = h[i - j + n - 1].
class ToeplitzRule final : public HashRule {
 public:
  ToeplitzRule(std::shared_ptr<const GaloisField> gf, std::uint32_t m, std::uint32_t n)
      : gf_(std::move(gf)), m_(m), n_(n) {}

  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const std::uint32_t q = gf_->order();
    const auto xv = to_digits(x, q, n_);
    const auto hv = to_digits(s, q, m_ + n_ - 1);
    std::vector<std::uint32_t> out(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t j = 0; j < n_; ++j) acc = gf_->add(acc, gf_->mul(hv[i + n_ - 1 - j], xv[j]));
      out[i] = acc;
    }
    return static_cast<std::uint32_t>(from_digits(out, q));
  }

 private:
  std::shared_ptr<const GaloisField> gf_;
  std::uint32_t m_;
  std::uint32_t n_;
};

// g(x, h) = first m coordinates of h*x in GF(q^n) over GF(q).
class FieldMultiplyRule final : public HashRule {
 public:
  FieldMultiplyRule(std::shared_ptr<const GaloisField> ext, std::uint32_t drop_divisor, bool exclude_zero)
      : ext_(std::move(ext)), drop_divisor_(drop_divisor), exclude_zero_(exclude_zero) {}

  std::uint32_t value(std::size_t x, std::size_t s) const override {
    const auto h = static_cast<std::uint32_t>(exclude_zero_ ? s + 1 : s);
    // the leading coefficients are the most significant digits of the index
    return ext_->mul(h, static_cast<std::uint32_t>(x)) / drop_divisor_;
  }

 private:
  std::shared_ptr<const GaloisField> ext_;
  std::uint32_t drop_divisor_;
  bool exclude_zero_;
};

struct Builder {
  HashFamily operator()(const AffineSpec& d) const { return affine_like(d.q, d.t, false, true, describe(d)); }
  HashFamily operator()(const DualAffineSpec& d) const { return affine_like(d.q, d.t, true, true, describe(d)); }
  HashFamily operator()(const HyperplaneSpec& d) const { return affine_like(d.q, d.t, false, false, describe(d)); }

  HashFamily affine_like(std::uint32_t q, std::uint32_t t, bool dual, bool with_offset, std::string name) const {
    if (t < 1) throw Error(ErrorCode::UnsupportedParameters, "t must be >= 1");
    auto gf = make_field(q);
    checked_power(q, t + 1);
    auto points = vector_labels(q, t);
    std::vector<std::string> hyperplanes;
    const auto field_labels = vector_labels(q, 1);
    for (const auto& h : normalized_vectors(q, t)) {
      const auto h_label = points[from_digits(h, q)];
      if (!with_offset) {
        hyperplanes.push_back(h_label);
        continue;
      }
      for (std::uint32_t beta = 0; beta < q; ++beta) hyperplanes.push_back("(" + h_label + "," + field_labels[beta] + ")");
    }
    auto rule = std::make_shared<AffineRule>(gf, t, dual, with_offset);
    std::optional<AbelianGroup> x_group = additive_group(q, t);
    if (dual) {
      x_group.reset();
      std::swap(points, hyperplanes);
    }
    HashFamily f(std::move(points), std::move(hyperplanes), field_labels, rule, std::move(name));
    f.with_groups(x_group, additive_group(q, 1));
    return f;
  }

  HashFamily operator()(const TransversalSpec& d) const {
    auto gf = make_field(d.q);
    checked_power(d.q, 3);
    for (std::size_t i = 0; i < d.h_subset.size(); ++i) {
      if (d.h_subset[i] >= d.q || (i > 0 && d.h_subset[i] <= d.h_subset[i - 1])) {
        throw Error(ErrorCode::UnsupportedParameters, "H must be a strictly increasing subset of F_q");
      }
    }
    if (d.h_subset.empty() && !d.include_infinity) throw Error(ErrorCode::UnsupportedParameters, "empty point set");
    const auto field_labels = vector_labels(d.q, 1);
    std::vector<std::string> points;
    for (auto h : d.h_subset) {
      for (std::uint32_t y = 0; y < d.q; ++y) points.push_back("(" + field_labels[h] + "," + field_labels[y] + ")");
    }
    if (d.include_infinity) {
      for (std::uint32_t y = 0; y < d.q; ++y) points.push_back("(inf," + field_labels[y] + ")");
    }
    HashFamily f(std::move(points), vector_labels(d.q, 2), field_labels,
                 std::make_shared<TransversalRule>(gf, d.h_subset), describe(d));
    f.with_groups(std::nullopt, additive_group(d.q, 1));
    return f;
  }

  HashFamily operator()(const ToeplitzSpec& d) const {
    if (d.m < 1 || d.n < 1) throw Error(ErrorCode::UnsupportedParameters, "m and n must be >= 1");
    auto gf = make_field(d.q);
    checked_power(d.q, d.m + 2 * d.n - 1);
    HashFamily f(vector_labels(d.q, d.n), vector_labels(d.q, d.m + d.n - 1), vector_labels(d.q, d.m),
                 std::make_shared<ToeplitzRule>(gf, d.m, d.n), describe(d));
    f.with_groups(additive_group(d.q, d.n), additive_group(d.q, d.m));
    return f;
  }

  HashFamily operator()(const FieldMultiplySpec& d) const {
    if (!is_prime(d.q)) {
      throw Error(ErrorCode::UnsupportedParameters, "field_multiply requires a prime q");
    }
    if (d.n < 1 || d.m < 1 || d.m > d.n) throw Error(ErrorCode::UnsupportedParameters, "need 1 <= m <= n");
    std::shared_ptr<const GaloisField> ext;
    try {
      ext = std::make_shared<const GaloisField>(field_new(d.q, d.n));
    } catch (const Error& e) {
      throw Error(ErrorCode::UnsupportedParameters, e.what());
    }
    std::uint32_t drop = 1;
    for (std::uint32_t i = d.m; i < d.n; ++i) drop *= d.q;
    std::vector<std::string> points;
    for (std::uint32_t i = 0; i < ext->order(); ++i) points.push_back(ext->label(i));
    std::vector<std::string> seeds(points.begin() + (d.exclude_zero ? 1 : 0), points.end());
    HashFamily f(std::move(points), std::move(seeds), vector_labels(d.q, d.m),
                 std::make_shared<FieldMultiplyRule>(ext, drop, d.exclude_zero), describe(d));
    f.with_groups(AbelianGroup::elementary(d.q, d.n), AbelianGroup::elementary(d.q, d.m));
    return f;
  }
};

}  // namespace

std::size_t AbelianGroup::size() const {
  std::size_t n = 1;
  for (auto m : moduli) n *= m;
  return n;
}

std::uint32_t AbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t result = 0, weight = 1;
  for (std::size_t i = moduli.size(); i-- > 0;) {
    const std::uint32_t m = moduli[i];
    result += ((a % m + b % m) % m) * weight;
    a /= m;
    b /= m;
    weight *= m;
  }
  return result;
}

std::uint32_t AbelianGroup::neg(std::uint32_t a) const {
  std::uint32_t result = 0, weight = 1;
  for (std::size_t i = moduli.size(); i-- > 0;) {
    const std::uint32_t m = moduli[i];
    result += ((m - a % m) % m) * weight;
    a /= m;
    weight *= m;
  }
  return result;
}

HashFamily::HashFamily(std::vector<std::string> x_labels, std::vector<std::string> s_labels,
                       std::vector<std::string> a_labels, std::shared_ptr<const HashRule> rule,
                       std::string descriptor)
    : x_labels_(std::move(x_labels)),
      s_labels_(std::move(s_labels)),
      a_labels_(std::move(a_labels)),
      rule_(std::move(rule)),
      descriptor_(std::move(descriptor)) {
  if (a_labels_.empty()) throw Error(ErrorCode::DomainError, "value set must be nonempty");
  for (const auto* labels : {&x_labels_, &s_labels_, &a_labels_}) {
    auto sorted = *labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DomainError, "duplicate domain label");
    }
  }
}

HashFamily HashFamily::from_table(std::vector<std::string> x_labels, std::vector<std::string> s_labels,
                                  std::vector<std::string> a_labels, FunctionTable table, std::string descriptor) {
  if (table.x_size != x_labels.size() || table.s_size != s_labels.size() ||
      table.entries.size() != table.x_size * table.s_size) {
    throw Error(ErrorCode::DomainError, "table shape does not match domains");
  }
  for (auto v : table.entries) {
    if (v >= a_labels.size()) throw Error(ErrorCode::DomainError, "table entry outside value set");
  }
  return HashFamily(std::move(x_labels), std::move(s_labels), std::move(a_labels),
                    std::make_shared<TableRule>(std::move(table)), std::move(descriptor));
}

std::uint32_t HashFamily::evaluate(std::size_t x, std::size_t s) const {
  if (x >= x_size() || s >= s_size()) throw Error(ErrorCode::DomainError, "argument outside X x S");
  return (*this)(x, s);
}

const std::string& HashFamily::evaluate(const std::string& x_label, const std::string& s_label) const {
  return a_labels_[(*this)(x_index(x_label), s_index(s_label))];
}

std::size_t HashFamily::x_index(const std::string& label) const {
  const auto it = std::find(x_labels_.begin(), x_labels_.end(), label);
  if (it == x_labels_.end()) throw Error(ErrorCode::DomainError, "unknown point '" + label + "'");
  return static_cast<std::size_t>(it - x_labels_.begin());
}

std::size_t HashFamily::s_index(const std::string& label) const {
  const auto it = std::find(s_labels_.begin(), s_labels_.end(), label);
  if (it == s_labels_.end()) throw Error(ErrorCode::DomainError, "unknown seed '" + label + "'");
  return static_cast<std::size_t>(it - s_labels_.begin());
}

HashFamily& HashFamily::with_groups(std::optional<AbelianGroup> x_group, std::optional<AbelianGroup> a_group) {
  if (x_group && x_group->size() != x_size()) throw Error(ErrorCode::DomainError, "point group order != |X|");
  if (a_group && a_group->size() != a_size()) throw Error(ErrorCode::DomainError, "value group order != |A|");
  x_group_ = std::move(x_group);
  a_group_ = std::move(a_group);
  return *this;
}

HashFamily& HashFamily::annotate(std::string note) {
  annotations_.push_back(std::move(note));
  return *this;
}

std::string describe(const FamilyDescriptor& descriptor) {
  struct Namer {
    std::string operator()(const AffineSpec& d) const {
      return "affine(" + std::to_string(d.q) + "," + std::to_string(d.t) + ")";
    }
    std::string operator()(const DualAffineSpec& d) const {
      return "dual_affine(" + std::to_string(d.q) + "," + std::to_string(d.t) + ")";
    }
    std::string operator()(const HyperplaneSpec& d) const {
      return "hyperplane(" + std::to_string(d.q) + "," + std::to_string(d.t) + ")";
    }
    std::string operator()(const TransversalSpec& d) const {
      std::string h;
      for (auto v : d.h_subset) h += (h.empty() ? "" : ",") + std::to_string(v);
      return "transversal(" + std::to_string(d.q) + ",{" + h + "}" + (d.include_infinity ? ",inf" : "") + ")";
    }
    std::string operator()(const ToeplitzSpec& d) const {
      return "toeplitz(" + std::to_string(d.q) + "," + std::to_string(d.m) + "," + std::to_string(d.n) + ")";
    }
    std::string operator()(const FieldMultiplySpec& d) const {
      return "field_multiply(" + std::to_string(d.q) + "," + std::to_string(d.n) + "," + std::to_string(d.m) +
             (d.exclude_zero ? ",exclude_zero" : "") + ")";
    }
  };
  return std::visit(Namer{}, descriptor);
}

HashFamily build_named(const FamilyDescriptor& descriptor) { return std::visit(Builder{}, descriptor); }

std::vector<std::vector<std::uint32_t>> normalized_vectors(std::uint32_t q, std::uint32_t t) {
  const GaloisField gf(field_of_order(q));
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < t; ++i) total *= q;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    auto v = to_digits(i, q, t);
    const auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (first != v.end() && *first == gf.one()) out.push_back(std::move(v));
  }
  return out;
}

FunctionTable to_table(const HashFamily& f, std::size_t budget) {
  const std::size_t xs = f.x_size(), ss = f.s_size();
  if (ss != 0 && xs > budget / ss) {
    throw Error(ErrorCode::BudgetExceeded, "|X||S| = " + std::to_string(xs) + "*" + std::to_string(ss) +
                                               " exceeds budget " + std::to_string(budget));
  }
  FunctionTable table{xs, ss, std::vector<std::uint32_t>(xs * ss)};
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t s = 0; s < ss; ++s) table.entries[x * ss + s] = f(x, s);
  }
  return table;
}

HashFamily tabulated(const HashFamily& f, std::size_t budget) {
  auto g = HashFamily::from_table(f.x_labels(), f.s_labels(), f.a_labels(), to_table(f, budget), f.descriptor());
  g.with_groups(f.x_group(), f.a_group());
  for (const auto& note : f.annotations()) g.annotate(note);
  return g;
}

HashFamily transpose(const HashFamily& f) {
  HashFamily g(f.s_labels(), f.x_labels(), f.a_labels(), std::make_shared<TransposeRule>(f),
               "transpose(" + f.descriptor() + ")");
  g.with_groups(std::nullopt, f.a_group());
  return g;
}

bool same_function(const HashFamily& f, const HashFamily& g) {
  if (f.x_labels() != g.x_labels() || f.s_labels() != g.s_labels() || f.a_labels() != g.a_labels()) return false;
  for (std::size_t x = 0; x < f.x_size(); ++x) {
    for (std::size_t s = 0; s < f.s_size(); ++s) {
      if (f(x, s) != g(x, s)) return false;
    }
  }
  return true;
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

HashFamily constant_family(std::size_t x_size, std::size_t s_size, std::size_t a_size, std::uint32_t value) {
  FunctionTable t{x_size, s_size, std::vector<std::uint32_t>(x_size * s_size, value)};
  return HashFamily::from_table(index_labels(x_size), index_labels(s_size), index_labels(a_size), std::move(t),
                                "constant");
}

HashFamily random_family(std::size_t x_size, std::size_t s_size, std::size_t a_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(a_size - 1));
  FunctionTable t{x_size, s_size, std::vector<std::uint32_t>(x_size * s_size)};
  for (auto& e : t.entries) e = dist(rng);
  return HashFamily::from_table(index_labels(x_size), index_labels(s_size), index_labels(a_size), std::move(t),
                                "random");
}

Relabeling transversal_to_dual_affine(std::uint32_t q) {
  // (h, y) -> ((1, -h), y); (inf, y) -> ((0, 1), y); (s1, s2) -> (s2, s1).
  const GaloisField gf(field_of_order(q));
  const auto hs = normalized_vectors(q, 2);
  auto h_position = [&](std::uint32_t a, std::uint32_t b) {
    const auto it = std::find(hs.begin(), hs.end(), std::vector<std::uint32_t>{a, b});
    return static_cast<std::size_t>(it - hs.begin());
  };
  Relabeling r;
  for (std::uint32_t h = 0; h < q; ++h) {
    for (std::uint32_t y = 0; y < q; ++y) r.point_map.push_back(h_position(gf.one(), gf.neg(h)) * q + y);
  }
  for (std::uint32_t y = 0; y < q; ++y) r.point_map.push_back(h_position(0, gf.one()) * q + y);
  for (std::uint32_t s1 = 0; s1 < q; ++s1) {
    for (std::uint32_t s2 = 0; s2 < q; ++s2) r.seed_map.push_back(static_cast<std::size_t>(s2) * q + s1);
  }
  return r;
}

}  // namespace acfu
