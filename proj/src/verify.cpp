#include "acfu/verify.hpp"

#include "acfu/error.hpp"
#include "acfu/kernels.hpp"

namespace acfu {
namespace {

std::vector<std::uint32_t> witness_of(const kernels::MaxCount& m, std::size_t arity) {
  return {m.tuple.begin(), m.tuple.begin() + static_cast<std::ptrdiff_t>(arity)};
}

EpsilonResult make_result(const kernels::MaxCount& m, std::size_t arity, const Rational& scale) {
  EpsilonResult r;
  r.max_count = m.found ? m.count : 0;
  r.eps = Rational(mpz_class(static_cast<unsigned long>(r.max_count))) * scale;
  r.eps.canonicalize();
  if (m.found) r.witness = witness_of(m, arity);
  return r;
}

Rational rat(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

std::string_view to_string(HashClass c) {
  switch (c) {
    case HashClass::AU: return "AU";
    case HashClass::ACFU: return "ACFU";
    case HashClass::ASU: return "ASU";
    case HashClass::Balanced: return "BALANCED";
  }
  return "?";
}

RegularityResult regularity_check(const FunctionTable& t, std::size_t a_size) {
  RegularityResult r;
  r.a_size = a_size;
  r.counts = kernels::parallel::value_counts(t, a_size);
  r.regular = t.s_size % a_size == 0;
  const std::uint64_t target = t.s_size / a_size;
  for (auto c : r.counts) {
    if (c != target) r.regular = false;
  }
  if (r.regular) r.block_size = target;
  return r;
}

RegularityResult regularity_check(const HashFamily& f) { return regularity_check(to_table(f), f.a_size()); }

bool is_homomorphism(const HashFamily& f) {
  if (!f.x_group() || !f.a_group()) return false;
  const auto& gx = *f.x_group();
  const auto& ga = *f.a_group();
  for (std::size_t s = 0; s < f.s_size(); ++s) {
    for (std::uint32_t x = 0; x < f.x_size(); ++x) {
      for (std::uint32_t y = 0; y < f.x_size(); ++y) {
        if (f(gx.add(x, y), s) != ga.add(f(x, s), f(y, s))) return false;
      }
    }
  }
  return true;
}

EpsilonResult min_epsilon(const HashFamily& f, const FunctionTable& table, HashClass c) {
  const Rational s_size = rat(f.s_size());
  const Rational a_size = rat(f.a_size());
  switch (c) {
    case HashClass::AU:
      return make_result(kernels::parallel::max_collisions(table), 2, 1 / s_size);
    case HashClass::ACFU:
    case HashClass::ASU: {
      if (!regularity_check(table, f.a_size()).regular) {
        throw Error(ErrorCode::NotRegular, std::string(to_string(c)) + " requires |{s : f(x,s) = a}| = |S|/|A|");
      }
      if (c == HashClass::ACFU) {
        return make_result(kernels::parallel::max_value_collisions(table, f.a_size()), 3, a_size / s_size);
      }
      return make_result(kernels::parallel::max_joint_values(table, f.a_size()), 4, a_size / s_size);
    }
    case HashClass::Balanced: {
      if (!f.x_group() || !f.a_group()) {
        throw Error(ErrorCode::NotHomomorphic, "BALANCED needs group structures on X and A");
      }
      if (!is_homomorphism(f)) throw Error(ErrorCode::NotHomomorphic, "f(., s) is not additive");
      // the neutral element has index 0 in every AbelianGroup
      return make_result(kernels::parallel::max_fiber(table, f.a_size(), 0), 2, 1 / s_size);
    }
  }
  throw Error(ErrorCode::DomainError, "unknown class");
}

EpsilonResult min_epsilon(const HashFamily& f, HashClass c) { return min_epsilon(f, to_table(f), c); }

EpsilonResult balanced_epsilon(const HashFamily& a) {
  if (!a.a_group()) throw Error(ErrorCode::NotBalanced, "balancedness needs an abelian group on the value set");
  return make_result(kernels::parallel::max_difference_fiber(to_table(a), *a.a_group()), 3,
                     1 / rat(a.s_size()));
}

Rational optimal_epsilon(std::uint64_t x_size, std::uint64_t a_size) {
  if (!(x_size > a_size && a_size >= 2)) {
    throw Error(ErrorCode::TrivialDomain, "need |X| > |A| >= 2, got |X| = " + std::to_string(x_size) +
                                              ", |A| = " + std::to_string(a_size));
  }
  return make_rational(static_cast<std::int64_t>(x_size - a_size),
                       static_cast<std::int64_t>(a_size * (x_size - 1)));
}

bool variance_regime_nonempty(std::uint64_t x_size, std::uint64_t a_size) {
  // 2|X| - |A|^2 - |A| >= |A| sqrt((|A|+3)(|A|-1)), squared on integers
  const mpz_class x(static_cast<unsigned long>(x_size));
  const mpz_class a(static_cast<unsigned long>(a_size));
  const mpz_class lhs = 2 * x - a * a - a;
  if (lhs < 0) return false;
  return lhs * lhs >= a * a * (a + 3) * (a - 1);
}

BoundEqualities BoundReport::equalities(std::uint64_t s_size) const {
  const Rational s = rat(s_size);
  auto eq = [&](const std::optional<Rational>& b) { return b && *b == s; };
  return {eq(lb_variance), eq(lb_simple), eq(lb_ocfu), eq(lb_au), eq(lb_asu_variance), eq(lb_asu_simple)};
}

BoundReport seed_lower_bounds(std::uint64_t x_size, std::uint64_t a_size, const Rational& eps) {
  BoundReport r;
  r.x_size = x_size;
  r.a_size = a_size;
  r.eps = eps;
  r.optimal_eps = optimal_epsilon(x_size, a_size);
  if (eps < r.optimal_eps || eps > 1) {
    throw Error(ErrorCode::InfeasibleEpsilon, "eps = " + to_fraction_string(eps) + " outside [" +
                                                  to_fraction_string(r.optimal_eps) + ", 1]");
  }
  const Rational x = rat(x_size), a = rat(a_size);

  const Rational denom = eps * a * (x - a) + a * a - x;
  if (denom > 0) {
    r.lb_variance = 1 + x * (a - 1) * (a - 1) / denom;
    r.lb_au = x * (a - 1) / denom;
  } else {
    r.notes.push_back("variance-method denominator is not positive; ACFU variance and AU bounds omitted");
  }
  r.lb_simple = a / eps;
  if (eps == r.optimal_eps) r.lb_ocfu = a * (x - 1) / (a - 1);

  if (eps >= 1 / a) {
    const Rational asu_denom = eps * a * (x - 1) + a - x;
    if (asu_denom > 0) {
      r.lb_asu_variance = 1 + x * (a - 1) * (a - 1) / asu_denom;
    } else {
      r.notes.push_back("ASU variance denominator is not positive; bound omitted");
    }
    r.lb_asu_simple = a / eps;
  } else {
    r.notes.push_back("eps < 1/|A|: no ASU function exists, ASU bounds omitted");
  }

  r.variance_threshold = (x - a * a) / (x - a);
  r.variance_applies = eps <= r.variance_threshold;
  r.variance_regime_nonempty = variance_regime_nonempty(x_size, a_size);
  r.asu_crossover = (x - a) / (x - 1);
  r.asu_simple_dominates = eps >= r.asu_crossover;
  for (auto* v : {&r.lb_variance, &r.lb_simple, &r.lb_ocfu, &r.lb_au, &r.lb_asu_variance, &r.lb_asu_simple}) {
    if (*v) v->value().canonicalize();
  }
  r.variance_threshold.canonicalize();
  r.asu_crossover.canonicalize();
  return r;
}

VerificationReport classify(const HashFamily& f, std::size_t budget) {
  const auto table = to_table(f, budget);
  VerificationReport r;
  r.x_size = f.x_size();
  r.s_size = f.s_size();
  r.a_size = f.a_size();

  const auto reg = regularity_check(table, f.a_size());
  r.regular = reg.regular;
  r.block_size = reg.block_size;
  r.eps_au = min_epsilon(f, table, HashClass::AU);
  if (r.regular) {
    r.eps_acfu = min_epsilon(f, table, HashClass::ACFU);
    r.eps_asu = min_epsilon(f, table, HashClass::ASU);
  }
  if (!f.x_group() || !f.a_group()) {
    r.balanced_status = "no group structure";
  } else if (!is_homomorphism(f)) {
    r.balanced_status = "not a homomorphism in x";
  } else {
    r.eps_balanced = min_epsilon(f, table, HashClass::Balanced);
  }

  r.nontrivial = r.a_size >= 2 && r.a_size < r.x_size;
  if (!r.nontrivial) return r;
  r.optimal_eps = optimal_epsilon(r.x_size, r.a_size);
  r.ou = r.eps_au.eps == *r.optimal_eps;
  r.bounds_au = seed_lower_bounds(r.x_size, r.a_size, r.eps_au.eps);
  r.equal.au = r.bounds_au->equalities(r.s_size).au;
  if (r.regular) {
    r.ocfu = r.eps_acfu->eps == *r.optimal_eps;
    r.bounds_acfu = seed_lower_bounds(r.x_size, r.a_size, r.eps_acfu->eps);
    const auto e = r.bounds_acfu->equalities(r.s_size);
    r.equal.variance = e.variance;
    r.equal.simple = e.simple;
    r.equal.ocfu = e.ocfu;
    r.bounds_asu = seed_lower_bounds(r.x_size, r.a_size, r.eps_asu->eps);
    const auto ea = r.bounds_asu->equalities(r.s_size);
    r.equal.asu_variance = ea.asu_variance;
    r.equal.asu_simple = ea.asu_simple;
  }
  return r;
}

}  // namespace acfu
