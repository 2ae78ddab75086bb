#include "acfu/privacy.hpp"

#include <cmath>

#include "acfu/error.hpp"
#include "acfu/kernels.hpp"
#include "acfu/verify.hpp"

namespace acfu {
namespace {

Rational rat(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

std::vector<std::string> tuple_labels(const std::vector<std::string>& base, std::uint32_t n) {
  std::vector<std::vector<std::string>> parts{{}};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : parts) {
      for (const auto& b : base) {
        auto t = prefix;
        t.push_back(b);
        next.push_back(std::move(t));
      }
    }
    parts = std::move(next);
  }
  std::vector<std::string> out;
  for (const auto& t : parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
    out.push_back(s + ")");
  }
  return out;
}

std::string dump(const PAJoint& j) {
  std::string s = "p_ZSA:";
  for (std::size_t z = 0; z < j.z_labels.size(); ++z) {
    for (std::size_t sd = 0; sd < j.s_labels.size(); ++sd) {
      for (std::size_t a = 0; a < j.a_labels.size(); ++a) {
        s += " (" + j.z_labels[z] + "," + j.s_labels[sd] + "," + j.a_labels[a] + ")=" + to_fraction_string(j.at(z, sd, a));
      }
    }
  }
  return s;
}

}  // namespace

JointSource make_source(std::vector<std::string> x_labels, std::vector<std::string> z_labels,
                        std::vector<Rational> p) {
  const std::size_t xs = x_labels.size(), zs = z_labels.size();
  if (xs == 0 || zs == 0 || p.size() != xs * zs) throw Error(ErrorCode::DomainError, "source shape mismatch");
  Rational total = 0;
  for (auto& v : p) {
    v.canonicalize();
    if (v < 0) throw Error(ErrorCode::DomainError, "negative probability");
    total += v;
  }
  if (total != 1) throw Error(ErrorCode::DomainError, "total mass is " + to_fraction_string(total) + ", not 1");

  JointSource src;
  src.x_labels = std::move(x_labels);
  std::vector<std::size_t> kept;
  for (std::size_t z = 0; z < zs; ++z) {
    Rational mass = 0;
    for (std::size_t x = 0; x < xs; ++x) mass += p[x * zs + z];
    if (mass == 0) {
      src.warnings.push_back("dropped side information '" + z_labels[z] + "' with zero probability");
    } else {
      kept.push_back(z);
      src.z_labels.push_back(z_labels[z]);
    }
  }
  src.p.reserve(xs * kept.size());
  for (std::size_t x = 0; x < xs; ++x) {
    for (auto z : kept) src.p.push_back(p[x * zs + z]);
  }
  return src;
}

JointSource uniform_source(std::vector<std::string> x_labels) {
  const auto n = x_labels.size();
  return make_source(std::move(x_labels), {"0"}, std::vector<Rational>(n, 1 / rat(n)));
}

JointSource symmetric_source(std::uint32_t q, const Rational& flip) {
  std::vector<Rational> p(static_cast<std::size_t>(q) * q);
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t z = 0; z < q; ++z) {
      const Rational cond = x == z ? Rational(1 - flip) : Rational(flip / (q - 1));
      p[x * q + z] = cond / q;
    }
  }
  return make_source(index_labels(q), index_labels(q), std::move(p));
}

Renyi2 renyi2_conditional(const JointSource& src) {
  Renyi2 r;
  r.inner = 0;
  for (std::size_t z = 0; z < src.z_size(); ++z) {
    Rational sq = 0, mass = 0;
    for (std::size_t x = 0; x < src.x_size(); ++x) {
      sq += src.at(x, z) * src.at(x, z);
      mass += src.at(x, z);
    }
    r.inner += sq / mass;
  }
  r.inner.canonicalize();
  r.bits = -std::log2(r.inner.get_d());
  return r;
}

JointSource iid_extend(const JointSource& src, std::uint32_t n, std::size_t budget) {
  if (n == 0) throw Error(ErrorCode::DomainError, "repetition count must be positive");
  if (n == 1) return src;
  double cells = 1;
  for (std::uint32_t i = 0; i < n; ++i) cells *= static_cast<double>(src.x_size() * src.z_size());
  if (cells > static_cast<double>(budget)) {
    throw Error(ErrorCode::BudgetExceeded, "product source has " + format_real(cells) + " cells");
  }
  JointSource out;
  out.x_labels = tuple_labels(src.x_labels, n);
  out.z_labels = tuple_labels(src.z_labels, n);
  const std::size_t xs = out.x_labels.size(), zs = out.z_labels.size();
  out.p.assign(xs * zs, Rational(1));
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t z = 0; z < zs; ++z) {
      std::size_t xi = x, zi = z;
      Rational& cell = out.p[x * zs + z];
      for (std::uint32_t k = 0; k < n; ++k) {
        cell *= src.at(xi % src.x_size(), zi % src.z_size());
        xi /= src.x_size();
        zi /= src.z_size();
      }
    }
  }
  return out;
}

PAJoint pa_joint(const JointSource& src, const HashFamily& f, std::size_t budget) {
  if (src.x_labels != f.x_labels()) {
    throw Error(ErrorCode::AlphabetMismatch, "source points differ from the points of " + f.descriptor());
  }
  const auto t = to_table(f, budget);
  const std::size_t zs = src.z_size(), ss = f.s_size(), as = f.a_size();
  PAJoint j;
  j.z_labels = src.z_labels;
  j.s_labels = f.s_labels();
  j.a_labels = f.a_labels();
  j.p.assign(zs * ss * as, Rational(0));
  const Rational seed_weight = 1 / rat(ss);
  for (std::size_t z = 0; z < zs; ++z) {
    for (std::size_t x = 0; x < src.x_size(); ++x) {
      const Rational& px = src.at(x, z);
      if (px == 0) continue;
      for (std::size_t s = 0; s < ss; ++s) j.p[(z * ss + s) * as + t.at(x, s)] += px;
    }
  }
  for (auto& v : j.p) {
    v *= seed_weight;
    v.canonicalize();
  }

  j.key_marginal.assign(as, Rational(0));
  j.independent = true;
  for (std::size_t z = 0; z < zs; ++z) {
    Rational pz = 0;
    for (std::size_t x = 0; x < src.x_size(); ++x) pz += src.at(x, z);
    for (std::size_t a = 0; a < as; ++a) {
      Rational pza = 0;
      for (std::size_t s = 0; s < ss; ++s) pza += j.at(z, s, a);
      j.key_marginal[a] += pza;
      if (j.independent && pza != pz / rat(as)) {
        j.independent = false;
        j.dependence_witness = std::make_pair(z, a);
      }
    }
  }
  for (auto& v : j.key_marginal) v.canonicalize();
  return j;
}

SecurityDistance security_distance(const PAJoint& joint) {
  const std::size_t as = joint.a_labels.size();
  const std::size_t cells = joint.z_labels.size() * joint.s_labels.size();
  std::vector<std::vector<Rational>> conditionals(as, std::vector<Rational>(cells));
  for (std::size_t a = 0; a < as; ++a) {
    if (joint.key_marginal[a] == 0) {
      throw Error(ErrorCode::ZeroMassKeyValue, "key value '" + joint.a_labels[a] + "' has probability 0");
    }
    for (std::size_t c = 0; c < cells; ++c) {
      conditionals[a][c] = joint.p[c * as + a] / joint.key_marginal[a];
    }
  }
  const auto best = kernels::parallel::max_l1_distance(conditionals);
  SecurityDistance d;
  d.l1 = best.found ? best.value : Rational(0);
  d.l1.canonicalize();
  d.value = d.l1.get_d();
  if (best.found) d.witness = std::make_pair<std::size_t, std::size_t>(best.first, best.second);
  return d;
}

TheoremBound theorem_bound(const Rational& eps, std::size_t a_size, const Rational& renyi_inner) {
  const Rational a = rat(a_size);
  TheoremBound b;
  b.radicand = (1 - eps) * a * renyi_inner + a * eps - 1;
  b.radicand.canonicalize();
  if (b.radicand < 0) {
    throw Error(ErrorCode::NegativeRadicand, "radicand " + to_fraction_string(b.radicand) + " < 0");
  }
  b.value = 2 * std::sqrt(b.radicand.get_d());
  return b;
}

bool bilinear_bound_holds(const HashFamily& f, const Rational& eps, const std::vector<Rational>& p) {
  if (p.size() != f.x_size()) throw Error(ErrorCode::DomainError, "test vector length differs from |X|");
  const auto t = to_table(f);
  Rational pp = 0, pj = 0;
  for (const auto& v : p) {
    pp += v * v;
    pj += v;
  }
  const Rational rhs = rat(f.s_size()) / rat(f.a_size()) * ((1 - eps) * pp + eps * pj * pj);
  for (std::uint32_t a = 0; a < f.a_size(); ++a) {
    Rational lhs = 0;
    for (std::size_t s = 0; s < f.s_size(); ++s) {
      Rational col = 0;
      for (std::size_t x = 0; x < f.x_size(); ++x) {
        if (t.at(x, s) == a) col += p[x];
      }
      lhs += col * col;
    }
    if (lhs > rhs) return false;
  }
  return true;
}

PAResult run_pa(const JointSource& src, const HashFamily& f, std::size_t budget) {
  PAResult r{pa_joint(src, f, budget), renyi2_conditional(src), {}, false, std::nullopt, std::nullopt};
  r.distance = security_distance(r.joint);
  const auto table = to_table(f, budget);
  r.regular = regularity_check(table, f.a_size()).regular;
  if (!r.regular) return r;
  r.eps = min_epsilon(f, table, HashClass::ACFU).eps;
  r.bound = theorem_bound(*r.eps, f.a_size(), r.entropy.inner);
  if (r.distance.l1 * r.distance.l1 > 4 * r.bound->radicand) {
    throw Error(ErrorCode::TheoremViolation, "distance " + to_fraction_string(r.distance.l1) +
                                                 " exceeds the bound with radicand " +
                                                 to_fraction_string(r.bound->radicand) + "; " + dump(r.joint));
  }
  return r;
}

}  // namespace acfu
