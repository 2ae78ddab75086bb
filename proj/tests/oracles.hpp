#pragma once

// Naive reference computations straight from the definitions. They share no
// code with the library kernels: every count is a direct loop over labelled
// evaluations, every probability a direct sum.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/privacy.hpp"
#include "acfu/rational.hpp"

namespace oracle {

using acfu::HashFamily;
using acfu::Rational;

inline Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
  r.canonicalize();
  return r;
}

inline bool regular(const HashFamily& f) {
  for (std::size_t x = 0; x < f.x_size(); ++x) {
    for (std::uint32_t a = 0; a < f.a_size(); ++a) {
      std::uint64_t n = 0;
      for (std::size_t s = 0; s < f.s_size(); ++s) n += f.evaluate(x, s) == a;
      if (n * f.a_size() != f.s_size()) return false;
    }
  }
  return true;
}

// max over ordered pairs x != x' of |{s : f(x,s) = f(x',s)}| / |S|
inline Rational eps_au(const HashFamily& f) {
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < f.x_size(); ++x) {
    for (std::size_t y = 0; y < f.x_size(); ++y) {
      if (x == y) continue;
      std::uint64_t n = 0;
      for (std::size_t s = 0; s < f.s_size(); ++s) n += f.evaluate(x, s) == f.evaluate(y, s);
      best = std::max(best, n);
    }
  }
  return ratio(best, f.s_size());
}

// max over x != x', a of |{s : f(x,s) = f(x',s) = a}| |A| / |S|
inline Rational eps_acfu(const HashFamily& f) {
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < f.x_size(); ++x) {
    for (std::size_t y = 0; y < f.x_size(); ++y) {
      if (x == y) continue;
      for (std::uint32_t a = 0; a < f.a_size(); ++a) {
        std::uint64_t n = 0;
        for (std::size_t s = 0; s < f.s_size(); ++s) n += f.evaluate(x, s) == a && f.evaluate(y, s) == a;
        best = std::max(best, n);
      }
    }
  }
  return ratio(best * f.a_size(), f.s_size());
}

// max over x != x', a, a' of |{s : f(x,s) = a, f(x',s) = a'}| |A| / |S|
inline Rational eps_asu(const HashFamily& f) {
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < f.x_size(); ++x) {
    for (std::size_t y = 0; y < f.x_size(); ++y) {
      if (x == y) continue;
      for (std::uint32_t a = 0; a < f.a_size(); ++a) {
        for (std::uint32_t b = 0; b < f.a_size(); ++b) {
          std::uint64_t n = 0;
          for (std::size_t s = 0; s < f.s_size(); ++s) n += f.evaluate(x, s) == a && f.evaluate(y, s) == b;
          best = std::max(best, n);
        }
      }
    }
  }
  return ratio(best * f.a_size(), f.s_size());
}

// max over x != 0, a of |{h : g(x,h) = a}| / |H| (index 0 is the neutral element)
inline Rational eps_balanced_hom(const HashFamily& g) {
  std::uint64_t best = 0;
  for (std::size_t x = 1; x < g.x_size(); ++x) {
    for (std::uint32_t a = 0; a < g.a_size(); ++a) {
      std::uint64_t n = 0;
      for (std::size_t h = 0; h < g.s_size(); ++h) n += g.evaluate(x, h) == a;
      best = std::max(best, n);
    }
  }
  return ratio(best, g.s_size());
}

inline Rational renyi_inner(const acfu::JointSource& src) {
  Rational total = 0;
  for (std::size_t z = 0; z < src.z_size(); ++z) {
    Rational sq = 0, mass = 0;
    for (std::size_t x = 0; x < src.x_size(); ++x) {
      sq += src.at(x, z) * src.at(x, z);
      mass += src.at(x, z);
    }
    total += sq / mass;
  }
  total.canonicalize();
  return total;
}

// max over ordered key pairs of || p_{ZS|A=a} - p_{ZS|A=a'} ||_1, from
// p_ZSA(z,s,a) = (1/|S|) sum_{x : f(x,s) = a} p(x,z).
inline Rational distance(const acfu::JointSource& src, const HashFamily& f) {
  const std::size_t zs = src.z_size(), ss = f.s_size(), as = f.a_size();
  std::vector<Rational> joint(zs * ss * as, Rational(0));
  for (std::size_t z = 0; z < zs; ++z) {
    for (std::size_t s = 0; s < ss; ++s) {
      for (std::uint32_t a = 0; a < as; ++a) {
        Rational sum = 0;
        for (std::size_t x = 0; x < src.x_size(); ++x) {
          if (f.evaluate(x, s) == a) sum += src.at(x, z);
        }
        joint[(z * ss + s) * as + a] = sum / Rational(static_cast<long>(ss));
      }
    }
  }
  std::vector<Rational> key(as, Rational(0));
  for (std::size_t c = 0; c < zs * ss; ++c) {
    for (std::size_t a = 0; a < as; ++a) key[a] += joint[c * as + a];
  }
  Rational best = 0;
  for (std::size_t a = 0; a < as; ++a) {
    for (std::size_t b = 0; b < as; ++b) {
      if (a == b) continue;
      Rational d = 0;
      for (std::size_t c = 0; c < zs * ss; ++c) d += abs(joint[c * as + a] / key[a] - joint[c * as + b] / key[b]);
      if (d > best) best = d;
    }
  }
  best.canonicalize();
  return best;
}

// Schoolbook product of coefficient vectors (lowest degree first) reduced by a
// monic modulus over GF(p).
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  const std::size_t m = modulus.size() - 1;
  for (std::size_t d = prod.size(); d-- > m;) {
    const auto c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= m; ++k) prod[d - m + k] = (prod[d - m + k] + (p - c) * modulus[k]) % p;
  }
  std::vector<std::uint32_t> out(m, 0);
  for (std::size_t i = 0; i < m && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace oracle
