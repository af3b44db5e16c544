#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "logder/derivmod.hpp"
#include "logder/gcd.hpp"
#include "logder/groebner.hpp"
#include "logder/poly.hpp"

namespace logder::test {

inline const std::vector<std::string> kXY = {"x", "y"};
inline const std::vector<std::string> kXYZ = {"x", "y", "z"};
inline const std::string kSixF = "x^2*z+y^3+z^4";

inline Polynomial P(const std::string& text, const std::vector<std::string>& names = kXYZ) {
  return parse_poly(text, names);
}

inline Vector V(std::initializer_list<const char*> entries, const std::vector<std::string>& names = kXYZ) {
  Vector out;
  for (const char* e : entries) out.push_back(parse_poly(e, names));
  return out;
}

inline FactoredPolynomial F(const std::string& text, const std::vector<std::string>& names = kXYZ) {
  return FactoredPolynomial::single(parse_poly(text, names));
}

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
  Rational c(num(rng), den(rng));
  c.canonicalize();
  return c;
}

// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline Polynomial random_poly(Rng& rng, std::size_t nvars, int terms, int max_degree) {
  std::uniform_int_distribution<int> count(0, terms);
  Polynomial p(nvars);
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(nvars, 0);
    int budget = max_degree;
    for (auto& e : m) {
      e = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e;
    }
    std::shuffle(m.begin(), m.end(), rng);
    p.add_term(m, random_rational(rng));
  }
  return p;
}

// Random u-homogeneous polynomial of u-degree d (possibly zero).
inline Polynomial random_homogeneous(Rng& rng, const std::vector<Degree>& u, Degree d, int terms) {
  std::vector<Monomial> pool;
  const std::size_t n = u.size();
  Monomial m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Degree left) -> void {
    if (i == n) {
      if (left == 0) pool.push_back(m);
      return;
    }
    for (Exponent e = 0; e * u[i] <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e * u[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, d);
  Polynomial p(n);
  if (pool.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < terms; ++t) p.add_term(pool[pick(rng)], random_rational(rng));
  return p;
}

}  // namespace logder::test
