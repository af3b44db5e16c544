#include <gtest/gtest.h>

#include "logder/hilbert.hpp"
#include "logder/linalg.hpp"
#include "support.hpp"

using namespace logder;
using namespace logder::test;

namespace {

const FreeModule kRing2 = FreeModule::standard(2, 1);
const FreeModule kRing3 = FreeModule::standard(3, 1);

Vector R(const std::string& text, const std::vector<std::string>& names = kXY) { return {P(text, names)}; }

SparseEchelon<Monomial>::Row as_row(const Polynomial& p) {
  SparseEchelon<Monomial>::Row row;
  for (const auto& [m, c] : p.terms()) row.emplace(m, c);
  return row;
}

// Degree-d slice of the ideal spanned by monomial multiples of homogeneous generators.
SparseEchelon<Monomial> ideal_slice(const std::vector<Polynomial>& gens, Degree d) {
  SparseEchelon<Monomial> slice;
  for (const Polynomial& g : gens) {
    const Degree dg = g.total_degree();
    if (dg > d) continue;
    for (const Monomial& m : monomials_of_degree({1, 1}, d - dg)) {
      slice.insert(as_row(g.times_monomial(m, 1)));
    }
  }
  return slice;
}


}  // namespace

TEST(Buchberger, MonomialGeneratorsAreBasis) {
  const std::vector<Vector> gens = {R("x"), R("y")};
  const GroebnerBasis gb = buchberger(kRing2, gens);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_TRUE(contains(gb, R("x")));
  EXPECT_TRUE(contains(gb, R("y")));
}

TEST(Buchberger, EmptyInput) {
  const GroebnerBasis gb = buchberger(kRing2, std::vector<Vector>{});
  EXPECT_TRUE(gb.empty());
  EXPECT_EQ(normal_form(R("x+1"), gb), R("x+1"));
}

TEST(Buchberger, SliceOracleMembership) {
  const std::vector<Polynomial> ideal = {P("x^2+y^2", kXY), P("x*y", kXY)};
  const std::vector<Vector> gens = {R("x^2+y^2"), R("x*y")};
  const GroebnerBasis gb = buchberger(kRing2, gens, MonomialOrder::grevlex(2));
  EXPECT_TRUE(verify_s_pairs(gb));
  Rng rng(21);
  for (Degree d = 0; d <= 8; ++d) {
    const auto slice = ideal_slice(ideal, d);
    for (const Monomial& m : monomials_of_degree({1, 1}, d))
      EXPECT_EQ(contains(gb, Vector{Polynomial::term(m, 1)}), slice.in_span(as_row(Polynomial::term(m, 1))))
          << "degree " << d;
    for (int t = 0; t < 5; ++t) {
      const Polynomial p = random_homogeneous(rng, {1, 1}, d, 3);
      EXPECT_EQ(contains(gb, Vector{p}), slice.in_span(as_row(p)));
    }
  }
}

TEST(NormalForm, Examples) {
  const std::vector<Vector> gx = {R("x")};
  const GroebnerBasis gb = buchberger(kRing2, gx);
  EXPECT_TRUE(is_zero(normal_form(R("x^2"), gb)));
  EXPECT_EQ(normal_form(R("y"), gb), R("y"));
}

TEST(NormalForm, TimesFInLogModule) {
  const FactoredPolynomial f = F("x^2+y^2", kXY);
  const auto gens = generalized_log_module(f, GradedContext::standard(2));
  const GroebnerBasis gb = buchberger(FreeModule::standard(2, 2), gens);
  for (std::size_t i = 0; i < 2; ++i) {
    Vector e = unit_vector(FreeModule::standard(2, 2), i);
    EXPECT_TRUE(is_zero(normal_form(f.product() * e, gb)));
  }
}

TEST(Division, RecombinesProperty) {
  Rng rng(22);
  const FreeModule module = FreeModule::standard(3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> gens;
    for (int g = 0; g < 3; ++g) gens.push_back({random_poly(rng, 3, 3, 2), random_poly(rng, 3, 3, 2)});
    const GroebnerBasis gb = buchberger(module, gens);
    EXPECT_TRUE(verify_s_pairs(gb));
    const Vector v{random_poly(rng, 3, 4, 3), random_poly(rng, 3, 4, 3)};
    const Division div = divide(v, gb);
    Vector sum = div.remainder;
    for (std::size_t i = 0; i < gb.size(); ++i) sum = sum + div.quotients[i] * gb.elements()[i];
    EXPECT_EQ(sum, v);
    EXPECT_EQ(div.remainder, normal_form(v, gb));
    for (const Vector& g : gens) EXPECT_TRUE(contains(gb, g));
  }
}

TEST(Buchberger, ReducedBasisIsCanonicalProperty) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> gens;
    for (int g = 0; g < 3; ++g) gens.push_back({random_poly(rng, 3, 3, 3)});
    std::vector<Vector> mixed = gens;
    mixed.push_back(gens[0] + P("x") * gens[1]);
    std::reverse(mixed.begin(), mixed.end());
    EXPECT_EQ(buchberger(kRing3, gens), buchberger(kRing3, mixed));
  }
}

TEST(Syzygies, Koszul) {
  const std::vector<Vector> gens = {R("x"), R("y")};
  const auto syz = syzygies(kRing2, gens);
  const std::vector<Vector> expected = {V({"y", "-x"}, kXY)};
  EXPECT_TRUE(same_submodule(syzygy_ambient(kRing2, gens), syz, expected));
}

TEST(Syzygies, SixExamplePhi) {
  const std::vector<Vector> phi0 = {V({"9*x", "8*y", "6*z"}), V({"3*y^2", "-2*x*z", "0"}),
                                    V({"9*z^3", "-2*x*y", "-6*x*z"}), V({"0", "4*z^3+x^2", "-3*y^2"})};
  const FreeModule module = FreeModule::standard(3, 3);
  const auto syz = syzygies(module, phi0);
  const std::vector<Vector> phi1 = {V({"x*y^2", "-12*z^3-3*x^2", "4*y^2", "-6*x*z"})};
  EXPECT_TRUE(same_submodule(FreeModule::standard(3, 4), syz, phi1));
}

TEST(Syzygies, FreeGeneratorHasNone) {
  const std::vector<Vector> gens = {R("1")};
  EXPECT_TRUE(syzygies(kRing2, gens).empty());
}

TEST(Syzygies, ComposeToZeroProperty) {
  Rng rng(24);
  const FreeModule module = FreeModule::standard(2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vector> gens;
    for (int g = 0; g < 3; ++g) gens.push_back({random_poly(rng, 2, 3, 2), random_poly(rng, 2, 3, 2)});
    for (const Vector& s : syzygies(module, gens)) {
      Vector sum = zero_vector(module);
      for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s[i] * gens[i];
      EXPECT_TRUE(is_zero(sum));
    }
  }
}

TEST(Intersect, Examples) {
  const std::vector<Vector> mx = {R("x")}, my = {R("y")}, mxy = {R("x*y")};
  EXPECT_TRUE(same_submodule(kRing2, intersect(kRing2, mx, my), mxy));
  EXPECT_TRUE(same_submodule(kRing2, intersect(kRing2, mx, mx), mx));
  const FreeModule der = FreeModule::standard(2, 2);
  const auto dx = log_derivations(P("x", kXY), 2, GradedContext::standard(2));
  const auto dy = log_derivations(P("y", kXY), 3, GradedContext::standard(2));
  const std::vector<Vector> basis = {V({"x^2", "0"}, kXY), V({"0", "y^3"}, kXY)};
  EXPECT_TRUE(same_submodule(der, intersect(der, dx, dy), basis));
}

TEST(Intersect, MonomialLcmOracleProperty) {
  Rng rng(25);
  std::uniform_int_distribution<Exponent> e(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const Monomial a{e(rng), e(rng)}, b{e(rng), e(rng)}, c{e(rng), e(rng)};
    const std::vector<Vector> m = {{Polynomial::term(a, 1)}, {Polynomial::term(b, 1)}};
    const std::vector<Vector> n = {{Polynomial::term(c, 1)}};
    const std::vector<Vector> expected = {{Polynomial::term(lcm(a, c), 1)}, {Polynomial::term(lcm(b, c), 1)}};
    EXPECT_TRUE(same_submodule(kRing2, intersect(kRing2, m, n), expected));
  }
}

TEST(Intersect, ContainedInBothProperty) {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Vector> m = {{random_poly(rng, 2, 3, 2)}, {random_poly(rng, 2, 2, 2)}};
    const std::vector<Vector> n = {{random_poly(rng, 2, 3, 2)}};
    const auto both = intersect(kRing2, m, n);
    EXPECT_TRUE(submodule_contains(kRing2, m, both));
    EXPECT_TRUE(submodule_contains(kRing2, n, both));
  }
}

TEST(ModuleQuotient, Examples) {
  const std::vector<Vector> x2 = {R("x^2")}, x1 = {R("x")};
  const auto q = module_quotient(kRing2, x2, x1);
  std::vector<Vector> qv;
  for (const Polynomial& p : q) qv.push_back({p});
  EXPECT_TRUE(same_submodule(kRing2, qv, x1));

  const FreeModule der = FreeModule::standard(2, 2);
  const auto df = generalized_log_module(F("x^2+y^2", kXY), GradedContext::standard(2));
  const std::vector<Vector> whole = {unit_vector(der, 0), unit_vector(der, 1)};
  std::vector<Vector> ann;
  for (const Polynomial& p : module_quotient(der, df, whole)) ann.push_back({p});
  EXPECT_TRUE(same_submodule(kRing2, ann, std::vector<Vector>{R("x^2+y^2")}));

  std::vector<Vector> unit;
  for (const Polynomial& p : module_quotient(der, df, df)) unit.push_back({p});
  EXPECT_TRUE(same_submodule(kRing2, unit, std::vector<Vector>{R("1")}));
}

TEST(MinimalGenerators, DropsRedundant) {
  const std::vector<Vector> gens = {R("x"), R("y"), R("x*y"), R("x+y")};
  const auto mins = minimal_generators(kRing2, gens);
  EXPECT_EQ(mins.size(), 2u);
  EXPECT_TRUE(same_submodule(kRing2, mins, gens));
}
