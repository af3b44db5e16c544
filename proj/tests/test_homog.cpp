#include <gtest/gtest.h>

#include "logder/errors.hpp"
#include "logder/homog.hpp"
#include "logder/resolution.hpp"
#include "support.hpp"

using namespace logder;
using namespace logder::test;

namespace {

const std::vector<std::string> kXYH = {"x", "y", "h"};
const std::vector<std::string> kXYZH = {"x", "y", "z", "h"};

Resolution six_resolution(bool psi) {
  const FreeModule ambient = FreeModule::standard(3, 3);
  std::vector<Vector> c0 = {V({"9*x", "8*y", "6*z"}), V({"3*y^2", "-2*x*z", "0"}),
                            V({"9*z^3", "-2*x*y", "-6*x*z"}), V({"0", "4*z^3+x^2", "-3*y^2"})};
  std::vector<Vector> c1 = {V({"x*y^2", "-12*z^3-3*x^2", "4*y^2", "-6*x*z"})};
  std::vector<Degree> s0 = {1, 2, 3, 3};
  if (psi) {
    c0[0] = V({"9*x+3*y^2", "8*y-2*x*z", "6*z"});
    c1 = {V({"-x*y^2", "x*y^2+12*z^3+3*x^2", "-4*y^2", "6*x*z"})};
    s0 = {2, 2, 3, 3};
  }
  Resolution res;
  res.ambient = ambient;
  const FreeModule f0{ambient.weights, s0}, f1{ambient.weights, {5}};
  res.maps.push_back(make_map(f0, ambient, c0));
  res.maps.push_back(make_map(f1, f0, c1));
  return res;
}

}  // namespace

TEST(Homogenize, Elements) {
  const std::vector<Degree> zero = {0};
  const HomogenizedElement e = homogenize_elem({P("x^2+y", kXY)}, zero);
  EXPECT_EQ(e.element, Vector{P("x^2+y*h", kXYH)});
  EXPECT_EQ(e.degree, 2);
  EXPECT_EQ(homogenize_elem({P("x^2+y^2", kXY)}, zero).element, Vector{P("x^2+y^2", kXYH)});
  const std::vector<Degree> zeros3 = {0, 0, 0};
  const HomogenizedElement col = homogenize_elem(V({"9*x+3*y^2", "8*y-2*x*z", "6*z"}), zeros3);
  EXPECT_EQ(col.degree, 2);
  EXPECT_EQ(col.element, V({"9*x*h+3*y^2", "8*y*h-2*x*z", "6*z*h"}, kXYZH));
  EXPECT_THROW(homogenize_to(P("x^3", kXY), 2), FiltrationViolation);
}

TEST(Homogenize, Dehomogenize) {
  EXPECT_EQ(dehomogenize({P("x^2+y*h", kXYH)}), Vector{P("x^2+y", kXY)});
  EXPECT_EQ(dehomogenize({P("h^3*x", kXYH)}), Vector{P("x", kXY)});
}

TEST(Homogenize, RoundTripProperty) {
  Rng rng(61);
  const std::vector<Degree> shifts = {0, 1};
  for (int trial = 0; trial < 100; ++trial) {
    const Vector v = {random_poly(rng, 2, 4, 4), random_poly(rng, 2, 4, 4)};
    if (is_zero(v)) continue;
    const HomogenizedElement e = homogenize_elem(v, shifts);
    EXPECT_EQ(dehomogenize(e.element), v);
    EXPECT_EQ(h_valuation(e.element), 0);
    EXPECT_TRUE(is_homogeneous(e.element, FreeModule{{1, 1, 1}, shifts}));
    EXPECT_EQ(*homogeneous_degree(e.element, FreeModule{{1, 1, 1}, shifts}), e.degree);
    EXPECT_EQ(e.degree, *filtration_degree(v, shifts));
  }
}

TEST(Homogenize, PolynomialProductProperty) {
  Rng rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_poly(rng, 2, 3, 3), b = random_poly(rng, 2, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(homogenize(a * b), homogenize(a) * homogenize(b));
  }
}

TEST(HomogenizeModule, GroebnerFirst) {
  const FreeModule ring = FreeModule::standard(2, 1);
  const std::vector<Vector> principal = {{P("x^2+y", kXY)}};
  const auto m1 = homogenize_module(ring, principal);
  EXPECT_TRUE(same_submodule(homogenized_ambient(ring), m1.generators, std::vector<Vector>{{P("x^2+y*h", kXYH)}}));

  // <x^2+y, x> = <x, y>; homogenizing the two generators alone misses y.
  const std::vector<Vector> pair = {{P("x^2+y", kXY)}, {P("x", kXY)}};
  const auto m2 = homogenize_module(ring, pair);
  const FreeModule ring_h = homogenized_ambient(ring);
  const std::vector<Vector> expected = {{P("x", kXYH)}, {P("y", kXYH)}};
  EXPECT_TRUE(same_submodule(ring_h, m2.generators, expected));
  EXPECT_FALSE(m2.naive_suffices);
  const std::vector<Vector> naive = {{P("x^2+y*h", kXYH)}, {P("x", kXYH)}};
  const std::vector<Vector> y = {{P("y", kXYH)}};
  EXPECT_FALSE(submodule_contains(ring_h, naive, y));

  const std::vector<Vector> already = {{P("x^2+y", kXY)}, {P("y", kXY)}};
  EXPECT_TRUE(homogenize_module(ring, already).naive_suffices);
}

TEST(HomogenizeModule, IntersectionCommutesProperty) {
  Rng rng(63);
  const FreeModule ring = FreeModule::standard(2, 1);
  const FreeModule ring_h = homogenized_ambient(ring);
  for (int trial = 0; trial < 12; ++trial) {
    const std::vector<Vector> m = {{random_poly(rng, 2, 3, 2)}, {random_poly(rng, 2, 2, 2)}};
    const std::vector<Vector> n = {{random_poly(rng, 2, 3, 2)}};
    if (is_zero(m[0]) && is_zero(m[1])) continue;
    if (is_zero(n[0])) continue;
    const auto left = homogenize_module(ring, intersect(ring, m, n)).generators;
    const auto right = intersect(ring_h, homogenize_module(ring, m).generators, homogenize_module(ring, n).generators);
    EXPECT_TRUE(same_submodule(ring_h, left, right));
  }
}

TEST(HomogenizeModule, DehomogenizesBackProperty) {
  Rng rng(64);
  const FreeModule ring = FreeModule::standard(2, 1);
  for (int trial = 0; trial < 12; ++trial) {
    const std::vector<Vector> m = {{random_poly(rng, 2, 3, 3)}, {random_poly(rng, 2, 3, 2)}};
    std::vector<Vector> back;
    for (const Vector& g : homogenize_module(ring, m).generators) back.push_back(dehomogenize(g));
    EXPECT_TRUE(same_submodule(ring, back, m));
  }
}

TEST(HomogenizeResolution, PhiIsResolution) {
  const Resolution phi = six_resolution(false);
  EXPECT_TRUE(check_complex(phi));
  const HomogenizedComplex hc = homogenize_resolution(phi);
  EXPECT_TRUE(hc.is_complex);
  EXPECT_TRUE(hc.is_resolution);
  EXPECT_EQ(format_shifts(hc.complex), "{1,2,3,3} {5}");
  EXPECT_EQ(alternating_degree_sum(hc.complex), 4);
  for (const ModuleMap& m : phi.maps) EXPECT_TRUE(kernel_commutes(m));
}

TEST(HomogenizeResolution, PsiIsOnlyComplex) {
  const HomogenizedComplex hc = homogenize_resolution(six_resolution(true));
  EXPECT_TRUE(hc.is_complex);
  EXPECT_FALSE(hc.is_resolution);
  ASSERT_FALSE(hc.steps.empty());
  EXPECT_FALSE(hc.steps[0].image_contains);
  ASSERT_TRUE(hc.steps[0].witness);
  const FreeModule ambient_h = homogenized_ambient(FreeModule::standard(3, 3));
  EXPECT_FALSE(submodule_contains(ambient_h, hc.complex.maps[0].columns, std::vector<Vector>{*hc.steps[0].witness}));
  const auto target = homogenize_module(FreeModule::standard(3, 3), six_resolution(true).maps[0].columns).generators;
  EXPECT_TRUE(submodule_contains(ambient_h, target, std::vector<Vector>{*hc.steps[0].witness}));
}

TEST(HomogenizeResolution, HomogeneousInputUnchanged) {
  const FreeModule ring = FreeModule::standard(2, 1);
  const std::vector<Vector> gens = {{P("x^2", kXY)}, {P("x*y", kXY)}, {P("y^2", kXY)}};
  const Resolution res = minimal_resolution(ring, gens);
  const HomogenizedComplex hc = homogenize_resolution(res);
  EXPECT_TRUE(hc.is_resolution);
  EXPECT_EQ(format_shifts(hc.complex), format_shifts(res));
}

TEST(FilteredResolution, SixExample) {
  const FreeModule module = FreeModule::standard(3, 3);
  const auto df = generalized_log_module(F(kSixF), GradedContext::standard(3));
  const Resolution affine = filtered_resolution(module, df);
  EXPECT_TRUE(check_complex(affine));
  EXPECT_TRUE(same_submodule(module, affine.maps[0].columns, df));
  const HomogenizedComplex hc = homogenize_resolution(affine);
  EXPECT_TRUE(hc.is_resolution);
  EXPECT_EQ(alternating_degree_sum(hc.complex), 4);
}

TEST(ChiHomogenized, Examples) {
  const HomogenizedChi six = chi_homogenized(F(kSixF));
  EXPECT_EQ(six.chi_value, 4);
  auto f0 = six.resolution.free_modules()[0].shifts;
  std::sort(f0.begin(), f0.end());
  EXPECT_EQ(f0, (std::vector<Degree>{1, 2, 3, 3}));
  EXPECT_EQ(six.resolution.free_modules()[1].shifts, std::vector<Degree>{5});
  EXPECT_TRUE(six.verdict.pass);
  EXPECT_EQ(chi_homogenized(F("x^2+y^2", kXY)).chi_value, 2);
  EXPECT_EQ(chi_homogenized(F("x", kXY)).chi_value, 1);
}

TEST(ChiHomogenized, DegreeProperty) {
  Rng rng(65);
  for (int trial = 0; trial < 8; ++trial) {
    const Polynomial f = random_poly(rng, 2, 3, 3);
    if (f.is_constant() || !squarefree_test(f).squarefree) continue;
    const HomogenizedChi r = chi_homogenized(FactoredPolynomial::single(f));
    EXPECT_EQ(r.chi_value, f.total_degree()) << format_poly(f, kXY);
  }
}

TEST(Lemma, IntersectionEquality) {
  for (const char* f : {"x^2+y^2", "x+x^2"}) EXPECT_TRUE(verify_lemma_intersection(F(f, kXY)).verdict.pass) << f;
  EXPECT_TRUE(verify_lemma_intersection(F(kSixF)).verdict.pass);
}
