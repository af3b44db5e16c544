#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "logder/derivmod.hpp"
#include "logder/groebner.hpp"
#include "logder/resolution.hpp"

namespace logder {

/// N(t) / prod_i (1 - t^{weights[i]}) with N a Laurent polynomial with
/// integer coefficients (exponent -> coefficient, no zero entries).
struct HPSeries {
  std::map<Degree, std::int64_t> numerator;
  std::vector<Degree> weights;

  /// Coefficients of the power series expansion for degrees lo..hi.
  std::map<Degree, std::int64_t> expand(Degree lo, Degree hi) const;
  /// N(1).
  std::int64_t rank() const;
  friend bool operator==(const HPSeries&, const HPSeries&) = default;
};

/// Prints like `(2*t - t^2)/((1-t)(1-t))`.
std::string format_series(const HPSeries& hp);

HPSeries hp_free(std::span<const Degree> shifts, const WeightVector& u);
/// sum_p (-1)^p sum_i t^{d_i^p} over the free modules of a homogeneous resolution.
HPSeries hp_from_resolution(const Resolution& res);

struct ChiValue {
  std::int64_t value;
  /// The numerator N(t) whose derivative at 1 is `value`.
  std::map<Degree, std::int64_t> numerator;
};
ChiValue chi(const HPSeries& hp);

/// n minus the multiplicity of t = 1 as a root of N(t); -1 for the zero series.
std::int64_t dimension_via_pole(const HPSeries& hp);

/// Dimensions of the graded slices of the submodule generated by homogeneous
/// `gens`, for degrees from min(0, lowest shift) up to dmax, by exact linear
/// algebra on monomial multiples of the generators.
std::map<Degree, std::int64_t> hp_bruteforce(const FreeModule& ambient, std::span<const Vector> gens,
                                             Degree dmax);
/// Slice dimensions of ambient / <relations>.
std::map<Degree, std::int64_t> hp_bruteforce_quotient(const FreeModule& ambient,
                                                      std::span<const Vector> relations, Degree dmax);
/// Slice dimensions of the free module itself.
std::map<Degree, std::int64_t> hp_bruteforce_free(const FreeModule& ambient, Degree dmax);

/// Exponent vectors of u-degree d.
std::vector<Monomial> monomials_of_degree(const std::vector<Degree>& weights, Degree d);

inline constexpr Degree kDefaultDmax = 12;

struct Verdict {
  std::string claim;
  Integer lhs;
  Integer rhs;
  bool pass;
};

struct TheoremReport {
  Degree expected;  // deg^u(Q) + |v|
  Resolution resolution;
  HPSeries series;
  std::int64_t chi_value;
  std::vector<Verdict> verdicts;
  bool pass() const;
};

/// D(Q) for quasi-homogeneous Q: resolves it, compares the alternating
/// degree sum and chi with deg^u(Q) + |v|, and the series with brute force up
/// to dmax (skipped when dmax < 0). Throws NotHomogeneousError or
/// ConstraintViolation when the hypotheses fail.
TheoremReport verify_main_theorem(const FactoredPolynomial& q, const GradedContext& ctx,
                                  Degree dmax = kDefaultDmax);

/// u-degree of the product of the factors (0 for constants).
Degree factored_degree(const FactoredPolynomial& q, const WeightVector& u);

struct CoprimeReport {
  Resolution resolution;
  std::int64_t chi_value;
  Verdict verdict;
};
/// chi(D(Q1) + D(Q2)) = |v| for coprime Q1, Q2.
CoprimeReport verify_coprime_sum(const FactoredPolynomial& q1, const FactoredPolynomial& q2,
                                 const GradedContext& ctx);

struct AdditivityReport {
  std::int64_t chi_l, chi_m, chi_quotient;
  Verdict verdict;
};
/// chi(L) = chi(M) + chi(L/M) with all three resolved independently.
/// Throws NotInModuleError when M is not contained in L.
AdditivityReport chi_additivity_check(const FreeModule& ambient, std::span<const Vector> l,
                                      std::span<const Vector> m);
/// Resolution of L / M for submodules M of L of the same free module.
Resolution resolve_quotient(const FreeModule& ambient, std::span<const Vector> l, std::span<const Vector> m);

}  // namespace logder
