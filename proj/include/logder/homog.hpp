#pragma once

#include <optional>
#include <span>
#include <vector>

#include "logder/derivmod.hpp"
#include "logder/groebner.hpp"
#include "logder/hilbert.hpp"
#include "logder/resolution.hpp"

namespace logder {

// Homogenization is always with respect to the total degree, with the new
// variable h appended last and weighted 1.

/// x^a e_i has degree |a| + shifts[i]; returns the largest such degree.
std::optional<Degree> filtration_degree(const Vector& v, std::span<const Degree> shifts);

/// p(x/h) * h^degree; throws FiltrationViolation if a term exceeds `degree`.
Polynomial homogenize_to(const Polynomial& p, Degree degree);

struct HomogenizedElement {
  Vector element;  // over S[h]
  Degree degree;
};
/// Pads every term to the filtration degree of v. Throws ZeroPolynomialError on zero.
HomogenizedElement homogenize_elem(const Vector& v, std::span<const Degree> shifts);
/// Pads to a declared degree; throws FiltrationViolation when v exceeds it.
Vector homogenize_elem_to(const Vector& v, std::span<const Degree> shifts, Degree degree);
Polynomial homogenize(const Polynomial& p);

/// Substitutes h = 1.
Vector dehomogenize(const Vector& v);
/// Largest l with h^l dividing every component; -1 for zero.
Degree h_valuation(const Vector& v);

/// The free module over S[h] with the same shifts and all weights 1.
FreeModule homogenized_ambient(const FreeModule& ambient);

struct HomogenizedModule {
  std::vector<Vector> generators;  // homogenized Groebner basis
  /// The homogenized input generators already generate M^h.
  bool naive_suffices;
};
/// Generators of M^h from a Groebner basis of M under a degree order.
HomogenizedModule homogenize_module(const FreeModule& ambient, std::span<const Vector> gens);

struct StepCheck {
  bool image_contains;            // im phi_p^h contains (im phi_p)^h
  std::optional<Vector> witness;  // element of (im phi_p)^h outside im phi_p^h
};

struct HomogenizedComplex {
  Resolution complex;  // over S[h]
  std::vector<StepCheck> steps;
  bool is_complex;
  bool is_resolution;
};

/// Homogenizes each column of a filtration-compatible resolution of a
/// submodule of S^k to the declared shift of its source slot. Throws
/// FiltrationViolation when a column exceeds its declared shift.
HomogenizedComplex homogenize_resolution(const Resolution& affine);

/// Free resolution of M obtained by dehomogenizing the minimal resolution of
/// M^h; its declared shifts respect the degree filtration.
Resolution filtered_resolution(const FreeModule& ambient, std::span<const Vector> gens);

/// (ker phi)^h = ker phi^h for one map of an affine resolution.
bool kernel_commutes(const ModuleMap& affine);

struct HomogenizedChi {
  Degree degree;  // deg f
  std::vector<Vector> generators;
  Resolution resolution;
  std::int64_t chi_value;
  Verdict verdict;
};
/// D(f)^h over S[h] with the standard grading, resolved minimally; compares
/// chi with deg f.
HomogenizedChi chi_homogenized(const FactoredPolynomial& f);

/// Factorwise homogenization F_i = f_i^h.
FactoredPolynomial homogenize_factored(const FactoredPolynomial& f);

struct LemmaReport {
  std::vector<Vector> left;   // D(f^h) restricted to the x-partials
  std::vector<Vector> right;  // D(f)^h
  Verdict verdict;
};
/// D(f^h) cap S[h]<d_x1..d_xn> = D(f)^h, compared by Groebner basis equality.
LemmaReport verify_lemma_intersection(const FactoredPolynomial& f);

}  // namespace logder
