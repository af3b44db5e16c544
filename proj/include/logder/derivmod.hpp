#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "logder/groebner.hpp"
#include "logder/poly.hpp"

namespace logder {

/// delta = sum_i a_i d_i, stored as the coefficient vector (a_1, ..., a_n).
using Derivation = Vector;

/// (u,v)-grading on derivations: x_i has degree u_i and d_i has degree v_i.
/// When every u_i + v_i equals the same k, `k` holds it.
class GradedContext {
 public:
  GradedContext(WeightVector u, std::vector<Degree> v);
  static GradedContext standard(std::size_t n);
  /// Same u with v = k*1 - u.
  static GradedContext balanced(WeightVector u, Degree k);

  const WeightVector& u() const { return u_; }
  const std::vector<Degree>& v() const { return v_; }
  const std::optional<Degree>& k() const { return k_; }
  std::size_t nvars() const { return u_.size(); }
  Degree abs_v() const;

  /// D^{(u,v)} = (+)_i S^u(-v_i).
  FreeModule module() const { return {u_.values(), v_}; }
  /// Throws ConstraintViolation unless u + v = k*1.
  Degree require_constraint() const;
  GradedContext shifted(Degree delta) const;

 private:
  WeightVector u_;
  std::vector<Degree> v_;
  std::optional<Degree> k_;
};

struct Factor {
  Polynomial f;
  unsigned multiplicity = 1;
  bool irreducible_asserted = false;
};

/// f = prod f_i^{e_i}, as supplied by the caller.
struct FactoredPolynomial {
  std::size_t nvars = 0;
  std::vector<Factor> factors;

  static FactoredPolynomial single(const Polynomial& f);
  Polynomial product() const;
  bool is_constant() const;
  /// Rejects constant or non-squarefree factors, zero multiplicities and
  /// pairs of factors with a common factor (CommonFactorError carries the gcd).
  void validate(const std::vector<std::string>& names = {}) const;
};

Polynomial apply(const Derivation& delta, const Polynomial& g);
Derivation euler_derivation(const WeightVector& u);

/// delta(f) lies in <f^power>.
bool in_log_module(const Derivation& delta, const Polynomial& f, unsigned power);
bool in_log_module(const Derivation& delta, const FactoredPolynomial& f);

/// Generators of D(f; power) = {delta : delta(f) in <f^power>}, obtained as
/// syzygies of (d_1 f, ..., d_n f, f^power) projected to the first n slots,
/// returned as a reduced Groebner basis in ctx.module().
std::vector<Derivation> log_derivations(const Polynomial& f, unsigned power, const GradedContext& ctx);

/// D(f) = intersection of D(f_i; e_i). Constant input yields the full module.
std::vector<Derivation> generalized_log_module(const FactoredPolynomial& f, const GradedContext& ctx);

struct IsBasis {
  Rational c;
};
struct NotBasis {
  Polynomial determinant;
  std::string reason;
};
using SaitoCertificate = std::variant<IsBasis, NotBasis>;

Polynomial determinant(std::span<const Derivation> columns);

/// Saito's criterion. Throws NotInModuleError when some delta is not in D(f).
SaitoCertificate saito_check(std::span<const Derivation> deltas, const FactoredPolynomial& f);

struct AnnihilatorCheck {
  std::vector<Polynomial> generators;
  bool equals_principal;  // generators span <f>
};
/// (D(f) : D) computed by module_quotient and compared with <f>.
AnnihilatorCheck annihilator_check(const FactoredPolynomial& f, const GradedContext& ctx);

/// (u,v)-homogeneous components of delta keyed by degree.
std::vector<std::pair<Degree, Derivation>> homogeneous_components(const Derivation& delta,
                                                                  const GradedContext& ctx);

struct GradedCheck {
  bool graded;
  /// For the first failing generator: its index and the component outside the module.
  std::optional<std::size_t> failing_generator;
  std::optional<Derivation> failing_component;
};
GradedCheck is_graded_submodule(std::span<const Derivation> gens, const GradedContext& ctx);

std::string format_derivation(const Derivation& delta, const std::vector<std::string>& names);
/// Parses `a1*d_x1 + ... + an*d_xn`; every term must carry exactly one d_ symbol.
Derivation parse_derivation(const std::string& text, const std::vector<std::string>& names);

}  // namespace logder
