#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace logder {

/// Exact rational coefficient, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

using Exponent = std::int32_t;
using Degree = std::int64_t;

/// Exponent vector of a monomial. Its length is the number of variables of
/// the ambient ring.
using Monomial = std::vector<Exponent>;

Degree total_degree(const Monomial& m);
Degree weighted_degree(const Monomial& m, const std::vector<Degree>& weights);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial monomial_product(const Monomial& a, const Monomial& b);
/// a / b, assuming divides(b, a).
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q. Terms are stored in a map keyed
/// by exponent vector; no zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(Monomial m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c * x^m to this polynomial.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  Degree total_degree() const;

  /// Embeds into a ring with `extra` more variables appended at the end.
  Polynomial extend(std::size_t extra) const;
  /// Drops the last variable after substituting 1 for it.
  Polynomial set_last_to_one() const;
  /// Drops the last variable; every term must have zero exponent there.
  Polynomial drop_last() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Strictly positive weight vector u; x_i has degree u_i.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Degree> u);
  static WeightVector standard(std::size_t n) { return WeightVector(std::vector<Degree>(n, 1)); }

  std::size_t size() const { return u_.size(); }
  Degree operator[](std::size_t i) const { return u_[i]; }
  const std::vector<Degree>& values() const { return u_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Degree> u_;
};

/// Weighted-degree then reverse-lexicographic order, extended to free modules
/// term-over-position: a term x^a e_i has degree u.a + shifts[i], ties are
/// broken by reverse lex on exponents, then lower slot index ranks higher.
///
/// Two optional refinements support elimination: variables flagged in
/// `eliminate` are compared first by their total exponent, and slots below
/// `leading_slots` dominate all others.
struct MonomialOrder {
  std::vector<Degree> weights;
  std::vector<Degree> shifts;
  std::vector<bool> eliminate;
  std::size_t leading_slots = 0;

  static MonomialOrder grevlex(std::size_t nvars, std::size_t rank = 1);
  static MonomialOrder graded(const std::vector<Degree>& weights,
                              const std::vector<Degree>& shifts);

  std::size_t nvars() const { return weights.size(); }
  std::size_t rank() const { return shifts.size(); }

  /// Degree of x^m e_slot under the order's grading.
  Degree degree(const Monomial& m, std::size_t slot) const;
  std::strong_ordering compare(const Monomial& a, std::size_t slot_a,
                               const Monomial& b, std::size_t slot_b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, 0, b, 0) < 0;
  }
};

struct NotHomogeneous {
  Monomial first;
  Monomial second;
};

/// Common u-degree of all terms, or a pair of terms of different degrees.
/// Throws ZeroPolynomialError on the zero polynomial.
std::variant<Degree, NotHomogeneous> u_degree(const Polynomial& p, const WeightVector& u);
bool is_u_homogeneous(const Polynomial& p, const std::vector<Degree>& weights);

/// Componentwise-minimal positive integer weight vector for which p is
/// quasi-homogeneous, if one exists.
std::optional<WeightVector> infer_weights(const Polynomial& p);

/// Formal partial derivative with respect to variable `index` (0-based).
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Terms of p sorted descending under `order` (slot 0).
std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        const MonomialOrder& order);

std::string format_rational(const Rational& c);

/// Canonical text: terms descending under `order`, explicit `*` and `^`.
/// Empty `names` means x1..xn.
std::string format_poly(const Polynomial& p, const std::vector<std::string>& names,
                        const MonomialOrder& order);
std::string format_poly(const Polynomial& p, const std::vector<std::string>& names);

/// Parses an expression over the declared variables. Accepts integers,
/// variable names, + - * / ^ and parentheses; juxtaposition multiplies.
/// Division is allowed only by nonzero constants.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace logder
