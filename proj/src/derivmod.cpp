#include "logder/derivmod.hpp"

#include <map>
#include <numeric>

#include "logder/errors.hpp"
#include "logder/gcd.hpp"

namespace logder {

// ---------------------------------------------------------------------------
// GradedContext

GradedContext::GradedContext(WeightVector u, std::vector<Degree> v) : u_(std::move(u)), v_(std::move(v)) {
  if (v_.size() != u_.size()) throw DimensionMismatch("u and v have different lengths");
  if (!u_.values().empty()) {
    const Degree k = u_[0] + v_[0];
    bool balanced = true;
    for (std::size_t i = 0; i < v_.size(); ++i) balanced = balanced && u_[i] + v_[i] == k;
    if (balanced) k_ = k;
  }
}

GradedContext GradedContext::standard(std::size_t n) {
  return GradedContext(WeightVector::standard(n), std::vector<Degree>(n, 0));
}

GradedContext GradedContext::balanced(WeightVector u, Degree k) {
  std::vector<Degree> v;
  for (Degree w : u.values()) v.push_back(k - w);
  return GradedContext(std::move(u), std::move(v));
}

Degree GradedContext::abs_v() const { return std::accumulate(v_.begin(), v_.end(), Degree{0}); }

Degree GradedContext::require_constraint() const {
  if (!k_) throw ConstraintViolation("the grading requires u + v = k*(1,...,1)");
  return *k_;
}

GradedContext GradedContext::shifted(Degree delta) const {
  std::vector<Degree> v = v_;
  for (Degree& x : v) x += delta;
  return GradedContext(u_, std::move(v));
}

// ---------------------------------------------------------------------------
// FactoredPolynomial

FactoredPolynomial FactoredPolynomial::single(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has no derivation module");
  FactoredPolynomial out;
  out.nvars = f.nvars();
  if (!f.is_constant()) out.factors.push_back({f, 1, false});
  return out;
}

Polynomial FactoredPolynomial::product() const {
  Polynomial p = Polynomial::constant(nvars, 1);
  for (const Factor& fac : factors) p *= fac.f.pow(fac.multiplicity);
  return p;
}

bool FactoredPolynomial::is_constant() const { return factors.empty(); }

void FactoredPolynomial::validate(const std::vector<std::string>& names) const {
  std::vector<std::string> labels = names;
  if (labels.size() != nvars) {
    labels.clear();
    for (std::size_t i = 0; i < nvars; ++i) labels.push_back("x" + std::to_string(i + 1));
  }
  for (const Factor& fac : factors) {
    if (fac.f.nvars() != nvars) throw DimensionMismatch("factor lives over a different ring");
    if (fac.f.is_constant()) throw ConstantInputError("constant factor " + format_poly(fac.f, labels));
    if (fac.multiplicity == 0) throw Error("factor multiplicities must be positive");
    const auto sq = squarefree_test(fac.f);
    if (!sq.squarefree)
      throw CommonFactorError("factor " + format_poly(fac.f, labels) +
                                  " is not squarefree; supply its factorization",
                              format_poly(sq.witness, labels));
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const Polynomial g = poly_gcd(factors[i].f, factors[j].f);
      if (!g.is_constant())
        throw CommonFactorError("factors " + format_poly(factors[i].f, labels) + " and " +
                                    format_poly(factors[j].f, labels) + " are not coprime",
                                format_poly(g, labels));
    }
}

// ---------------------------------------------------------------------------
// Derivations

Polynomial apply(const Derivation& delta, const Polynomial& g) {
  if (delta.size() != g.nvars()) throw DimensionMismatch("derivation and polynomial have different variable counts");
  Polynomial r(g.nvars());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i].is_zero()) continue;
    r += delta[i] * partial_derivative(g, i);
  }
  return r;
}

Derivation euler_derivation(const WeightVector& u) {
  const std::size_t n = u.size();
  Derivation e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(Polynomial::variable(n, i) * Rational(u[i]));
  return e;
}

bool in_log_module(const Derivation& delta, const Polynomial& f, unsigned power) {
  const Polynomial image = apply(delta, f);
  if (image.is_zero()) return true;
  return exact_quotient(image, f.pow(power)).has_value();
}

bool in_log_module(const Derivation& delta, const FactoredPolynomial& f) {
  for (const Factor& fac : f.factors)
    if (!in_log_module(delta, fac.f, fac.multiplicity)) return false;
  return true;
}

std::vector<Derivation> log_derivations(const Polynomial& f, unsigned power, const GradedContext& ctx) {
  if (f.is_constant()) throw ConstantInputError("D(f; k) needs a nonconstant f");
  const std::size_t n = ctx.nvars();
  if (f.nvars() != n) throw DimensionMismatch("polynomial and grading have different variable counts");

  const FreeModule ring{ctx.u().values(), {0}};
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Vector{partial_derivative(f, i)});
  gens.push_back(Vector{f.pow(power)});

  std::vector<Derivation> deltas;
  for (const Vector& s : syzygies(ring, gens)) {
    Derivation d(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
    if (!is_zero(d)) deltas.push_back(std::move(d));
  }
  return buchberger(ctx.module(), deltas).elements();
}

std::vector<Derivation> generalized_log_module(const FactoredPolynomial& f, const GradedContext& ctx) {
  const FreeModule module = ctx.module();
  if (f.nvars != ctx.nvars()) throw DimensionMismatch("polynomial and grading have different variable counts");
  f.validate();
  if (f.factors.empty()) {
    std::vector<Derivation> all;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) all.push_back(unit_vector(module, i));
    return all;
  }
  std::vector<Derivation> acc = log_derivations(f.factors[0].f, f.factors[0].multiplicity, ctx);
  for (std::size_t i = 1; i < f.factors.size(); ++i)
    acc = intersect(module, acc, log_derivations(f.factors[i].f, f.factors[i].multiplicity, ctx));
  return buchberger(module, acc).elements();
}

// ---------------------------------------------------------------------------
// Saito criterion

namespace {

Polynomial det_minor(std::span<const Derivation> cols, std::vector<std::size_t>& rows_left,
                     std::size_t col, std::size_t nvars) {
  if (col == cols.size()) return Polynomial::constant(nvars, 1);
  Polynomial total(nvars);
  for (std::size_t k = 0; k < rows_left.size(); ++k) {
    const std::size_t row = rows_left[k];
    const Polynomial& entry = cols[col][row];
    if (entry.is_zero()) continue;
    rows_left.erase(rows_left.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial sub = entry * det_minor(cols, rows_left, col + 1, nvars);
    rows_left.insert(rows_left.begin() + static_cast<std::ptrdiff_t>(k), row);
    if (k % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  return total;
}

}  // namespace

Polynomial determinant(std::span<const Derivation> columns) {
  if (columns.empty()) return Polynomial::constant(0, 1);
  const std::size_t n = columns.size();
  for (const Derivation& c : columns)
    if (c.size() != n) throw DimensionMismatch("determinant needs a square matrix");
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  return det_minor(columns, rows, 0, columns[0][0].nvars());
}

SaitoCertificate saito_check(std::span<const Derivation> deltas, const FactoredPolynomial& f) {
  if (deltas.size() != f.nvars) throw DimensionMismatch("Saito's criterion needs exactly n derivations");
  for (std::size_t i = 0; i < deltas.size(); ++i)
    if (!in_log_module(deltas[i], f))
      throw NotInModuleError("derivation " + std::to_string(i + 1) + " is not in D(f)");
  Polynomial det = determinant(deltas);
  if (det.is_zero()) return NotBasis{det, "zero determinant"};
  auto q = exact_quotient(det, f.product());
  if (q && q->is_constant()) return IsBasis{q->constant_term()};
  return NotBasis{det, "determinant is not a nonzero constant multiple of f"};
}

AnnihilatorCheck annihilator_check(const FactoredPolynomial& f, const GradedContext& ctx) {
  const FreeModule module = ctx.module();
  const auto gens = generalized_log_module(f, ctx);
  std::vector<Vector> all;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) all.push_back(unit_vector(module, i));
  AnnihilatorCheck out;
  out.generators = module_quotient(module, gens, all);
  const FreeModule ideal{ctx.u().values(), {0}};
  std::vector<Vector> lhs, rhs{Vector{f.product()}};
  for (const Polynomial& g : out.generators) lhs.push_back(Vector{g});
  out.equals_principal = same_submodule(ideal, lhs, rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Gradedness

std::vector<std::pair<Degree, Derivation>> homogeneous_components(const Derivation& delta,
                                                                  const GradedContext& ctx) {
  const FreeModule module = ctx.module();
  std::map<Degree, Derivation> parts;
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (const auto& [m, c] : delta[i].terms()) {
      const Degree d = weighted_degree(m, ctx.u().values()) + ctx.v()[i];
      auto [it, inserted] = parts.try_emplace(d, zero_vector(module));
      it->second[i].add_term(m, c);
    }
  return {parts.begin(), parts.end()};
}

GradedCheck is_graded_submodule(std::span<const Derivation> gens, const GradedContext& ctx) {
  const FreeModule module = ctx.module();
  const GroebnerBasis gb = buchberger(module, gens);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto parts = homogeneous_components(gens[g], ctx);
    if (parts.size() <= 1) continue;
    for (const auto& [d, part] : parts)
      if (!contains(gb, part)) return {false, g, part};
  }
  return {true, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Text form

std::string format_derivation(const Derivation& delta, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const Polynomial& a = delta[i];
    if (a.is_zero()) continue;
    const std::string symbol = "d_" + names.at(i);
    bool negative = false;
    std::string coef;
    if (a.size() == 1) {
      const Rational c = a.terms().begin()->second;
      negative = c < 0;
      const Polynomial mag = negative ? -a : a;
      coef = format_poly(mag, names);
    } else {
      coef = "(" + format_poly(a, names) + ")";
    }
    std::string piece = coef == "1" ? symbol : coef + "*" + symbol;
    if (out.empty())
      out = (negative ? "-" : "") + piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

Derivation parse_derivation(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<std::string> all = names;
  for (const std::string& v : names) all.push_back("d_" + v);
  const Polynomial p = parse_poly(text, all);
  Derivation delta(n, Polynomial(n));
  for (const auto& [m, c] : p.terms()) {
    std::size_t slot = n;
    Exponent count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      count += m[n + i];
      if (m[n + i] > 0) slot = i;
    }
    if (count != 1) throw ParseError("every term of a derivation needs exactly one d_ symbol", 0);
    delta[slot].add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n)), c);
  }
  return delta;
}

}  // namespace logder
