#include "logder/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "logder/errors.hpp"
#include "logder/linalg.hpp"

namespace logder {

Degree total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), Degree{0});
}

Degree weighted_degree(const Monomial& m, const std::vector<Degree>& weights) {
  Degree d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return term(std::move(m), 1);
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && logder::total_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != nvars_) throw DimensionMismatch("monomial length differs from variable count");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw DimensionMismatch("adding polynomials over different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw DimensionMismatch("subtracting polynomials over different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("multiplying polynomials over different rings");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(monomial_product(mm, m), cc * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Degree Polynomial::total_degree() const {
  Degree d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, logder::total_degree(m));
  return d;
}

Polynomial Polynomial::extend(std::size_t extra) const {
  Polynomial r(nvars_ + extra);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.resize(nvars_ + extra, 0);
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Polynomial Polynomial::set_last_to_one() const {
  if (nvars_ == 0) throw DimensionMismatch("no variable to substitute");
  Polynomial r(nvars_ - 1);
  for (const auto& [m, c] : terms_) r.add_term(Monomial(m.begin(), m.end() - 1), c);
  return r;
}

Polynomial Polynomial::drop_last() const {
  if (nvars_ == 0) throw DimensionMismatch("no variable to drop");
  Polynomial r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m.back() != 0) throw DimensionMismatch("dropped variable occurs in polynomial");
    r.terms_.emplace(Monomial(m.begin(), m.end() - 1), c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Weights and orders

WeightVector::WeightVector(std::vector<Degree> u) : u_(std::move(u)) {
  for (Degree w : u_)
    if (w <= 0)
      throw NonPositiveWeightsError(
          "weight vectors must be strictly positive; with non-positive entries the graded "
          "slices are infinite-dimensional and the Hilbert-Poincare series is undefined");
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars, std::size_t rank) {
  return graded(std::vector<Degree>(nvars, 1), std::vector<Degree>(rank, 0));
}

MonomialOrder MonomialOrder::graded(const std::vector<Degree>& weights,
                                    const std::vector<Degree>& shifts) {
  MonomialOrder o;
  o.weights = weights;
  o.shifts = shifts;
  return o;
}

Degree MonomialOrder::degree(const Monomial& m, std::size_t slot) const {
  Degree d = weighted_degree(m, weights);
  if (slot < shifts.size()) d += shifts[slot];
  return d;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, std::size_t slot_a,
                                            const Monomial& b, std::size_t slot_b) const {
  if (leading_slots > 0) {
    const bool lead_a = slot_a < leading_slots;
    const bool lead_b = slot_b < leading_slots;
    if (lead_a != lead_b) return lead_a ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (!eliminate.empty()) {
    Degree ea = 0, eb = 0;
    for (std::size_t i = 0; i < eliminate.size(); ++i)
      if (eliminate[i]) {
        ea += a[i];
        eb += b[i];
      }
    if (ea != eb) return ea <=> eb;
  }
  const Degree da = degree(a, slot_a);
  const Degree db = degree(b, slot_b);
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  if (slot_a != slot_b) return slot_b <=> slot_a;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Degrees

std::variant<Degree, NotHomogeneous> u_degree(const Polynomial& p, const WeightVector& u) {
  if (p.is_zero()) throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  if (u.size() != p.nvars()) throw DimensionMismatch("weight vector length differs from variable count");
  const Monomial& first = p.terms().begin()->first;
  const Degree d = weighted_degree(first, u.values());
  for (const auto& [m, c] : p.terms())
    if (weighted_degree(m, u.values()) != d) return NotHomogeneous{first, m};
  return d;
}

bool is_u_homogeneous(const Polynomial& p, const std::vector<Degree>& weights) {
  if (p.is_zero()) return true;
  const Degree d = weighted_degree(p.terms().begin()->first, weights);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
}

namespace {

bool satisfies(const std::vector<Monomial>& monos, const std::vector<Degree>& u) {
  const Degree d = weighted_degree(monos.front(), u);
  return std::all_of(monos.begin(), monos.end(),
                     [&](const Monomial& m) { return weighted_degree(m, u) == d; });
}

// Positive compositions of `sum` into u.size() parts, lexicographic order.
bool search_compositions(const std::vector<Monomial>& monos, std::vector<Degree>& u,
                         std::size_t pos, Degree remaining) {
  if (pos + 1 == u.size()) {
    u[pos] = remaining;
    return satisfies(monos, u);
  }
  const Degree slots_left = static_cast<Degree>(u.size() - pos - 1);
  for (Degree w = 1; w <= remaining - slots_left; ++w) {
    u[pos] = w;
    if (search_compositions(monos, u, pos + 1, remaining - w)) return true;
  }
  return false;
}

}  // namespace

std::optional<WeightVector> infer_weights(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("cannot infer weights of the zero polynomial");
  const std::size_t n = p.nvars();
  if (n == 0) return WeightVector(std::vector<Degree>{});
  std::vector<Monomial> monos;
  for (const auto& [m, c] : p.terms()) monos.push_back(m);

  RationalMatrix rows;
  for (std::size_t k = 1; k < monos.size(); ++k) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = monos[k][i] - monos[0][i];
    rows.push_back(std::move(row));
  }
  const auto kernel = nullspace(rows, n);
  if (kernel.empty()) return std::nullopt;

  if (kernel.size() == 1) {
    // Scale the ray to its primitive integer point.
    Integer den = 1;
    for (const Rational& x : kernel[0]) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> ints;
    Integer content = 0;
    for (const Rational& x : kernel[0]) {
      Integer v = Integer(x.get_num()) * (den / Integer(x.get_den()));
      content = gcd(content, v);
      ints.push_back(v);
    }
    int sign = sgn(ints[0]);
    std::vector<Degree> u;
    for (const Integer& v : ints) {
      if (sgn(v) != sign || sign == 0) return std::nullopt;
      Integer w = abs(v) / content;
      if (!w.fits_slong_p()) return std::nullopt;
      u.push_back(w.get_si());
    }
    return WeightVector(std::move(u));
  }

  // Higher-dimensional solution cone: smallest coordinate sum, ties broken
  // lexicographically.
  constexpr Degree kMaxSum = 256;
  std::vector<Degree> u(n, 1);
  for (Degree s = static_cast<Degree>(n); s <= kMaxSum; ++s)
    if (search_compositions(monos, u, 0, s)) return WeightVector(u);
  return std::nullopt;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.nvars()) throw DimensionMismatch("partial derivative index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[index] == 0) continue;
    Monomial mm = m;
    --mm[index];
    r.add_term(mm, c * m[index]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Printing

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        const MonomialOrder& order) {
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, 0, b.first, 0) > 0; });
  return terms;
}

std::string format_rational(const Rational& c) { return c.get_str(); }

std::string format_poly(const Polynomial& p, const std::vector<std::string>& given,
                        const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<std::string> names = given;
  if (names.empty())
    for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
  if (names.size() != p.nvars()) throw DimensionMismatch("variable names do not match ring");
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, order)) {
    const bool negative = c < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational a = abs(c);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      factors.push_back(m[i] == 1 ? names[i] : names[i] + "^" + std::to_string(m[i]));
    }
    if (factors.empty()) {
      out << format_rational(a);
      continue;
    }
    if (a != 1) out << format_rational(a) << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

std::string format_poly(const Polynomial& p, const std::vector<std::string>& names) {
  return format_poly(p, names, MonomialOrder::grevlex(p.nvars()));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division is only allowed by a nonzero constant", at);
        acc *= Rational(1) / d.constant_term();
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) throw ParseError("expected a non-negative integer exponent", at);
    Integer e(digits);
    if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", at);
    if (peek() == '^') throw ParseError("chained exponents are ambiguous; use parentheses", pos_);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(vars_.size(), Rational(Integer(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(at, pos_ - at);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw UnknownVariableError(name, at);
      return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace logder
