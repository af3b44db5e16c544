#include "logder/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "logder/errors.hpp"
#include "logder/linalg.hpp"

namespace logder {

// ---------------------------------------------------------------------------
// Vector helpers

Vector zero_vector(const FreeModule& ambient) {
  return Vector(ambient.rank(), Polynomial(ambient.nvars()));
}

Vector unit_vector(const FreeModule& ambient, std::size_t slot) {
  Vector v = zero_vector(ambient);
  v.at(slot) = Polynomial::constant(ambient.nvars(), 1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("adding vectors of different rank");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("subtracting vectors of different rank");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Polynomial& p, const Vector& v) {
  Vector r;
  r.reserve(v.size());
  for (const Polynomial& c : v) r.push_back(p * c);
  return r;
}

Vector combine(std::span<const Vector> columns, const Vector& coeffs, std::size_t rank,
               std::size_t nvars) {
  if (columns.size() != coeffs.size()) throw DimensionMismatch("coefficient count differs from column count");
  Vector r(rank, Polynomial(nvars));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (columns[j].size() != rank) throw DimensionMismatch("column has wrong rank");
    for (std::size_t i = 0; i < rank; ++i) r[i] += coeffs[j] * columns[j][i];
  }
  return r;
}

std::optional<Degree> degree_bound(const Vector& v, const FreeModule& ambient) {
  std::optional<Degree> best;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [m, c] : v[i].terms()) {
      const Degree d = weighted_degree(m, ambient.weights) + ambient.shifts.at(i);
      if (!best || d > *best) best = d;
    }
  return best;
}

std::optional<Degree> homogeneous_degree(const Vector& v, const FreeModule& ambient) {
  std::optional<Degree> deg;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [m, c] : v[i].terms()) {
      const Degree d = weighted_degree(m, ambient.weights) + ambient.shifts.at(i);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  return deg;
}

bool is_homogeneous(const Vector& v, const FreeModule& ambient) {
  return is_zero(v) || homogeneous_degree(v, ambient).has_value();
}

// ---------------------------------------------------------------------------
// Sorted term lists

namespace {

struct Term {
  Monomial mono;
  std::size_t slot;
  Rational coef;
};
using Terms = std::vector<Term>;

void check_vector(const FreeModule& ambient, const Vector& v) {
  if (v.size() != ambient.rank()) throw DimensionMismatch("vector rank differs from ambient rank");
  for (const Polynomial& p : v)
    if (p.nvars() != ambient.nvars()) throw DimensionMismatch("vector lives over a different ring");
}

Terms to_terms(const Vector& v, const MonomialOrder& order) {
  Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [m, c] : v[i].terms()) t.push_back({m, i, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, a.slot, b.mono, b.slot) > 0;
  });
  return t;
}

Vector from_terms(const Terms& t, std::size_t rank, std::size_t nvars) {
  Vector v(rank, Polynomial(nvars));
  for (const Term& term : t) v[term.slot].add_term(term.mono, term.coef);
  return v;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  const Rational inv = Rational(1) / t.front().coef;
  if (inv == 1) return;
  for (Term& term : t) term.coef *= inv;
}

// a[start..] - c * x^m * b, merged in descending order.
Terms sub_scaled(const Terms& a, std::size_t start, const Rational& c, const Monomial& m,
                 const Terms& b, const MonomialOrder& order) {
  Terms r;
  r.reserve(a.size() - start + b.size());
  std::size_t i = start, j = 0;
  Monomial shifted;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) shifted = monomial_product(b[j].mono, m);
    if (j == b.size()) {
      r.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      r.push_back({shifted, b[j].slot, -c * b[j].coef});
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].mono, a[i].slot, shifted, b[j].slot);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back({shifted, b[j].slot, -c * b[j].coef});
      ++j;
    } else {
      Rational coef = a[i].coef - c * b[j].coef;
      if (coef != 0) r.push_back({a[i].mono, a[i].slot, std::move(coef)});
      ++i;
      ++j;
    }
  }
  return r;
}

const Term* find_reducer(const std::vector<Terms>& basis, const Term& lead, std::size_t* index,
                         std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip || basis[k].empty()) continue;
    const Term& lt = basis[k].front();
    if (lt.slot == lead.slot && divides(lt.mono, lead.mono)) {
      *index = k;
      return &lt;
    }
  }
  return nullptr;
}

// Full reduction of f modulo basis. When `quotients` is given, records the
// multiplier of each basis element.
Terms reduce(Terms f, const std::vector<Terms>& basis, const MonomialOrder& order,
             std::vector<Polynomial>* quotients = nullptr,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  Terms rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lead = f[start];
    std::size_t k = 0;
    const Term* lt = find_reducer(basis, lead, &k, skip);
    if (lt == nullptr) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    const Rational c = lead.coef / lt->coef;
    const Monomial m = monomial_quotient(lead.mono, lt->mono);
    if (quotients != nullptr) (*quotients)[k].add_term(m, c);
    f = sub_scaled(f, start, c, m, basis[k], order);
    start = 0;
  }
  return rem;
}

Terms s_polynomial(const Terms& a, const Terms& b, const MonomialOrder& order) {
  const Monomial l = lcm(a.front().mono, b.front().mono);
  const Rational ca = Rational(1) / a.front().coef;
  const Rational cb = Rational(1) / b.front().coef;
  Terms left = sub_scaled(Terms{}, 0, -ca, monomial_quotient(l, a.front().mono), a, order);
  return sub_scaled(left, 0, cb, monomial_quotient(l, b.front().mono), b, order);
}

}  // namespace

namespace detail {
struct GroebnerData {
  FreeModule ambient;
  MonomialOrder order;
  std::vector<Vector> elements;
  std::vector<Terms> terms;
};
}  // namespace detail

const detail::GroebnerData& groebner_data(const GroebnerBasis& gb) { return *gb.data_; }

const FreeModule& GroebnerBasis::ambient() const { return data_->ambient; }
const MonomialOrder& GroebnerBasis::order() const { return data_->order; }
const std::vector<Vector>& GroebnerBasis::elements() const { return data_->elements; }

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t slot;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, std::size_t rank) : order_(order), rank_(rank) {}

  void add(Terms h) {
    make_monic(h);
    const std::size_t idx = basis_.size();
    const Term& lt = h.front();
    for (std::size_t k = 0; k < idx; ++k) {
      const Term& other = basis_[k].front();
      if (other.slot != lt.slot) continue;
      if (rank_ == 1 && coprime(other.mono, lt.mono)) continue;
      pairs_.push_back({k, idx, lcm(other.mono, lt.mono), lt.slot});
      pending_.insert({k, idx});
    }
    basis_.push_back(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
        const auto cmp = order_.compare(it->lcm, it->slot, best->lcm, best->slot);
        if (cmp < 0 || (cmp == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      pending_.erase({p.i, p.j});
      if (chain_criterion(p)) continue;
      Terms r = reduce(s_polynomial(basis_[p.i], basis_[p.j], order_), basis_, order_);
      if (!r.empty()) add(std::move(r));
    }
  }

  // Minimalize and interreduce.
  std::vector<Terms> reduced() const {
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b) continue;
        const Term& la = basis_[a].front();
        const Term& lb = basis_[b].front();
        if (la.slot != lb.slot || !divides(lb.mono, la.mono)) continue;
        redundant = lb.mono != la.mono || b < a;
      }
      if (!redundant) keep.push_back(a);
    }
    std::vector<Terms> out;
    for (std::size_t a : keep) out.push_back(basis_[a]);
    for (std::size_t a = 0; a < out.size(); ++a) {
      Terms tail(out[a].begin() + 1, out[a].end());
      Terms reduced_tail = reduce(std::move(tail), out, order_, nullptr, a);
      Terms next;
      next.reserve(reduced_tail.size() + 1);
      next.push_back(out[a].front());
      next.insert(next.end(), reduced_tail.begin(), reduced_tail.end());
      out[a] = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Terms& x, const Terms& y) {
      return order_.compare(x.front().mono, x.front().slot, y.front().mono, y.front().slot) > 0;
    });
    return out;
  }

 private:
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const Term& lt = basis_[k].front();
      if (lt.slot != p.slot || !divides(lt.mono, p.lcm)) continue;
      if (pending_.count({std::min(p.i, k), std::max(p.i, k)})) continue;
      if (pending_.count({std::min(p.j, k), std::max(p.j, k)})) continue;
      return true;
    }
    return false;
  }

  const MonomialOrder& order_;
  std::size_t rank_;
  std::vector<Terms> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens,
                         const MonomialOrder& order) {
  Buchberger engine(order, ambient.rank());
  for (const Vector& g : gens) {
    check_vector(ambient, g);
    Terms t = to_terms(g, order);
    if (!t.empty()) engine.add(std::move(t));
  }
  engine.run();
  auto data = std::make_shared<detail::GroebnerData>();
  data->ambient = ambient;
  data->order = order;
  data->terms = engine.reduced();
  for (const Terms& t : data->terms) data->elements.push_back(from_terms(t, ambient.rank(), ambient.nvars()));
  return GroebnerBasis(std::move(data));
}

GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens) {
  return buchberger(ambient, gens, ambient.order());
}

Vector normal_form(const Vector& v, const GroebnerBasis& gb) {
  const auto& data = groebner_data(gb);
  check_vector(data.ambient, v);
  return from_terms(reduce(to_terms(v, data.order), data.terms, data.order), data.ambient.rank(),
                    data.ambient.nvars());
}

bool contains(const GroebnerBasis& gb, const Vector& v) { return is_zero(normal_form(v, gb)); }

Division divide(const Vector& v, const GroebnerBasis& gb) {
  const auto& data = groebner_data(gb);
  check_vector(data.ambient, v);
  Division d;
  d.quotients.assign(data.terms.size(), Polynomial(data.ambient.nvars()));
  d.remainder = from_terms(reduce(to_terms(v, data.order), data.terms, data.order, &d.quotients),
                           data.ambient.rank(), data.ambient.nvars());
  return d;
}

bool verify_s_pairs(const GroebnerBasis& gb) {
  const auto& data = groebner_data(gb);
  for (std::size_t i = 0; i < data.terms.size(); ++i)
    for (std::size_t j = i + 1; j < data.terms.size(); ++j) {
      if (data.terms[i].front().slot != data.terms[j].front().slot) continue;
      if (!reduce(s_polynomial(data.terms[i], data.terms[j], data.order), data.terms, data.order).empty())
        return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Syzygies, intersections, quotients

FreeModule syzygy_ambient(const FreeModule& ambient, std::span<const Vector> gens) {
  FreeModule syz{ambient.weights, {}};
  for (const Vector& g : gens) syz.shifts.push_back(degree_bound(g, ambient).value_or(0));
  return syz;
}

std::vector<Vector> syzygies(const FreeModule& ambient, std::span<const Vector> gens) {
  const std::size_t r = ambient.rank();
  const std::size_t m = gens.size();
  const FreeModule syz = syzygy_ambient(ambient, gens);
  if (m == 0) return {};

  // Stack (g_j ; e_j) and eliminate the first r slots.
  FreeModule stacked{ambient.weights, ambient.shifts};
  stacked.shifts.insert(stacked.shifts.end(), syz.shifts.begin(), syz.shifts.end());
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < m; ++j) {
    check_vector(ambient, gens[j]);
    Vector row = gens[j];
    for (std::size_t k = 0; k < m; ++k)
      row.push_back(k == j ? Polynomial::constant(ambient.nvars(), 1) : Polynomial(ambient.nvars()));
    rows.push_back(std::move(row));
  }
  MonomialOrder order = stacked.order();
  order.leading_slots = r;
  const GroebnerBasis gb = buchberger(stacked, rows, order);

  std::vector<Vector> out;
  const auto& data = groebner_data(gb);
  for (std::size_t k = 0; k < data.terms.size(); ++k) {
    if (data.terms[k].front().slot < r) continue;
    const Vector& e = data.elements[k];
    out.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(r), e.end());
  }
  return out;
}

std::vector<Vector> intersect(const FreeModule& ambient, std::span<const Vector> m,
                              std::span<const Vector> n) {
  for (const Vector& v : m) check_vector(ambient, v);
  for (const Vector& v : n) check_vector(ambient, v);
  if (m.empty() || n.empty()) return {};
  const std::size_t nv = ambient.nvars();

  FreeModule extended{ambient.weights, ambient.shifts};
  extended.weights.push_back(0);
  MonomialOrder order = extended.order();
  order.eliminate.assign(nv + 1, false);
  order.eliminate[nv] = true;

  const Polynomial t = Polynomial::variable(nv + 1, nv);
  const Polynomial one_minus_t = Polynomial::constant(nv + 1, 1) - t;
  std::vector<Vector> gens;
  auto lift = [&](const Vector& v, const Polynomial& factor) {
    Vector out;
    for (const Polynomial& p : v) out.push_back(factor * p.extend(1));
    return out;
  };
  for (const Vector& v : m) gens.push_back(lift(v, t));
  for (const Vector& v : n) gens.push_back(lift(v, one_minus_t));

  const GroebnerBasis gb = buchberger(extended, gens, order);
  std::vector<Vector> out;
  const auto& data = groebner_data(gb);
  for (std::size_t k = 0; k < data.terms.size(); ++k) {
    if (data.terms[k].front().mono[nv] != 0) continue;
    Vector v;
    for (const Polynomial& p : data.elements[k]) v.push_back(p.drop_last());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Polynomial> module_quotient(const FreeModule& ambient, std::span<const Vector> n,
                                        std::span<const Vector> m) {
  const FreeModule ideal_ambient{ambient.weights, {0}};
  std::optional<std::vector<Vector>> acc;
  for (const Vector& g : m) {
    check_vector(ambient, g);
    if (is_zero(g)) continue;
    std::size_t slot = 0;
    while (g[slot].is_zero()) ++slot;
    const Vector single[] = {g};
    std::vector<Vector> colon;
    for (const Vector& w : intersect(ambient, n, single)) {
      auto s = exact_quotient(w[slot], g[slot]);
      if (!s) throw Error("intersection element is not a multiple of the generator");
      colon.push_back(Vector{*s});
    }
    acc = acc ? intersect(ideal_ambient, *acc, colon) : colon;
  }
  std::vector<Polynomial> out;
  if (!acc) {
    out.push_back(Polynomial::constant(ambient.nvars(), 1));
    return out;
  }
  const GroebnerBasis gb = buchberger(ideal_ambient, *acc);
  for (const Vector& v : gb.elements()) out.push_back(v[0]);
  return out;
}

std::vector<Vector> minimal_generators(const FreeModule& ambient, std::span<const Vector> gens) {
  std::vector<std::pair<Degree, Vector>> graded;
  for (const Vector& g : gens) {
    check_vector(ambient, g);
    if (is_zero(g)) continue;
    auto d = homogeneous_degree(g, ambient);
    if (!d) throw NotHomogeneousError("minimal generators require homogeneous input");
    graded.emplace_back(*d, g);
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  using Key = std::pair<Monomial, std::size_t>;
  std::vector<Vector> accepted;
  std::size_t i = 0;
  while (i < graded.size()) {
    const Degree d = graded[i].first;
    std::optional<GroebnerBasis> lower;
    if (!accepted.empty()) lower = buchberger(ambient, accepted);
    SparseEchelon<Key> echelon;
    for (; i < graded.size() && graded[i].first == d; ++i) {
      const Vector r = lower ? normal_form(graded[i].second, *lower) : graded[i].second;
      SparseEchelon<Key>::Row row;
      for (std::size_t s = 0; s < r.size(); ++s)
        for (const auto& [mono, c] : r[s].terms()) row.emplace(Key{mono, s}, c);
      if (echelon.insert(std::move(row))) accepted.push_back(graded[i].second);
    }
  }
  return accepted;
}

bool same_submodule(const FreeModule& ambient, std::span<const Vector> a, std::span<const Vector> b) {
  return buchberger(ambient, a) == buchberger(ambient, b);
}

bool submodule_contains(const FreeModule& ambient, std::span<const Vector> gens,
                        std::span<const Vector> elems) {
  const GroebnerBasis gb = buchberger(ambient, gens);
  return std::all_of(elems.begin(), elems.end(), [&](const Vector& v) { return contains(gb, v); });
}

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionMismatch("dividing polynomials over different rings");
  const MonomialOrder order = MonomialOrder::grevlex(a.nvars());
  const std::vector<Terms> divisor{to_terms(Vector{b}, order)};
  std::vector<Polynomial> q(1, Polynomial(a.nvars()));
  const Terms rem = reduce(to_terms(Vector{a}, order), divisor, order, &q);
  if (!rem.empty()) return std::nullopt;
  return q[0];
}

}  // namespace logder
