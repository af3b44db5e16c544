#include "logder/gcd.hpp"

#include "logder/errors.hpp"
#include "logder/groebner.hpp"

namespace logder {

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  const auto terms = sorted_terms(p, MonomialOrder::grevlex(p.nvars()));
  return p * (Rational(1) / terms.front().second);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw DimensionMismatch("gcd of polynomials over different rings");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  if (p.is_constant() || q.is_constant()) return Polynomial::constant(p.nvars(), 1);

  const FreeModule ring = FreeModule::standard(p.nvars(), 1);
  const Vector a[] = {Vector{p}};
  const Vector b[] = {Vector{q}};
  const auto meet = intersect(ring, a, b);
  const auto gb = buchberger(ring, meet);
  if (gb.size() != 1) throw Error("intersection of principal ideals is not principal");
  auto g = exact_quotient(p * q, gb.elements().front()[0]);
  if (!g) throw Error("lcm does not divide the product");
  return monic(*g);
}

SquarefreeResult squarefree_test(const Polynomial& p) {
  if (p.is_constant()) throw ConstantInputError("squarefree test of a constant polynomial");
  Polynomial g = p;
  for (std::size_t i = 0; i < p.nvars() && !g.is_constant(); ++i)
    g = poly_gcd(g, partial_derivative(p, i));
  g = monic(g);
  return {g.is_constant(), g};
}

}  // namespace logder
