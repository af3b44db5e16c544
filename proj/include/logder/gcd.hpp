#pragma once

#include "logder/poly.hpp"

namespace logder {

/// Monic (under grevlex) greatest common divisor, computed as p*q divided by
/// the generator of the principal ideal <p> cap <q>.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

struct SquarefreeResult {
  bool squarefree;
  /// gcd(p, dp/dx_1, ..., dp/dx_n); constant iff p is squarefree.
  Polynomial witness;
};

/// Throws ConstantInputError on constant p.
SquarefreeResult squarefree_test(const Polynomial& p);

}  // namespace logder
