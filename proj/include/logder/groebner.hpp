#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "logder/poly.hpp"

namespace logder {

/// Element of a free module: one polynomial coefficient per slot.
using Vector = std::vector<Polynomial>;

/// The graded free module (+)_i S^u(-shifts[i]) over S = Q[x_1..x_n] with
/// x_j weighted weights[j]. Term x^a e_i has degree u.a + shifts[i].
struct FreeModule {
  std::vector<Degree> weights;
  std::vector<Degree> shifts;

  static FreeModule standard(std::size_t nvars, std::size_t rank) {
    return {std::vector<Degree>(nvars, 1), std::vector<Degree>(rank, 0)};
  }

  std::size_t nvars() const { return weights.size(); }
  std::size_t rank() const { return shifts.size(); }
  MonomialOrder order() const { return MonomialOrder::graded(weights, shifts); }

  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

Vector zero_vector(const FreeModule& ambient);
Vector unit_vector(const FreeModule& ambient, std::size_t slot);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Polynomial& p, const Vector& v);
/// Sum over j of coeffs[j] * columns[j].
Vector combine(std::span<const Vector> columns, const Vector& coeffs, std::size_t rank,
               std::size_t nvars);

/// Largest degree of a term of v; nullopt for the zero vector.
std::optional<Degree> degree_bound(const Vector& v, const FreeModule& ambient);
/// Common degree of all terms, or nullopt when v is zero or inhomogeneous.
std::optional<Degree> homogeneous_degree(const Vector& v, const FreeModule& ambient);
bool is_homogeneous(const Vector& v, const FreeModule& ambient);

namespace detail {
struct GroebnerData;
}

/// Reduced Groebner basis of a submodule. Elements are monic and sorted by
/// descending leading term; two reduced bases of the same module under the
/// same order compare equal.
class GroebnerBasis {
 public:
  const FreeModule& ambient() const;
  const MonomialOrder& order() const;
  const std::vector<Vector>& elements() const;
  std::size_t size() const { return elements().size(); }
  bool empty() const { return elements().empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements() == b.elements();
  }

 private:
  explicit GroebnerBasis(std::shared_ptr<const detail::GroebnerData> data) : data_(std::move(data)) {}
  friend GroebnerBasis buchberger(const FreeModule&, std::span<const Vector>, const MonomialOrder&);
  friend const detail::GroebnerData& groebner_data(const GroebnerBasis&);

  std::shared_ptr<const detail::GroebnerData> data_;
};

/// Buchberger's algorithm with normal pair selection and the chain criterion
/// (plus the coprime criterion in rank one). Throws DimensionMismatch when a
/// generator does not live in `ambient`.
GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens,
                         const MonomialOrder& order);
GroebnerBasis buchberger(const FreeModule& ambient, std::span<const Vector> gens);

/// Fully reduced remainder of v; zero iff v lies in the module.
Vector normal_form(const Vector& v, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const Vector& v);

struct Division {
  std::vector<Polynomial> quotients;  // one per basis element
  Vector remainder;
};
/// Division with recorded quotients: v = sum quotients[i] * gb[i] + remainder.
Division divide(const Vector& v, const GroebnerBasis& gb);

/// Buchberger certificate: every S-pair of the basis reduces to zero.
bool verify_s_pairs(const GroebnerBasis& gb);

/// Free module of rank gens.size() whose slot shifts are the degree bounds
/// of the generators (Schreyer shifts in the homogeneous case).
FreeModule syzygy_ambient(const FreeModule& ambient, std::span<const Vector> gens);

/// Generators (a reduced Groebner basis) of the module of relations
/// s with sum_j s_j gens[j] = 0, living in syzygy_ambient(ambient, gens).
std::vector<Vector> syzygies(const FreeModule& ambient, std::span<const Vector> gens);

/// Generators of M cap N, computed by eliminating an auxiliary variable t
/// from <t M, (1 - t) N>.
std::vector<Vector> intersect(const FreeModule& ambient, std::span<const Vector> m,
                              std::span<const Vector> n);

/// Generators of the ideal (N : M) = {s : s M contained in N}.
std::vector<Polynomial> module_quotient(const FreeModule& ambient, std::span<const Vector> n,
                                        std::span<const Vector> m);

/// Minimal homogeneous generating set extracted from homogeneous gens, in
/// order of increasing degree. Throws NotHomogeneousError otherwise.
std::vector<Vector> minimal_generators(const FreeModule& ambient, std::span<const Vector> gens);

bool same_submodule(const FreeModule& ambient, std::span<const Vector> a, std::span<const Vector> b);
/// True when every element of `elems` lies in the module generated by gens.
bool submodule_contains(const FreeModule& ambient, std::span<const Vector> gens,
                        std::span<const Vector> elems);

/// a / b when b divides a exactly.
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b);

}  // namespace logder
