#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logder/groebner.hpp"

namespace logder {

/// Homomorphism source -> target of graded free modules. columns[j] is the
/// image of the j-th basis vector of `source`, so entry (i, j) is columns[j][i].
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<Vector> columns;
  bool homogeneous = false;

  std::size_t rows() const { return target.rank(); }
  std::size_t cols() const { return columns.size(); }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return columns[j][i]; }
  Vector apply(const Vector& x) const;
  /// Every nonzero column is homogeneous of its source shift.
  bool check_homogeneous() const;
};

ModuleMap make_map(FreeModule source, FreeModule target, std::vector<Vector> columns);

enum class ResolvedKind {
  Submodule,  // resolves the image of maps[0] inside `ambient`
  Cokernel,   // resolves ambient / image of maps[0]
};

/// Finite free resolution. For a submodule M of `ambient`:
///   ambient <- F_0 <- F_1 <- ... <- F_l,  maps[p] : F_p -> F_{p-1}, F_{-1} = ambient.
/// For a cokernel L / M with L = ambient:
///   F_0 = ambient <- F_1 <- ... <- F_l,   maps[p] : F_{p+1} -> F_p.
/// The zero module has no free modules at all.
struct Resolution {
  ResolvedKind kind = ResolvedKind::Submodule;
  FreeModule ambient;
  std::vector<ModuleMap> maps;
  bool minimal = false;

  /// F_0, ..., F_l.
  std::vector<FreeModule> free_modules() const;
  /// l, or -1 for the zero module.
  std::ptrdiff_t length() const;
};

/// Iterated syzygies of homogeneous generators. F_0 carries one basis vector
/// per nonzero generator with shift = its degree; every later step uses a
/// minimal generating set of the syzygies. Throws NotHomogeneousError.
Resolution free_resolution(const FreeModule& ambient, std::span<const Vector> gens);
/// Resolution of ambient / <relations>.
Resolution resolve_cokernel(const FreeModule& ambient, std::span<const Vector> relations);
/// free_resolution followed by minimize.
Resolution minimal_resolution(const FreeModule& ambient, std::span<const Vector> gens);

/// Cancels unit entries until no map (beyond the augmentation) has a nonzero
/// constant entry.
Resolution minimize(Resolution res);
bool is_minimal(const Resolution& res);

/// Adds the split summand S(-shift) -> S(-shift) between F_{step+1} and F_step.
/// The result resolves the same module and is not minimal.
Resolution with_trivial_summand(Resolution res, std::size_t step, Degree shift);

/// Consecutive maps compose to zero.
bool check_complex(const Resolution& res);
/// Each map's columns generate the full syzygy module of the previous map,
/// and the last map is injective.
bool check_exact(const Resolution& res);

struct BettiTable {
  /// (j, p) -> b_{j,p}, with shift j + p occurring b_{j,p} times in F_p.
  std::map<std::pair<Degree, std::size_t>, std::int64_t> entries;

  std::int64_t at(Degree j, std::size_t p) const;
  /// b_p = sum_j b_{j,p}.
  std::int64_t total(std::size_t p) const;
  /// Some shift d in F_p has d < p, forcing a negative row index.
  bool has_negative_rows() const;
};

/// Throws NotMinimalError when res has a unit entry.
BettiTable betti_numbers(const Resolution& res);
/// Macaulay-style table: rows j, columns p.
std::string format_betti(const BettiTable& table);

/// sum_p (-1)^p sum_i d_i^p
Degree alternating_degree_sum(const Resolution& res);
/// sum_p (-1)^p rank F_p
std::int64_t alternating_rank_sum(const Resolution& res);
/// sum_p (-1)^p sum_j (j + p) b_{j,p}
Degree betti_degree_sum(const BettiTable& table);

/// Shift lists of F_0..F_l, e.g. "{1,2,3,3} {5}".
std::string format_shifts(const Resolution& res);

}  // namespace logder
