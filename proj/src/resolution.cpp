#include "logder/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "logder/errors.hpp"

namespace logder {

Vector ModuleMap::apply(const Vector& x) const {
  if (x.size() != columns.size()) throw DimensionMismatch("vector length differs from map source rank");
  return combine(columns, x, target.rank(), target.nvars());
}

bool ModuleMap::check_homogeneous() const {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (is_zero(columns[j])) continue;
    auto d = homogeneous_degree(columns[j], target);
    if (!d || *d != source.shifts[j]) return false;
  }
  return true;
}

ModuleMap make_map(FreeModule source, FreeModule target, std::vector<Vector> columns) {
  ModuleMap m{std::move(source), std::move(target), std::move(columns), false};
  if (m.columns.size() != m.source.rank()) throw DimensionMismatch("column count differs from source rank");
  for (const Vector& c : m.columns)
    if (c.size() != m.target.rank()) throw DimensionMismatch("column length differs from target rank");
  m.homogeneous = m.check_homogeneous();
  return m;
}

std::vector<FreeModule> Resolution::free_modules() const {
  std::vector<FreeModule> out;
  if (kind == ResolvedKind::Cokernel) out.push_back(ambient);
  for (const ModuleMap& m : maps) out.push_back(m.source);
  return out;
}

std::ptrdiff_t Resolution::length() const {
  return static_cast<std::ptrdiff_t>(free_modules().size()) - 1;
}

namespace {

FreeModule graded_module(const FreeModule& like, std::span<const Vector> gens, const FreeModule& ambient) {
  FreeModule out{like.weights, {}};
  for (const Vector& g : gens) out.shifts.push_back(*homogeneous_degree(g, ambient));
  return out;
}

// Appends the tail of a resolution below `top`, a homogeneous map whose
// kernel still has to be resolved.
void resolve_kernels(std::vector<ModuleMap>& maps) {
  while (true) {
    const ModuleMap& top = maps.back();
    if (top.columns.empty()) return;
    const FreeModule syz_ambient = syzygy_ambient(top.target, top.columns);
    const std::vector<Vector> syz = syzygies(top.target, top.columns);
    std::vector<Vector> gens = minimal_generators(syz_ambient, syz);
    if (gens.empty()) return;
    FreeModule source = graded_module(syz_ambient, gens, syz_ambient);
    maps.push_back(make_map(std::move(source), syz_ambient, std::move(gens)));
  }
}

std::vector<Vector> homogeneous_nonzero(const FreeModule& ambient, std::span<const Vector> gens) {
  std::vector<Vector> cols;
  for (const Vector& g : gens) {
    if (g.size() != ambient.rank()) throw DimensionMismatch("generator rank differs from ambient rank");
    if (is_zero(g)) continue;
    if (!is_homogeneous(g, ambient))
      throw NotHomogeneousError("a graded resolution needs homogeneous generators");
    cols.push_back(g);
  }
  return cols;
}

// Index of the first map that may not carry unit entries.
std::size_t first_checked_map(const Resolution& res) {
  return res.kind == ResolvedKind::Submodule ? 1 : 0;
}

}  // namespace

Resolution free_resolution(const FreeModule& ambient, std::span<const Vector> gens) {
  Resolution res;
  res.kind = ResolvedKind::Submodule;
  res.ambient = ambient;
  std::vector<Vector> cols = homogeneous_nonzero(ambient, gens);
  if (cols.empty()) {
    res.minimal = true;
    return res;
  }
  FreeModule f0 = graded_module(ambient, cols, ambient);
  res.maps.push_back(make_map(std::move(f0), ambient, std::move(cols)));
  resolve_kernels(res.maps);
  res.minimal = is_minimal(res);
  return res;
}

Resolution resolve_cokernel(const FreeModule& ambient, std::span<const Vector> relations) {
  Resolution res;
  res.kind = ResolvedKind::Cokernel;
  res.ambient = ambient;
  std::vector<Vector> cols = homogeneous_nonzero(ambient, relations);
  if (!cols.empty()) {
    FreeModule f1 = graded_module(ambient, cols, ambient);
    res.maps.push_back(make_map(std::move(f1), ambient, std::move(cols)));
    resolve_kernels(res.maps);
  }
  res.minimal = is_minimal(res);
  return res;
}

Resolution minimal_resolution(const FreeModule& ambient, std::span<const Vector> gens) {
  return minimize(free_resolution(ambient, gens));
}

// ---------------------------------------------------------------------------
// Minimalization

namespace {

struct UnitEntry {
  std::size_t map, row, col;
};

std::optional<UnitEntry> find_unit(const Resolution& res) {
  for (std::size_t p = first_checked_map(res); p < res.maps.size(); ++p) {
    const ModuleMap& m = res.maps[p];
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const Polynomial& a = m.entry(i, j);
        if (!a.is_zero() && a.is_constant()) return UnitEntry{p, i, j};
      }
  }
  return std::nullopt;
}

template <class T>
void erase_at(std::vector<T>& v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
}

}  // namespace

bool is_minimal(const Resolution& res) { return !find_unit(res).has_value(); }

Resolution minimize(Resolution res) {
  while (auto unit = find_unit(res)) {
    const auto [p, i, j] = *unit;
    ModuleMap& m = res.maps[p];
    const Rational pivot = m.entry(i, j).constant_term();

    // Clear row i outside the pivot column by column operations on F_p.
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k == j || m.entry(i, k).is_zero()) continue;
      const Polynomial factor = m.entry(i, k) * (Rational(1) / pivot);
      m.columns[k] = m.columns[k] - factor * m.columns[j];
    }
    // Drop the pivot column, then the pivot row.
    erase_at(m.columns, j);
    erase_at(m.source.shifts, j);
    for (Vector& c : m.columns) erase_at(c, i);
    erase_at(m.target.shifts, i);

    // The previous map loses the basis vector i of its source.
    if (p > 0) {
      ModuleMap& prev = res.maps[p - 1];
      erase_at(prev.columns, i);
      erase_at(prev.source.shifts, i);
    } else {
      erase_at(res.ambient.shifts, i);
    }
    // The next map loses row j; those coordinates are zero after the column operations.
    if (p + 1 < res.maps.size()) {
      ModuleMap& next = res.maps[p + 1];
      for (Vector& c : next.columns) erase_at(c, j);
      erase_at(next.target.shifts, j);
    }
    // Drop trailing steps that became empty.
    while (!res.maps.empty() && res.maps.back().columns.empty()) res.maps.pop_back();
  }
  for (ModuleMap& m : res.maps) m.homogeneous = m.check_homogeneous();
  res.minimal = true;
  return res;
}

Resolution with_trivial_summand(Resolution res, std::size_t step, Degree shift) {
  // Index of the map whose source is F_step.
  const std::size_t offset = res.kind == ResolvedKind::Submodule ? 0 : 1;
  if (offset == 1 && step == 0) throw Error("the presented module F_0 is fixed; pad a later step");
  const std::size_t src_map = step - offset;
  if (src_map >= res.maps.size()) throw DimensionMismatch("step beyond the resolution length");
  const std::size_t nv = res.ambient.nvars();

  // New basis vector of F_step mapping to zero.
  ModuleMap& at = res.maps[src_map];
  at.source.shifts.push_back(shift);
  at.columns.push_back(zero_vector(at.target));
  if (src_map + 1 < res.maps.size()) {
    ModuleMap& next = res.maps[src_map + 1];
    next.target = at.source;
    for (Vector& c : next.columns) c.push_back(Polynomial(nv));
  }
  // New basis vector of F_{step+1} mapping onto it.
  if (src_map + 1 == res.maps.size()) {
    FreeModule source{at.source.weights, {}};
    res.maps.push_back(make_map(std::move(source), at.source, {}));
  }
  ModuleMap& next = res.maps[src_map + 1];
  next.source.shifts.push_back(shift);
  next.columns.push_back(unit_vector(next.target, next.target.rank() - 1));
  if (src_map + 2 < res.maps.size()) {
    ModuleMap& after = res.maps[src_map + 2];
    after.target = next.source;
    for (Vector& c : after.columns) c.push_back(Polynomial(nv));
  }
  for (ModuleMap& m : res.maps) m.homogeneous = m.check_homogeneous();
  res.minimal = false;
  return res;
}

// ---------------------------------------------------------------------------
// Checks

bool check_complex(const Resolution& res) {
  for (std::size_t p = 1; p < res.maps.size(); ++p)
    for (const Vector& c : res.maps[p].columns)
      if (!is_zero(res.maps[p - 1].apply(c))) return false;
  return true;
}

bool check_exact(const Resolution& res) {
  if (!check_complex(res)) return false;
  for (std::size_t p = 0; p < res.maps.size(); ++p) {
    const ModuleMap& m = res.maps[p];
    const std::vector<Vector> syz = syzygies(m.target, m.columns);
    const FreeModule& src = m.source;
    if (p + 1 < res.maps.size()) {
      if (!same_submodule(src, syz, res.maps[p + 1].columns)) return false;
    } else if (!syz.empty()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Betti numbers and sums

std::int64_t BettiTable::at(Degree j, std::size_t p) const {
  auto it = entries.find({j, p});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(std::size_t p) const {
  std::int64_t s = 0;
  for (const auto& [key, b] : entries)
    if (key.second == p) s += b;
  return s;
}

bool BettiTable::has_negative_rows() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.first.first < 0; });
}

BettiTable betti_numbers(const Resolution& res) {
  if (!is_minimal(res)) throw NotMinimalError("Betti numbers need a minimal resolution");
  BettiTable table;
  const auto modules = res.free_modules();
  for (std::size_t p = 0; p < modules.size(); ++p)
    for (Degree d : modules[p].shifts) ++table.entries[{d - static_cast<Degree>(p), p}];
  return table;
}

std::string format_betti(const BettiTable& table) {
  if (table.entries.empty()) return "(zero module)\n";
  std::size_t max_p = 0;
  Degree min_j = table.entries.begin()->first.first, max_j = min_j;
  for (const auto& [key, b] : table.entries) {
    max_p = std::max(max_p, key.second);
    min_j = std::min(min_j, key.first);
    max_j = std::max(max_j, key.first);
  }
  const int width = 6;
  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << std::string(width - std::min<int>(width - 1, static_cast<int>(s.size())), ' ') << s;
  };
  cell("");
  for (std::size_t p = 0; p <= max_p; ++p) cell(std::to_string(p));
  out << "\n";
  cell("total:");
  for (std::size_t p = 0; p <= max_p; ++p) cell(std::to_string(table.total(p)));
  out << "\n";
  for (Degree j = min_j; j <= max_j; ++j) {
    cell(std::to_string(j) + ":");
    for (std::size_t p = 0; p <= max_p; ++p) {
      const auto b = table.at(j, p);
      cell(b == 0 ? "." : std::to_string(b));
    }
    out << "\n";
  }
  return out.str();
}

Degree alternating_degree_sum(const Resolution& res) {
  Degree total = 0;
  const auto modules = res.free_modules();
  for (std::size_t p = 0; p < modules.size(); ++p) {
    Degree s = 0;
    for (Degree d : modules[p].shifts) s += d;
    total += p % 2 == 0 ? s : -s;
  }
  return total;
}

std::int64_t alternating_rank_sum(const Resolution& res) {
  std::int64_t total = 0;
  const auto modules = res.free_modules();
  for (std::size_t p = 0; p < modules.size(); ++p) {
    const auto r = static_cast<std::int64_t>(modules[p].rank());
    total += p % 2 == 0 ? r : -r;
  }
  return total;
}

Degree betti_degree_sum(const BettiTable& table) {
  Degree total = 0;
  for (const auto& [key, b] : table.entries) {
    const auto [j, p] = key;
    const Degree term = (j + static_cast<Degree>(p)) * b;
    total += p % 2 == 0 ? term : -term;
  }
  return total;
}

std::string format_shifts(const Resolution& res) {
  std::string out;
  for (const FreeModule& f : res.free_modules()) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < f.shifts.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(f.shifts[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace logder
