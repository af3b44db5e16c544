#include "logder/homog.hpp"

#include <algorithm>

#include "logder/errors.hpp"

namespace logder {

namespace {

FreeModule standard_graded(const FreeModule& ambient) {
  return {std::vector<Degree>(ambient.nvars(), 1), ambient.shifts};
}

std::size_t count_contained(const FreeModule& ambient, std::span<const Vector> gens,
                            std::span<const Vector> elems) {
  const GroebnerBasis gb = buchberger(ambient, gens);
  return static_cast<std::size_t>(
      std::count_if(elems.begin(), elems.end(), [&](const Vector& v) { return contains(gb, v); }));
}

}  // namespace

std::optional<Degree> filtration_degree(const Vector& v, std::span<const Degree> shifts) {
  std::optional<Degree> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Degree d = v[i].total_degree() + shifts[i];
    if (!best || d > *best) best = d;
  }
  return best;
}

Polynomial homogenize_to(const Polynomial& p, Degree degree) {
  Polynomial out(p.nvars() + 1);
  for (const auto& [m, c] : p.terms()) {
    const Degree d = total_degree(m);
    if (d > degree) throw FiltrationViolation("a term has degree above the declared bound");
    Monomial mm = m;
    mm.push_back(static_cast<Exponent>(degree - d));
    out.add_term(mm, c);
  }
  return out;
}

Polynomial homogenize(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("cannot homogenize the zero polynomial");
  return homogenize_to(p, p.total_degree());
}

Vector homogenize_elem_to(const Vector& v, std::span<const Degree> shifts, Degree degree) {
  if (v.size() != shifts.size()) throw DimensionMismatch("element rank differs from shift count");
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(homogenize_to(v[i], degree - shifts[i]));
  return out;
}

HomogenizedElement homogenize_elem(const Vector& v, std::span<const Degree> shifts) {
  const auto d = filtration_degree(v, shifts);
  if (!d) throw ZeroPolynomialError("cannot homogenize the zero element");
  return {homogenize_elem_to(v, shifts, *d), *d};
}

Vector dehomogenize(const Vector& v) {
  Vector out;
  for (const Polynomial& p : v) out.push_back(p.set_last_to_one());
  return out;
}

Degree h_valuation(const Vector& v) {
  Degree best = -1;
  for (const Polynomial& p : v)
    for (const auto& [m, c] : p.terms())
      if (best < 0 || m.back() < best) best = m.back();
  return best;
}

FreeModule homogenized_ambient(const FreeModule& ambient) {
  return {std::vector<Degree>(ambient.nvars() + 1, 1), ambient.shifts};
}

HomogenizedModule homogenize_module(const FreeModule& ambient, std::span<const Vector> gens) {
  const FreeModule graded = standard_graded(ambient);
  const GroebnerBasis gb = buchberger(graded, gens);
  HomogenizedModule out;
  for (const Vector& g : gb.elements()) out.generators.push_back(homogenize_elem(g, ambient.shifts).element);
  std::vector<Vector> naive;
  for (const Vector& g : gens)
    if (!is_zero(g)) naive.push_back(homogenize_elem(g, ambient.shifts).element);
  out.naive_suffices = same_submodule(homogenized_ambient(ambient), naive, out.generators);
  return out;
}

// ---------------------------------------------------------------------------
// Resolutions

HomogenizedComplex homogenize_resolution(const Resolution& affine) {
  if (affine.kind != ResolvedKind::Submodule)
    throw Error("homogenization expects the resolution of a submodule");
  HomogenizedComplex out;
  out.complex.kind = ResolvedKind::Submodule;
  out.complex.ambient = homogenized_ambient(affine.ambient);
  for (const ModuleMap& m : affine.maps) {
    const FreeModule target_h = homogenized_ambient(m.target);
    const FreeModule source_h = homogenized_ambient(m.source);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (is_zero(m.columns[j]))
        cols.push_back(zero_vector(target_h));
      else
        cols.push_back(homogenize_elem_to(m.columns[j], m.target.shifts, m.source.shifts[j]));
    }
    StepCheck step{true, std::nullopt};
    const auto expected = homogenize_module(m.target, m.columns).generators;
    const GroebnerBasis image = buchberger(target_h, cols);
    for (const Vector& e : expected)
      if (!contains(image, e)) {
        step = {false, e};
        break;
      }
    out.steps.push_back(std::move(step));
    out.complex.maps.push_back(make_map(source_h, target_h, std::move(cols)));
  }
  out.complex.minimal = is_minimal(out.complex);
  out.is_complex = check_complex(out.complex);
  out.is_resolution =
      out.is_complex && std::all_of(out.steps.begin(), out.steps.end(), [](const StepCheck& s) { return s.image_contains; });
  return out;
}

Resolution filtered_resolution(const FreeModule& ambient, std::span<const Vector> gens) {
  const FreeModule graded = standard_graded(ambient);
  const auto mh = homogenize_module(graded, gens).generators;
  const Resolution res_h = minimal_resolution(homogenized_ambient(graded), mh);
  Resolution out;
  out.kind = ResolvedKind::Submodule;
  out.ambient = graded;
  for (const ModuleMap& m : res_h.maps) {
    std::vector<Vector> cols;
    for (const Vector& c : m.columns) cols.push_back(dehomogenize(c));
    FreeModule source{graded.weights, m.source.shifts};
    FreeModule target{graded.weights, m.target.shifts};
    out.maps.push_back(make_map(std::move(source), std::move(target), std::move(cols)));
  }
  out.minimal = false;
  return out;
}

bool kernel_commutes(const ModuleMap& affine) {
  const FreeModule target = standard_graded(affine.target);
  const FreeModule source = standard_graded(affine.source);
  const FreeModule target_h = homogenized_ambient(target);
  const FreeModule source_h = homogenized_ambient(source);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < affine.cols(); ++j)
    cols.push_back(is_zero(affine.columns[j]) ? zero_vector(target_h)
                                              : homogenize_elem_to(affine.columns[j], target.shifts,
                                                                   source.shifts[j]));
  const auto kernel = syzygies(target, affine.columns);
  const auto kernel_h = homogenize_module(source, kernel).generators;
  const auto kernel_of_h = syzygies(target_h, cols);
  return same_submodule(source_h, kernel_h, kernel_of_h);
}

// ---------------------------------------------------------------------------
// Derivation modules

FactoredPolynomial homogenize_factored(const FactoredPolynomial& f) {
  FactoredPolynomial out;
  out.nvars = f.nvars + 1;
  for (const Factor& fac : f.factors) out.factors.push_back({homogenize(fac.f), fac.multiplicity, fac.irreducible_asserted});
  return out;
}

HomogenizedChi chi_homogenized(const FactoredPolynomial& f) {
  f.validate();
  const std::size_t n = f.nvars;
  const FreeModule module = FreeModule::standard(n, n);
  const auto gens = generalized_log_module(f, GradedContext::standard(n));
  HomogenizedChi out;
  out.degree = f.product().total_degree();
  out.generators = homogenize_module(module, gens).generators;
  out.resolution = minimal_resolution(homogenized_ambient(module), out.generators);
  out.chi_value = chi(hp_from_resolution(out.resolution)).value;
  out.verdict = {"chi(D(f)^h) = deg f", static_cast<long>(out.chi_value), static_cast<long>(out.degree),
                 out.chi_value == out.degree};
  return out;
}

LemmaReport verify_lemma_intersection(const FactoredPolynomial& f) {
  f.validate();
  const std::size_t n = f.nvars;
  const FactoredPolynomial fh = homogenize_factored(f);
  const FreeModule big = FreeModule::standard(n + 1, n + 1);
  const auto dfh = generalized_log_module(fh, GradedContext::standard(n + 1));
  std::vector<Vector> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(unit_vector(big, i));

  LemmaReport out;
  for (const Vector& v : intersect(big, dfh, partials)) {
    if (!v[n].is_zero()) throw Error("intersection left the span of the x-partials");
    out.left.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  }
  const FreeModule module = FreeModule::standard(n, n);
  out.right = homogenize_module(module, generalized_log_module(f, GradedContext::standard(n))).generators;

  const FreeModule module_h = homogenized_ambient(module);
  const auto left_gb = buchberger(module_h, out.left).elements();
  const auto right_gb = buchberger(module_h, out.right).elements();
  const std::size_t hits =
      count_contained(module_h, out.left, right_gb) + count_contained(module_h, out.right, left_gb);
  const std::size_t total = left_gb.size() + right_gb.size();
  out.verdict = {"D(f^h) cap <d_x> = D(f)^h (mutual containment of bases)", static_cast<long>(hits),
                 static_cast<long>(total), hits == total && left_gb == right_gb};
  return out;
}

}  // namespace logder
