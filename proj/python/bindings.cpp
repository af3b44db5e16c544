#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "logder/derivmod.hpp"
#include "logder/errors.hpp"
#include "logder/hilbert.hpp"
#include "logder/homog.hpp"
#include "logder/resolution.hpp"

namespace py = pybind11;
using namespace logder;

namespace {

using FactorList = std::vector<std::pair<std::string, unsigned>>;
using Degrees = std::optional<std::vector<Degree>>;

struct Input {
  std::vector<std::string> names;
  FactoredPolynomial f;
  GradedContext ctx;
};

Input make_input(const std::string& poly, const std::vector<std::string>& vars, const Degrees& u, const Degrees& v,
                 const FactorList& factors) {
  FactoredPolynomial f;
  f.nvars = vars.size();
  if (factors.empty()) {
    f = FactoredPolynomial::single(parse_poly(poly, vars));
  } else {
    for (const auto& [text, e] : factors) f.factors.push_back({parse_poly(text, vars), e, true});
    if (!poly.empty() && parse_poly(poly, vars) != f.product())
      throw Error("the factors do not multiply to the given polynomial");
  }
  f.validate(vars);
  const WeightVector w = u ? WeightVector(*u) : WeightVector::standard(vars.size());
  std::vector<Degree> shifts;
  if (v) {
    shifts = *v;
  } else {
    const Degree k = vars.empty() ? 0 : *std::max_element(w.values().begin(), w.values().end());
    for (Degree wi : w.values()) shifts.push_back(k - wi);
  }
  if (shifts.size() != vars.size() || w.size() != vars.size())
    throw DimensionMismatch("u and v need one entry per variable");
  return {vars, std::move(f), GradedContext(w, shifts)};
}

Resolution resolve(const Input& in, bool homogenize) {
  if (homogenize) return chi_homogenized(in.f).resolution;
  return minimal_resolution(in.ctx.module(), generalized_log_module(in.f, in.ctx));
}

std::vector<std::vector<Degree>> shift_lists(const Resolution& res) {
  std::vector<std::vector<Degree>> out;
  for (const FreeModule& m : res.free_modules()) out.push_back(m.shifts);
  return out;
}

}  // namespace

PYBIND11_MODULE(_logder, m) {
  m.doc() = "Logarithmic derivation modules, graded resolutions and Hilbert series";

  py::register_exception<Error>(m, "LogderError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "normalize", [](const std::string& text, const std::vector<std::string>& vars) {
        return format_poly(parse_poly(text, vars), vars);
      },
      py::arg("text"), py::arg("vars"), "Parse and print a polynomial in canonical form.");

  m.def(
      "infer_weights",
      [](const std::string& text, const std::vector<std::string>& vars) -> Degrees {
        auto w = logder::infer_weights(parse_poly(text, vars));
        if (!w) return std::nullopt;
        return w->values();
      },
      py::arg("text"), py::arg("vars"));

  m.def(
      "derivations",
      [](const std::string& poly, const std::vector<std::string>& vars, const Degrees& u, const Degrees& v,
         const FactorList& factors) {
        const Input in = make_input(poly, vars, u, v, factors);
        std::vector<std::string> out;
        for (const Derivation& d : generalized_log_module(in.f, in.ctx)) out.push_back(format_derivation(d, vars));
        return out;
      },
      py::arg("poly"), py::arg("vars"), py::arg("u") = py::none(), py::arg("v") = py::none(),
      py::arg("factors") = FactorList{}, "Generators of D(f) in the printing syntax.");

  m.def(
      "resolution_shifts",
      [](const std::string& poly, const std::vector<std::string>& vars, const Degrees& u, const Degrees& v,
         const FactorList& factors, bool homogenize) {
        return shift_lists(resolve(make_input(poly, vars, u, v, factors), homogenize));
      },
      py::arg("poly"), py::arg("vars"), py::arg("u") = py::none(), py::arg("v") = py::none(),
      py::arg("factors") = FactorList{}, py::arg("homogenize") = false,
      "Shifts of each free module in the minimal resolution of D(f) (or D(f)^h).");

  m.def(
      "betti",
      [](const std::string& poly, const std::vector<std::string>& vars, const Degrees& u, const Degrees& v,
         const FactorList& factors, bool homogenize) {
        std::map<std::pair<Degree, std::size_t>, std::int64_t> out;
        for (const auto& [key, b] : betti_numbers(resolve(make_input(poly, vars, u, v, factors), homogenize)).entries)
          out[key] = b;
        return out;
      },
      py::arg("poly"), py::arg("vars"), py::arg("u") = py::none(), py::arg("v") = py::none(),
      py::arg("factors") = FactorList{}, py::arg("homogenize") = false,
      "Graded Betti numbers keyed by (j, p).");

  m.def(
      "chi",
      [](const std::string& poly, const std::vector<std::string>& vars, const Degrees& u, const Degrees& v,
         const FactorList& factors, bool homogenize) {
        const Input in = make_input(poly, vars, u, v, factors);
        if (homogenize) {
          const HomogenizedChi hc = chi_homogenized(in.f);
          return std::make_pair(hc.chi_value, hc.degree);
        }
        const TheoremReport r = verify_main_theorem(in.f, in.ctx);
        return std::make_pair(r.chi_value, r.expected);
      },
      py::arg("poly"), py::arg("vars"), py::arg("u") = py::none(), py::arg("v") = py::none(),
      py::arg("factors") = FactorList{}, py::arg("homogenize") = false,
      "(chi, expected) where expected is deg^u(f) + |v|, or deg f with homogenize.");

  m.def(
      "saito",
      [](const std::vector<std::string>& deltas, const std::string& poly, const std::vector<std::string>& vars,
         const FactorList& factors) -> py::tuple {
        const Input in = make_input(poly, vars, std::nullopt, std::nullopt, factors);
        std::vector<Derivation> ds;
        for (const std::string& d : deltas) ds.push_back(parse_derivation(d, vars));
        const SaitoCertificate cert = saito_check(ds, in.f);
        if (const auto* ok = std::get_if<IsBasis>(&cert)) return py::make_tuple("IsBasis", format_rational(ok->c));
        return py::make_tuple("NotBasis", std::get<NotBasis>(cert).reason);
      },
      py::arg("deltas"), py::arg("poly"), py::arg("vars"), py::arg("factors") = FactorList{});

  m.def(
      "hilbert_series",
      [](const std::vector<Degree>& weights, const std::vector<Degree>& shifts) {
        return format_series(hp_free(shifts, WeightVector(weights)));
      },
      py::arg("weights"), py::arg("shifts") = std::vector<Degree>{0}, "Series of a free module, as text.");

  m.def(
      "run_json",
      [](const std::string& command, const std::string& polynomial, const std::vector<std::string>& vars,
         const Degrees& u, const Degrees& v, const std::string& factors, bool homogenize, bool infer_weights,
         const std::string& of, const std::string& basis, const std::string& resolution, std::size_t random,
         std::uint64_t seed, std::size_t min_vars, std::size_t max_vars, Degree max_degree, bool inject_fault) {
        cli::JobSpec job;
        job.command = command;
        job.polynomial = polynomial;
        job.vars = vars;
        job.u = u;
        job.v = v;
        job.factors = factors;
        job.homogenize = homogenize;
        job.infer_weights = infer_weights;
        job.of = of;
        job.basis_file = basis;
        job.resolution_file = resolution;
        job.harness.count = random;
        job.harness.seed = seed;
        job.harness.min_vars = min_vars;
        job.harness.max_vars = max_vars;
        job.harness.max_degree = max_degree;
        job.harness.inject_fault = inject_fault;
        return cli::render(cli::run_command(job), "json");
      },
      py::arg("command"), py::arg("polynomial") = "", py::arg("vars") = std::vector<std::string>{},
      py::arg("u") = py::none(), py::arg("v") = py::none(), py::arg("factors") = "", py::arg("homogenize") = false,
      py::arg("infer_weights") = false, py::arg("of") = "dmodule", py::arg("basis") = "",
      py::arg("resolution") = "", py::arg("random") = 25, py::arg("seed") = 0, py::arg("min_vars") = 2,
      py::arg("max_vars") = 3, py::arg("max_degree") = 6, py::arg("inject_fault") = false,
      "Run a CLI command and return its JSON report as text.");
}
