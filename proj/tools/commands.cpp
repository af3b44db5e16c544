#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "logder/derivmod.hpp"
#include "logder/errors.hpp"
#include "logder/hilbert.hpp"
#include "logder/homog.hpp"
#include "logder/resolution.hpp"

namespace logder::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------
// Inputs

struct Setup {
  std::vector<std::string> names;
  FactoredPolynomial f;
  WeightVector u{std::vector<Degree>{}};
  std::vector<Degree> v;

  GradedContext ctx() const { return GradedContext(u, v); }
  std::size_t n() const { return names.size(); }
};

struct FactorText {
  std::string poly;
  unsigned multiplicity;
};

std::vector<FactorText> parse_factor_list(const std::string& text) {
  std::vector<FactorText> out;
  for (const std::string& item : split(text, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) {
      out.push_back({item, 1});
      continue;
    }
    const std::string mult = trim(item.substr(colon + 1));
    if (mult.empty() || !std::all_of(mult.begin(), mult.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("bad multiplicity in factor '" + item + "'");
    const unsigned e = static_cast<unsigned>(std::stoul(mult));
    if (e == 0) throw UsageError("factor multiplicities must be positive");
    out.push_back({trim(item.substr(0, colon)), e});
  }
  return out;
}

std::vector<Degree> checked_length(const std::vector<Degree>& xs, std::size_t n, const char* flag) {
  if (xs.size() != n)
    throw UsageError(std::string(flag) + " has " + std::to_string(xs.size()) + " entries for " +
                     std::to_string(n) + " variables");
  return xs;
}

Setup make_setup(const JobSpec& job) {
  const auto factor_texts = parse_factor_list(job.factors);
  std::vector<std::string> texts;
  if (!job.polynomial.empty()) texts.push_back(job.polynomial);
  for (const auto& ft : factor_texts) texts.push_back(ft.poly);
  if (texts.empty()) throw UsageError("a polynomial or --factors is required");

  Setup s;
  s.names = job.vars.empty() ? collect_variables(texts) : job.vars;
  const std::size_t n = s.names.size();
  s.f.nvars = n;
  if (!factor_texts.empty()) {
    for (const auto& ft : factor_texts) s.f.factors.push_back({parse_poly(ft.poly, s.names), ft.multiplicity, true});
    if (!job.polynomial.empty() && parse_poly(job.polynomial, s.names) != s.f.product())
      throw UsageError("the factors do not multiply to the given polynomial");
  } else {
    const Polynomial p = parse_poly(job.polynomial, s.names);
    if (p.is_zero()) throw ZeroPolynomialError("the zero polynomial has no derivation module");
    s.f = FactoredPolynomial::single(p);
  }
  s.f.validate(s.names);

  if (job.u) {
    s.u = WeightVector(checked_length(*job.u, n, "--u"));
  } else if (job.infer_weights) {
    if (s.f.is_constant()) throw ConstantInputError("cannot infer weights of a constant");
    auto w = infer_weights(s.f.product());
    if (!w) throw NotHomogeneousError("no positive weight vector makes the polynomial quasi-homogeneous");
    s.u = *w;
  } else {
    s.u = WeightVector::standard(n);
  }
  if (job.v) {
    s.v = checked_length(*job.v, n, "--v");
  } else {
    // Smallest balanced choice: v = (max u)*1 - u, which is 0 for standard weights.
    const Degree k = n ? *std::max_element(s.u.values().begin(), s.u.values().end()) : 0;
    for (Degree w : s.u.values()) s.v.push_back(k - w);
  }
  return s;
}

std::string h_name(const std::vector<std::string>& names) {
  std::string h = "h";
  while (std::find(names.begin(), names.end(), h) != names.end()) h += "_";
  return h;
}

// The module whose invariants a command reports: D(f) under (u,v), or D(f)^h.
struct ModuleData {
  std::vector<std::string> names;  // ring variables
  std::vector<std::string> slots;  // derivation slot names
  FreeModule module;
  std::vector<Vector> gens;
  WeightVector u{std::vector<Degree>{}};
  Degree expected = 0;  // deg^u(f) + |v|, or deg f for D(f)^h
};

void require_graded(const Setup& s) {
  for (const Factor& fac : s.f.factors)
    if (!is_u_homogeneous(fac.f, s.u.values()))
      throw NotHomogeneousError("f is not quasi-homogeneous for u = (" + join(s.u.values()) +
                                "); use --infer-weights or --homogenize");
  if (!s.ctx().k()) throw ConstraintViolation("u + v must be constant (u + v = k*1) for a graded D(f)");
}

ModuleData derivation_module(const JobSpec& job, const Setup& s, bool need_graded) {
  ModuleData out;
  out.slots = s.names;
  if (job.homogenize) {
    const std::size_t n = s.n();
    const FreeModule affine = FreeModule::standard(n, n);
    out.names = s.names;
    out.names.push_back(h_name(s.names));
    out.module = homogenized_ambient(affine);
    out.gens = homogenize_module(affine, generalized_log_module(s.f, GradedContext::standard(n))).generators;
    out.u = WeightVector::standard(n + 1);
    out.expected = s.f.product().total_degree();
    return out;
  }
  if (need_graded) require_graded(s);
  const GradedContext ctx = s.ctx();
  out.names = s.names;
  out.module = ctx.module();
  out.gens = generalized_log_module(s.f, ctx);
  out.u = s.u;
  if (need_graded) out.expected = factored_degree(s.f, s.u) + ctx.abs_v();
  return out;
}

Json echo_inputs(const JobSpec& job, const Setup& s) {
  Json in;
  in["polynomial"] = describe(s.f, s.names);
  in["vars"] = s.names;
  in["u"] = s.u.values();
  in["v"] = s.v;
  if (!job.factors.empty()) in["factors"] = job.factors;
  in["homogenize"] = job.homogenize;
  return in;
}

Json generators_json(const ModuleData& md) {
  Json list = Json::array();
  for (const Vector& g : md.gens) {
    Json e;
    e["text"] = format_derivation(g, md.slots);
    Json coeffs = Json::array();
    for (const Polynomial& p : g) coeffs.push_back(format_poly(p, md.names));
    e["coefficients"] = std::move(coeffs);
    const auto d = homogeneous_degree(g, md.module);
    e["degree"] = d ? Json(*d) : Json(nullptr);
    list.push_back(std::move(e));
  }
  return list;
}

std::string generators_text(const ModuleData& md) {
  std::ostringstream out;
  for (std::size_t i = 0; i < md.gens.size(); ++i) {
    const auto d = homogeneous_degree(md.gens[i], md.module);
    out << "  [" << i + 1 << "] " << format_derivation(md.gens[i], md.slots) << "    degree "
        << (d ? std::to_string(*d) : std::string("inhomogeneous")) << "\n";
  }
  return out.str();
}

Json resolution_json(const Resolution& res, const std::vector<std::string>& names) {
  Json out;
  out["shifts"] = shifts_json(res);
  Json maps = Json::array();
  for (const ModuleMap& m : res.maps) maps.push_back(matrix_json(m, names));
  out["maps"] = std::move(maps);
  out["minimal"] = res.minimal;
  return out;
}

std::string matrix_text(const ModuleMap& m, const std::vector<std::string>& names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : " ") << format_poly(m.entry(i, j), names);
    out << " ]\n";
  }
  return out.str();
}

std::string module_label(const JobSpec& job) { return job.homogenize ? "D(f)^h" : "D(f)"; }

// ---------------------------------------------------------------------------
// Commands

Report cmd_derivations(const JobSpec& job) {
  const Setup s = make_setup(job);
  if (s.f.is_constant()) throw ConstantInputError("constant input: every derivation is logarithmic");
  const ModuleData md = derivation_module(job, s, false);
  Report r;
  r.command = "derivations";
  r.inputs = echo_inputs(job, s);
  r.results["generators"] = generators_json(md);
  r.text = module_label(job) + " for f = " + describe(s.f, s.names) + ": " + std::to_string(md.gens.size()) +
           " generators\n" + generators_text(md);

  if (!job.homogenize) {
    const bool members = std::all_of(md.gens.begin(), md.gens.end(),
                                     [&](const Vector& g) { return in_log_module(g, s.f); });
    r.claims.push_back(Claim::holds("generators lie in D(f)", members));
    const bool quasi = std::all_of(s.f.factors.begin(), s.f.factors.end(),
                                   [&](const Factor& fac) { return is_u_homogeneous(fac.f, s.u.values()); });
    if (quasi && s.ctx().k())
      r.claims.push_back(Claim::holds("D(f) is a graded submodule", is_graded_submodule(md.gens, s.ctx()).graded));
    else
      r.claims.push_back(Claim::not_applicable("D(f) is a graded submodule"));
  } else {
    bool homogeneous = std::all_of(md.gens.begin(), md.gens.end(),
                                   [&](const Vector& g) { return is_homogeneous(g, md.module); });
    r.claims.push_back(Claim::holds("generators of D(f)^h are homogeneous", homogeneous));
  }
  return r;
}

Report cmd_resolution(const JobSpec& job, bool betti_only) {
  const Setup s = make_setup(job);
  const ModuleData md = derivation_module(job, s, true);
  const Resolution res = minimal_resolution(md.module, md.gens);
  const BettiTable table = betti_numbers(res);
  Report r;
  r.command = betti_only ? "betti" : "resolution";
  r.inputs = echo_inputs(job, s);
  r.results["shifts"] = shifts_json(res);
  r.results["betti"] = betti_json(table);
  r.results["negative_rows"] = table.has_negative_rows();
  std::ostringstream text;
  text << "minimal resolution of " << module_label(job) << ": " << format_shifts(res) << "\n";
  if (betti_only) {
    text << format_betti(table);
    if (table.has_negative_rows()) text << "note: some shift d in F_p has d < p (negative row index)\n";
  } else {
    r.results["resolution"] = resolution_json(res, md.names);
    for (std::size_t p = 0; p < res.maps.size(); ++p) {
      text << "  phi_" << p << " (source shifts {" << join(res.maps[p].source.shifts) << "}):\n"
           << matrix_text(res.maps[p], md.names);
    }
  }
  r.text = text.str();
  r.claims.push_back(Claim::holds("consecutive maps compose to zero", check_complex(res)));
  if (!betti_only) r.claims.push_back(Claim::holds("each step generates the syzygies of the previous", check_exact(res)));
  r.claims.push_back(Claim::equal("alternating degree sum = expected", alternating_degree_sum(res), md.expected));
  r.claims.push_back(Claim::equal("Betti form = alternating degree sum", betti_degree_sum(table),
                                  alternating_degree_sum(res)));
  r.claims.push_back(Claim::equal("alternating rank sum = n", alternating_rank_sum(res),
                                  static_cast<long>(s.n())));
  return r;
}

Report cmd_chi(const JobSpec& job) {
  const Setup s = make_setup(job);
  Report r;
  r.command = "chi";
  r.inputs = echo_inputs(job, s);
  if (job.homogenize) {
    const HomogenizedChi hc = chi_homogenized(s.f);
    r.results["chi"] = hc.chi_value;
    r.results["expected"] = hc.degree;
    r.results["shifts"] = shifts_json(hc.resolution);
    r.text = "chi(D(f)^h) = " + std::to_string(hc.chi_value) + ", deg f = " + std::to_string(hc.degree) +
             "\nresolution of D(f)^h: " + format_shifts(hc.resolution) + "\n";
    r.claims.push_back(Claim::from(hc.verdict));
    r.claims.push_back(Claim::equal("alternating degree sum = deg f", alternating_degree_sum(hc.resolution), hc.degree));
    return r;
  }
  require_graded(s);
  const TheoremReport tr = verify_main_theorem(s.f, s.ctx(), job.dmax);
  r.results["chi"] = tr.chi_value;
  r.results["expected"] = tr.expected;
  r.results["shifts"] = shifts_json(tr.resolution);
  r.results["series"] = series_json(tr.series);
  r.text = "chi(D(f)) = " + std::to_string(tr.chi_value) + ", deg^u(f) + |v| = " + std::to_string(tr.expected) +
           "\nresolution: " + format_shifts(tr.resolution) + "\nseries: " + format_series(tr.series) + "\n";
  for (const Verdict& v : tr.verdicts) r.claims.push_back(Claim::from(v));
  return r;
}

std::vector<Vector> ideal_generators(const JobSpec& job, std::vector<std::string>& names) {
  std::vector<std::string> texts = split(job.polynomial, ',');
  names = job.vars.empty() ? collect_variables(texts) : job.vars;
  std::vector<Vector> gens;
  for (const std::string& t : texts) gens.push_back(Vector{parse_poly(t, names)});
  return gens;
}

Report cmd_hilbert(const JobSpec& job) {
  Report r;
  r.command = "hilbert";
  HPSeries hp;
  std::map<Degree, std::int64_t> oracle;
  std::optional<std::int64_t> dimension;
  if (job.of == "dmodule") {
    const Setup s = make_setup(job);
    const ModuleData md = derivation_module(job, s, true);
    r.inputs = echo_inputs(job, s);
    hp = hp_from_resolution(minimal_resolution(md.module, md.gens));
    oracle = hp_bruteforce(md.module, md.gens, job.dmax);
  } else if (job.of == "ring" || job.of == "ideal" || job.of == "quotient") {
    std::vector<std::string> names;
    std::vector<Vector> gens;
    if (job.of == "ring") {
      names = job.vars;
      if (names.empty()) names = collect_variables({job.polynomial});
    } else {
      if (job.polynomial.empty()) throw UsageError("--of " + job.of + " needs comma-separated generators");
      gens = ideal_generators(job, names);
    }
    const WeightVector u = job.u ? WeightVector(checked_length(*job.u, names.size(), "--u"))
                                 : WeightVector::standard(names.size());
    const FreeModule ring{u.values(), {0}};
    r.inputs["vars"] = names;
    r.inputs["u"] = u.values();
    r.inputs["of"] = job.of;
    if (job.of != "ring") r.inputs["generators"] = split(job.polynomial, ',');
    for (const Vector& g : gens)
      if (!is_homogeneous(g, ring)) throw NotHomogeneousError("generators must be quasi-homogeneous for u");
    if (job.of == "ring") {
      const Degree zero = 0;
      hp = hp_free(std::span<const Degree>(&zero, 1), u);
      oracle = hp_bruteforce_free(ring, job.dmax);
    } else if (job.of == "ideal") {
      hp = hp_from_resolution(minimal_resolution(ring, gens));
      oracle = hp_bruteforce(ring, gens, job.dmax);
    } else {
      hp = hp_from_resolution(minimize(resolve_cokernel(ring, gens)));
      oracle = hp_bruteforce_quotient(ring, gens, job.dmax);
    }
    if (job.of != "ideal") dimension = dimension_via_pole(hp);
  } else {
    throw UsageError("--of must be one of dmodule, ideal, quotient, ring");
  }
  const ChiValue x = chi(hp);
  r.results["series"] = series_json(hp);
  r.results["chi"] = x.value;
  if (dimension) r.results["dimension"] = *dimension;
  r.text = "HP(t) = " + format_series(hp) + "\nchi = " + std::to_string(x.value) + "\n";
  if (dimension) r.text += "dimension = " + std::to_string(*dimension) + "\n";
  const auto expansion = hp.expand(oracle.begin()->first, oracle.rbegin()->first);
  long agree = 0;
  for (const auto& [i, dim] : oracle) agree += expansion.at(i) == dim ? 1 : 0;
  r.claims.push_back(Claim::equal("series matches slice dimensions", agree, static_cast<long>(oracle.size())));
  return r;
}

Report cmd_saito(const JobSpec& job) {
  if (job.basis_file.empty()) throw UsageError("saito needs --basis FILE");
  const Setup s = make_setup(job);
  std::vector<Derivation> deltas;
  std::istringstream lines(read_file(job.basis_file));
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    deltas.push_back(parse_derivation(line, s.names));
  }
  Report r;
  r.command = "saito";
  r.inputs = echo_inputs(job, s);
  Json basis = Json::array();
  for (const Derivation& d : deltas) basis.push_back(format_derivation(d, s.names));
  r.inputs["basis"] = std::move(basis);

  SaitoCertificate cert;
  try {
    cert = saito_check(deltas, s.f);
  } catch (const NotInModuleError& e) {
    r.text = std::string(e.what()) + "\n";
    r.results["certificate"] = "not-in-module";
    r.claims.push_back(Claim::holds("derivations lie in D(f)", false));
    return r;
  }
  r.claims.push_back(Claim::holds("derivations lie in D(f)", true));
  if (const auto* ok = std::get_if<IsBasis>(&cert)) {
    r.results["certificate"] = "IsBasis";
    r.results["c"] = format_rational(ok->c);
    r.text = "IsBasis(" + format_rational(ok->c) + "): det = " + format_rational(ok->c) + " * f\n";
    r.claims.push_back(Claim::holds("det = c*f with c a nonzero constant", true));
    const auto gens = generalized_log_module(s.f, s.ctx());
    r.claims.push_back(Claim::holds("basis spans the computed D(f)", same_submodule(s.ctx().module(), deltas, gens)));
  } else {
    const auto& bad = std::get<NotBasis>(cert);
    r.results["certificate"] = "NotBasis";
    r.results["determinant"] = format_poly(bad.determinant, s.names);
    r.results["reason"] = bad.reason;
    r.text = "NotBasis: " + bad.reason + " (det = " + format_poly(bad.determinant, s.names) + ")\n";
    r.claims.push_back(Claim::holds("det = c*f with c a nonzero constant", false));
  }
  return r;
}

Resolution load_resolution(const std::string& path, std::vector<std::string>& names) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("resolution file: " + std::string(e.what()));
  }
  try {
    if (names.empty()) names = j.at("vars").get<std::vector<std::string>>();
    const std::size_t n = names.size();
    Resolution res;
    res.kind = ResolvedKind::Submodule;
    res.ambient = FreeModule{std::vector<Degree>(n, 1), j.value("ambient_shifts", std::vector<Degree>(n, 0))};
    FreeModule target = res.ambient;
    for (const Json& m : j.at("maps")) {
      FreeModule source{target.weights, m.at("source_shifts").get<std::vector<Degree>>()};
      std::vector<Vector> cols;
      for (const Json& c : m.at("columns")) {
        Vector col;
        for (const Json& e : c) col.push_back(parse_poly(e.get<std::string>(), names));
        cols.push_back(std::move(col));
      }
      res.maps.push_back(make_map(source, target, std::move(cols)));
      target = source;
    }
    return res;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("resolution file: " + std::string(e.what()));
  }
}

Report cmd_homogenize(const JobSpec& job) {
  JobSpec local = job;
  Resolution affine;
  std::vector<std::string> names = job.vars;
  if (!job.resolution_file.empty()) {
    affine = load_resolution(job.resolution_file, names);
    local.vars = names;
  }
  const Setup s = make_setup(local);
  if (s.f.is_constant()) throw ConstantInputError("constant input: nothing to homogenize");
  const std::size_t n = s.n();
  const FreeModule module = FreeModule::standard(n, n);
  const auto df = generalized_log_module(s.f, GradedContext::standard(n));
  if (job.resolution_file.empty()) affine = filtered_resolution(module, df);
  if (affine.ambient.rank() != n) throw UsageError("the resolution does not live in the derivation module");

  std::vector<std::string> names_h = s.names;
  names_h.push_back(h_name(s.names));
  const HomogenizedComplex hc = homogenize_resolution(affine);

  Report r;
  r.command = "homogenize";
  r.inputs = echo_inputs(job, s);
  r.inputs["resolution_source"] = job.resolution_file.empty() ? "computed" : job.resolution_file;
  r.results["input_shifts"] = shifts_json(affine);
  r.results["homogenized"] = resolution_json(hc.complex, names_h);
  Json steps = Json::array();
  std::ostringstream text;
  text << "input resolution shifts: " << format_shifts(affine) << "\n";
  for (std::size_t p = 0; p < hc.steps.size(); ++p) {
    Json st;
    st["p"] = p;
    st["image_contains_homogenized_image"] = hc.steps[p].image_contains;
    if (hc.steps[p].witness) {
      Json w = Json::array();
      for (const Polynomial& e : *hc.steps[p].witness) w.push_back(format_poly(e, names_h));
      st["witness"] = std::move(w);
    }
    steps.push_back(std::move(st));
    text << "  phi_" << p << "^h:\n" << matrix_text(hc.complex.maps[p], names_h);
    text << "    im phi_" << p << "^h contains (im phi_" << p << ")^h: " << (hc.steps[p].image_contains ? "yes" : "no");
    if (hc.steps[p].witness) {
      text << " (missing ";
      for (std::size_t i = 0; i < hc.steps[p].witness->size(); ++i)
        text << (i ? ", " : "(") << format_poly((*hc.steps[p].witness)[i], names_h);
      text << "))";
    }
    text << "\n";
  }
  r.results["steps"] = std::move(steps);
  const std::string verdict = !hc.is_complex ? "not a complex" : hc.is_resolution ? "resolution" : "complex";
  r.results["verdict"] = verdict;
  text << "verdict: " << verdict << "\n";

  const auto& phi0 = affine.maps.front().columns;
  const bool members =
      std::all_of(phi0.begin(), phi0.end(), [&](const Vector& c) { return in_log_module(c, s.f); });
  r.claims.push_back(Claim::holds("columns of phi_0 lie in D(f)", members));
  r.claims.push_back(Claim::holds("input maps compose to zero", check_complex(affine)));
  r.claims.push_back(Claim::holds("homogenized maps compose to zero", hc.is_complex));
  for (std::size_t p = 0; p < affine.maps.size(); ++p)
    r.claims.push_back(Claim::holds("(ker phi_" + std::to_string(p) + ")^h = ker phi_" + std::to_string(p) + "^h",
                                    kernel_commutes(affine.maps[p])));

  Resolution used = hc.complex;
  if (!hc.is_resolution) {
    const auto mh = homogenize_module(affine.ambient, phi0).generators;
    used = minimal_resolution(hc.complex.ambient, mh);
    r.results["recomputed"] = resolution_json(used, names_h);
    text << "recomputed resolution of M^h: " << format_shifts(used) << "\n";
  }
  r.text = text.str();
  const Degree d = s.f.product().total_degree();
  if (same_submodule(module, phi0, df)) {
    r.claims.push_back(Claim::equal("alternating degree sum over D(f)^h = deg f", alternating_degree_sum(used), d));
    r.claims.push_back(Claim::equal("alternating rank sum = n", alternating_rank_sum(used), static_cast<long>(n)));
  } else {
    r.claims.push_back(Claim::not_applicable("alternating degree sum over D(f)^h = deg f"));
  }
  return r;
}

Report cmd_verify(const JobSpec& job) {
  HarnessOptions opts = job.harness;
  opts.dmax = job.dmax;
  if (opts.min_vars < 1 || opts.min_vars > opts.max_vars) throw UsageError("need 1 <= --min-vars <= --max-vars");
  if (opts.max_degree < 1) throw UsageError("--max-degree must be positive");
  const auto results = run_harness(opts);

  Report r;
  r.command = "verify";
  r.inputs["random"] = opts.count;
  r.inputs["seed"] = opts.seed;
  r.inputs["min_vars"] = opts.min_vars;
  r.inputs["max_vars"] = opts.max_vars;
  r.inputs["max_degree"] = opts.max_degree;
  r.inputs["dmax"] = opts.dmax;
  r.inputs["inject_fault"] = opts.inject_fault;

  std::vector<std::string> order;
  std::map<std::string, std::pair<long, long>> tally;  // passes, evaluations
  Json instances = Json::array();
  std::ostringstream text;
  for (const InstanceResult& res : results) {
    const Instance& inst = res.instance;
    Json e;
    e["index"] = inst.index;
    e["vars"] = inst.names;
    e["Q"] = describe(inst.q, inst.names);
    e["u"] = inst.u.values();
    e["v"] = inst.v;
    e["k"] = inst.k;
    e["expected"] = res.expected;
    e["shifts"] = res.shifts;
    e["pass"] = res.pass();
    Json failed = Json::array();
    for (const Verdict& v : res.verdicts) {
      if (!tally.count(v.claim)) order.push_back(v.claim);
      auto& [pass, total] = tally[v.claim];
      ++total;
      if (v.pass) {
        ++pass;
      } else {
        Json f;
        f["claim"] = v.claim;
        f["lhs"] = integer_json(v.lhs);
        f["rhs"] = integer_json(v.rhs);
        failed.push_back(std::move(f));
      }
    }
    e["failed"] = std::move(failed);
    instances.push_back(std::move(e));
    text << "#" << inst.index << " Q = " << describe(inst.q, inst.names) << "  u = (" << join(inst.u.values())
         << ")  v = (" << join(inst.v) << ")  expected " << res.expected << "  shifts " << res.shifts << "  "
         << (res.pass() ? "pass" : "FAIL") << "\n";
  }
  r.results["instances"] = std::move(instances);
  r.text = text.str();
  for (const std::string& name : order) {
    const auto [pass, total] = tally[name];
    r.claims.push_back(Claim::equal(name + " (instances passing)", pass, total));
  }
  return r;
}

}  // namespace

std::vector<std::string> collect_variables(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const std::string& t : texts) {
    std::size_t i = 0;
    while (i < t.size()) {
      const unsigned char c = static_cast<unsigned char>(t[i]);
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < t.size() && (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_')) ++j;
        names.insert(t.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  return {names.begin(), names.end()};
}

Report run_command(const JobSpec& job) {
  if (job.command == "derivations") return cmd_derivations(job);
  if (job.command == "resolution") return cmd_resolution(job, false);
  if (job.command == "betti") return cmd_resolution(job, true);
  if (job.command == "chi") return cmd_chi(job);
  if (job.command == "hilbert") return cmd_hilbert(job);
  if (job.command == "saito") return cmd_saito(job);
  if (job.command == "homogenize") return cmd_homogenize(job);
  if (job.command == "verify") return cmd_verify(job);
  throw UsageError("unknown command '" + job.command + "'");
}

int exit_status(const Report& report) { return report.pass() ? 0 : 1; }

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.to_json().dump(2) + "\n";
  return report.to_text();
}

}  // namespace logder::cli
