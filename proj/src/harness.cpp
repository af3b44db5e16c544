#include "logder/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "logder/errors.hpp"
#include "logder/gcd.hpp"

namespace logder {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_coefficient(Rng& rng) {
  std::int64_t p = 0;
  while (p == 0) p = uniform(rng, -9, 9);
  Rational c(static_cast<long>(p), static_cast<unsigned long>(uniform(rng, 1, 3)));
  c.canonicalize();
  return c;
}

// Monomials of total degree 1..max_total, grouped by u-degree.
std::map<Degree, std::vector<Monomial>> monomial_groups(const std::vector<Degree>& u, Degree max_total) {
  std::map<Degree, std::vector<Monomial>> groups;
  const std::size_t n = u.size();
  Monomial m(n, 0);
  // Odometer over exponents with total degree <= max_total.
  while (true) {
    std::size_t i = 0;
    while (i < n) {
      ++m[i];
      if (total_degree(m) <= max_total) break;
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
    groups[weighted_degree(m, u)].push_back(m);
  }
  return groups;
}

std::optional<Polynomial> random_factor(Rng& rng, const std::vector<Degree>& u, Degree max_total) {
  std::vector<std::vector<Monomial>> usable;
  for (auto& [d, group] : monomial_groups(u, max_total))
    if (group.size() >= 2) usable.push_back(std::move(group));
  if (usable.empty()) return std::nullopt;
  auto& group = usable[uniform(rng, 0, static_cast<std::int64_t>(usable.size()) - 1)];
  const auto size = uniform(rng, 2, std::min<std::int64_t>(3, static_cast<std::int64_t>(group.size())));
  std::shuffle(group.begin(), group.end(), rng);
  Polynomial f(u.size());
  for (std::int64_t i = 0; i < size; ++i) f.add_term(group[i], random_coefficient(rng));
  return f;
}

bool acceptable(const Polynomial& f, const std::vector<Factor>& previous) {
  if (f.is_constant() || !squarefree_test(f).squarefree) return false;
  return std::all_of(previous.begin(), previous.end(),
                     [&](const Factor& g) { return poly_gcd(f, g.f).is_constant(); });
}

}  // namespace

Instance random_instance(const HarnessOptions& opts, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  Instance inst;
  inst.index = index;
  const auto n = static_cast<std::size_t>(
      uniform(rng, static_cast<std::int64_t>(opts.min_vars), static_cast<std::int64_t>(opts.max_vars)));
  for (std::size_t i = 0; i < n; ++i) inst.names.push_back("x" + std::to_string(i + 1));
  std::vector<Degree> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(uniform(rng, 1, 4));
  inst.u = WeightVector(u);
  const Degree top = *std::max_element(u.begin(), u.end());
  inst.k = uniform(rng, top - 2, top + 2);
  for (Degree w : u) inst.v.push_back(inst.k - w);

  inst.q.nvars = n;
  const auto nfactors = uniform(rng, 1, 2);
  Degree used = 0;
  for (std::int64_t f = 0; f < nfactors; ++f) {
    const Degree budget = opts.max_degree - used;
    if (budget < 2) break;
    for (int attempt = 0; attempt < 20; ++attempt) {
      auto e = static_cast<unsigned>(uniform(rng, 1, std::min<Degree>(3, budget / 2)));
      auto cand = random_factor(rng, u, budget / e);
      if (!cand) continue;
      if (!acceptable(*cand, inst.q.factors)) continue;
      used += cand->total_degree() * e;
      inst.q.factors.push_back({std::move(*cand), e, false});
      break;
    }
  }
  if (inst.q.factors.empty()) inst.q.factors.push_back({Polynomial::variable(n, 0), 1, false});
  return inst;
}

std::string describe(const FactoredPolynomial& q, const std::vector<std::string>& names) {
  if (q.factors.empty()) return "1";
  std::string out;
  for (const Factor& fac : q.factors) {
    if (!out.empty()) out += "*";
    out += "(" + format_poly(fac.f, names) + ")";
    if (fac.multiplicity > 1) out += "^" + std::to_string(fac.multiplicity);
  }
  return out;
}

bool InstanceResult::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

Verdict check(std::string claim, std::int64_t lhs, std::int64_t rhs) {
  return {std::move(claim), Integer(static_cast<long>(lhs)), Integer(static_cast<long>(rhs)), lhs == rhs};
}

std::int64_t series_agreement(const HPSeries& hp, const std::map<Degree, std::int64_t>& oracle) {
  const auto expansion = hp.expand(oracle.begin()->first, oracle.rbegin()->first);
  std::int64_t agree = 0;
  for (const auto& [i, dim] : oracle) agree += expansion.at(i) == dim ? 1 : 0;
  return agree;
}

}  // namespace

InstanceResult run_instance(const Instance& inst, const HarnessOptions& opts) {
  InstanceResult out;
  out.instance = inst;
  const GradedContext ctx(inst.u, inst.v);
  const auto n = static_cast<std::int64_t>(inst.u.size());
  out.expected = factored_degree(inst.q, inst.u) + ctx.abs_v();
  const FreeModule module = ctx.module();

  const auto gens = generalized_log_module(inst.q, ctx);
  Resolution res = minimal_resolution(module, gens);
  if (opts.inject_fault && !res.maps.empty()) res.maps[0].source.shifts[0] += 1;
  out.shifts = format_shifts(res);
  const HPSeries hp = hp_from_resolution(res);
  const std::int64_t x = chi(hp).value;

  out.verdicts.push_back(check("alternating degree sum = deg(Q) + |v|", alternating_degree_sum(res), out.expected));
  out.verdicts.push_back(check("chi = deg(Q) + |v|", x, out.expected));
  out.verdicts.push_back(check("Betti form = deg(Q) + |v|", betti_degree_sum(betti_numbers(res)), out.expected));
  out.verdicts.push_back(check("alternating rank sum = n", alternating_rank_sum(res), n));

  const auto oracle = hp_bruteforce(module, gens, opts.dmax);
  const auto degrees = static_cast<std::int64_t>(oracle.size());
  out.verdicts.push_back(check("series matches slice dimensions", series_agreement(hp, oracle), degrees));

  // v -> v + 1 moves chi by n.
  const GradedContext moved = ctx.shifted(1);
  const Resolution res_moved = minimal_resolution(moved.module(), generalized_log_module(inst.q, moved));
  out.verdicts.push_back(check("chi(v + 1) - chi(v) = n", chi(hp_from_resolution(res_moved)).value - x, n));

  // Pole order of S/<Q>.
  const FreeModule ring{inst.u.values(), {0}};
  const Vector q_vec{inst.q.product()};
  const Resolution cyclic = resolve_cokernel(ring, std::span<const Vector>(&q_vec, 1));
  out.verdicts.push_back(check("pole order of S/<Q> = n - 1", dimension_via_pole(hp_from_resolution(cyclic)), n - 1));

  // Non-minimal resolutions: a redundant generator, then a split summand on top.
  std::vector<Vector> padded = gens;
  padded.push_back(Polynomial::variable(module.nvars(), 0) * gens.front());
  Resolution loose = free_resolution(module, padded);
  const Degree extra = gens.empty() ? 0 : *homogeneous_degree(gens.back(), module);
  loose = with_trivial_summand(std::move(loose), 0, extra + 1);
  out.verdicts.push_back(check("non-minimal resolution is not minimal", is_minimal(loose) ? 1 : 0, 0));
  out.verdicts.push_back(check("non-minimal resolution is a complex", check_complex(loose) ? 1 : 0, 1));
  out.verdicts.push_back(check("non-minimal alternating degree sum = deg(Q) + |v|", alternating_degree_sum(loose),
                               out.expected));
  const HPSeries loose_hp = hp_from_resolution(loose);
  out.verdicts.push_back(check("non-minimal chi = deg(Q) + |v|", chi(loose_hp).value, out.expected));
  out.verdicts.push_back(
      check("non-minimal series matches slice dimensions", series_agreement(loose_hp, oracle), degrees));
  return out;
}

std::vector<InstanceResult> run_harness(const HarnessOptions& opts) {
  std::vector<InstanceResult> results(opts.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.count; i = next++) {
      Instance inst = random_instance(opts, i);
      try {
        results[i] = run_instance(inst, opts);
      } catch (const std::exception& e) {
        results[i].instance = inst;
        results[i].verdicts.push_back({std::string("instance completed (") + e.what() + ")", 0, 1, false});
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace logder
