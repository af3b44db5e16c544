#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logder/derivmod.hpp"
#include "logder/hilbert.hpp"

namespace logder {

struct HarnessOptions {
  std::size_t count = 25;
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
  Degree max_degree = 6;
  std::uint64_t seed = 0;
  Degree dmax = kDefaultDmax;
  /// Corrupts one shift of every minimal resolution before the sums are taken.
  bool inject_fault = false;
  unsigned jobs = 1;
};

struct Instance {
  std::size_t index = 0;
  std::vector<std::string> names;
  WeightVector u{std::vector<Degree>{}};
  std::vector<Degree> v;
  Degree k = 0;
  FactoredPolynomial q;
};

/// Random quasi-homogeneous instance: u in {1..4}^n, one or two coprime
/// squarefree factors with at least two monomials of a common u-degree,
/// multiplicities up to 3, total degree at most max_degree, and v = k*1 - u.
/// Depends only on (seed, index).
Instance random_instance(const HarnessOptions& opts, std::size_t index);

std::string describe(const FactoredPolynomial& q, const std::vector<std::string>& names);

struct InstanceResult {
  Instance instance;
  Degree expected = 0;
  std::string shifts;
  std::vector<Verdict> verdicts;
  bool pass() const;
};

/// Checks for one instance: alternating degree sum, chi and the Betti form
/// against deg^u(Q) + |v|; rank sum = n; chi under v + 1 moves by n; pole
/// order of S/<Q> is n - 1; series against slice dimensions; a padded
/// non-minimal resolution and one with a redundant generator give the same sums.
InstanceResult run_instance(const Instance& inst, const HarnessOptions& opts);

/// Runs every instance; results are ordered by index whatever the job count.
std::vector<InstanceResult> run_harness(const HarnessOptions& opts);

}  // namespace logder
