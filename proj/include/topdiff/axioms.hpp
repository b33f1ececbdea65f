#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "topdiff/metrics.hpp"
#include "topdiff/relation.hpp"

namespace topdiff {

using Metric =
    std::function<double(const AcyclicOrder&, const AcyclicOrder&)>;

struct AxiomCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  // At most kMaxCounterexamples, in discovery order.
  std::vector<std::string> counterexamples;

  bool passed() const { return failed == 0; }
};

inline constexpr std::size_t kMaxCounterexamples = 5;

// checks[k] covers axiom k+1:
//   1 additivity along one-step perturbations,
//   2 canonical pairs at distance 1,
//   3 single edits scale the canonical distance by 2^(N-1) (add) or 2^N
//     (delete),
//   4 equal strict parts give distance 0.
struct AxiomReport {
  std::array<AxiomCheck, 4> checks;
  bool all_passed() const;
};

struct AxiomSuiteOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  // Relative, against max(1, |expected|).
  double tolerance = 1e-9;
};

inline constexpr std::size_t kAxiomMinElements = 2;
inline constexpr std::size_t kAxiomMaxElements = 6;

// Runs all four checks against `metric`. Throws capacity_error outside
// [kAxiomMinElements, kAxiomMaxElements].
AxiomReport axiom_suite(const GroundSet& ground, const Metric& metric,
                        const AxiomSuiteOptions& options = {});

// Same, with dist_fast under mu as the metric.
AxiomReport axiom_suite(const GroundSet& ground, const Measure& mu,
                        const AxiomSuiteOptions& options = {});

// "{a>b, a>c, b~c}": strict pairs, then indifferent pairs (i < j).
std::string describe(const AcyclicOrder& p);

}  // namespace topdiff
