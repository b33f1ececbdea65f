#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topdiff/metrics.hpp"
#include "topdiff/relation.hpp"

namespace topdiff {

enum class SpaceKind {
  linear_orders,
  total_preorders,
  partial_orders,
  preorders,
  antisym_acyclic,
};

// "linear-orders", "total-preorders", "partial-orders", "preorders",
// "antisym-acyclic".
std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space_kind(std::string_view name);

// Largest n for which the space may be enumerated.
std::size_t max_elements(SpaceKind kind);

// Calls `visit` once per member, in a fixed order. Throws capacity_error when
// the ground set exceeds max_elements(kind).
void for_each_in_space(SpaceKind kind, const GroundSet& ground,
                       const std::function<void(const AcyclicOrder&)>& visit);

std::vector<AcyclicOrder> enumerate_space(SpaceKind kind,
                                          const GroundSet& ground);

std::size_t count_space(SpaceKind kind, const GroundSet& ground);

struct Diameter {
  double value = 0.0;
  AcyclicOrder first;
  AcyclicOrder second;
  std::size_t members = 0;
};

// Largest D^mu distance between two members of the space, with the first
// witnessing pair in lexicographic incidence-matrix order. `workers` = 0
// uses one thread per hardware core.
Diameter diameter(SpaceKind kind, const GroundSet& ground, const Measure& mu,
                  unsigned workers = 0);

// Closed-form counting-measure diameter for linear orders and total
// preorders, n >= 2. Other kinds have no known formula (input_error).
std::uint64_t diameter_formula(SpaceKind kind, std::size_t n);

// Largest n accepted by diameter_formula.
inline constexpr std::size_t kFormulaMaxElements = 56;

// Transitive extensions: preorders R with strict(p) contained in strict(R).
// p must be antisymmetric; n <= max_elements(preorders).
void for_each_extension(const AcyclicOrder& p,
                        const std::function<void(const AcyclicOrder&)>& visit);
std::vector<AcyclicOrder> enumerate_extensions(const AcyclicOrder& p);

struct BestExtension {
  AcyclicOrder best;
  double distance = 0.0;
  // Set only when exhaustive verification ran.
  std::optional<bool> verified;
  std::size_t extensions_checked = 0;
  // First extension with a different strict part that is at least as close
  // as `best`, if any.
  std::optional<AcyclicOrder> rival;
};

// The transitive closure of p, its D^mu distance from p, and optionally an
// exhaustive check that every extension with another strict part is farther.
// Extensions differing from the closure only by ties are not rivals: the
// distance cannot see them.
BestExtension best_transitive_extension(const AcyclicOrder& p,
                                        const Measure& mu, bool verify);

}  // namespace topdiff
