#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "topdiff/relation.hpp"

namespace fixtures {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline topdiff::GroundSet ground(std::initializer_list<std::string> labels) {
  return topdiff::GroundSet(std::vector<std::string>(labels));
}

inline topdiff::Relation relation(const topdiff::GroundSet& g, const Pairs& pairs) {
  return topdiff::build_relation(g, pairs, true);
}

inline topdiff::AcyclicOrder order(const topdiff::GroundSet& g, const Pairs& pairs) {
  return topdiff::AcyclicOrder(relation(g, pairs));
}

// Linear order listing labels from the top down, every transitive pair set.
inline topdiff::AcyclicOrder chain(const topdiff::GroundSet& g,
                                   const std::vector<std::string>& top_down) {
  Pairs pairs;
  for (std::size_t i = 0; i < top_down.size(); ++i)
    for (std::size_t j = i + 1; j < top_down.size(); ++j)
      pairs.emplace_back(top_down[i], top_down[j]);
  return order(g, pairs);
}

// Five alternatives in a chain, and the chain with its top or bottom swapped.
struct FiveChain {
  topdiff::GroundSet g = ground({"x1", "x2", "x3", "x4", "x5"});
  topdiff::AcyclicOrder base = chain(g, {"x1", "x2", "x3", "x4", "x5"});
  topdiff::AcyclicOrder top_swap = chain(g, {"x2", "x1", "x3", "x4", "x5"});
  topdiff::AcyclicOrder bottom_swap = chain(g, {"x1", "x2", "x3", "x5", "x4"});
};

// Four alternatives: a chain, a partly reversed chain, total indecision.
struct FourChain {
  topdiff::GroundSet g = ground({"x1", "x2", "x3", "x4"});
  topdiff::AcyclicOrder base = chain(g, {"x1", "x2", "x3", "x4"});
  topdiff::AcyclicOrder reversed_tail = chain(g, {"x1", "x4", "x3", "x2"});
  topdiff::AcyclicOrder indecisive = topdiff::AcyclicOrder::diagonal(g);
};

// Pentagon poset and the order reached from it by three edits.
struct Pentagon {
  topdiff::GroundSet g = ground({"x", "y", "z", "w", "a"});
  topdiff::AcyclicOrder start = order(
      g, {{"x", "y"}, {"x", "w"}, {"x", "a"}, {"x", "z"}, {"y", "w"}, {"y", "a"},
          {"w", "a"}, {"z", "a"}});
  topdiff::AcyclicOrder target = order(
      g, {{"x", "y"}, {"x", "a"}, {"x", "w"}, {"x", "z"}, {"y", "a"}, {"y", "w"},
          {"y", "z"}});
};

}  // namespace fixtures
