#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "topdiff/metrics.hpp"
#include "topdiff/relation.hpp"

namespace topdiff {

// Deterministic generator. Draws use raw 64-bit output only, so sequences are
// identical across standard libraries.
using Rng = std::mt19937_64;

std::size_t uniform_index(Rng& rng, std::size_t bound);
// Uniform in [0, 1).
double uniform_real(Rng& rng);

// Random acyclic order: a hidden ranking orients every strict pair, so the
// result is acyclic by construction. Each unordered pair is indifferent with
// probability `indifference`, otherwise strict with probability `density`.
AcyclicOrder random_acyclic_order(const GroundSet& ground, Rng& rng,
                                  double indifference = 0.0,
                                  double density = 0.5);

// Two random acyclic orders sharing one symmetric part.
std::pair<AcyclicOrder, AcyclicOrder> random_same_symmetric_pair(
    const GroundSet& ground, Rng& rng, double indifference = 0.2,
    double density = 0.5);

AcyclicOrder random_linear_order(const GroundSet& ground, Rng& rng);

// Atoms drawn from [low, high).
Measure random_measure(const GroundSet& ground, Rng& rng, double low = 0.25,
                       double high = 4.0);

}  // namespace topdiff
