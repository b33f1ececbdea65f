#include "topdiff/sampling.hpp"

#include <numeric>
#include <vector>

namespace topdiff {

namespace {

std::vector<Element> shuffled(std::size_t n, Rng& rng) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  // Fisher-Yates with our own index draw.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_index(rng, i)]);
  }
  return order;
}

std::vector<Subset> diagonal_rows(std::size_t n) {
  std::vector<Subset> rows(n);
  for (Element i = 0; i < n; ++i) rows[i] = Subset::singleton(i);
  return rows;
}

}  // namespace

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

AcyclicOrder random_acyclic_order(const GroundSet& ground, Rng& rng,
                                  double indifference, double density) {
  const std::size_t n = ground.size();
  const auto order = shuffled(n, rng);
  auto rows = diagonal_rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element hi = order[i];
      const Element lo = order[j];
      if (uniform_real(rng) < indifference) {
        rows[hi] = rows[hi].with(lo);
        rows[lo] = rows[lo].with(hi);
      } else if (uniform_real(rng) < density) {
        rows[hi] = rows[hi].with(lo);
      }
    }
  }
  return AcyclicOrder(Relation(ground, std::move(rows)));
}

std::pair<AcyclicOrder, AcyclicOrder> random_same_symmetric_pair(
    const GroundSet& ground, Rng& rng, double indifference, double density) {
  const std::size_t n = ground.size();
  auto shared = diagonal_rows(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (uniform_real(rng) < indifference) {
        shared[i] = shared[i].with(j);
        shared[j] = shared[j].with(i);
      }
    }
  }
  auto strict_on_top = [&]() {
    const auto order = shuffled(n, rng);
    auto rows = shared;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Element hi = order[i];
        const Element lo = order[j];
        if (shared[hi].contains(lo)) continue;
        if (uniform_real(rng) < density) rows[hi] = rows[hi].with(lo);
      }
    }
    return AcyclicOrder(Relation(ground, std::move(rows)));
  };
  AcyclicOrder p = strict_on_top();
  AcyclicOrder q = strict_on_top();
  return {std::move(p), std::move(q)};
}

AcyclicOrder random_linear_order(const GroundSet& ground, Rng& rng) {
  return linear_order_from_ranking(ground, shuffled(ground.size(), rng));
}

Measure random_measure(const GroundSet& ground, Rng& rng, double low,
                       double high) {
  std::vector<double> atoms(ground.size());
  for (auto& a : atoms) a = low + (high - low) * uniform_real(rng);
  return Measure(ground, std::move(atoms));
}

}  // namespace topdiff
