#include "topdiff/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <unordered_map>

namespace topdiff {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) {
    throw input_error("relations are defined on different ground sets");
  }
}

void require_measure_ground(const GroundSet& g, const Measure& mu) {
  if (!(g == mu.ground())) {
    throw input_error("measure is defined on a different ground set");
  }
}

double weigh(const std::vector<std::uint64_t>& theta, const Measure& mu) {
  double total = 0.0;
  for (Element x = 0; x < theta.size(); ++x) {
    total += static_cast<double>(theta[x]) * mu.atom(x);
  }
  return total;
}

std::uint64_t sum(const std::vector<std::uint64_t>& theta) {
  std::uint64_t total = 0;
  for (auto t : theta) total += t;
  return total;
}

}  // namespace

// -- Measure ----------------------------------------------------------------

Measure::Measure(GroundSet ground, std::vector<double> atoms)
    : ground_(std::move(ground)), atoms_(std::move(atoms)) {
  if (atoms_.size() != ground_.size()) {
    throw input_error("measure has " + std::to_string(atoms_.size()) +
                      " atoms for a ground set of size " +
                      std::to_string(ground_.size()));
  }
  for (Element x = 0; x < atoms_.size(); ++x) {
    if (!std::isfinite(atoms_[x]) || atoms_[x] < 0.0) {
      throw input_error("measure weight of '" + ground_.label(x) +
                        "' must be finite and nonnegative");
    }
  }
}

Measure Measure::counting(const GroundSet& ground) {
  return Measure(ground, std::vector<double>(ground.size(), 1.0));
}

Measure Measure::from_labels(const GroundSet& ground,
                             const std::map<std::string, double>& weights,
                             std::vector<std::string>* defaulted) {
  for (const auto& [label, w] : weights) {
    (void)w;
    ground.index_of(label);
  }
  std::vector<double> atoms(ground.size(), 1.0);
  for (Element x = 0; x < ground.size(); ++x) {
    auto it = weights.find(ground.label(x));
    if (it != weights.end()) {
      atoms[x] = it->second;
    } else if (defaulted != nullptr) {
      defaulted->push_back(ground.label(x));
    }
  }
  return Measure(ground, std::move(atoms));
}

double Measure::of(Subset s) const {
  double total = 0.0;
  for (Element x : s.elements()) total += atoms_[x];
  return total;
}

bool Measure::is_counting() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](double w) { return w == 1.0; });
}

bool Measure::has_full_support() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](double w) { return w > 0.0; });
}

// -- WeightFunction ---------------------------------------------------------

WeightFunction::WeightFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw input_error("transposition weights must be finite and nonnegative");
    }
  }
}

WeightFunction WeightFunction::top_difference(std::size_t n) {
  std::vector<double> w;
  for (std::size_t k = 1; k < n; ++k) {
    w.push_back(std::ldexp(1.0, static_cast<int>(n - k)));
  }
  return WeightFunction(std::move(w));
}

WeightFunction WeightFunction::uniform(std::size_t n, double w) {
  return WeightFunction(std::vector<double>(n > 0 ? n - 1 : 0, w));
}

// -- Top-difference ---------------------------------------------------------

std::vector<std::uint64_t> top_difference_profile_naive(const AcyclicOrder& p,
                                                        const AcyclicOrder& q) {
  require_same_ground(p.ground(), q.ground());
  const std::size_t n = p.size();
  if (n > kNaiveMaxElements) {
    throw capacity_error("subset enumeration is limited to " +
                         std::to_string(kNaiveMaxElements) + " elements");
  }
  std::vector<std::uint64_t> theta(n, 0);
  const Subset::mask_type end = Subset::mask_type{1} << n;
  for (Subset::mask_type bits = 0; bits < end; ++bits) {
    const Subset s(bits);
    const Subset diff = maximal_set(s, p) ^ maximal_set(s, q);
    for (Element x : diff.elements()) ++theta[x];
  }
  return theta;
}

std::vector<std::uint64_t> top_difference_profile(const AcyclicOrder& p,
                                                  const AcyclicOrder& q) {
  require_same_ground(p.ground(), q.ground());
  const std::size_t n = p.size();
  std::vector<std::uint64_t> theta(n, 0);
  for (Element x = 0; x < n; ++x) {
    const std::size_t up_p = p.strict_upper(x).size();
    const std::size_t up_q = q.strict_upper(x).size();
    // alpha = elements other than x strictly above x in neither order.
    const std::size_t alpha =
        n - 1 - (p.strict_upper(x) | q.strict_upper(x)).size();
    theta[x] = (std::uint64_t{1} << (n - up_q - 1)) +
               (std::uint64_t{1} << (n - up_p - 1)) -
               (std::uint64_t{1} << (alpha + 1));
  }
  return theta;
}

std::uint64_t dist_naive(const AcyclicOrder& p, const AcyclicOrder& q) {
  return sum(top_difference_profile_naive(p, q));
}

double dist_naive(const AcyclicOrder& p, const AcyclicOrder& q,
                  const Measure& mu) {
  require_measure_ground(p.ground(), mu);
  return weigh(top_difference_profile_naive(p, q), mu);
}

std::uint64_t dist_fast(const AcyclicOrder& p, const AcyclicOrder& q) {
  return sum(top_difference_profile(p, q));
}

double dist_fast(const AcyclicOrder& p, const AcyclicOrder& q,
                 const Measure& mu) {
  require_measure_ground(p.ground(), mu);
  return weigh(top_difference_profile(p, q), mu);
}

std::uint64_t dist_linear(const AcyclicOrder& p, const AcyclicOrder& q) {
  require_same_ground(p.ground(), q.ground());
  if (!classify(p.relation()).linear_order ||
      !classify(q.relation()).linear_order) {
    throw validation_error("the linear-order formula requires linear orders");
  }
  const std::size_t n = p.size();
  std::uint64_t subtract = 0;
  for (Element x = 0; x < n; ++x) {
    const std::size_t common = (p.strict_lower(x) & q.strict_lower(x)).size();
    subtract += std::uint64_t{1} << (common + 1);
  }
  return 2 * ((std::uint64_t{1} << n) - 1) - subtract;
}

std::uint64_t dist_ksb(const Relation& p, const Relation& q) {
  require_same_ground(p.ground(), q.ground());
  std::uint64_t total = 0;
  for (Element i = 0; i < p.size(); ++i) {
    total += (p.row(i) ^ q.row(i)).size();
  }
  return total;
}

// -- Linear orders and weighted Kendall --------------------------------------

std::vector<Element> ranking(const AcyclicOrder& p) {
  if (!classify(p.relation()).linear_order) {
    throw validation_error("a ranking exists only for linear orders");
  }
  std::vector<Element> order(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    order[p.strict_upper(x).size()] = x;
  }
  return order;
}

AcyclicOrder linear_order_from_ranking(const GroundSet& ground,
                                       const std::vector<Element>& order) {
  if (order.size() != ground.size()) {
    throw input_error("ranking must list every element exactly once");
  }
  std::vector<Subset> rows(ground.size());
  Subset seen;
  for (std::size_t pos = order.size(); pos-- > 0;) {
    const Element x = order[pos];
    ground.check_element(x);
    if (seen.contains(x)) {
      throw input_error("ranking must list every element exactly once");
    }
    seen = seen.with(x);
    rows[x] = seen;
  }
  return AcyclicOrder(Relation(ground, std::move(rows)));
}

double dist_weighted_kendall(const AcyclicOrder& p, const AcyclicOrder& q,
                             const WeightFunction& w) {
  require_same_ground(p.ground(), q.ground());
  const std::size_t n = p.size();
  if (n > kKendallMaxElements) {
    throw capacity_error("weighted Kendall search is limited to " +
                         std::to_string(kKendallMaxElements) + " elements");
  }
  if (w.elements() != n) {
    throw input_error("weight function is defined for " +
                      std::to_string(w.elements()) + " elements, not " +
                      std::to_string(n));
  }
  // A ranking packed four bits per position, top at the low nibble.
  auto encode = [](const std::vector<Element>& order) {
    std::uint64_t code = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      code |= static_cast<std::uint64_t>(order[pos]) << (4 * pos);
    }
    return code;
  };
  auto swap_at = [](std::uint64_t code, std::size_t pos) {
    const std::uint64_t lo = (code >> (4 * pos)) & 0xF;
    const std::uint64_t hi = (code >> (4 * (pos + 1))) & 0xF;
    code &= ~((std::uint64_t{0xFF}) << (4 * pos));
    return code | (hi << (4 * pos)) | (lo << (4 * (pos + 1)));
  };

  const std::uint64_t source = encode(ranking(p));
  const std::uint64_t target = encode(ranking(q));

  using Entry = std::pair<double, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_map<std::uint64_t, double> best;
  best[source] = 0.0;
  frontier.emplace(0.0, source);
  while (!frontier.empty()) {
    auto [cost, code] = frontier.top();
    frontier.pop();
    if (code == target) return cost;
    if (cost > best[code]) continue;
    for (std::size_t k = 1; k < n; ++k) {
      const std::uint64_t next = swap_at(code, k - 1);
      const double next_cost = cost + w.weight(k);
      auto it = best.find(next);
      if (it == best.end() || next_cost < it->second) {
        best[next] = next_cost;
        frontier.emplace(next_cost, next);
      }
    }
  }
  // Adjacent transpositions generate the symmetric group.
  return best.at(target);
}

CanonicalPair canonical_pair_orders(Element a, Element b,
                                    const GroundSet& ground) {
  ground.check_element(a);
  ground.check_element(b);
  if (a == b) {
    throw input_error("canonical pair orders need two distinct elements");
  }
  std::vector<Subset> rows(ground.size());
  const Subset bottom = Subset::singleton(a).with(b);
  for (Element x = 0; x < ground.size(); ++x) {
    rows[x] = Subset::singleton(x);
    if (x != a && x != b) rows[x] = rows[x] | bottom;
  }
  Relation base(ground, rows);
  Relation plus = base.with_pair(a, b);
  return {AcyclicOrder(std::move(base)), AcyclicOrder(std::move(plus))};
}

}  // namespace topdiff
