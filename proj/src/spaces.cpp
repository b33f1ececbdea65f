#include "topdiff/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <thread>

namespace topdiff {

namespace {

constexpr std::array<std::pair<SpaceKind, std::string_view>, 5> kSpaceNames{{
    {SpaceKind::linear_orders, "linear-orders"},
    {SpaceKind::total_preorders, "total-preorders"},
    {SpaceKind::partial_orders, "partial-orders"},
    {SpaceKind::preorders, "preorders"},
    {SpaceKind::antisym_acyclic, "antisym-acyclic"},
}};

void check_capacity(SpaceKind kind, const GroundSet& ground) {
  if (ground.size() > max_elements(kind)) {
    throw capacity_error("enumerating " + std::string(to_string(kind)) +
                         " is limited to " +
                         std::to_string(max_elements(kind)) + " elements");
  }
}

bool is_transitive(const std::vector<Subset>& rows) {
  for (Element x = 0; x < rows.size(); ++x) {
    for (Element y : rows[x].elements()) {
      if (!rows[y].is_subset_of(rows[x])) return false;
    }
  }
  return true;
}

void visit_linear_orders(const GroundSet& ground,
                         const std::function<void(const AcyclicOrder&)>& visit) {
  std::vector<Element> order(ground.size());
  std::iota(order.begin(), order.end(), Element{0});
  do {
    visit(linear_order_from_ranking(ground, order));
  } while (std::next_permutation(order.begin(), order.end()));
}

// Ordered set partitions: every set partition (restricted-growth string)
// combined with every ordering of its blocks.
void visit_total_preorders(
    const GroundSet& ground,
    const std::function<void(const AcyclicOrder&)>& visit) {
  const std::size_t n = ground.size();
  std::vector<std::size_t> block(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    const std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<std::size_t> rank(blocks);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    do {
      std::vector<Subset> rows(n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          // Rank 0 is the top block.
          if (rank[block[x]] <= rank[block[y]]) rows[x] = rows[x].with(y);
        }
      }
      visit(AcyclicOrder(Relation(ground, std::move(rows))));
    } while (std::next_permutation(rank.begin(), rank.end()));

    // Next restricted-growth string: block[0] = 0, block[i] <= 1 + max prefix.
    std::size_t i = n;
    while (i-- > 1) {
      if (block[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) return;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
}

// All reflexive relations, one bit per ordered off-diagonal pair, filtered by
// transitivity.
void visit_preorders(const GroundSet& ground,
                     const std::function<void(const AcyclicOrder&)>& visit) {
  const std::size_t n = ground.size();
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  const std::uint64_t patterns = std::uint64_t{1} << slots.size();
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    std::vector<Subset> rows(n);
    for (Element i = 0; i < n; ++i) rows[i] = Subset::singleton(i);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((bits >> s) & 1U) {
        rows[slots[s].first] = rows[slots[s].first].with(slots[s].second);
      }
    }
    if (is_transitive(rows)) visit(AcyclicOrder(Relation(ground, std::move(rows))));
  }
}

// Reflexive antisymmetric relations: each unordered pair is unrelated or
// oriented one way. `keep` filters the bit rows before validation.
void visit_antisymmetric(const GroundSet& ground,
                         const std::function<bool(const std::vector<Subset>&)>& keep,
                         const std::function<void(const AcyclicOrder&)>& visit) {
  const std::size_t n = ground.size();
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<int> state(slots.size(), 0);
  while (true) {
    std::vector<Subset> rows(n);
    for (Element i = 0; i < n; ++i) rows[i] = Subset::singleton(i);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      if (state[s] == 1) rows[i] = rows[i].with(j);
      if (state[s] == 2) rows[j] = rows[j].with(i);
    }
    if (keep(rows)) {
      Relation r(ground, std::move(rows));
      if (!find_strict_cycle(r)) visit(AcyclicOrder(std::move(r)));
    }
    // Base-3 odometer, last slot fastest.
    std::size_t s = slots.size();
    while (s > 0 && state[s - 1] == 2) state[--s] = 0;
    if (s == 0) return;
    ++state[s - 1];
  }
}

// Lexicographic key of the incidence matrix, row by row.
std::vector<Subset::mask_type> incidence_key(const AcyclicOrder& p) {
  std::vector<Subset::mask_type> key;
  for (Subset r : p.relation().rows()) {
    // Column 0 is the most significant position.
    Subset::mask_type reversed = 0;
    for (Element j = 0; j < p.size(); ++j) {
      if (r.contains(j)) reversed |= Subset::mask_type{1} << (p.size() - 1 - j);
    }
    key.push_back(reversed);
  }
  return key;
}

struct Candidate {
  double value = -1.0;
  std::size_t i = 0;
  std::size_t j = 0;

  bool beats(const Candidate& other) const {
    if (value != other.value) return value > other.value;
    return std::pair(i, j) < std::pair(other.i, other.j);
  }
};

}  // namespace

std::string_view to_string(SpaceKind kind) {
  for (const auto& [k, name] : kSpaceNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SpaceKind> parse_space_kind(std::string_view name) {
  for (const auto& [k, label] : kSpaceNames) {
    if (label == name) return k;
  }
  return std::nullopt;
}

std::size_t max_elements(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::linear_orders:
      return 7;
    case SpaceKind::total_preorders:
      return 6;
    case SpaceKind::partial_orders:
    case SpaceKind::preorders:
    case SpaceKind::antisym_acyclic:
      return 5;
  }
  return 0;
}

void for_each_in_space(SpaceKind kind, const GroundSet& ground,
                       const std::function<void(const AcyclicOrder&)>& visit) {
  check_capacity(kind, ground);
  switch (kind) {
    case SpaceKind::linear_orders:
      visit_linear_orders(ground, visit);
      return;
    case SpaceKind::total_preorders:
      visit_total_preorders(ground, visit);
      return;
    case SpaceKind::preorders:
      visit_preorders(ground, visit);
      return;
    case SpaceKind::partial_orders:
      visit_antisymmetric(ground, is_transitive, visit);
      return;
    case SpaceKind::antisym_acyclic:
      visit_antisymmetric(
          ground, [](const std::vector<Subset>&) { return true; }, visit);
      return;
  }
}

std::vector<AcyclicOrder> enumerate_space(SpaceKind kind,
                                          const GroundSet& ground) {
  std::vector<AcyclicOrder> out;
  for_each_in_space(kind, ground,
                    [&](const AcyclicOrder& p) { out.push_back(p); });
  return out;
}

std::size_t count_space(SpaceKind kind, const GroundSet& ground) {
  std::size_t count = 0;
  for_each_in_space(kind, ground, [&](const AcyclicOrder&) { ++count; });
  return count;
}

Diameter diameter(SpaceKind kind, const GroundSet& ground, const Measure& mu,
                  unsigned workers) {
  if (!(mu.ground() == ground)) {
    throw input_error("measure is defined on a different ground set");
  }
  std::vector<AcyclicOrder> members = enumerate_space(kind, ground);
  {
    std::vector<std::pair<std::vector<Subset::mask_type>, std::size_t>> keyed;
    keyed.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      keyed.emplace_back(incidence_key(members[i]), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<AcyclicOrder> sorted;
    sorted.reserve(members.size());
    for (const auto& [key, i] : keyed) sorted.push_back(members[i]);
    members = std::move(sorted);
  }

  // Flat snapshot of strict up-sets: members x elements.
  const std::size_t n = ground.size();
  std::vector<Subset> up(members.size() * n);
  for (std::size_t m = 0; m < members.size(); ++m) {
    for (Element x = 0; x < n; ++x) up[m * n + x] = members[m].strict_upper(x);
  }
  const std::vector<double>& atoms = mu.atoms();

  auto distance = [&](std::size_t a, std::size_t b) {
    double total = 0.0;
    for (Element x = 0; x < n; ++x) {
      const Subset ua = up[a * n + x];
      const Subset ub = up[b * n + x];
      const std::size_t alpha = n - 1 - (ua | ub).size();
      const std::uint64_t theta = (std::uint64_t{1} << (n - ub.size() - 1)) +
                                  (std::uint64_t{1} << (n - ua.size() - 1)) -
                                  (std::uint64_t{1} << (alpha + 1));
      total += static_cast<double>(theta) * atoms[x];
    }
    return total;
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<Candidate> best(workers);
  auto scan = [&](unsigned w) {
    Candidate local;
    for (std::size_t i = w; i < members.size(); i += workers) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Candidate c{distance(i, j), i, j};
        if (c.beats(local)) local = c;
      }
    }
    best[w] = local;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  Candidate winner;
  for (const auto& c : best) {
    if (c.beats(winner)) winner = c;
  }
  if (members.size() < 2) {
    // A single member is at distance 0 from itself.
    return Diameter{0.0, members.front(), members.front(), members.size()};
  }
  return Diameter{winner.value, members[winner.i], members[winner.j],
                  members.size()};
}

std::uint64_t diameter_formula(SpaceKind kind, std::size_t n) {
  if (n < 2) {
    throw input_error("diameter formulas need at least two elements");
  }
  if (n > kFormulaMaxElements) {
    throw capacity_error("diameter formulas are limited to " +
                         std::to_string(kFormulaMaxElements) + " elements");
  }
  const auto pow2 = [](std::size_t e) { return std::uint64_t{1} << e; };
  switch (kind) {
    case SpaceKind::linear_orders:
      return 2 * (pow2(n) - n - 1);
    case SpaceKind::total_preorders: {
      // n 2^(n-1) + eta(floor(n/2)), eta(m) = 2 - 2^m - 2^(n-m).
      const std::size_t lo = n / 2;
      const std::size_t hi = n - lo;
      return n * pow2(n - 1) + 2 - pow2(lo) - pow2(hi);
    }
    default:
      throw input_error("no closed-form diameter is known for " +
                        std::string(to_string(kind)));
  }
}

void for_each_extension(const AcyclicOrder& p,
                        const std::function<void(const AcyclicOrder&)>& visit) {
  if (!classify(p.relation()).antisymmetric) {
    throw validation_error("transitive extensions require an antisymmetric order");
  }
  const std::size_t n = p.size();
  for_each_in_space(SpaceKind::preorders, p.ground(), [&](const AcyclicOrder& r) {
    for (Element x = 0; x < n; ++x) {
      if (!p.strict_upper(x).is_subset_of(r.strict_upper(x))) return;
    }
    visit(r);
  });
}

std::vector<AcyclicOrder> enumerate_extensions(const AcyclicOrder& p) {
  std::vector<AcyclicOrder> out;
  for_each_extension(p, [&](const AcyclicOrder& r) { out.push_back(r); });
  return out;
}

BestExtension best_transitive_extension(const AcyclicOrder& p,
                                        const Measure& mu, bool verify) {
  if (!classify(p.relation()).antisymmetric) {
    throw validation_error("best transitive extension requires an antisymmetric order");
  }
  AcyclicOrder best(transitive_closure(p.relation()));
  const double distance = dist_fast(p, best, mu);
  BestExtension out{best, distance, std::nullopt, 0, std::nullopt};
  if (!verify) return out;

  if (p.size() > max_elements(SpaceKind::preorders)) {
    throw capacity_error("exhaustive verification is limited to " +
                         std::to_string(max_elements(SpaceKind::preorders)) +
                         " elements");
  }
  bool best_seen = false;
  const double tolerance = 1e-9 * std::max(1.0, std::abs(distance));
  for_each_extension(p, [&](const AcyclicOrder& q) {
    ++out.extensions_checked;
    if (q == best) best_seen = true;
    // Extensions that only add ties to `best` sit at the same distance.
    if (q.relation().strict_part() == best.relation().strict_part()) return;
    if (!out.rival && dist_fast(p, q, mu) <= distance + tolerance) {
      out.rival = q;
    }
  });
  out.verified = best_seen && !out.rival;
  return out;
}

}  // namespace topdiff
