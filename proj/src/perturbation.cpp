#include "topdiff/perturbation.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace topdiff {

namespace {

void require_same_ground(const AcyclicOrder& p, const AcyclicOrder& q) {
  if (!(p.ground() == q.ground())) {
    throw input_error("relations are defined on different ground sets");
  }
}

void require_distinct(const AcyclicOrder& p, Element a, Element b) {
  p.ground().check_element(a);
  p.ground().check_element(b);
  if (a == b) {
    throw precondition_error("an edit needs two distinct elements");
  }
}

// Pair that differs between two relations, provided exactly one does.
struct PairDiff {
  Element i;
  Element j;
  bool added;  // present in the second relation only
};

std::optional<PairDiff> single_difference(const Relation& r, const Relation& s) {
  std::optional<PairDiff> found;
  for (Element i = 0; i < r.size(); ++i) {
    const Subset delta = r.row(i) ^ s.row(i);
    if (delta.empty()) continue;
    if (found || delta.size() != 1) return std::nullopt;
    const Element j = delta.elements().front();
    found = PairDiff{i, j, s.holds(i, j)};
  }
  return found;
}

// Every element the target ranks strictly above b is already strictly above
// b in p.
bool consistent_at(const AcyclicOrder& p, const AcyclicOrder& target,
                   Element b) {
  return target.strict_upper(b).is_subset_of(p.strict_upper(b));
}

// Lexicographically first (a,b) with a > b in q but not in p.
std::pair<Element, Element> first_missing_pair(const AcyclicOrder& p,
                                               const AcyclicOrder& q) {
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      if (q.prefers(a, b) && !p.prefers(a, b)) return {a, b};
    }
  }
  throw std::logic_error("strict parts already agree");
}

using State = std::vector<Subset>;

State state_of(const AcyclicOrder& p) {
  auto rows = p.relation().rows();
  return State(rows.begin(), rows.end());
}

}  // namespace

const char* to_string(EditKind kind) {
  return kind == EditKind::add ? "add" : "delete";
}

AcyclicOrder add_pair(const AcyclicOrder& p, Element a, Element b) {
  require_distinct(p, a, b);
  if (p.prefers(a, b) || p.prefers(b, a)) {
    throw precondition_error(
        "cannot add (" + p.ground().label(a) + "," + p.ground().label(b) +
        "): the pair is already strictly ranked");
  }
  const Relation& r = p.relation();
  Relation edited =
      r.holds(b, a) ? r.without_pair(b, a) : r.with_pair(a, b);
  return AcyclicOrder(std::move(edited));
}

AcyclicOrder delete_pair(const AcyclicOrder& p, Element a, Element b) {
  require_distinct(p, a, b);
  if (!p.prefers(a, b)) {
    throw precondition_error(
        "cannot delete (" + p.ground().label(a) + "," + p.ground().label(b) +
        "): " + p.ground().label(a) + " is not strictly above " +
        p.ground().label(b));
  }
  return AcyclicOrder(p.relation().without_pair(a, b));
}

std::optional<PerturbationStep> one_step_edit(const AcyclicOrder& p,
                                              const AcyclicOrder& p0,
                                              const AcyclicOrder& target) {
  require_same_ground(p, p0);
  require_same_ground(p, target);
  const auto diff = single_difference(p.relation(), p0.relation());
  if (!diff || diff->i == diff->j) return std::nullopt;

  if (diff->added) {
    // (a,b) incomparable in p, inserted.
    const Element a = diff->i;
    const Element b = diff->j;
    if (p.relation().holds(b, a) || !target.prefers(a, b)) return std::nullopt;
    return PerturbationStep{EditKind::add, a, b, p, p0};
  }
  if (p.prefers(diff->i, diff->j)) {
    // Deletion of a > b.
    const Element a = diff->i;
    const Element b = diff->j;
    if (target.prefers(a, b) || !consistent_at(p, target, b)) {
      return std::nullopt;
    }
    return PerturbationStep{EditKind::remove, a, b, p, p0};
  }
  // Indifferent pair: dropping (b,a) places a above b.
  const Element a = diff->j;
  const Element b = diff->i;
  if (!target.prefers(a, b)) return std::nullopt;
  return PerturbationStep{EditKind::add, a, b, p, p0};
}

bool is_one_step(const AcyclicOrder& p, const AcyclicOrder& p0,
                 const AcyclicOrder& target) {
  return one_step_edit(p, p0, target).has_value();
}

std::vector<PerturbationStep> one_step_candidates(const AcyclicOrder& p,
                                                  const AcyclicOrder& target) {
  require_same_ground(p, target);
  std::vector<PerturbationStep> out;
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      if (p.prefers(a, b)) {
        if (!target.prefers(a, b) && consistent_at(p, target, b)) {
          out.push_back(
              {EditKind::remove, a, b, p, delete_pair(p, a, b)});
        }
      } else if (!p.prefers(b, a) && target.prefers(a, b)) {
        try {
          out.push_back({EditKind::add, a, b, p, add_pair(p, a, b)});
        } catch (const cycle_error&) {
          // Not an acyclic order, hence no perturbation.
        }
      }
    }
  }
  return out;
}

std::size_t strict_disagreement(const AcyclicOrder& p, const AcyclicOrder& q) {
  require_same_ground(p, q);
  std::size_t count = 0;
  for (Element x = 0; x < p.size(); ++x) {
    count += (p.strict_upper(x) ^ q.strict_upper(x)).size();
  }
  return count;
}

std::vector<PerturbationStep> transform_chain(const AcyclicOrder& p,
                                              const AcyclicOrder& q) {
  require_same_ground(p, q);
  if (p == q) {
    throw precondition_error("transform_chain needs two distinct relations");
  }
  if (!(p.relation().symmetric_part() == q.relation().symmetric_part())) {
    throw precondition_error(
        "transform_chain needs relations with equal symmetric parts");
  }

  const std::size_t n = p.size();
  const std::size_t expected = strict_disagreement(p, q);
  std::vector<PerturbationStep> chain;
  chain.reserve(expected);
  AcyclicOrder current = p;

  while (!(current == q)) {
    if (chain.size() >= expected) {
      throw std::logic_error("transform_chain did not converge");
    }
    // B: bottom elements of strict pairs that q lacks.
    Subset bottoms;
    for (Element b = 0; b < n; ++b) {
      if (!(current.strict_upper(b) - q.strict_upper(b)).empty()) {
        bottoms = bottoms.with(b);
      }
    }

    if (bottoms.empty()) {
      // current's strict part is inside q's: add the first missing pair.
      const auto [a, b] = first_missing_pair(current, q);
      chain.push_back({EditKind::add, a, b, current, add_pair(current, a, b)});
      current = chain.back().after;
      continue;
    }

    const Relation reach = transitive_closure(current.relation().strict_part());
    Element b_star = n;
    for (Element b : bottoms.elements()) {
      // Minimal: nothing else in B lies strictly below b.
      if ((reach.row(b) & bottoms.without(b)).empty()) {
        b_star = b;
        break;
      }
    }
    if (b_star == n) {
      throw std::logic_error("no minimal element in an acyclic order");
    }

    const Subset wrong = current.strict_upper(b_star) - q.strict_upper(b_star);
    const Element a_star = wrong.elements().front();
    const Subset unmatched =
        q.strict_upper(b_star) - current.strict_upper(b_star);
    if (unmatched.empty()) {
      chain.push_back({EditKind::remove, a_star, b_star, current,
                       delete_pair(current, a_star, b_star)});
    } else {
      const Element x = unmatched.elements().front();
      chain.push_back(
          {EditKind::add, x, b_star, current, add_pair(current, x, b_star)});
    }
    current = chain.back().after;
  }
  return chain;
}

bool is_in_between(const AcyclicOrder& p, const AcyclicOrder& mid,
                   const AcyclicOrder& q) {
  require_same_ground(p, mid);
  require_same_ground(p, q);
  // Every one-step perturbation lowers strict_disagreement to q by one, so
  // mid can only be reached after exactly this many steps.
  const std::size_t from = strict_disagreement(p, q);
  const std::size_t to = strict_disagreement(mid, q);
  if (to >= from) return false;

  std::set<State> visited;
  std::vector<AcyclicOrder> stack{p};
  while (!stack.empty()) {
    AcyclicOrder current = std::move(stack.back());
    stack.pop_back();
    if (strict_disagreement(current, q) <= to) continue;
    for (auto& step : one_step_candidates(current, q)) {
      if (step.after == mid) return true;
      if (visited.insert(state_of(step.after)).second) {
        stack.push_back(std::move(step.after));
      }
    }
  }
  return false;
}

}  // namespace topdiff
