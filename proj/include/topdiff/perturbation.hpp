#pragma once

#include <optional>
#include <vector>

#include "topdiff/relation.hpp"

namespace topdiff {

enum class EditKind { add, remove };

const char* to_string(EditKind kind);

// One single addition or deletion, with both endpoints.
struct PerturbationStep {
  EditKind kind;
  Element a;
  Element b;
  AcyclicOrder before;
  AcyclicOrder after;
};

// Places a strictly above b: inserts (a,b) when a and b are incomparable,
// drops (b,a) when they are indifferent. Throws precondition_error if a and
// b are already strictly ranked, cycle_error if the result is cyclic.
AcyclicOrder add_pair(const AcyclicOrder& p, Element a, Element b);

// Removes (a,b). Throws precondition_error unless a > b.
AcyclicOrder delete_pair(const AcyclicOrder& p, Element a, Element b);

// The edit turning p into p0 when p0 is a one-step perturbation of p toward
// target; nullopt otherwise.
std::optional<PerturbationStep> one_step_edit(const AcyclicOrder& p,
                                              const AcyclicOrder& p0,
                                              const AcyclicOrder& target);

bool is_one_step(const AcyclicOrder& p, const AcyclicOrder& p0,
                 const AcyclicOrder& target);

// Every one-step perturbation of p toward target, deletions and additions
// interleaved in (a,b) index order.
std::vector<PerturbationStep> one_step_candidates(const AcyclicOrder& p,
                                                  const AcyclicOrder& target);

// |strict(p) xor strict(q)|: strict pairs on which p and q disagree.
std::size_t strict_disagreement(const AcyclicOrder& p, const AcyclicOrder& q);

// Chain of one-step perturbations from p to q, built greedily: while p's
// strict part has pairs q lacks, fix the lowest such bottom element first.
// Ties go to the lowest element index. Requires p != q with equal symmetric
// parts (precondition_error otherwise).
std::vector<PerturbationStep> transform_chain(const AcyclicOrder& p,
                                              const AcyclicOrder& q);

// True when mid is reached from p by at least one one-step perturbation
// toward q, each intermediate again stepping toward q.
bool is_in_between(const AcyclicOrder& p, const AcyclicOrder& mid,
                   const AcyclicOrder& q);

}  // namespace topdiff
