#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topdiff/error.hpp"
#include "topdiff/subset.hpp"

namespace topdiff {

// Index of an element in its GroundSet.
using Element = std::size_t;

// Ordered, finite set of distinctly labelled elements. Copies share storage.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  // Ground set labelled prefix1, ..., prefixN.
  static GroundSet indexed(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return data_->labels.size(); }
  const std::string& label(Element i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const noexcept {
    return data_->labels;
  }
  Subset all() const noexcept { return Subset::full(size()); }

  std::optional<Element> find(std::string_view label) const;
  // Throws input_error for an unknown label.
  Element index_of(std::string_view label) const;
  // Throws input_error unless i < size().
  void check_element(Element i) const;

  // Comma-separated labels in index order, e.g. "{a,b}".
  std::string format(Subset s) const;

  bool operator==(const GroundSet& other) const noexcept;

 private:
  struct Data {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

// Binary relation on a GroundSet, stored as an n x n bit matrix.
// row(i) = {j : i R j}.
class Relation {
 public:
  explicit Relation(GroundSet ground);
  Relation(GroundSet ground, std::vector<Subset> rows);

  static Relation diagonal(const GroundSet& ground);
  static Relation full(const GroundSet& ground);

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return rows_.size(); }

  bool holds(Element i, Element j) const { return rows_[i].contains(j); }
  // i R j and not j R i.
  bool strictly(Element i, Element j) const {
    return holds(i, j) && !holds(j, i);
  }
  Subset row(Element i) const { return rows_[i]; }
  Subset column(Element j) const;
  std::span<const Subset> rows() const noexcept { return rows_; }

  Relation with_pair(Element i, Element j) const;
  Relation without_pair(Element i, Element j) const;
  Relation with_diagonal() const;

  std::size_t pair_count() const;
  bool is_reflexive() const;
  bool is_subset_of(const Relation& other) const;

  // R^> = {(x,y) : x R y, not y R x}.
  Relation strict_part() const;
  // R \ R^>.
  Relation symmetric_part() const;

  bool operator==(const Relation& other) const;

 private:
  GroundSet ground_;
  std::vector<Subset> rows_;
};

// Reflexive relation whose strict part has no cycle through distinct
// elements. A missing diagonal is inserted on construction.
class AcyclicOrder {
 public:
  // Throws cycle_error if the strict part of `rel` is cyclic.
  explicit AcyclicOrder(Relation rel);

  static AcyclicOrder diagonal(const GroundSet& ground);

  const Relation& relation() const noexcept { return rel_; }
  const GroundSet& ground() const noexcept { return rel_.ground(); }
  std::size_t size() const noexcept { return rel_.size(); }

  // a > b (strict preference).
  bool prefers(Element a, Element b) const { return rel_.strictly(a, b); }
  // a ~ b (indifference, includes a == b).
  bool indifferent(Element a, Element b) const {
    return rel_.holds(a, b) && rel_.holds(b, a);
  }
  // {a : a > x}.
  Subset strict_upper(Element x) const { return strict_up_[x]; }
  // {a : x > a}.
  Subset strict_lower(Element x) const;

  // Number of strict pairs.
  std::size_t strict_pair_count() const;

  // True when the input lacked part of the diagonal.
  bool diagonal_inserted() const noexcept { return diagonal_inserted_; }

  bool operator==(const AcyclicOrder& other) const { return rel_ == other.rel_; }

 private:
  Relation rel_;
  std::vector<Subset> strict_up_;
  bool diagonal_inserted_ = false;
};

struct Classification {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool total = false;
  bool acyclic = false;
  bool preorder = false;
  bool partial_order = false;
  bool linear_order = false;
  bool total_preorder = false;
};

struct Decomposition {
  Relation strict;
  Relation symmetric;
  // Unordered pairs (i < j) related in neither direction.
  std::vector<std::pair<Element, Element>> incomparable;
};

struct PrincipalSets {
  Subset upper;  // {a : a R x}
  Subset lower;  // {a : x R a}
};

struct IndifferencePart {
  Relation ind;
  bool regular = false;
};

// Builds a relation from label pairs. Duplicates are idempotent.
Relation build_relation(
    const GroundSet& ground,
    std::span<const std::pair<std::string, std::string>> pairs,
    bool make_reflexive);

Classification classify(const Relation& r);

Decomposition decompose(const Relation& r);

// Cycle z1 > z2 > ... > zk > z1 in the strict part, if any. Found by a
// depth-first search started from the lowest index; the cycle is rotated to
// begin at its smallest element.
std::optional<std::vector<Element>> find_strict_cycle(const Relation& r);

// "a -> b -> c -> a"
std::string format_cycle(const GroundSet& ground,
                         std::span<const Element> cycle);

// M(S,R) = {x in S : no y in S with y R^> x}.
Subset maximal_set(Subset s, const Relation& r);
Subset maximal_set(Subset s, const AcyclicOrder& p);

// m(S,R) = {x in S : x R y for all y in S}.
Subset maximum_set(Subset s, const Relation& r);

Relation transitive_closure(const Relation& r);

// Throws validation_error unless p is a preorder.
IndifferencePart indifference_part(const AcyclicOrder& p);

// N(b,p) = |{x != b : not x > b}|.
std::size_t not_dominated_count(Element b, const AcyclicOrder& p);

PrincipalSets principal_sets(Element x, const Relation& r);

}  // namespace topdiff
