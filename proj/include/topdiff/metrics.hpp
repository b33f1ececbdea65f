#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topdiff/relation.hpp"

namespace topdiff {

// Additive measure on the subsets of a ground set, given by its atoms.
class Measure {
 public:
  // Counting measure: every atom weighs 1.
  static Measure counting(const GroundSet& ground);

  // Atoms by element index. Throws input_error on a size mismatch or a
  // negative / non-finite weight.
  Measure(GroundSet ground, std::vector<double> atoms);

  // Atoms by label. Labels absent from `weights` default to 1; their names
  // are appended to `defaulted` when it is non-null.
  static Measure from_labels(const GroundSet& ground,
                             const std::map<std::string, double>& weights,
                             std::vector<std::string>* defaulted = nullptr);

  const GroundSet& ground() const noexcept { return ground_; }
  double atom(Element x) const { return atoms_.at(x); }
  const std::vector<double>& atoms() const noexcept { return atoms_; }
  double of(Subset s) const;
  bool is_counting() const;
  bool has_full_support() const;

 private:
  GroundSet ground_;
  std::vector<double> atoms_;
};

// Weight per adjacent transposition; weight(k) prices swapping the elements
// at positions k and k+1 (1-based, counted from the top) of a ranking.
class WeightFunction {
 public:
  explicit WeightFunction(std::vector<double> weights);

  // Weight 2^(n-k) for position k, under which d_w equals the top-difference
  // metric on linear orders.
  static WeightFunction top_difference(std::size_t n);
  static WeightFunction uniform(std::size_t n, double w);

  // Number of elements the function is defined for.
  std::size_t elements() const noexcept { return weights_.size() + 1; }
  double weight(std::size_t k) const { return weights_.at(k - 1); }

 private:
  std::vector<double> weights_;
};

// Largest ground set accepted by the subset-enumeration route.
inline constexpr std::size_t kNaiveMaxElements = 20;
// Largest ground set accepted by the permutation-graph search.
inline constexpr std::size_t kKendallMaxElements = 8;

// theta[x] = number of subsets S with x in M(S,p) xor M(S,q). D^mu is
// sum_x theta[x] * mu({x}).
std::vector<std::uint64_t> top_difference_profile_naive(const AcyclicOrder& p,
                                                        const AcyclicOrder& q);
std::vector<std::uint64_t> top_difference_profile(const AcyclicOrder& p,
                                                  const AcyclicOrder& q);

// D by enumerating every subset of X (n <= 20).
std::uint64_t dist_naive(const AcyclicOrder& p, const AcyclicOrder& q);
double dist_naive(const AcyclicOrder& p, const AcyclicOrder& q,
                  const Measure& mu);

// D by the per-element closed form; polynomial in n.
std::uint64_t dist_fast(const AcyclicOrder& p, const AcyclicOrder& q);
double dist_fast(const AcyclicOrder& p, const AcyclicOrder& q,
                 const Measure& mu);

// D on linear orders from shared strict down-sets. Throws validation_error
// for non-linear input.
std::uint64_t dist_linear(const AcyclicOrder& p, const AcyclicOrder& q);

// Kemeny-Snell-Bogart: Hamming distance of incidence matrices.
std::uint64_t dist_ksb(const Relation& p, const Relation& q);

// Weighted Kendall metric: cheapest sequence of adjacent transpositions
// turning the ranking of p into that of q (n <= 8).
double dist_weighted_kendall(const AcyclicOrder& p, const AcyclicOrder& q,
                             const WeightFunction& w);

struct CanonicalPair {
  AcyclicOrder base;  // everything else strictly above a and b
  AcyclicOrder plus;  // base with a > b added
};

CanonicalPair canonical_pair_orders(Element a, Element b,
                                    const GroundSet& ground);

// Elements of a linear order from best to worst. Throws validation_error for
// non-linear input.
std::vector<Element> ranking(const AcyclicOrder& p);

// Linear order ranking `order[0]` highest.
AcyclicOrder linear_order_from_ranking(const GroundSet& ground,
                                       const std::vector<Element>& order);

}  // namespace topdiff
