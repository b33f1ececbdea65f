#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "topdiff/metrics.hpp"
#include "topdiff/perturbation.hpp"
#include "topdiff/sampling.hpp"

using namespace topdiff;
using fixtures::order;

namespace {

struct ThreeElements {
  GroundSet g = fixtures::ground({"a", "b", "c"});
  AcyclicOrder ab = order(g, {{"a", "b"}});
  AcyclicOrder cb = order(g, {{"c", "b"}});
  AcyclicOrder diag = AcyclicOrder::diagonal(g);
};

void check_chain(const AcyclicOrder& p, const AcyclicOrder& q) {
  const auto chain = transform_chain(p, q);
  REQUIRE(!chain.empty());
  CHECK(chain.size() == strict_disagreement(p, q));
  CHECK(chain.front().before == p);
  CHECK(chain.back().after == q);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& s = chain[i];
    if (i > 0) CHECK(s.before == chain[i - 1].after);
    CHECK(is_one_step(s.before, s.after, q));
    const auto edit = one_step_edit(s.before, s.after, q);
    REQUIRE(edit);
    CHECK(edit->kind == s.kind);
    CHECK(edit->a == s.a);
    CHECK(edit->b == s.b);
    CHECK(classify(s.after.relation()).acyclic);
  }
}

}  // namespace

TEST_CASE("add and delete") {
  ThreeElements t;
  CHECK(add_pair(t.diag, 0, 1) == t.ab);
  CHECK(delete_pair(t.ab, 0, 1) == t.diag);
  CHECK_THROWS_AS(add_pair(t.ab, 0, 1), precondition_error);
  CHECK_THROWS_AS(add_pair(t.ab, 1, 0), precondition_error);
  CHECK_THROWS_AS(delete_pair(t.ab, 1, 0), precondition_error);
  CHECK_THROWS_AS(delete_pair(t.diag, 0, 1), precondition_error);
  CHECK_THROWS_AS(add_pair(t.diag, 1, 1), precondition_error);

  const auto bca = order(t.g, {{"b", "c"}, {"c", "a"}});
  CHECK_THROWS_AS(add_pair(bca, 0, 1), cycle_error);

  // Placing a above b when they are tied drops the reverse pair; deleting
  // afterwards leaves them incomparable.
  const auto tied = order(t.g, {{"a", "b"}, {"b", "a"}});
  const auto placed = add_pair(tied, 0, 1);
  CHECK(placed == t.ab);
  CHECK(delete_pair(placed, 0, 1) == t.diag);
  CHECK_FALSE(delete_pair(placed, 0, 1) == tied);

  // The reverse order already ranks b above a: neither edit applies.
  const auto rev = order(t.g, {{"c", "b"}, {"b", "a"}});
  CHECK_THROWS_AS(add_pair(rev, 0, 1), precondition_error);
}

TEST_CASE("round trips on random orders") {
  Rng rng(12);
  const auto g = GroundSet::indexed(5);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_acyclic_order(g, rng, 0.2, 0.5);
    for (Element a = 0; a < 5; ++a) {
      for (Element b = 0; b < 5; ++b) {
        if (a == b) continue;
        if (p.prefers(a, b)) {
          const auto minus = delete_pair(p, a, b);
          CHECK(add_pair(minus, a, b) == p);
        } else if (!p.prefers(b, a)) {
          AcyclicOrder plus = p;
          try {
            plus = add_pair(p, a, b);
          } catch (const cycle_error&) {
            continue;
          }
          const auto back = delete_pair(plus, a, b);
          if (p.indifferent(a, b)) {
            CHECK(back.relation() == p.relation().without_pair(a, b).without_pair(b, a));
          } else {
            CHECK(back == p);
          }
        }
      }
    }
  }
}

TEST_CASE("pentagon edits") {
  fixtures::Pentagon f;
  const auto& g = f.g;
  const Element x = g.index_of("x"), y = g.index_of("y"), z = g.index_of("z"),
                w = g.index_of("w"), a = g.index_of("a");
  (void)x;
  const auto second = add_pair(f.start, y, z);
  const auto third = delete_pair(second, w, a);
  CHECK(delete_pair(third, z, a) == f.target);
  CHECK(is_one_step(f.start, second, f.target));
  CHECK(is_one_step(second, third, f.target));
  CHECK(is_one_step(third, f.target, f.target));
  CHECK(is_in_between(f.start, second, f.target));
  CHECK(is_in_between(f.start, third, f.target));
  CHECK_FALSE(is_in_between(f.start, f.start, f.target));
  check_chain(f.start, f.target);
  CHECK(transform_chain(f.start, f.target).size() == 3);
}

TEST_CASE("a deletion that would break consistency is no step") {
  ThreeElements t;
  CHECK_FALSE(is_one_step(t.ab, t.diag, t.cb));
  CHECK_FALSE(is_one_step(t.ab, t.ab, t.cb));
  for (const auto& s : one_step_candidates(t.ab, t.cb)) CHECK_FALSE(s.after == t.diag);
  CHECK_FALSE(is_in_between(t.ab, t.diag, t.cb));

  // Yet the diagonal lies between the two as sets.
  CHECK(t.diag.relation().is_subset_of(t.ab.relation()));
  for (Element i = 0; i < 3; ++i) {
    const Subset both = t.ab.relation().row(i) & t.cb.relation().row(i);
    const Subset either = t.ab.relation().row(i) | t.cb.relation().row(i);
    CHECK(both.is_subset_of(t.diag.relation().row(i)));
    CHECK(t.diag.relation().row(i).is_subset_of(either));
  }

  const auto chain = transform_chain(t.ab, t.cb);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].kind == EditKind::add);
  CHECK(chain[0].a == 2);
  CHECK(chain[0].b == 1);
  CHECK(chain[1].kind == EditKind::remove);
  CHECK(chain[1].a == 0);
  CHECK(chain[1].b == 1);
  check_chain(t.ab, t.cb);
}

TEST_CASE("one-step candidates") {
  ThreeElements t;
  CHECK(one_step_candidates(t.ab, t.ab).empty());
  const auto only = one_step_candidates(t.diag, t.ab);
  REQUIRE(only.size() == 1);
  CHECK(only[0].kind == EditKind::add);
  CHECK(only[0].after == t.ab);

  Rng rng(13);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = GroundSet::indexed(n);
    for (int k = 0; k < 200; ++k) {
      const auto p = random_acyclic_order(g, rng, 0.2, 0.5);
      const auto q = random_acyclic_order(g, rng, 0.2, 0.5);
      const std::size_t before = strict_disagreement(p, q);
      for (const auto& s : one_step_candidates(p, q)) {
        CHECK(is_one_step(p, s.after, q));
        CHECK(classify(s.after.relation()).acyclic);
        CHECK(strict_disagreement(s.after, q) + 1 == before);
      }
    }
  }
}

TEST_CASE("candidate list is complete against all single edits") {
  Rng rng(14);
  const auto g = GroundSet::indexed(4);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_acyclic_order(g, rng, 0.2, 0.5);
    const auto q = random_acyclic_order(g, rng, 0.2, 0.5);
    std::size_t brute = 0;
    // Every relation at Hamming distance one (off the diagonal).
    for (Element i = 0; i < 4; ++i) {
      for (Element j = 0; j < 4; ++j) {
        if (i == j) continue;
        const Relation r = p.relation().holds(i, j) ? p.relation().without_pair(i, j)
                                                    : p.relation().with_pair(i, j);
        if (!classify(r).acyclic) continue;
        if (is_one_step(p, AcyclicOrder(r), q)) ++brute;
      }
    }
    CHECK(one_step_candidates(p, q).size() == brute);
  }
}

TEST_CASE("adjacent swap of a linear order") {
  const auto g = fixtures::ground({"a", "b", "c"});
  const auto p = fixtures::chain(g, {"a", "b", "c"});
  const auto q = fixtures::chain(g, {"a", "c", "b"});
  const auto chain = transform_chain(p, q);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].kind == EditKind::remove);
  CHECK(chain[0].a == 1);
  CHECK(chain[0].b == 2);
  CHECK(chain[1].kind == EditKind::add);
  CHECK(chain[1].a == 2);
  CHECK(chain[1].b == 1);
  check_chain(p, q);
}

TEST_CASE("transform_chain preconditions") {
  ThreeElements t;
  CHECK_THROWS_AS(transform_chain(t.ab, t.ab), precondition_error);
  const auto tied = order(t.g, {{"a", "c"}, {"c", "a"}});
  CHECK_THROWS_AS(transform_chain(t.ab, tied), precondition_error);
}

TEST_CASE("transform_chain on random antisymmetric pairs") {
  Rng rng(15);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto g = GroundSet::indexed(n);
    for (int k = 0; k < 500; ++k) {
      const auto p = random_acyclic_order(g, rng, 0.0, 0.5);
      const auto q = random_acyclic_order(g, rng, 0.0, 0.5);
      if (p == q) continue;
      check_chain(p, q);
    }
  }
}

TEST_CASE("transform_chain with shared indifference") {
  Rng rng(16);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto g = GroundSet::indexed(n);
    for (int k = 0; k < 300; ++k) {
      auto [p, q] = random_same_symmetric_pair(g, rng);
      if (p == q) continue;
      check_chain(p, q);
    }
  }
}

TEST_CASE("distance is additive along chains") {
  Rng rng(17);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto g = GroundSet::indexed(n);
    const auto mu = random_measure(g, rng);
    for (int k = 0; k < 200; ++k) {
      auto [p, q] = random_same_symmetric_pair(g, rng);
      if (p == q) continue;
      std::uint64_t exact = 0;
      double weighted = 0.0;
      for (const auto& s : transform_chain(p, q)) {
        exact += dist_fast(s.before, s.after);
        weighted += dist_fast(s.before, s.after, mu);
      }
      CHECK(exact == dist_fast(p, q));
      CHECK(std::abs(weighted - dist_fast(p, q, mu)) <= 1e-9 * std::max(1.0, weighted));
    }
  }
}

TEST_CASE("one step splits every menu's disagreement") {
  Rng rng(18);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = GroundSet::indexed(n);
    for (int k = 0; k < 100; ++k) {
      const auto p = random_acyclic_order(g, rng, 0.2, 0.5);
      const auto q = random_acyclic_order(g, rng, 0.2, 0.5);
      const auto mp = oracle::to_matrix(p);
      const auto mq = oracle::to_matrix(q);
      for (const auto& s : one_step_candidates(p, q)) {
        const auto m0 = oracle::to_matrix(s.after);
        for (std::uint32_t S = 0; S < (1U << n); ++S) {
          const auto cp = oracle::maximal(mp, S);
          const auto c0 = oracle::maximal(m0, S);
          const auto cq = oracle::maximal(mq, S);
          for (std::size_t x = 0; x < n; ++x) {
            const bool first = cp[x] != c0[x];
            const bool second = c0[x] != cq[x];
            CHECK_FALSE((first && second));
            CHECK((first || second) == (cp[x] != cq[x]));
          }
        }
      }
    }
  }
}

TEST_CASE("in-between search") {
  Rng rng(19);
  const auto g = GroundSet::indexed(4);
  for (int k = 0; k < 100; ++k) {
    auto [p, q] = random_same_symmetric_pair(g, rng, 0.1, 0.5);
    if (p == q) continue;
    const auto chain = transform_chain(p, q);
    for (const auto& s : chain) CHECK(is_in_between(p, s.after, q));
    CHECK_FALSE(is_in_between(p, p, q));
  }
}
