#include "topdiff/axioms.hpp"

#include <cmath>
#include <sstream>

#include "topdiff/perturbation.hpp"
#include "topdiff/sampling.hpp"

namespace topdiff {

namespace {

class Recorder {
 public:
  Recorder(AxiomCheck& check, double tolerance)
      : check_(check), tolerance_(tolerance) {}

  void expect(double got, double want, const std::string& context) {
    ++check_.checked;
    if (std::abs(got - want) <= tolerance_ * std::max(1.0, std::abs(want))) {
      return;
    }
    ++check_.failed;
    if (check_.counterexamples.size() < kMaxCounterexamples) {
      std::ostringstream os;
      os.precision(17);
      os << context << ": got " << got << ", expected " << want;
      check_.counterexamples.push_back(os.str());
    }
  }

 private:
  AxiomCheck& check_;
  double tolerance_;
};

std::string edit_label(const GroundSet& g, const PerturbationStep& s) {
  return std::string(s.kind == EditKind::add ? "add (" : "delete (") +
         g.label(s.a) + "," + g.label(s.b) + ")";
}

void check_additivity(const GroundSet& ground, const Metric& d,
                      const AxiomSuiteOptions& opt, Rng& rng, Recorder& rec) {
  // Along the constructive chain between orders with a shared symmetric part.
  for (std::size_t s = 0; s < opt.samples; ++s) {
    auto [p, q] = random_same_symmetric_pair(ground, rng);
    if (p == q) continue;
    const auto chain = transform_chain(p, q);
    for (const auto& step : chain) {
      rec.expect(d(step.before, step.after) + d(step.after, q),
                 d(step.before, q),
                 describe(step.before) + " -> " + describe(q) + " via " +
                     edit_label(ground, step));
    }
  }
  // Every one-step perturbation between unrelated orders, indifference
  // included.
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const AcyclicOrder p = random_acyclic_order(ground, rng, 0.2, 0.5);
    const AcyclicOrder q = random_acyclic_order(ground, rng, 0.2, 0.5);
    for (const auto& step : one_step_candidates(p, q)) {
      rec.expect(d(p, step.after) + d(step.after, q), d(p, q),
                 describe(p) + " -> " + describe(q) + " via " +
                     edit_label(ground, step));
    }
  }
}

void check_normalization(const GroundSet& ground, const Metric& d,
                         Recorder& rec) {
  for (Element a = 0; a < ground.size(); ++a) {
    for (Element b = 0; b < ground.size(); ++b) {
      if (a == b) continue;
      const auto pair = canonical_pair_orders(a, b, ground);
      rec.expect(d(pair.base, pair.plus), 1.0,
                 "canonical pair (" + ground.label(a) + "," +
                     ground.label(b) + ")");
    }
  }
}

void check_edit_scaling(const GroundSet& ground, const Metric& d,
                        const AxiomSuiteOptions& opt, Rng& rng, Recorder& rec) {
  const std::size_t n = ground.size();
  std::size_t done = 0;
  // Cyclic additions are skipped; the attempt cap only guards termination.
  for (std::size_t attempt = 0; done < opt.samples && attempt < 20 * opt.samples;
       ++attempt) {
    const AcyclicOrder p = random_acyclic_order(ground, rng, 0.2, 0.5);
    Element a = uniform_index(rng, n);
    Element b = uniform_index(rng, n - 1);
    if (b >= a) ++b;
    if (p.prefers(b, a)) std::swap(a, b);
    const auto pair = canonical_pair_orders(a, b, ground);
    const double unit = d(pair.base, pair.plus);
    const std::size_t N = not_dominated_count(b, p);
    const std::string where = describe(p) + " at (" + ground.label(a) + "," +
                              ground.label(b) + ")";
    if (p.prefers(a, b)) {
      rec.expect(d(p, delete_pair(p, a, b)), std::ldexp(unit, static_cast<int>(N)),
                 "delete in " + where);
    } else {
      try {
        const AcyclicOrder plus = add_pair(p, a, b);
        rec.expect(d(p, plus), std::ldexp(unit, static_cast<int>(N) - 1),
                   "add in " + where);
      } catch (const cycle_error&) {
        continue;
      }
    }
    ++done;
  }
}

void check_strict_part(const GroundSet& ground, const Metric& d,
                       const AxiomSuiteOptions& opt, Rng& rng, Recorder& rec) {
  const std::size_t n = ground.size();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const AcyclicOrder p = random_acyclic_order(ground, rng, 0.3, 0.5);
    // Re-draw the symmetric part on every pair that is not strictly ranked.
    std::vector<Subset> rows(p.relation().rows().begin(),
                             p.relation().rows().end());
    for (Element i = 0; i < n; ++i) {
      for (Element j = i + 1; j < n; ++j) {
        if (p.prefers(i, j) || p.prefers(j, i)) continue;
        const bool tie = uniform_index(rng, 2) == 1;
        rows[i] = tie ? rows[i].with(j) : rows[i].without(j);
        rows[j] = tie ? rows[j].with(i) : rows[j].without(i);
      }
    }
    const AcyclicOrder q(Relation(ground, std::move(rows)));
    rec.expect(d(p, q), 0.0, describe(p) + " vs " + describe(q));
  }
}

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

AxiomReport axiom_suite(const GroundSet& ground, const Metric& metric,
                        const AxiomSuiteOptions& options) {
  if (ground.size() < kAxiomMinElements || ground.size() > kAxiomMaxElements) {
    throw capacity_error("axiom checks need between " +
                         std::to_string(kAxiomMinElements) + " and " +
                         std::to_string(kAxiomMaxElements) + " elements");
  }
  AxiomReport report;
  report.checks[0].name = "axiom-1";
  report.checks[1].name = "axiom-2";
  report.checks[2].name = "axiom-3";
  report.checks[3].name = "axiom-4";
  Rng rng(options.seed);
  {
    Recorder rec(report.checks[0], options.tolerance);
    check_additivity(ground, metric, options, rng, rec);
  }
  {
    Recorder rec(report.checks[1], options.tolerance);
    check_normalization(ground, metric, rec);
  }
  {
    Recorder rec(report.checks[2], options.tolerance);
    check_edit_scaling(ground, metric, options, rng, rec);
  }
  {
    Recorder rec(report.checks[3], options.tolerance);
    check_strict_part(ground, metric, options, rng, rec);
  }
  return report;
}

AxiomReport axiom_suite(const GroundSet& ground, const Measure& mu,
                        const AxiomSuiteOptions& options) {
  return axiom_suite(
      ground,
      [&mu](const AcyclicOrder& p, const AcyclicOrder& q) {
        return dist_fast(p, q, mu);
      },
      options);
}

std::string describe(const AcyclicOrder& p) {
  const GroundSet& g = p.ground();
  std::string out = "{";
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out += ", ";
    out += s;
    first = false;
  };
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      if (p.prefers(a, b)) emit(g.label(a) + ">" + g.label(b));
    }
  }
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = a + 1; b < p.size(); ++b) {
      if (p.indifferent(a, b)) emit(g.label(a) + "~" + g.label(b));
    }
  }
  return out + "}";
}

}  // namespace topdiff
