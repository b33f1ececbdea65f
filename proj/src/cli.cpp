#include "topdiff/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topdiff/axioms.hpp"
#include "topdiff/perturbation.hpp"
#include "topdiff/sampling.hpp"
#include "topdiff/spaces.hpp"

namespace topdiff::cli {

namespace {

using json = nlohmann::json;

// Bad combination of otherwise valid flags.
class usage_error : public error {
 public:
  using error::error;
};

json relation_json(const Relation& r) {
  const GroundSet& g = r.ground();
  const bool reflexive = r.is_reflexive();
  json pairs = json::array();
  for (Element i = 0; i < r.size(); ++i) {
    for (Element j : r.row(i).elements()) {
      if (i == j && reflexive) continue;
      pairs.push_back({g.label(i), g.label(j)});
    }
  }
  return json{{"elements", g.labels()}, {"pairs", pairs}, {"reflexive", reflexive}};
}

Relation relation_from_json(const json& doc) {
  if (!doc.is_object()) throw document_error("relation document must be an object");
  const auto elements = doc.find("elements");
  if (elements == doc.end() || !elements->is_array()) {
    throw document_error("relation document needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : *elements) {
    if (!e.is_string()) throw document_error("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (const auto it = doc.find("pairs"); it != doc.end()) {
    if (!it->is_array()) throw document_error("\"pairs\" must be an array");
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw document_error("each pair must be a two-label array");
      }
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  bool reflexive = true;
  if (const auto it = doc.find("reflexive"); it != doc.end()) {
    if (!it->is_boolean()) throw document_error("\"reflexive\" must be a boolean");
    reflexive = it->get<bool>();
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "elements" && key != "pairs" && key != "reflexive") {
      throw document_error("unknown key \"" + key + "\" in relation document");
    }
  }
  return build_relation(GroundSet(std::move(labels)), pairs, reflexive);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw document_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Relation load_relation(const std::string& path) {
  try {
    return parse_relation(read_file(path));
  } catch (const document_error& e) {
    throw document_error(path + ": " + e.what());
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

AcyclicOrder load_order(const std::string& path, std::ostream& err) {
  const Relation r = load_relation(path);
  try {
    AcyclicOrder p(r);
    if (p.diagonal_inserted()) {
      err << "warning: " << path << ": missing diagonal pairs were added\n";
    }
    return p;
  } catch (const cycle_error& e) {
    throw cycle_error(path + ": " + e.what(), e.cycle());
  }
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) {
    throw input_error("the two relations list different elements");
  }
}

std::optional<Measure> load_measure(const std::string& path,
                                    const GroundSet& ground, std::ostream& err) {
  if (path.empty()) return std::nullopt;
  std::vector<std::string> defaulted;
  Measure mu = [&] {
    try {
      return parse_measure(read_file(path), ground, &defaulted);
    } catch (const document_error& e) {
      throw document_error(path + ": " + e.what());
    } catch (const input_error& e) {
      throw input_error(path + ": " + e.what());
    }
  }();
  for (const auto& label : defaulted) {
    err << "warning: " << path << ": no weight for '" << label << "', using 1\n";
  }
  return mu;
}

// Distances print as exact integers whenever the counting measure is in use.
struct Distance {
  std::optional<std::uint64_t> exact;
  double value = 0.0;

  static Distance of(std::uint64_t v) { return {v, static_cast<double>(v)}; }
  static Distance of(double v) { return {std::nullopt, v}; }

  std::string text() const {
    return exact ? std::to_string(*exact) : format_number(value);
  }
  json to_json() const { return exact ? json(*exact) : json(value); }
};

Distance top_distance(const AcyclicOrder& p, const AcyclicOrder& q,
                      const std::optional<Measure>& mu) {
  if (!mu || mu->is_counting()) return Distance::of(dist_fast(p, q));
  return Distance::of(dist_fast(p, q, *mu));
}

// "4", "2-6" or "2..6".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw usage_error("--n expects K or A-B, got '" + text + "'");
    }
    return v;
  };
  std::string_view s = text;
  std::size_t cut = s.find("..");
  std::size_t skip = 2;
  if (cut == std::string_view::npos) {
    cut = s.find('-');
    skip = 1;
  }
  if (cut == std::string_view::npos) {
    const std::size_t n = number(s);
    return {n, n};
  }
  const std::size_t lo = number(s.substr(0, cut));
  const std::size_t hi = number(s.substr(cut + skip));
  if (lo > hi) throw usage_error("--n range is empty: '" + text + "'");
  return {lo, hi};
}

GroundSet indexed_ground(std::size_t n) {
  if (n == 0) throw usage_error("--n must be at least 1");
  return GroundSet::indexed(n);
}

SpaceKind space_kind(const std::string& name) {
  if (const auto kind = parse_space_kind(name)) return *kind;
  throw usage_error("unknown space '" + name + "'");
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string pair_text(const GroundSet& g, Element a, Element b) {
  return "(" + g.label(a) + "," + g.label(b) + ")";
}

// -- commands ---------------------------------------------------------------

struct DistOptions {
  std::string metric = "top";
  std::string algorithm = "fast";
  std::string mu;
  std::vector<double> weights;
  std::string a;
  std::string b;
  bool json = false;
};

int run_dist(const DistOptions& o, std::ostream& out, std::ostream& err) {
  Distance d;
  if (o.metric == "ksb") {
    if (!o.mu.empty()) throw usage_error("--mu applies only to --metric top");
    const Relation p = load_relation(o.a);
    const Relation q = load_relation(o.b);
    require_same_ground(p.ground(), q.ground());
    d = Distance::of(dist_ksb(p, q));
  } else {
    const AcyclicOrder p = load_order(o.a, err);
    const AcyclicOrder q = load_order(o.b, err);
    require_same_ground(p.ground(), q.ground());
    if (o.metric == "wkendall") {
      if (!o.mu.empty()) throw usage_error("--mu applies only to --metric top");
      const WeightFunction w = o.weights.empty()
                                   ? WeightFunction::top_difference(p.size())
                                   : WeightFunction(o.weights);
      const double v = dist_weighted_kendall(p, q, w);
      d = Distance::of(v);
      if (o.weights.empty()) d.exact = static_cast<std::uint64_t>(v);
    } else {
      const auto mu = load_measure(o.mu, p.ground(), err);
      const bool counting = !mu || mu->is_counting();
      if (o.algorithm == "linear") {
        if (mu) throw usage_error("--algorithm linear supports the counting measure only");
        d = Distance::of(dist_linear(p, q));
      } else if (o.algorithm == "naive") {
        d = counting ? Distance::of(dist_naive(p, q))
                     : Distance::of(dist_naive(p, q, *mu));
      } else {
        d = top_distance(p, q, mu);
      }
    }
  }
  if (o.json) {
    json doc{{"metric", o.metric}, {"distance", d.to_json()}};
    if (o.metric == "top") {
      doc["algorithm"] = o.algorithm;
      doc["measure"] = o.mu.empty() ? json("counting") : json(o.mu);
    }
    print_json(out, doc);
  } else {
    out << d.text() << '\n';
  }
  return kOk;
}

struct TransformOptions {
  std::string a;
  std::string b;
  std::string mu;
  bool json = false;
};

int run_transform(const TransformOptions& o, std::ostream& out, std::ostream& err) {
  const AcyclicOrder p = load_order(o.a, err);
  const AcyclicOrder q = load_order(o.b, err);
  require_same_ground(p.ground(), q.ground());
  const auto mu = load_measure(o.mu, p.ground(), err);
  const GroundSet& g = p.ground();
  const auto chain = transform_chain(p, q);

  const Distance whole = top_distance(p, q, mu);
  json steps = json::array();
  std::uint64_t exact_sum = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& s = chain[i];
    const Distance d = top_distance(s.before, s.after, mu);
    if (d.exact) exact_sum += *d.exact;
    sum += d.value;
    if (o.json) {
      steps.push_back({{"kind", to_string(s.kind)},
                       {"pair", {g.label(s.a), g.label(s.b)}},
                       {"distance", d.to_json()},
                       {"after", relation_json(s.after.relation())}});
    } else {
      out << "step " << i + 1 << ": " << to_string(s.kind) << ' '
          << pair_text(g, s.a, s.b) << "  distance " << d.text() << "  "
          << describe(s.after) << '\n';
    }
  }
  const Distance total = whole.exact ? Distance::of(exact_sum) : Distance::of(sum);
  if (o.json) {
    print_json(out, {{"steps", steps},
                     {"length", chain.size()},
                     {"step_sum", total.to_json()},
                     {"distance", whole.to_json()}});
  } else {
    out << "steps " << chain.size() << ", sum " << total.text() << ", distance "
        << whole.text() << '\n';
  }
  return kOk;
}

int run_closure(const std::string& path, std::ostream& out) {
  out << serialize_relation(transitive_closure(load_relation(path))) << '\n';
  return kOk;
}

struct ExtensionOptions {
  std::string a;
  std::string mu;
  bool verify = false;
  bool json = false;
};

int run_best_extension(const ExtensionOptions& o, std::ostream& out,
                       std::ostream& err) {
  const AcyclicOrder p = load_order(o.a, err);
  const auto mu = load_measure(o.mu, p.ground(), err);
  const Measure m = mu ? *mu : Measure::counting(p.ground());
  const auto best = best_transitive_extension(p, m, o.verify);
  const Distance d = m.is_counting()
                         ? Distance::of(static_cast<std::uint64_t>(best.distance))
                         : Distance::of(best.distance);
  if (o.json) {
    json doc{{"best", relation_json(best.best.relation())},
             {"distance", d.to_json()},
             {"verified", best.verified ? json(*best.verified) : json(nullptr)},
             {"extensions_checked", best.extensions_checked},
             {"rival", best.rival ? relation_json(best.rival->relation()) : json(nullptr)}};
    print_json(out, doc);
  } else {
    out << "best " << describe(best.best) << '\n' << "distance " << d.text() << '\n';
    if (best.verified) {
      out << "verified " << (*best.verified ? "yes" : "no") << " ("
          << best.extensions_checked << " extensions)\n";
      if (best.rival) out << "rival " << describe(*best.rival) << '\n';
    }
  }
  return kOk;
}

struct EnumerateOptions {
  std::string space;
  std::string n;
  bool count = false;
  bool json = false;
};

int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const SpaceKind kind = space_kind(o.space);
  const auto [lo, hi] = parse_range(o.n);
  if (lo != hi) throw usage_error("enumerate takes a single --n");
  const GroundSet g = indexed_ground(lo);
  if (o.count) {
    const std::size_t count = count_space(kind, g);
    if (o.json) {
      print_json(out, {{"space", o.space}, {"n", lo}, {"count", count}});
    } else {
      out << count << '\n';
    }
    return kOk;
  }
  json members = json::array();
  std::size_t count = 0;
  for_each_in_space(kind, g, [&](const AcyclicOrder& p) {
    ++count;
    if (o.json) {
      members.push_back(relation_json(p.relation()));
    } else {
      out << describe(p) << '\n';
    }
  });
  if (o.json) {
    print_json(out, {{"space", o.space}, {"n", lo}, {"count", count}, {"members", members}});
  }
  return kOk;
}

struct DiameterOptions {
  std::string space;
  std::string n;
  std::string mu;
  unsigned workers = 0;
  bool csv = false;
  bool json = false;
};

int run_diameter(const DiameterOptions& o, std::ostream& out, std::ostream& err) {
  const SpaceKind kind = space_kind(o.space);
  const auto [lo, hi] = parse_range(o.n);
  if (o.csv && o.json) throw usage_error("--csv and --json are exclusive");
  if (!o.mu.empty() && lo != hi) {
    throw usage_error("--mu needs a single --n");
  }
  const bool has_formula =
      kind == SpaceKind::linear_orders || kind == SpaceKind::total_preorders;

  struct Row {
    std::size_t n;
    std::size_t count;
    Distance diam;
    std::optional<std::uint64_t> formula;
    std::string first;
    std::string second;
    json witness;
  };
  std::vector<Row> rows;
  for (std::size_t n = lo; n <= hi; ++n) {
    const GroundSet g = indexed_ground(n);
    const auto mu = load_measure(o.mu, g, err);
    const Measure m = mu ? *mu : Measure::counting(g);
    const auto d = diameter(kind, g, m, o.workers);
    Row row{n, d.members, {}, std::nullopt, describe(d.first), describe(d.second),
            json::array({relation_json(d.first.relation()),
                         relation_json(d.second.relation())})};
    if (m.is_counting()) {
      row.diam = Distance::of(static_cast<std::uint64_t>(d.value));
      if (has_formula && n >= 2) row.formula = diameter_formula(kind, n);
    } else {
      row.diam = Distance::of(d.value);
    }
    rows.push_back(std::move(row));
  }

  if (o.csv) {
    out << "n,space,count,diam_enum,diam_formula\n";
    for (const auto& r : rows) {
      out << r.n << ',' << o.space << ',' << r.count << ',' << r.diam.text() << ','
          << (r.formula ? std::to_string(*r.formula) : "") << '\n';
    }
  } else if (o.json) {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"n", r.n},
                     {"space", o.space},
                     {"count", r.count},
                     {"diam_enum", r.diam.to_json()},
                     {"diam_formula", r.formula ? json(*r.formula) : json(nullptr)},
                     {"witness", r.witness}});
    }
    print_json(out, lo == hi ? doc[0] : doc);
  } else {
    out << "n   space            count       diam_enum   diam_formula\n";
    for (const auto& r : rows) {
      std::ostringstream line;
      line << std::left << std::setw(4) << r.n << std::setw(17) << o.space
           << std::setw(12) << r.count << std::setw(12) << r.diam.text()
           << (r.formula ? std::to_string(*r.formula) : "-");
      out << line.str() << '\n';
    }
    for (const auto& r : rows) {
      out << "witness n=" << r.n << ": " << r.first << " vs " << r.second << '\n';
    }
  }
  return kOk;
}

struct CheckOptions {
  std::string suite;
  std::size_t n = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  std::string mu;
  bool json = false;
};

int run_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const GroundSet g = indexed_ground(o.n);
  const auto mu = load_measure(o.mu, g, err);
  const Measure m = mu ? *mu : Measure::counting(g);

  if (o.suite == "axioms") {
    AxiomSuiteOptions opt;
    opt.samples = o.samples;
    opt.seed = o.seed;
    const auto report = axiom_suite(g, m, opt);
    if (o.json) {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"counterexamples", c.counterexamples}});
      }
      print_json(out, {{"suite", "axioms"},
                       {"n", o.n},
                       {"seed", o.seed},
                       {"checks", checks},
                       {"passed", report.all_passed()}});
    } else {
      for (const auto& c : report.checks) {
        out << c.name << ' ' << (c.passed() ? "PASS" : "FAIL") << "  checked "
            << c.checked << "  failed " << c.failed << '\n';
        for (const auto& line : c.counterexamples) out << "  " << line << '\n';
      }
      out << (report.all_passed() ? "all axioms hold" : "some axioms fail") << '\n';
    }
    return kOk;
  }

  // Fast formula against subset enumeration on random pairs.
  if (o.n > kNaiveMaxElements) {
    throw capacity_error("the oracle suite is limited to " +
                         std::to_string(kNaiveMaxElements) + " elements");
  }
  Rng rng(o.seed);
  std::size_t mismatches = 0;
  std::vector<std::string> examples;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const AcyclicOrder p = random_acyclic_order(g, rng, 0.2, 0.5);
    const AcyclicOrder q = random_acyclic_order(g, rng, 0.2, 0.5);
    const double fast = dist_fast(p, q, m);
    const double naive = dist_naive(p, q, m);
    if (std::abs(fast - naive) > 1e-9 * std::max(1.0, std::abs(naive))) {
      ++mismatches;
      if (examples.size() < kMaxCounterexamples) {
        examples.push_back(describe(p) + " vs " + describe(q) + ": fast " +
                           format_number(fast) + ", naive " + format_number(naive));
      }
    }
  }
  if (o.json) {
    print_json(out, {{"suite", "oracle"},
                     {"n", o.n},
                     {"seed", o.seed},
                     {"checked", o.samples},
                     {"mismatches", mismatches},
                     {"counterexamples", examples},
                     {"passed", mismatches == 0}});
  } else {
    out << "oracle " << (mismatches == 0 ? "PASS" : "FAIL") << "  checked "
        << o.samples << "  mismatches " << mismatches << '\n';
    for (const auto& line : examples) out << "  " << line << '\n';
  }
  return kOk;
}

}  // namespace

Relation parse_relation(std::string_view text) {
  return relation_from_json(parse_json(text));
}

std::string serialize_relation(const Relation& r) { return relation_json(r).dump(); }

Measure parse_measure(std::string_view text, const GroundSet& ground,
                      std::vector<std::string>* defaulted) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw document_error("measure document must be an object");
  std::map<std::string, double> weights;
  for (const auto& [label, value] : doc.items()) {
    if (!value.is_number()) {
      throw document_error("weight of '" + label + "' must be a number");
    }
    weights[label] = value.get<double>();
  }
  return Measure::from_labels(ground, weights, defaulted);
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Top-difference distances between preference relations", "topdiff"};
  app.require_subcommand(1);

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two relations");
  dist_cmd->add_option("--metric", dist.metric, "top, ksb or wkendall")
      ->check(CLI::IsMember({"top", "ksb", "wkendall"}));
  dist_cmd->add_option("--algorithm", dist.algorithm, "fast, naive or linear (metric top)")
      ->check(CLI::IsMember({"fast", "naive", "linear"}));
  dist_cmd->add_option("--mu", dist.mu, "Measure file (default: counting measure)");
  dist_cmd->add_option("--weights", dist.weights,
                       "Transposition weights, top position first (metric wkendall)")
      ->delimiter(',');
  dist_cmd->add_option("A", dist.a, "First relation file")->required();
  dist_cmd->add_option("B", dist.b, "Second relation file")->required();
  dist_cmd->add_flag("--json", dist.json, "Structured output");

  TransformOptions transform;
  auto* transform_cmd =
      app.add_subcommand("transform", "Chain of one-step edits from A to B");
  transform_cmd->add_option("A", transform.a)->required();
  transform_cmd->add_option("B", transform.b)->required();
  transform_cmd->add_option("--mu", transform.mu, "Measure file");
  transform_cmd->add_flag("--json", transform.json, "Structured output");

  std::string closure_path;
  bool closure_json = false;
  auto* closure_cmd = app.add_subcommand("closure", "Transitive closure of a relation");
  closure_cmd->add_option("A", closure_path)->required();
  closure_cmd->add_flag("--json", closure_json, "Accepted for symmetry; output is always JSON");

  ExtensionOptions ext;
  auto* ext_cmd = app.add_subcommand("best-extension",
                                     "Closest transitive extension of an antisymmetric order");
  ext_cmd->add_option("A", ext.a)->required();
  ext_cmd->add_option("--mu", ext.mu, "Measure file");
  ext_cmd->add_flag("--verify", ext.verify, "Compare against every extension (n <= 5)");
  ext_cmd->add_flag("--json", ext.json, "Structured output");

  EnumerateOptions en;
  auto* en_cmd = app.add_subcommand("enumerate", "List the members of a space");
  en_cmd->add_option("--space", en.space, "linear-orders, total-preorders, partial-orders, "
                                          "preorders or antisym-acyclic")
      ->required();
  en_cmd->add_option("--n", en.n, "Number of elements")->required();
  en_cmd->add_flag("--count", en.count, "Print only the number of members");
  en_cmd->add_flag("--json", en.json, "Structured output");

  DiameterOptions dia;
  auto* dia_cmd = app.add_subcommand("diameter", "Largest distance within a space");
  dia_cmd->add_option("--space", dia.space)->required();
  dia_cmd->add_option("--n", dia.n, "K or a range A-B")->required();
  dia_cmd->add_option("--mu", dia.mu, "Measure file (single n only)");
  dia_cmd->add_option("--workers", dia.workers, "Threads (0: one per core)");
  dia_cmd->add_flag("--csv", dia.csv, "CSV output");
  dia_cmd->add_flag("--json", dia.json, "Structured output");

  CheckOptions chk;
  auto* chk_cmd = app.add_subcommand("check", "Randomized self-checks");
  chk_cmd->add_option("--suite", chk.suite, "axioms or oracle")
      ->required()
      ->check(CLI::IsMember({"axioms", "oracle"}));
  chk_cmd->add_option("--n", chk.n, "Number of elements")->required();
  chk_cmd->add_option("--seed", chk.seed, "Random seed");
  chk_cmd->add_option("--samples", chk.samples, "Samples per check");
  chk_cmd->add_option("--mu", chk.mu, "Measure file");
  chk_cmd->add_flag("--json", chk.json, "Structured output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (dist_cmd->parsed()) return run_dist(dist, out, err);
    if (transform_cmd->parsed()) return run_transform(transform, out, err);
    if (closure_cmd->parsed()) return run_closure(closure_path, out);
    if (ext_cmd->parsed()) return run_best_extension(ext, out, err);
    if (en_cmd->parsed()) return run_enumerate(en, out);
    if (dia_cmd->parsed()) return run_diameter(dia, out, err);
    if (chk_cmd->parsed()) return run_check(chk, out, err);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const document_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace topdiff::cli
