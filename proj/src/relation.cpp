#include "topdiff/relation.hpp"

#include <algorithm>
#include <unordered_set>

namespace topdiff {

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw input_error("ground set must contain at least one element");
  }
  if (labels.size() > kMaxElements) {
    throw capacity_error("ground set has " + std::to_string(labels.size()) +
                         " elements; at most " +
                         std::to_string(kMaxElements) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw input_error("element labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      throw input_error("duplicate element label '" + label + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels)});
}

GroundSet GroundSet::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

std::optional<Element> GroundSet::find(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - labels.begin());
}

Element GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) {
    return *i;
  }
  throw input_error("unknown element '" + std::string(label) + "'");
}

void GroundSet::check_element(Element i) const {
  if (i >= size()) {
    throw input_error("element index " + std::to_string(i) +
                      " is outside a ground set of size " +
                      std::to_string(size()));
  }
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (Element i : s.elements()) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  }
  out += '}';
  return out;
}

bool GroundSet::operator==(const GroundSet& other) const noexcept {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

// -- Relation ---------------------------------------------------------------

Relation::Relation(GroundSet ground)
    : ground_(std::move(ground)), rows_(ground_.size()) {}

Relation::Relation(GroundSet ground, std::vector<Subset> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  if (rows_.size() != ground_.size()) {
    throw input_error("adjacency has " + std::to_string(rows_.size()) +
                      " rows for a ground set of size " +
                      std::to_string(ground_.size()));
  }
  const Subset all = ground_.all();
  for (Subset r : rows_) {
    if (!r.is_subset_of(all)) {
      throw input_error("adjacency row references an element outside the ground set");
    }
  }
}

Relation Relation::diagonal(const GroundSet& ground) {
  std::vector<Subset> rows(ground.size());
  for (Element i = 0; i < rows.size(); ++i) rows[i] = Subset::singleton(i);
  return Relation(ground, std::move(rows));
}

Relation Relation::full(const GroundSet& ground) {
  return Relation(ground, std::vector<Subset>(ground.size(), ground.all()));
}

Subset Relation::column(Element j) const {
  Subset col;
  for (Element i = 0; i < rows_.size(); ++i) {
    if (rows_[i].contains(j)) col = col.with(i);
  }
  return col;
}

Relation Relation::with_pair(Element i, Element j) const {
  ground_.check_element(i);
  ground_.check_element(j);
  Relation out = *this;
  out.rows_[i] = out.rows_[i].with(j);
  return out;
}

Relation Relation::without_pair(Element i, Element j) const {
  ground_.check_element(i);
  ground_.check_element(j);
  Relation out = *this;
  out.rows_[i] = out.rows_[i].without(j);
  return out;
}

Relation Relation::with_diagonal() const {
  Relation out = *this;
  for (Element i = 0; i < rows_.size(); ++i) {
    out.rows_[i] = out.rows_[i].with(i);
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t count = 0;
  for (Subset r : rows_) count += r.size();
  return count;
}

bool Relation::is_reflexive() const {
  for (Element i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].contains(i)) return false;
  }
  return true;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (!(ground_ == other.ground_)) return false;
  for (Element i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  }
  return true;
}

Relation Relation::strict_part() const {
  std::vector<Subset> rows(rows_.size());
  for (Element i = 0; i < rows_.size(); ++i) {
    for (Element j : rows_[i].elements()) {
      if (!rows_[j].contains(i)) rows[i] = rows[i].with(j);
    }
  }
  return Relation(ground_, std::move(rows));
}

Relation Relation::symmetric_part() const {
  std::vector<Subset> rows(rows_.size());
  for (Element i = 0; i < rows_.size(); ++i) {
    for (Element j : rows_[i].elements()) {
      if (rows_[j].contains(i)) rows[i] = rows[i].with(j);
    }
  }
  return Relation(ground_, std::move(rows));
}

bool Relation::operator==(const Relation& other) const {
  return rows_ == other.rows_ && ground_ == other.ground_;
}

// -- AcyclicOrder -----------------------------------------------------------

AcyclicOrder::AcyclicOrder(Relation rel) : rel_(std::move(rel)) {
  if (!rel_.is_reflexive()) {
    rel_ = rel_.with_diagonal();
    diagonal_inserted_ = true;
  }
  if (auto cycle = find_strict_cycle(rel_)) {
    std::string what =
        "relation is not acyclic: " + format_cycle(rel_.ground(), *cycle);
    throw cycle_error(what, std::move(*cycle));
  }
  const std::size_t n = rel_.size();
  strict_up_.assign(n, Subset{});
  for (Element a = 0; a < n; ++a) {
    for (Element b : rel_.row(a).elements()) {
      if (!rel_.holds(b, a)) strict_up_[b] = strict_up_[b].with(a);
    }
  }
}

AcyclicOrder AcyclicOrder::diagonal(const GroundSet& ground) {
  return AcyclicOrder(Relation::diagonal(ground));
}

Subset AcyclicOrder::strict_lower(Element x) const {
  Subset lower;
  for (Element a = 0; a < strict_up_.size(); ++a) {
    if (strict_up_[a].contains(x)) lower = lower.with(a);
  }
  return lower;
}

std::size_t AcyclicOrder::strict_pair_count() const {
  std::size_t count = 0;
  for (Subset up : strict_up_) count += up.size();
  return count;
}

// -- Free functions ---------------------------------------------------------

Relation build_relation(
    const GroundSet& ground,
    std::span<const std::pair<std::string, std::string>> pairs,
    bool make_reflexive) {
  Relation r = make_reflexive ? Relation::diagonal(ground) : Relation(ground);
  std::vector<Subset> rows(r.rows().begin(), r.rows().end());
  for (const auto& [left, right] : pairs) {
    const Element i = ground.index_of(left);
    const Element j = ground.index_of(right);
    rows[i] = rows[i].with(j);
  }
  return Relation(ground, std::move(rows));
}

Classification classify(const Relation& r) {
  const std::size_t n = r.size();
  Classification c;
  c.reflexive = r.is_reflexive();

  c.transitive = true;
  for (Element x = 0; x < n && c.transitive; ++x) {
    for (Element y : r.row(x).elements()) {
      if (!r.row(y).is_subset_of(r.row(x))) {
        c.transitive = false;
        break;
      }
    }
  }

  c.antisymmetric = true;
  c.total = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      const bool xy = r.holds(x, y);
      const bool yx = r.holds(y, x);
      if (xy && yx) c.antisymmetric = false;
      if (!xy && !yx) c.total = false;
    }
  }
  // Totality also requires x R x.
  c.total = c.total && c.reflexive;

  c.acyclic = !find_strict_cycle(r).has_value();
  c.preorder = c.reflexive && c.transitive;
  c.partial_order = c.preorder && c.antisymmetric;
  c.linear_order = c.partial_order && c.total;
  c.total_preorder = c.preorder && c.total;
  return c;
}

Decomposition decompose(const Relation& r) {
  Decomposition d{r.strict_part(), r.symmetric_part(), {}};
  const std::size_t n = r.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!r.holds(x, y) && !r.holds(y, x)) d.incomparable.emplace_back(x, y);
    }
  }
  return d;
}

std::optional<std::vector<Element>> find_strict_cycle(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<Subset> succ(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y : r.row(x).elements()) {
      if (!r.holds(y, x)) succ[x] = succ[x].with(y);
    }
  }

  enum class Mark { unvisited, active, done };
  std::vector<Mark> mark(n, Mark::unvisited);
  std::vector<Element> path;
  // Iterative DFS: each frame is (node, successors still to visit).
  std::vector<std::pair<Element, Subset>> stack;

  for (Element root = 0; root < n; ++root) {
    if (mark[root] != Mark::unvisited) continue;
    stack.emplace_back(root, succ[root]);
    mark[root] = Mark::active;
    path.push_back(root);
    while (!stack.empty()) {
      auto& [node, pending] = stack.back();
      if (pending.empty()) {
        mark[node] = Mark::done;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      const Element next = pending.elements().front();
      pending = pending.without(next);
      if (mark[next] == Mark::active) {
        auto start = std::find(path.begin(), path.end(), next);
        std::vector<Element> cycle(start, path.end());
        std::rotate(cycle.begin(),
                    std::min_element(cycle.begin(), cycle.end()), cycle.end());
        return cycle;
      }
      if (mark[next] == Mark::unvisited) {
        mark[next] = Mark::active;
        path.push_back(next);
        stack.emplace_back(next, succ[next]);
      }
    }
  }
  return std::nullopt;
}

std::string format_cycle(const GroundSet& ground,
                         std::span<const Element> cycle) {
  std::string out;
  for (Element z : cycle) {
    out += ground.label(z);
    out += " -> ";
  }
  if (!cycle.empty()) out += ground.label(cycle.front());
  return out;
}

Subset maximal_set(Subset s, const Relation& r) {
  Subset out;
  for (Element x : s.elements()) {
    bool dominated = false;
    for (Element y : s.elements()) {
      if (r.strictly(y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out = out.with(x);
  }
  return out;
}

Subset maximal_set(Subset s, const AcyclicOrder& p) {
  Subset out;
  for (Element x : s.elements()) {
    if ((p.strict_upper(x) & s).empty()) out = out.with(x);
  }
  return out;
}

Subset maximum_set(Subset s, const Relation& r) {
  Subset out;
  for (Element x : s.elements()) {
    if (s.is_subset_of(r.row(x))) out = out.with(x);
  }
  return out;
}

Relation transitive_closure(const Relation& r) {
  // Warshall on bit rows.
  const std::size_t n = r.size();
  std::vector<Subset> rows(r.rows().begin(), r.rows().end());
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (rows[i].contains(k)) rows[i] = rows[i] | rows[k];
    }
  }
  return Relation(r.ground(), std::move(rows));
}

IndifferencePart indifference_part(const AcyclicOrder& p) {
  if (!classify(p.relation()).preorder) {
    throw validation_error("indifference part requires a preorder");
  }
  const std::size_t n = p.size();
  std::vector<Subset> lower(n);
  for (Element x = 0; x < n; ++x) lower[x] = p.strict_lower(x);

  std::vector<Subset> rows(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lower[x] == lower[y] && p.strict_upper(x) == p.strict_upper(y)) {
        rows[x] = rows[x].with(y);
      }
    }
  }
  IndifferencePart out{Relation(p.ground(), std::move(rows)), false};
  out.regular = out.ind == p.relation().symmetric_part();
  return out;
}

std::size_t not_dominated_count(Element b, const AcyclicOrder& p) {
  p.ground().check_element(b);
  return p.size() - 1 - p.strict_upper(b).size();
}

PrincipalSets principal_sets(Element x, const Relation& r) {
  r.ground().check_element(x);
  return {r.column(x), r.row(x)};
}

}  // namespace topdiff
