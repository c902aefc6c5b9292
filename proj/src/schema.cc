#include "turingol/schema.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "json.hpp"

namespace turingol {

// ---------------------------------------------------------------- RegexSpec

RegexSpec RegexSpec::literal(Word w) {
  RegexSpec r;
  r.kind_ = Kind::literal;
  r.words_ = {std::move(w)};
  return r;
}

RegexSpec RegexSpec::alternation(std::vector<Word> words) {
  if (words.empty()) throw SchemaError("alternation needs at least one word");
  std::set<Word> seen;
  for (const Word& w : words)
    if (!seen.insert(w).second) throw SchemaError("alternation repeats '" + w.str() + "'");
  RegexSpec r;
  r.kind_ = Kind::alternation;
  r.words_ = std::move(words);
  return r;
}

RegexSpec RegexSpec::lower_word() {
  RegexSpec r;
  r.kind_ = Kind::lower_word;
  return r;
}

bool RegexSpec::matches(std::string_view word) const {
  switch (kind_) {
    case Kind::literal:
    case Kind::alternation:
      return std::any_of(words_.begin(), words_.end(), [&](const Word& w) { return w == word; });
    case Kind::lower_word:
      return is_lower_word(word);
  }
  return false;
}

bool RegexSpec::overlaps(const RegexSpec& other) const {
  if (kind_ == Kind::lower_word && other.kind_ == Kind::lower_word) return true;
  // At least one side is a finite set: test its members against the other.
  const RegexSpec& finite = kind_ == Kind::lower_word ? other : *this;
  const RegexSpec& rest = kind_ == Kind::lower_word ? *this : other;
  return std::any_of(finite.words_.begin(), finite.words_.end(),
                     [&](const Word& w) { return rest.matches(w.str()); });
}

std::string RegexSpec::to_ebnf() const {
  switch (kind_) {
    case Kind::literal:
      return "'" + words_.front().str() + "'";
    case Kind::alternation: {
      std::string s = "(";
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) s += " | ";
        s += "'" + words_[i].str() + "'";
      }
      return s + ")";
    }
    case Kind::lower_word:
      return "[a-z]+";
  }
  return {};
}

bool is_schema_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); });
}

std::string_view to_string(SchemaNodeClass c) {
  switch (c) {
    case SchemaNodeClass::atomic: return "A";
    case SchemaNodeClass::or_node: return "OR";
    case SchemaNodeClass::and_node: return "AND";
    case SchemaNodeClass::mixed: return "mixed";
  }
  return "?";
}

// ------------------------------------------------------------------- Schema

Schema& Schema::add_node(std::string name, RegexSpec label, std::optional<int> order) {
  nodes_.push_back({std::move(name), std::move(label), order});
  return *this;
}

Schema& Schema::add_and(std::string from, RegexSpec label, std::string to, bool optional,
                        std::optional<int> order, bool suffix) {
  arrows_.push_back({std::move(from), std::move(to), ArrowVariant::and_arrow, std::move(label),
                     optional, order, suffix});
  return *this;
}

Schema& Schema::add_or(std::string from, std::string to) {
  arrows_.push_back({std::move(from), std::move(to), ArrowVariant::or_arrow,
                     RegexSpec::literal(Word{}), false, std::nullopt, false});
  return *this;
}

const SchemaNode* Schema::find(std::string_view name) const {
  for (const SchemaNode& n : nodes_)
    if (n.name == name) return &n;
  return nullptr;
}

const SchemaNode& Schema::node(std::string_view name) const {
  if (const SchemaNode* n = find(name)) return *n;
  throw SchemaError("schema has no node named " + std::string(name));
}

std::vector<std::size_t> Schema::outgoing(std::string_view name) const {
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].from == name) result.push_back(i);
  return result;
}

std::vector<std::size_t> Schema::and_arrows(std::string_view name) const {
  std::vector<std::size_t> result;
  for (std::size_t i : outgoing(name))
    if (arrows_[i].is_and()) result.push_back(i);
  return result;
}

std::vector<std::size_t> Schema::or_arrows(std::string_view name) const {
  std::vector<std::size_t> result;
  for (std::size_t i : outgoing(name))
    if (!arrows_[i].is_and()) result.push_back(i);
  return result;
}

SchemaNodeClass Schema::classify(std::string_view name) const {
  bool has_and = !and_arrows(name).empty();
  bool has_or = !or_arrows(name).empty();
  if (has_and && has_or) return SchemaNodeClass::mixed;
  if (has_and) return SchemaNodeClass::and_node;
  if (has_or) return SchemaNodeClass::or_node;
  return SchemaNodeClass::atomic;
}

// --------------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

json regex_to_json(const RegexSpec& r) {
  switch (r.kind()) {
    case RegexSpec::Kind::literal:
      return {{"literal", r.words().front().str()}};
    case RegexSpec::Kind::alternation: {
      json words = json::array();
      for (const Word& w : r.words()) words.push_back(w.str());
      return {{"alternation", words}};
    }
    case RegexSpec::Kind::lower_word:
      return {{"lower_word", true}};
  }
  return {};
}

RegexSpec regex_from_json(const json& j) {
  if (j.contains("literal")) return RegexSpec::literal(Word(j.at("literal").get<std::string>()));
  if (j.contains("alternation")) {
    std::vector<Word> words;
    for (const auto& w : j.at("alternation")) words.emplace_back(w.get<std::string>());
    return RegexSpec::alternation(std::move(words));
  }
  if (j.contains("lower_word")) return RegexSpec::lower_word();
  throw SchemaError("unrecognized label spec " + j.dump());
}

}  // namespace

std::string schema_to_json(const Schema& s) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const SchemaNode& n : s.nodes()) {
    nlohmann::ordered_json node{{"name", n.name}, {"label", regex_to_json(n.label)}};
    if (n.order) node["order"] = *n.order;
    doc["nodes"].push_back(node);
  }
  for (const SchemaArrow& a : s.arrows()) {
    nlohmann::ordered_json arrow{{"from", a.from}, {"to", a.to}};
    if (a.is_and()) {
      arrow["variant"] = "and";
      arrow["label"] = regex_to_json(a.label);
      arrow["optional"] = a.optional;
      if (a.order) arrow["order"] = *a.order;
      arrow["suffix"] = a.suffix;
    } else {
      arrow["variant"] = "or";
    }
    doc["arrows"].push_back(arrow);
  }
  return doc.dump(2);
}

Schema schema_from_json(const std::string& text) {
  Schema s;
  try {
    auto doc = json::parse(text);
    for (const auto& n : doc.at("nodes")) {
      std::optional<int> order;
      if (n.contains("order")) order = n.at("order").get<int>();
      s.add_node(n.at("name").get<std::string>(), regex_from_json(n.at("label")), order);
    }
    for (const auto& a : doc.at("arrows")) {
      auto variant = a.at("variant").get<std::string>();
      if (variant == "or") {
        s.add_or(a.at("from").get<std::string>(), a.at("to").get<std::string>());
      } else if (variant == "and") {
        std::optional<int> order;
        if (a.contains("order")) order = a.at("order").get<int>();
        s.add_and(a.at("from").get<std::string>(), regex_from_json(a.at("label")),
                  a.at("to").get<std::string>(), a.value("optional", false), order,
                  a.value("suffix", false));
      } else {
        throw SchemaError("arrow variant must be \"and\" or \"or\"");
      }
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema JSON: ") + e.what());
  } catch (const InvalidWord& e) {
    throw SchemaError(std::string("schema JSON: ") + e.what());
  }
  return s;
}

// --------------------------------------------------------------- validation

namespace {

/// Adjacency over node indices, restricted by an arrow predicate.
template <class Pred>
std::vector<std::vector<std::size_t>> adjacency(const Schema& s, Pred keep) {
  std::vector<std::vector<std::size_t>> adj(s.nodes().size());
  auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < s.nodes().size(); ++i)
      if (s.nodes()[i].name == name) return i;
    return std::nullopt;
  };
  for (const SchemaArrow& a : s.arrows()) {
    if (!keep(a)) continue;
    auto from = index_of(a.from), to = index_of(a.to);
    if (from && to) adj[*from].push_back(*to);
  }
  return adj;
}

/// Strongly connected components that contain a cycle (size > 1 or a loop).
std::vector<std::vector<std::size_t>> cyclic_components(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> result;
  int counter = 0;

  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      bool loop = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (comp.size() > 1 || loop) {
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) connect(v);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

SchemaValidation validate(const Schema& s) {
  SchemaValidation v;
  using Code = SchemaDiagnostic::Code;
  std::set<std::string> seen;
  for (const SchemaNode& n : s.nodes()) {
    if (!is_schema_name(n.name))
      v.errors.push_back({Code::bad_name, {n.name}, "schema name must be uppercase letters/digits"});
    if (!seen.insert(n.name).second)
      v.errors.push_back({Code::duplicate_name, {n.name}, "schema name used twice"});
  }
  for (const SchemaArrow& a : s.arrows()) {
    for (const std::string* end : {&a.from, &a.to})
      if (!s.find(*end))
        v.errors.push_back({Code::unknown_node, {*end}, "arrow refers to an unknown node"});
  }
  std::set<std::pair<std::string, std::string>> or_pairs;
  for (const SchemaArrow& a : s.arrows()) {
    if (a.is_and()) continue;
    if (!or_pairs.insert({a.from, a.to}).second)
      v.errors.push_back({Code::parallel_or, {a.from, a.to}, "parallel OR arrows"});
  }
  for (const SchemaNode& n : s.nodes()) {
    v.classes[n.name] = s.classify(n.name);
    if (!s.or_arrows(n.name).empty() && !(n.label == RegexSpec::literal(Word{})))
      v.errors.push_back({Code::labeled_or_node, {n.name},
                          "label of a node with outgoing OR arrows is never used"});
  }
  auto mandatory = adjacency(s, [](const SchemaArrow& a) { return a.is_and() && !a.optional; });
  for (const auto& comp : cyclic_components(mandatory)) {
    std::vector<std::string> names;
    for (std::size_t i : comp) names.push_back(s.nodes()[i].name);
    v.errors.push_back({Code::mandatory_and_loop, names,
                        "mandatory AND cycle: the building process never ends, so this part "
                        "is useless for finite trees"});
  }
  return v;
}

std::vector<AndConflict> check_and_condition(const Schema& s) {
  std::vector<AndConflict> conflicts;
  for (const SchemaNode& n : s.nodes()) {
    auto ids = s.and_arrows(n.name);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (s.arrows()[ids[i]].label.overlaps(s.arrows()[ids[j]].label))
          conflicts.push_back({n.name, ids[i], ids[j]});
  }
  return conflicts;
}

// ------------------------------------------------------------------- cycles

std::string SchemaCycle::to_string() const {
  std::string s;
  for (const std::string& n : nodes) s += n + "-";
  return s + (nodes.empty() ? std::string() : nodes.front());
}

namespace {

/// Elementary cycles using at least one OR arrow among nodes accepted by
/// `keep_node`. Each cycle is found once, from its smallest node index.
std::vector<SchemaCycle> cycles_with_or(const Schema& s,
                                        const std::function<bool(std::size_t)>& keep_node) {
  const auto& nodes = s.nodes();
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].name == name) return i;
    return nodes.size();
  };
  struct Edge {
    std::size_t to;
    bool is_or;
  };
  std::vector<std::vector<Edge>> adj(nodes.size());
  for (const SchemaArrow& a : s.arrows()) {
    std::size_t f = index_of(a.from), t = index_of(a.to);
    if (f < nodes.size() && t < nodes.size() && keep_node(f) && keep_node(t))
      adj[f].push_back({t, !a.is_and()});
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(nodes.size(), false);
  std::function<void(std::size_t, std::size_t, bool)> dfs = [&](std::size_t start, std::size_t v,
                                                                 bool has_or) {
    for (const Edge& e : adj[v]) {
      if (e.to == start) {
        if (has_or || e.is_or) found.insert(path);
      } else if (e.to > start && !on_path[e.to]) {
        on_path[e.to] = true;
        path.push_back(e.to);
        dfs(start, e.to, has_or || e.is_or);
        path.pop_back();
        on_path[e.to] = false;
      }
    }
  };
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (!keep_node(start)) continue;
    path = {start};
    on_path[start] = true;
    dfs(start, start, false);
    on_path[start] = false;
  }

  std::vector<SchemaCycle> result;
  for (const auto& cyc : found) {
    // Rotate to the first AND node (smallest index), the way cycles are named.
    std::size_t pivot = 0;
    std::size_t best = nodes.size();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (s.classify(nodes[cyc[i]].name) == SchemaNodeClass::and_node && cyc[i] < best) {
        best = cyc[i];
        pivot = i;
      }
    }
    SchemaCycle c;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      c.nodes.push_back(nodes[cyc[(pivot + i) % cyc.size()]].name);
    result.push_back(std::move(c));
  }
  return result;
}

}  // namespace

std::vector<SchemaCycle> or_cycles(const Schema& s) {
  return cycles_with_or(s, [](std::size_t) { return true; });
}

std::vector<SchemaCycle> check_and_cycle_condition(const Schema& s) {
  return cycles_with_or(s, [&](std::size_t i) {
    return s.classify(s.nodes()[i].name) != SchemaNodeClass::and_node;
  });
}

// -------------------------------------------------------- pair propagation

PairPropagation propagate_pairs(const Schema& s) {
  auto offending = check_and_cycle_condition(s);
  if (!offending.empty())
    throw SchemaError("AND-cycle condition fails on " + offending.front().to_string() +
                      "; pair propagation would not terminate");

  PairPropagation result;
  for (const SchemaNode& n : s.nodes()) {
    auto c = s.classify(n.name);
    if (c == SchemaNodeClass::and_node || c == SchemaNodeClass::atomic) result.settled[n.name];
  }

  for (std::size_t idx = 0; idx < s.arrows().size(); ++idx) {
    const SchemaArrow& arrow = s.arrows()[idx];
    if (!arrow.is_and()) continue;
    LabelPair pair{arrow.from, idx, arrow.label};
    std::set<std::string> visited{arrow.from};
    std::deque<std::string> frontier{arrow.from};
    while (!frontier.empty()) {
      std::string at = frontier.front();
      frontier.pop_front();
      auto ors = s.or_arrows(at);
      if (ors.empty()) {
        auto& bucket = result.settled[at];
        bool present = std::any_of(bucket.begin(), bucket.end(),
                                   [&](const LabelPair& p) { return p.arrow == idx; });
        if (!present) bucket.push_back(pair);
        continue;
      }
      for (std::size_t o : ors) {
        const std::string& next = s.arrows()[o].to;
        if (visited.insert(next).second) frontier.push_back(next);
      }
    }
  }

  for (auto& [name, pairs] : result.settled) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        if (pairs[i].label.overlaps(pairs[j].label))
          result.conflicts.push_back({name, pairs[i], pairs[j]});
  }
  return result;
}

// ----------------------------------------------------------------- building

std::string Setr::display(NodeId n) const {
  if (auto it = auxiliary.find(n); it != auxiliary.end()) return it->second;
  return graph.label(n).str();
}

WordSource placeholder_words() {
  return [](const RegexSpec& r, std::string_view) -> Word {
    if (r.kind() == RegexSpec::Kind::lower_word) return Word("x");
    return r.words().front();
  };
}

WordSource pool_words(std::vector<Word> pool, std::mt19937_64& rng) {
  if (pool.empty()) throw SchemaError("word pool is empty");
  return [pool = std::move(pool), &rng](const RegexSpec& r, std::string_view) -> Word {
    switch (r.kind()) {
      case RegexSpec::Kind::literal:
        return r.words().front();
      case RegexSpec::Kind::alternation: {
        std::uniform_int_distribution<std::size_t> pick(0, r.words().size() - 1);
        return r.words()[pick(rng)];
      }
      case RegexSpec::Kind::lower_word: {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        return pool[pick(rng)];
      }
    }
    return Word{};
  };
}

namespace {

/// Applies schema node `name` to tree node `n`: draws the selected AND
/// arrows to fresh auxiliary children, then either hands the node to an OR
/// target (returned) or labels it.
std::optional<std::string> expand_once(const Schema& s, Setr& tree, NodeId n,
                                       const std::string& name,
                                       const std::vector<std::size_t>& chosen_and,
                                       std::optional<std::size_t> or_arrow,
                                       const WordSource& words, std::vector<NodeId>* created) {
  const SchemaNode& node = s.node(name);
  tree.lineage[n].push_back(name);
  for (std::size_t idx : chosen_and) {
    const SchemaArrow& a = s.arrows()[idx];
    NodeId child = tree.graph.add_node(Word{});
    tree.auxiliary[child] = a.to;
    tree.lineage[child];
    ArrowId arrow = tree.graph.add_arrow(n, words(a.label, name), child, ArrowKind::syntactic);
    tree.arrow_origin[{n, idx}] = arrow;
    if (created) created->push_back(child);
  }
  if (or_arrow) {
    const std::string& target = s.arrows()[*or_arrow].to;
    tree.auxiliary[n] = target;
    return target;
  }
  tree.auxiliary.erase(n);
  tree.graph.relabel(n, words(node.label, name));
  return std::nullopt;
}

constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max() / 4;

/// Fewest tree nodes needed to close an auxiliary node of each schema node.
std::map<std::string, std::size_t> closing_costs(const Schema& s) {
  std::map<std::string, std::size_t> cost;
  for (const SchemaNode& n : s.nodes()) cost[n.name] = kInfinite;
  for (std::size_t round = 0; round <= s.nodes().size(); ++round) {
    bool changed = false;
    for (const SchemaNode& n : s.nodes()) {
      std::size_t base = 1;
      auto ors = s.or_arrows(n.name);
      if (!ors.empty()) {
        base = kInfinite;
        for (std::size_t o : ors) base = std::min(base, cost[s.arrows()[o].to]);
      }
      std::size_t total = base;
      for (std::size_t a : s.and_arrows(n.name))
        if (!s.arrows()[a].optional) total = std::min(kInfinite, total + cost[s.arrows()[a].to]);
      if (total < cost[n.name]) {
        cost[n.name] = total;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return cost;
}

}  // namespace

std::vector<Setr> expansions(const Schema& s, std::string_view name, const WordSource& words) {
  const std::string key(name);
  s.node(key);
  std::vector<std::size_t> mandatory, optional;
  for (std::size_t a : s.and_arrows(key))
    (s.arrows()[a].optional ? optional : mandatory).push_back(a);
  auto ors = s.or_arrows(key);
  if (optional.size() >= 20) throw SchemaError("too many optional arrows to enumerate");

  std::vector<Setr> result;
  for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask) {
    std::vector<std::size_t> chosen = mandatory;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (mask & (std::size_t{1} << b)) chosen.push_back(optional[b]);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::optional<std::size_t>> choices;
    if (ors.empty()) choices.push_back(std::nullopt);
    for (std::size_t o : ors) choices.push_back(o);
    for (const auto& choice : choices) {
      Setr tree;
      tree.root = tree.graph.add_node(Word{});
      expand_once(s, tree, tree.root, key, chosen, choice, words, nullptr);
      result.push_back(std::move(tree));
    }
  }
  return result;
}

Setr generate_sytr(const Schema& s, std::string_view root_name, std::mt19937_64& rng,
                   const WordSource& words, GenerationOptions options) {
  if (!check_and_cycle_condition(s).empty())
    throw SchemaError("schema violates the AND-cycle condition");
  const auto cost = closing_costs(s);
  std::bernoulli_distribution take_optional(options.optional_probability);

  Setr tree;
  tree.root = tree.graph.add_node(Word{});
  tree.auxiliary[tree.root] = std::string(root_name);
  tree.lineage[tree.root];
  s.node(root_name);

  std::deque<NodeId> pending{tree.root};
  while (!pending.empty()) {
    NodeId n = pending.front();
    pending.pop_front();
    std::optional<std::string> name = tree.auxiliary.at(n);
    while (name) {
      if (tree.lineage[n].size() > s.nodes().size())
        throw SchemaError("OR arrows loop without an AND node");
      const bool closing = tree.graph.node_count() * 2 >= options.node_budget;
      std::vector<std::size_t> chosen;
      for (std::size_t a : s.and_arrows(*name))
        if (!s.arrows()[a].optional || (!closing && take_optional(rng))) chosen.push_back(a);
      std::optional<std::size_t> or_choice;
      auto ors = s.or_arrows(*name);
      if (!ors.empty()) {
        if (closing) {
          or_choice = *std::min_element(ors.begin(), ors.end(), [&](std::size_t x, std::size_t y) {
            return cost.at(s.arrows()[x].to) < cost.at(s.arrows()[y].to);
          });
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, ors.size() - 1);
          or_choice = ors[pick(rng)];
        }
      }
      std::vector<NodeId> created;
      name = expand_once(s, tree, n, *name, chosen, or_choice, words, &created);
      pending.insert(pending.end(), created.begin(), created.end());
    }
    if (!tree.auxiliary.empty() && tree.graph.node_count() >= options.node_budget)
      throw BudgetExceeded("auxiliary nodes remain after " +
                           std::to_string(tree.graph.node_count()) + " nodes (budget " +
                           std::to_string(options.node_budget) + ")");
  }
  return tree;
}

// ---------------------------------------------------------------- numbering

namespace {

struct Item {
  int order;
  std::optional<std::size_t> arrow;  // nullopt: the node itself
};

std::vector<Item> numbered_items(const Schema& s, const SchemaNode& node) {
  std::vector<Item> items;
  if (!node.order) throw SchemaError("missing numbering on node " + node.name);
  items.push_back({*node.order, std::nullopt});
  for (std::size_t a : s.and_arrows(node.name)) {
    if (!s.arrows()[a].order)
      throw SchemaError("missing numbering on an AND arrow from " + node.name);
    items.push_back({*s.arrows()[a].order, a});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.order < y.order; });
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].order != static_cast<int>(i) + 1)
      throw SchemaError("numbering of " + node.name + " is not a permutation of 1.." +
                        std::to_string(items.size()));
  return items;
}

}  // namespace

std::string production(const Schema& s, std::string_view name) {
  const SchemaNode& node = s.node(name);
  std::string rhs;
  auto append = [&](const std::string& part) {
    if (part.empty()) return;
    if (!rhs.empty()) rhs += ' ';
    rhs += part;
  };
  for (const Item& item : numbered_items(s, node)) {
    if (!item.arrow) {
      auto ors = s.or_arrows(node.name);
      if (ors.empty()) {
        append(node.label.to_ebnf());
      } else if (ors.size() == 1) {
        append(s.arrows()[ors.front()].to);
      } else {
        std::string alt = "(";
        for (std::size_t i = 0; i < ors.size(); ++i) {
          if (i) alt += '|';
          alt += s.arrows()[ors[i]].to;
        }
        append(alt + ")");
      }
      continue;
    }
    const SchemaArrow& a = s.arrows()[*item.arrow];
    bool empty_label = a.label == RegexSpec::literal(Word{});
    std::string word = empty_label ? std::string() : a.label.to_ebnf();
    std::string pair;
    if (a.suffix) {
      pair = a.to + (word.empty() ? "" : " " + word);
    } else {
      pair = word.empty() ? a.to : word + " " + a.to;
    }
    append(a.optional ? "(" + pair + ")?" : pair);
  }
  return node.name + " ::= " + rhs;
}

std::string export_grammar(const Schema& s) {
  std::string out;
  for (const SchemaNode& n : s.nodes()) out += production(s, n.name) + "\n";
  return out;
}

std::vector<std::string> linearize(const Schema& s, const Setr& tree) {
  if (!tree.is_sytr()) throw SchemaError("cannot linearize a tree with auxiliary nodes");
  std::vector<std::string> words;
  auto emit = [&](const Word& w) {
    if (!w.empty()) words.push_back(w.str());
  };
  std::function<void(NodeId, std::size_t)> walk = [&](NodeId n, std::size_t depth) {
    const auto& chain = tree.lineage.at(n);
    const SchemaNode& node = s.node(chain.at(depth));
    for (const Item& item : numbered_items(s, node)) {
      if (!item.arrow) {
        if (s.or_arrows(node.name).empty()) {
          emit(tree.graph.label(n));
        } else {
          walk(n, depth + 1);
        }
        continue;
      }
      auto it = tree.arrow_origin.find({n, *item.arrow});
      if (it == tree.arrow_origin.end()) continue;  // optional arrow not drawn
      const Arrow& a = tree.graph.arrow(it->second);
      if (s.arrows()[*item.arrow].suffix) {
        walk(a.to, 0);
        emit(a.label);
      } else {
        emit(a.label);
        walk(a.to, 0);
      }
    }
  };
  walk(tree.root, 0);
  return words;
}

std::string linearize_text(const Schema& s, const Setr& tree) {
  std::string out;
  bool line_start = true;
  for (const std::string& w : linearize(s, tree)) {
    if (!line_start) out += ' ';
    out += w;
    line_start = w == ";";
    if (line_start) out += '\n';
  }
  return out + "\n";
}

}  // namespace turingol
