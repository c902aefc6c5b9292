#include "turingol/export.h"

#include <sstream>

#include "json.hpp"

namespace turingol {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const LabeledGraph& g) {
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  doc["arrows"] = ordered_json::array();
  for (std::uint32_t i = 0; i < g.node_count(); ++i)
    doc["nodes"].push_back({{"id", i}, {"label", g.label({i}).str()}});
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const Arrow& a = g.arrow({i});
    doc["arrows"].push_back({{"from", a.from.value},
                             {"label", a.label.str()},
                             {"to", a.to.value},
                             {"kind", std::string(to_string(a.kind))}});
  }
  return doc.dump();
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string_view dot_style(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::syntactic: return "solid";
    case ArrowKind::control: return "bold";
    case ArrowKind::semantic: return "dashed";
    case ArrowKind::tape: return "dotted";
  }
  return "solid";
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const std::function<std::string(NodeId)>& node_text) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    std::string text = node_text ? node_text({i}) : g.label({i}).str();
    out << "  n" << i << " [label=\"" << dot_escape(text) << "\"];\n";
  }
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const Arrow& a = g.arrow({i});
    out << "  n" << a.from.value << " -> n" << a.to.value << " [label=\""
        << dot_escape(a.label.str()) << "\", style=" << dot_style(a.kind) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graph(const LabeledGraph& g, ExportFormat format) {
  return format == ExportFormat::json ? to_json(g) : to_dot(g);
}

LabeledGraph graph_from_json(const std::string& text) {
  LabeledGraph g;
  try {
    auto doc = nlohmann::json::parse(text);
    std::uint32_t expected = 0;
    for (const auto& n : doc.at("nodes")) {
      if (n.at("id").get<std::uint32_t>() != expected++)
        throw Error("graph JSON: node ids must be dense and ordered");
      g.add_node(Word(n.at("label").get<std::string>()));
    }
    for (const auto& a : doc.at("arrows")) {
      auto kind = arrow_kind_from_string(a.at("kind").get<std::string>());
      if (!kind) throw Error("graph JSON: unknown arrow kind");
      g.add_arrow({a.at("from").get<std::uint32_t>()}, Word(a.at("label").get<std::string>()),
                  {a.at("to").get<std::uint32_t>()}, *kind);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("graph JSON: ") + e.what());
  }
  return g;
}

}  // namespace turingol
