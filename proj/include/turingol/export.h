#pragma once

#include <functional>
#include <string>

#include "turingol/graph.h"

namespace turingol {

enum class ExportFormat { dot, json };

/// JSON: {"nodes":[{"id","label"}],"arrows":[{"from","label","to","kind"}]},
/// both arrays ordered by id.
std::string to_json(const LabeledGraph& g);

/// Graphviz text. Syntactic arrows solid, control bold, semantic dashed,
/// tape dotted. `node_text` overrides the displayed node label.
std::string to_dot(const LabeledGraph& g,
                   const std::function<std::string(NodeId)>& node_text = {});

std::string export_graph(const LabeledGraph& g, ExportFormat format);

/// Inverse of to_json.
LabeledGraph graph_from_json(const std::string& text);

}  // namespace turingol
