#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lts/degeneration.hpp"

namespace lts {

struct GraphNode {
  std::string label;        // "T4,6^lambda", "T4,6^*", ...
  std::string diagramLabel;  // node it is drawn as in the printed diagram
  SystemRef system;         // representative instance (family node: no lambda)
  std::size_t orbitDim = 0;
  std::optional<std::size_t> printedOrbit;
};

struct GraphEdge {
  std::string from;
  std::string to;
  std::string kind;  // "witness", "family" or "member"
  std::vector<std::string> checkedAt;  // lambda values a witness was verified at
};

struct DegenerationGraph {
  std::size_t dim = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<std::string> maximal;  // nodes without incoming edges

  const GraphNode& node(const std::string& label) const;
  bool reaches(const std::string& from, const std::string& to) const;
  // Witness edges under diagramLabel, without duplicates.
  std::vector<std::pair<std::string, std::string>> diagram_edges() const;
  std::string render() const;
};

// Builds the verified graph for dim 1..4. Every witness is rechecked, every
// edge must satisfy the invariant inequalities, and no edge path may join a
// pair listed as a non-degeneration; otherwise throws InconsistentGraph.
// Throws DimensionUnsupported outside 1..4.
DegenerationGraph degeneration_graph(std::size_t dim);

// The dimension-4 degeneration edges as drawn in the printed diagram.
const std::vector<std::pair<std::string, std::string>>& printed_diagram_edges();

}  // namespace lts
