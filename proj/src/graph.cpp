#include "lts/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lts/error.hpp"
#include "lts/separating.hpp"

namespace lts {

const GraphNode& DegenerationGraph::node(const std::string& label) const {
  for (const auto& n : nodes)
    if (n.label == label) return n;
  throw Error(Errc::UnknownName, "no graph node '" + label + "'");
}

bool DegenerationGraph::reaches(const std::string& from, const std::string& to) const {
  std::set<std::string> seen{from};
  std::vector<std::string> stack{from};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      if (e.from != cur || seen.count(e.to)) continue;
      if (e.to == to) return true;
      seen.insert(e.to);
      stack.push_back(e.to);
    }
  }
  return false;
}

std::vector<std::pair<std::string, std::string>> DegenerationGraph::diagram_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : edges) {
    if (e.kind != "witness") continue;
    std::pair<std::string, std::string> p{node(e.from).diagramLabel, node(e.to).diagramLabel};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::string DegenerationGraph::render() const {
  std::ostringstream os;
  os << "degeneration graph, dimension " << dim << "\n";
  std::map<std::size_t, std::vector<const GraphNode*>, std::greater<>> strata;
  for (const auto& n : nodes) strata[n.printedOrbit.value_or(n.orbitDim)].push_back(&n);
  for (const auto& [d, ns] : strata) {
    os << "orbit " << d << ":";
    for (const auto* n : ns) {
      os << ' ' << n->label;
      if (n->orbitDim != d) os << " (computed " << n->orbitDim << ")";
    }
    os << "\n";
  }
  os << "edges:\n";
  for (const auto& e : edges) {
    os << "  " << e.from << " -> " << e.to << " [" << e.kind;
    if (!e.checkedAt.empty()) {
      os << ", lambda =";
      for (std::size_t i = 0; i < e.checkedAt.size(); ++i) os << (i ? ", " : " ") << e.checkedAt[i];
    }
    os << "]\n";
  }
  os << "maximal:";
  for (const auto& m : maximal) os << ' ' << m;
  os << "\n";
  return os.str();
}

const std::vector<std::pair<std::string, std::string>>& printed_diagram_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"T4,7", "T4,6^lambda"}, {"T4,7", "T4,8"},        {"T4,5", "T4,6^1"}, {"T4,5", "T4,4"},
      {"T4,8", "T4,9"},        {"T4,8", "T4,3"},        {"T4,8", "T4,4"},   {"T4,4", "T4,2"},
      {"T4,9", "T4,2"},        {"T4,3", "T4,2"},        {"T4,2", "T4,1"},   {"T4,6^1", "T4,2"},
      {"T4,6^lambda", "T4,4"},
  };
  return edges;
}

namespace {

const Scalar kGeneric(2);

// Node standing for a catalog system inside the dimension-4 graph.
std::string node_of(const SystemRef& s) {
  if (s.name != "T4,6") return s.name;
  if (!s.lambda) return "T4,6^*";
  Scalar c = canonical_lambda(*s.lambda);
  if (c == Scalar(0)) return "T4,6^0";
  if (c == Scalar(1)) return "T4,6^1";
  return "T4,6^lambda";
}

Lts instance_of(const GraphNode& n) {
  if (n.label == "T4,6^*") return instantiate("T4,6", kGeneric);
  return instantiate(n.system.name, n.system.lambda);
}

void add_checked(DegenerationGraph& g, const DegenerationWitness& w, const std::string& kind) {
  DegenerationCheck c = verify_degeneration(w);
  if (!c.pass) throw Error(Errc::InconsistentGraph, "witness " + w.label() + " fails: " + c.to_string());
  std::string from = w.source.indexFn ? "T4,6^*" : node_of(w.source);
  std::string to = node_of(w.target);
  if (g.dim != 4) {
    from = w.source.name;
    to = w.target.name;
  }
  std::string at = w.source.lambda ? w.source.lambda->to_string()
                   : w.target.lambda ? w.target.lambda->to_string() : "";
  for (auto& e : g.edges)
    if (e.from == from && e.to == to && e.kind == kind) {
      if (!at.empty()) e.checkedAt.push_back(at);
      return;
    }
  GraphEdge e{from, to, kind, {}};
  if (!at.empty()) e.checkedAt.push_back(at);
  g.edges.push_back(std::move(e));
}

void finish(DegenerationGraph& g) {
  for (const auto& e : g.edges) {
    if (e.kind == "member") continue;
    NecessaryReport r =
        necessary_conditions(instance_of(g.node(e.from)), instance_of(g.node(e.to)), e.kind == "family");
    if (!r.consistent)
      throw Error(Errc::InconsistentGraph, "edge " + e.from + " -> " + e.to + " violates " + r.to_string());
  }
  for (const auto& n : g.nodes) {
    bool incoming = false;
    for (const auto& e : g.edges) incoming = incoming || e.to == n.label;
    if (!incoming) g.maximal.push_back(n.label);
  }
}

DegenerationGraph small_graph(std::size_t dim) {
  DegenerationGraph g;
  g.dim = dim;
  for (const auto& e : catalog()) {
    if (e.dim != dim) continue;
    SystemRef s{e.name, std::nullopt, std::nullopt};
    g.nodes.push_back({e.name, e.name, s, orbit_dimension(instantiate(e.name)), e.diagramOrbit});
  }
  if (dim == 3) add_checked(g, t32_to_t31(), "witness");
  finish(g);
  return g;
}

}  // namespace

DegenerationGraph degeneration_graph(std::size_t dim) {
  if (dim < 1 || dim > 4) throw Error(Errc::DimensionUnsupported, "graphs exist for dimensions 1 to 4");
  if (dim < 4) return small_graph(dim);

  DegenerationGraph g;
  g.dim = 4;
  for (const auto& e : catalog()) {
    if (e.dim != 4 || e.family) continue;
    SystemRef s{e.name, std::nullopt, std::nullopt};
    g.nodes.push_back({e.name, e.name, s, orbit_dimension(instantiate(e.name)), e.diagramOrbit});
  }
  auto member = [&](const char* label, const Scalar& l, std::size_t printed) {
    SystemRef s{"T4,6", l, std::nullopt};
    g.nodes.push_back({label, label == std::string("T4,6^1") ? "T4,6^1" : "T4,6^lambda", s,
                       orbit_dimension(instantiate("T4,6", l)), printed});
  };
  member("T4,6^0", Scalar(0), 10);
  member("T4,6^lambda", kGeneric, 10);
  member("T4,6^1", Scalar(1), 8);
  // The family sweeps one extra parameter on top of a generic orbit.
  g.nodes.push_back({"T4,6^*", "T4,6^*", SystemRef{"T4,6", std::nullopt, std::nullopt},
                     orbit_dimension(instantiate("T4,6", kGeneric)) + 1, 11});

  std::vector<DegenerationWitness> ws = known_degenerations(kGeneric);
  for (const auto& w : ws) add_checked(g, w, "witness");
  for (const Scalar& l : {Scalar(0), Scalar(3), Scalar(5), Scalar::i()}) add_checked(g, family_to_t44(l), "witness");
  FamilyIsomorphism iso = family_isomorphism(2, Scalar(0));
  add_checked(g, retarget(ws.front(), iso.sigma, SystemRef{"T4,6", iso.target, std::nullopt}), "witness");
  add_checked(g, family_to_t45(), "family");
  for (const char* m : {"T4,6^0", "T4,6^lambda", "T4,6^1"}) g.edges.push_back({"T4,6^*", m, "member", {}});
  finish(g);

  for (const auto& claim : nondegeneration_claims()) {
    std::vector<std::string> froms;
    if (claim.source.name == "T4,6" && !claim.source.lambda)
      froms = {"T4,6^*", "T4,6^0", "T4,6^lambda", "T4,6^1"};
    else
      froms = {node_of(claim.source)};
    for (const auto& f : froms)
      for (const auto& t : claim.targets) {
        std::string to = node_of(t);
        if (f == to || g.reaches(f, to))
          throw Error(Errc::InconsistentGraph, "edges join " + f + " to " + to + " against " + claim.label);
      }
  }
  return g;
}

}  // namespace lts
