#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace lts::report {

Json fingerprint_json(const Fingerprint& f) {
  Json j = {{"dim", f.dim},       {"dimAnn", f.dimAnn}, {"dimDerived", f.dimDerived},
            {"dimDer", f.dimDer}, {"dimZ3", f.dimZ3},   {"dimH3", f.dimH3},
            {"nilpotencyIndex", f.nilpotencyIndex}};
  if (f.familyXi) j["xi"] = f.familyXi->to_string();
  return j;
}

std::string fingerprint_text(const Fingerprint& f, std::size_t orbitDim) {
  std::ostringstream os;
  os << "dim = " << f.dim << "\n"
     << "dimAnn = " << f.dimAnn << "\n"
     << "dimDerived = " << f.dimDerived << "\n"
     << "dimDer = " << f.dimDer << "\n"
     << "orbitDim = " << orbitDim << "\n"
     << "nilpotencyIndex = ";
  if (f.nilpotencyIndex < 0) os << "not nilpotent";
  else os << f.nilpotencyIndex;
  os << "\n"
     << "dimZ3 = " << f.dimZ3 << "\n"
     << "dimH3 = " << f.dimH3 << "\n";
  if (f.familyXi) os << "xi = " << *f.familyXi << "\n";
  return os.str();
}

namespace {

std::string pad(std::string s, std::size_t w) {
  // Width counts bytes; the table text is ASCII.
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string table1_text(const std::vector<Table1Row>& rows) {
  struct Line {
    std::string name, table, printed, computed;
  };
  std::vector<Line> lines;
  for (std::size_t r = 0; r < rows.size();) {
    const Table1Row& row = rows[r];
    if (!row.lambda) {
      lines.push_back({row.name, row.table, std::to_string(row.printed), std::to_string(row.computed)});
      ++r;
      continue;
    }
    // Family: one line per branch of the printed value.
    std::vector<std::size_t> branches;
    std::size_t end = r;
    while (end < rows.size() && rows[end].name == row.name) {
      if (std::find(branches.begin(), branches.end(), rows[end].printed) == branches.end())
        branches.push_back(rows[end].printed);
      ++end;
    }
    bool first = true;
    for (std::size_t b : branches) {
      std::string lambdas, computed;
      for (std::size_t k = r; k < end; ++k) {
        if (rows[k].printed != b) continue;
        lambdas += (lambdas.empty() ? "" : ",") + rows[k].lambda->to_string();
        computed += (computed.empty() ? "" : " ") + std::to_string(rows[k].computed) + " (lambda=" +
                    rows[k].lambda->to_string() + ")";
      }
      std::string label = b == 8 ? "lambda=" + lambdas : "Otherwise";
      lines.push_back({first ? row.name + "^lambda" : "", first ? row.table : "",
                       std::to_string(b) + " " + label, computed});
      first = false;
    }
    r = end;
  }
  Line head{"T", "Multiplication table", "dim Der", "computed"};
  std::size_t w0 = head.name.size(), w1 = head.table.size(), w2 = head.printed.size();
  for (const auto& l : lines) {
    w0 = std::max(w0, l.name.size());
    w1 = std::max(w1, l.table.size());
    w2 = std::max(w2, l.printed.size());
  }
  std::ostringstream os;
  auto emit = [&](const Line& l) {
    os << pad(l.name, w0) << " | " << pad(l.table, w1) << " | " << pad(l.printed, w2) << " | " << l.computed << "\n";
  };
  emit(head);
  os << std::string(w0, '-') << "-+-" << std::string(w1, '-') << "-+-" << std::string(w2, '-') << "-+-"
     << std::string(8, '-') << "\n";
  for (const auto& l : lines) emit(l);
  return os.str();
}

Json table1_json(const std::vector<Table1Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j = {{"name", r.name}, {"table", r.table}, {"printed", r.printed}, {"computed", r.computed},
              {"match", r.match()}};
    if (r.lambda) j["lambda"] = r.lambda->to_string();
    out.push_back(j);
  }
  return out;
}

std::string matrix_text(const ScalarMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

Json matrix_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

std::string cohomology_text(const Cohomology& h) {
  std::ostringstream os;
  os << "dimZ3 = " << h.dimZ3 << "\n"
     << "dimB3 = " << h.dimB3 << "\n"
     << "dimH3 = " << h.dimH3 << "\n"
     << "H3 representatives:";
  for (const auto& c : h.representatives.basis) os << "\n  " << c.to_string();
  os << "\n";
  return os.str();
}

Json cohomology_json(const Cohomology& h) {
  Json reps = Json::array();
  for (const auto& c : h.representatives.basis) reps.push_back(c.to_string());
  return {{"dimZ3", h.dimZ3}, {"dimB3", h.dimB3}, {"dimH3", h.dimH3}, {"representatives", reps}};
}

std::string products_text(const Lts& T) {
  std::ostringstream os;
  const std::size_t n = T.dim();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::string v;
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& c = T.c(i, j, k, p);
          if (c.is_zero()) continue;
          std::string cs = c.to_string();
          std::string term = c.is_one() ? "" : c == Scalar(-1) ? "-" : "(" + cs + ")";
          if (!v.empty() && term.rfind('-', 0) != 0) v += "+";
          v += term + "e" + std::to_string(p + 1);
        }
        if (v.empty()) continue;
        os << "[e" << i + 1 << ",e" << j + 1 << ",e" << k + 1 << "] = " << v << "\n";
        any = true;
      }
  if (!any) os << "abelian\n";
  return os.str();
}

Json classification_json(const Classification& c) {
  Json j = {{"name", c.name}, {"confidence", std::string(confidence_name(c.confidence))},
            {"fingerprint", fingerprint_json(c.fingerprint)}};
  if (c.lambda) j["lambda"] = c.lambda->to_string();
  if (c.witness) j["witness"] = matrix_json(*c.witness);
  return j;
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << c.name;
  if (c.lambda) os << " lambda=" << *c.lambda;
  os << " (" << confidence_name(c.confidence) << ")\n";
  if (c.witness) os << "witness g with change_basis(T, g) = instance:\n" << matrix_text(*c.witness);
  os << c.fingerprint.to_string() << "\n";
  return os.str();
}

Json graph_json(const DegenerationGraph& g) {
  Json nodes = Json::array(), edges = Json::array(), diagram = Json::array();
  for (const auto& n : g.nodes) {
    Json j = {{"label", n.label}, {"diagram", n.diagramLabel}, {"orbitDim", n.orbitDim}};
    if (n.printedOrbit) j["printedOrbit"] = *n.printedOrbit;
    nodes.push_back(j);
  }
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", e.kind}, {"lambda", e.checkedAt}});
  for (const auto& [a, b] : g.diagram_edges()) diagram.push_back({a, b});
  return {{"dim", g.dim}, {"nodes", nodes}, {"edges", edges}, {"diagramEdges", diagram}, {"maximal", g.maximal}};
}

}  // namespace lts::report
