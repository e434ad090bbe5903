#include "itemnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace itemnet {

namespace {

std::vector<std::string> sorted_names(const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::string quoted(const std::string& name) { return '"' + name + '"'; }

std::string trim(const std::string& s) {
  const std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// The quoted token starting at `from`; updates `from` to just past it.
std::string next_quoted(const std::string& line, std::size_t& from, std::size_t line_no) {
  const std::size_t open = line.find('"', from);
  const std::size_t close = open == std::string::npos ? open : line.find('"', open + 1);
  if (close == std::string::npos)
    throw DataError("line " + std::to_string(line_no) + ": expected a quoted name");
  from = close + 1;
  return line.substr(open + 1, close - open - 1);
}

}  // namespace

void write_forest_dot(std::ostream& os, const UndirectedGraph& g) {
  os << "graph G {\n";
  for (const std::string& name : sorted_names(g.vertices))
    os << "  " << quoted(name) << ";\n";

  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    std::string na = g.vertices[static_cast<std::size_t>(a)];
    std::string nb = g.vertices[static_cast<std::size_t>(b)];
    if (nb < na) std::swap(na, nb);
    edges.emplace_back(std::move(na), std::move(nb));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  os << "}\n";
}

void write_dag_dot(std::ostream& os, const Dag& g, const AgreementReport* agreement) {
  os << "digraph G {\n";
  for (const std::string& name : sorted_names(g.vertices))
    os << "  " << quoted(name) << ";\n";

  std::vector<std::pair<std::string, std::string>> arcs;
  arcs.reserve(g.arcs.size());
  for (const auto& [from, to] : g.arcs)
    arcs.emplace_back(g.vertices[static_cast<std::size_t>(from)],
                      g.vertices[static_cast<std::size_t>(to)]);
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [from, to] : arcs)
    os << "  " << quoted(from) << " -> " << quoted(to) << ";\n";

  if (agreement != nullptr) {
    for (const ArcAgreement& arc : agreement->arcs) {
      switch (arc.verdict) {
        case ArcVerdict::kAgree:
          os << "  " << quoted(arc.parent) << " -> " << quoted(arc.child)
             << " [style=dashed];\n";
          break;
        case ArcVerdict::kDisagree:
          os << "  " << quoted(arc.child) << " -> " << quoted(arc.parent)
             << " [style=dashed];\n";
          break;
        case ArcVerdict::kTie:
          os << "  " << quoted(arc.parent) << " -> " << quoted(arc.child)
             << " [style=dashed, dir=none];\n";
          break;
        case ArcVerdict::kInsufficient:
          break;  // too few co-visits to call a direction
      }
    }
  }
  os << "}\n";
}

Dag read_dag_dot(std::istream& is) {
  Dag g;
  const auto vertex_index = [&g](const std::string& name) {
    const int known = g.index_of(name);
    if (known >= 0) return known;
    g.vertices.push_back(name);
    return g.vertex_count() - 1;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body == "{" || body == "}") continue;
    if (body.rfind("digraph", 0) == 0 || body.rfind("graph", 0) == 0) continue;
    if (body.find("style=dashed") != std::string::npos) continue;  // annotation, not structure

    if (body.find("->") != std::string::npos) {
      std::size_t pos = 0;
      const std::string from = next_quoted(body, pos, line_no);
      const std::string to = next_quoted(body, pos, line_no);
      // Separate statements: argument evaluation order must not decide
      // which endpoint gets interned first.
      const int from_index = vertex_index(from);
      const int to_index = vertex_index(to);
      g.arcs.emplace_back(from_index, to_index);
    } else if (body.front() == '"') {
      std::size_t pos = 0;
      vertex_index(next_quoted(body, pos, line_no));
    } else {
      throw DataError("line " + std::to_string(line_no) + ": unrecognized DOT construct");
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  if (!is_acyclic(g)) throw DataError("graph in DOT input is cyclic");
  return g;
}

void write_metrics_tsv(std::ostream& os, const MetricsReport& report) {
  os << "node\tdegree\tbetweenness\tcloseness\n";
  for (const VertexMetrics& row : report) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d\t%g\t%.2f", row.degree, row.betweenness,
                  row.closeness);
    os << row.vertex << '\t' << buf << '\n';
  }
}

void write_agreement_tsv(std::ostream& os, const AgreementReport& report) {
  os << "parent\tchild\tn_parent_first\tn_child_first\tn_tied\tverdict\n";
  for (const ArcAgreement& arc : report.arcs) {
    const char* verdict = "insufficient";
    switch (arc.verdict) {
      case ArcVerdict::kAgree:
        verdict = "agree";
        break;
      case ArcVerdict::kDisagree:
        verdict = "disagree";
        break;
      case ArcVerdict::kTie:
        verdict = "tie";
        break;
      case ArcVerdict::kInsufficient:
        break;
    }
    os << arc.parent << '\t' << arc.child << '\t' << arc.parent_first << '\t'
       << arc.child_first << '\t' << arc.tied << '\t' << verdict << '\n';
  }
}

void write_transactions_csv(std::ostream& os, const TransactionLog& log) {
  os << "subject_id,item_code,date,status\n";
  for (const TransactionRecord& rec : log.records)
    os << rec.subject_id << ',' << rec.item_code << ',' << rec.timestamp.to_string() << ','
       << static_cast<int>(rec.status) << '\n';
}

}  // namespace itemnet
