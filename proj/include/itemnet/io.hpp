#pragma once

#include <iosfwd>

#include "itemnet/graph.hpp"
#include "itemnet/metrics.hpp"
#include "itemnet/temporal.hpp"
#include "itemnet/transactions.hpp"

namespace itemnet {

// Graphviz output. Node and edge lines are sorted by vertex name so equal
// graphs serialize byte-identically regardless of construction order.
void write_forest_dot(std::ostream& os, const UndirectedGraph& g);

// Directed variant. When an agreement report is given, each arc whose pair
// has a physical first-visit majority also gets a dashed edge in the
// majority direction (dir=none on exact ties); insufficient pairs get none.
void write_dag_dot(std::ostream& os, const Dag& g,
                   const AgreementReport* agreement = nullptr);

// Reads graphs written by write_dag_dot: quoted node statements and
// "A" -> "B" arcs, ignoring dashed annotation edges.
Dag read_dag_dot(std::istream& is);

// node<TAB>degree<TAB>betweenness<TAB>closeness, one row per vertex in
// report order. Closeness keeps two decimals.
void write_metrics_tsv(std::ostream& os, const MetricsReport& report);

// parent child n_parent_first n_child_first n_tied verdict (tab-separated).
void write_agreement_tsv(std::ostream& os, const AgreementReport& report);

// subject_id,item_code,date,status with ISO dates, one record per line.
void write_transactions_csv(std::ostream& os, const TransactionLog& log);

}  // namespace itemnet
