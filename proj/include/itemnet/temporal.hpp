#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "itemnet/graph.hpp"
#include "itemnet/transactions.hpp"

namespace itemnet {

// First-visit precedence counts for an ordered item pair (i, j).
struct PrecedenceEntry {
  long first_before_second = 0;
  long second_before_first = 0;
  long tied = 0;

  long both() const { return first_before_second + second_before_first + tied; }
};

enum class Precedence { kFirstEarlier, kSecondEarlier, kUnordered };

// Majority direction of an entry; kUnordered on exact count ties.
Precedence physical_order(const PrecedenceEntry& entry);

// Counts subjects who visited both i and j, split by which first visit
// came earlier (same-day visits count as tied).
PrecedenceEntry precedence_counts(const FirstVisits& visits, const std::string& item_i,
                                  const std::string& item_j);

using PrecedenceTable = std::map<std::pair<std::string, std::string>, PrecedenceEntry>;

// Entry for every unordered pair of `items`, keyed (min, max).
PrecedenceTable precedence_table(const FirstVisits& visits,
                                 const std::vector<std::string>& items);

enum class ArcVerdict { kAgree, kDisagree, kTie, kInsufficient };

// One learned arc parent -> child checked against first-visit order.
struct ArcAgreement {
  std::string parent;
  std::string child;
  long parent_first = 0;
  long child_first = 0;
  long tied = 0;
  ArcVerdict verdict = ArcVerdict::kInsufficient;
};

struct AgreementReport {
  std::vector<ArcAgreement> arcs;  // in DAG arc order, sorted by names
  long agree = 0;
  long disagree = 0;
  long tie = 0;
  long insufficient = 0;

  long decided() const { return agree + disagree; }
  // agree / (agree + disagree); NaN when no arc is decided.
  double agreement_fraction() const;
};

// Tests each arc of `g` against physical first-visit order. Arcs whose
// pair was visited-both by fewer than min_support subjects are marked
// insufficient before any direction comparison.
AgreementReport conjecture_check(const Dag& g, const FirstVisits& visits,
                                 long min_support = 30);

}  // namespace itemnet
