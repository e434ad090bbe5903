#include "itemnet/temporal.hpp"

#include <algorithm>
#include <limits>

namespace itemnet {

Precedence physical_order(const PrecedenceEntry& entry) {
  if (entry.first_before_second > entry.second_before_first) return Precedence::kFirstEarlier;
  if (entry.second_before_first > entry.first_before_second) return Precedence::kSecondEarlier;
  return Precedence::kUnordered;
}

PrecedenceEntry precedence_counts(const FirstVisits& visits, const std::string& item_i,
                                  const std::string& item_j) {
  PrecedenceEntry entry;
  for (const auto& [subject, per_item] : visits) {
    const auto it_i = per_item.find(item_i);
    if (it_i == per_item.end()) continue;
    const auto it_j = per_item.find(item_j);
    if (it_j == per_item.end()) continue;
    if (it_i->second < it_j->second)
      ++entry.first_before_second;
    else if (it_j->second < it_i->second)
      ++entry.second_before_first;
    else
      ++entry.tied;  // same-day visits cannot be ordered at day resolution
  }
  return entry;
}

PrecedenceTable precedence_table(const FirstVisits& visits,
                                 const std::vector<std::string>& items) {
  std::vector<std::string> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  PrecedenceTable table;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      table.emplace(std::make_pair(sorted[i], sorted[j]),
                    precedence_counts(visits, sorted[i], sorted[j]));
  return table;
}

double AgreementReport::agreement_fraction() const {
  if (decided() == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(agree) / static_cast<double>(decided());
}

AgreementReport conjecture_check(const Dag& g, const FirstVisits& visits, long min_support) {
  std::vector<std::pair<std::string, std::string>> named_arcs;
  named_arcs.reserve(g.arcs.size());
  for (const auto& [from, to] : g.arcs)
    named_arcs.emplace_back(g.vertices[static_cast<std::size_t>(from)],
                            g.vertices[static_cast<std::size_t>(to)]);
  std::sort(named_arcs.begin(), named_arcs.end());

  AgreementReport report;
  for (const auto& [parent, child] : named_arcs) {
    const PrecedenceEntry entry = precedence_counts(visits, parent, child);
    ArcAgreement arc{parent, child, entry.first_before_second, entry.second_before_first,
                     entry.tied, ArcVerdict::kInsufficient};
    if (entry.both() < min_support) {
      ++report.insufficient;
    } else {
      switch (physical_order(entry)) {
        case Precedence::kFirstEarlier:
          arc.verdict = ArcVerdict::kAgree;
          ++report.agree;
          break;
        case Precedence::kSecondEarlier:
          arc.verdict = ArcVerdict::kDisagree;
          ++report.disagree;
          break;
        case Precedence::kUnordered:
          arc.verdict = ArcVerdict::kTie;
          ++report.tie;
          break;
      }
    }
    report.arcs.push_back(std::move(arc));
  }
  return report;
}

}  // namespace itemnet
