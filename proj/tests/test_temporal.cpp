#include <doctest.h>

#include <cmath>

#include "itemnet/temporal.hpp"

using namespace itemnet;

namespace {

Date day(int year, unsigned month, unsigned d) { return Date::from_civil(year, month, d); }

// Three subjects with every precedence flavour between A and B, plus one
// subject who never saw B at all.
FirstVisits mixed_visits() {
  return {
      {"s1", {{"A", day(2012, 1, 1)}, {"B", day(2012, 2, 1)}}},
      {"s2", {{"A", day(2012, 3, 5)}, {"B", day(2012, 3, 1)}}},
      {"s3", {{"A", day(2012, 4, 2)}, {"B", day(2012, 4, 2)}}},
      {"s4", {{"A", day(2012, 5, 1)}}},
  };
}

}  // namespace

TEST_CASE("precedence counts split both-visitors by first-visit order") {
  const PrecedenceEntry e = precedence_counts(mixed_visits(), "A", "B");
  CHECK(e.first_before_second == 1);
  CHECK(e.second_before_first == 1);
  CHECK(e.tied == 1);
  CHECK(e.both() == 3);

  const PrecedenceEntry swapped = precedence_counts(mixed_visits(), "B", "A");
  CHECK(swapped.first_before_second == 1);
  CHECK(swapped.second_before_first == 1);
}

TEST_CASE("majority direction of an entry") {
  CHECK(physical_order({5, 2, 1}) == Precedence::kFirstEarlier);
  CHECK(physical_order({2, 5, 0}) == Precedence::kSecondEarlier);
  CHECK(physical_order({3, 3, 10}) == Precedence::kUnordered);
  CHECK(physical_order({0, 0, 0}) == Precedence::kUnordered);
}

TEST_CASE("the precedence table covers every unordered pair once") {
  FirstVisits visits = mixed_visits();
  visits["s1"]["C"] = day(2012, 1, 15);
  visits["s2"]["C"] = day(2012, 2, 20);

  const PrecedenceTable table = precedence_table(visits, {"B", "C", "A"});
  REQUIRE(table.size() == 3);
  REQUIRE(table.count({"A", "B"}) == 1);
  REQUIRE(table.count({"A", "C"}) == 1);
  REQUIRE(table.count({"B", "C"}) == 1);

  // (A, C): s1 has A on Jan 1 and C on Jan 15; s2 has C on Feb 20, A on Mar 5.
  const PrecedenceEntry& ac = table.at({"A", "C"});
  CHECK(ac.first_before_second == 1);
  CHECK(ac.second_before_first == 1);
  CHECK(ac.tied == 0);
}

TEST_CASE("arc verdicts compare learned direction against physical order") {
  // Ten subjects: A first eight times, B first twice -> A precedes B.
  FirstVisits visits;
  for (int s = 0; s < 10; ++s) {
    const std::string id = "s" + std::to_string(s);
    const bool a_first = s < 8;
    visits[id]["A"] = day(2012, 1, a_first ? 1 : 20);
    visits[id]["B"] = day(2012, 1, 10);
  }

  Dag forward;
  forward.vertices = {"A", "B"};
  forward.arcs = {{0, 1}};
  const AgreementReport agree = conjecture_check(forward, visits, 5);
  REQUIRE(agree.arcs.size() == 1);
  CHECK(agree.arcs[0].verdict == ArcVerdict::kAgree);
  CHECK(agree.arcs[0].parent_first == 8);
  CHECK(agree.arcs[0].child_first == 2);
  CHECK(agree.agree == 1);
  CHECK(agree.agreement_fraction() == 1.0);

  Dag backward;
  backward.vertices = {"A", "B"};
  backward.arcs = {{1, 0}};
  const AgreementReport disagree = conjecture_check(backward, visits, 5);
  CHECK(disagree.arcs[0].verdict == ArcVerdict::kDisagree);
  CHECK(disagree.arcs[0].parent_first == 2);
  CHECK(disagree.disagree == 1);
  CHECK(disagree.agreement_fraction() == 0.0);
}

TEST_CASE("balanced precedence yields a tie verdict") {
  FirstVisits visits;
  for (int s = 0; s < 6; ++s) {
    const std::string id = "s" + std::to_string(s);
    visits[id]["A"] = day(2012, 2, s < 3 ? 1 : 20);
    visits[id]["B"] = day(2012, 2, 10);
  }
  Dag g;
  g.vertices = {"A", "B"};
  g.arcs = {{0, 1}};
  const AgreementReport report = conjecture_check(g, visits, 3);
  CHECK(report.arcs[0].verdict == ArcVerdict::kTie);
  CHECK(report.tie == 1);
  CHECK(report.decided() == 0);
  CHECK(std::isnan(report.agreement_fraction()));
}

TEST_CASE("support is checked before direction") {
  // Only four subjects saw both items; at min_support 5 the arc must be
  // insufficient even though the direction is lopsided, and at exactly 4
  // it must be decided.
  FirstVisits visits;
  for (int s = 0; s < 4; ++s) {
    const std::string id = "s" + std::to_string(s);
    visits[id]["A"] = day(2012, 3, 1);
    visits[id]["B"] = day(2012, 3, 9);
  }
  visits["lone"]["A"] = day(2012, 3, 2);

  Dag g;
  g.vertices = {"A", "B"};
  g.arcs = {{0, 1}};

  const AgreementReport strict = conjecture_check(g, visits, 5);
  CHECK(strict.arcs[0].verdict == ArcVerdict::kInsufficient);
  CHECK(strict.insufficient == 1);
  CHECK(std::isnan(strict.agreement_fraction()));

  const AgreementReport boundary = conjecture_check(g, visits, 4);
  CHECK(boundary.arcs[0].verdict == ArcVerdict::kAgree);
}

TEST_CASE("report rows are sorted by parent then child name") {
  FirstVisits visits;
  for (int s = 0; s < 8; ++s) {
    const std::string id = "s" + std::to_string(s);
    visits[id]["A"] = day(2012, 4, 1);
    visits[id]["B"] = day(2012, 4, 5);
    visits[id]["C"] = day(2012, 4, 9);
  }
  Dag g;
  g.vertices = {"C", "A", "B"};
  g.arcs = {{0, 1}, {2, 1}};  // C -> A and B -> A
  const AgreementReport report = conjecture_check(g, visits, 3);
  REQUIRE(report.arcs.size() == 2);
  CHECK(report.arcs[0].parent == "B");
  CHECK(report.arcs[0].child == "A");
  CHECK(report.arcs[1].parent == "C");
  CHECK(report.arcs[1].child == "A");
  // Both arcs point against the uniform A -> B -> C visit order.
  CHECK(report.arcs[0].verdict == ArcVerdict::kDisagree);
  CHECK(report.arcs[1].verdict == ArcVerdict::kDisagree);
  CHECK(report.agreement_fraction() == 0.0);
}

TEST_CASE("mixed verdicts tally into the summary counts") {
  FirstVisits visits;
  for (int s = 0; s < 10; ++s) {
    const std::string id = "s" + std::to_string(s);
    visits[id]["A"] = day(2012, 5, 1);
    visits[id]["B"] = day(2012, 5, 8);               // A before B, always
    visits[id]["C"] = day(2012, 5, s < 5 ? 2 : 20);  // splits evenly around B
    if (s < 2) visits[id]["D"] = day(2012, 5, 3);
  }
  Dag g;
  g.vertices = {"A", "B", "C", "D"};
  g.arcs = {{0, 1}, {1, 2}, {3, 0}};
  const AgreementReport report = conjecture_check(g, visits, 4);
  CHECK(report.agree == 1);         // A -> B
  CHECK(report.tie == 1);           // B -> C splits 5/5
  CHECK(report.insufficient == 1);  // D seen by two subjects only
  CHECK(report.disagree == 0);
  CHECK(report.decided() == 1);
  CHECK(report.agreement_fraction() == 1.0);
}
