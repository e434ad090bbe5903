#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itemnet/dataset.hpp"

namespace itemnet {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Calendar date at day resolution (days since 1970-01-01).
class Date {
 public:
  Date() = default;

  static Date from_civil(int year, unsigned month, unsigned day);  // validates
  static Date from_days(int days) { return Date(days); }
  static Date parse(std::string_view iso);  // strict YYYY-MM-DD

  int days() const { return days_; }
  int year() const;
  std::string to_string() const;  // YYYY-MM-DD

  auto operator<=>(const Date&) const = default;

 private:
  explicit Date(int days) : days_(days) {}
  int days_ = 0;
};

enum class Status : std::uint8_t { kNew = 0, kRenewal = 1, kOld = 2 };

struct TransactionRecord {
  std::string subject_id;
  std::string item_code;
  Date timestamp;
  Status status = Status::kNew;
};

struct TransactionLog {
  std::vector<TransactionRecord> records;
  std::set<std::string> item_universe;
};

// Maps the four required columns onto header names.
struct ColumnSchema {
  std::string subject = "subject_id";
  std::string item = "item_code";
  std::string date = "date";
  std::string status = "status";
};

struct ParseOptions {
  char delimiter = ',';
  ColumnSchema schema;
  // When set, dates outside this calendar year are rejected.
  std::optional<int> analysis_year;
};

// Parses delimiter-separated text with a header row. Throws DataError with
// the offending line number for malformed rows, unknown status values,
// bad dates, and subjects with conflicting status values.
TransactionLog parse_transactions(std::istream& stream, const ParseOptions& opts = {});

// subject -> (item -> earliest visit date)
using FirstVisits = std::map<std::string, std::map<std::string, Date>>;

// Collapses repeated (subject, item) visits, keeping the earliest date.
FirstVisits deduplicate(const TransactionLog& log);

// item -> number of distinct subjects who visited it (after deduplication)
using VisitCountTable = std::map<std::string, long>;

VisitCountTable visit_counts(const FirstVisits& visits);
long total_visits(const VisitCountTable& counts);

// Items whose count is strictly greater than the nearest-rank percentile
// (the ceil(p*k)-th smallest count). percentile must lie in [0, 1].
std::set<std::string> select_main_items(const VisitCountTable& counts, double percentile);

// One status per subject; throws DataError on conflicting values.
std::map<std::string, Status> subject_statuses(const TransactionLog& log);

// One row per distinct subject; cell (s, i) = 1 iff s visited i at least
// once. Rows that are all zero are retained. items must be a subset of the
// log's item universe.
IndicatorDataset build_indicator_dataset(const TransactionLog& log,
                                         const std::set<std::string>& items,
                                         bool include_status = false);

}  // namespace itemnet
