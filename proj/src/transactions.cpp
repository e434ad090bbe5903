#include "itemnet/transactions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <utility>

namespace itemnet {

namespace {

// Civil-calendar <-> day-count conversions after Howard Hinnant's published
// algorithms; exact over the full proleptic Gregorian range used here.
int days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int>(doe) - 719468;
}

struct CivilDate {
  int year;
  unsigned month;
  unsigned day;
};

CivilDate civil_from_days(int z) {
  z += 719468;
  const int era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int y = static_cast<int>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {y + (m <= 2), m, d};
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned last_day_of_month(int y, unsigned m) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
  int value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw DataError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Date Date::from_civil(int year, unsigned month, unsigned day) {
  if (month < 1 || month > 12) throw DataError("month out of range");
  if (day < 1 || day > last_day_of_month(year, month)) throw DataError("day out of range");
  return Date(days_from_civil(year, month, day));
}

Date Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
    throw DataError("date not in YYYY-MM-DD form: '" + std::string(iso) + "'");
  const std::string_view y = iso.substr(0, 4), m = iso.substr(5, 2), d = iso.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d))
    throw DataError("date not in YYYY-MM-DD form: '" + std::string(iso) + "'");
  return from_civil(to_int(y), static_cast<unsigned>(to_int(m)),
                    static_cast<unsigned>(to_int(d)));
}

int Date::year() const { return civil_from_days(days_).year; }

std::string Date::to_string() const {
  const CivilDate c = civil_from_days(days_);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
  return buf;
}

TransactionLog parse_transactions(std::istream& stream, const ParseOptions& opts) {
  std::string line;
  if (!std::getline(stream, line)) throw DataError("empty input: missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_fields(line, opts.delimiter);
  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError("header is missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t subject_col = column(opts.schema.subject);
  const std::size_t item_col = column(opts.schema.item);
  const std::size_t date_col = column(opts.schema.date);
  const std::size_t status_col = column(opts.schema.status);

  TransactionLog log;
  std::map<std::string, Status> seen_status;
  std::size_t line_no = 1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> fields = split_fields(line, opts.delimiter);
    if (fields.size() != header.size())
      fail_line(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));

    TransactionRecord rec;
    rec.subject_id = fields[subject_col];
    rec.item_code = fields[item_col];
    if (rec.subject_id.empty()) fail_line(line_no, "empty subject id");
    if (rec.item_code.empty()) fail_line(line_no, "empty item code");

    try {
      rec.timestamp = Date::parse(fields[date_col]);
    } catch (const DataError& e) {
      fail_line(line_no, e.what());
    }
    if (opts.analysis_year && rec.timestamp.year() != *opts.analysis_year)
      fail_line(line_no, "date outside analysis year " + std::to_string(*opts.analysis_year));

    const std::string& st = fields[status_col];
    if (st != "0" && st != "1" && st != "2")
      fail_line(line_no, "unknown status value '" + st + "'");
    rec.status = static_cast<Status>(st[0] - '0');

    const auto [it, inserted] = seen_status.emplace(rec.subject_id, rec.status);
    if (!inserted && it->second != rec.status)
      fail_line(line_no, "subject '" + rec.subject_id + "' has conflicting status values");

    log.item_universe.insert(rec.item_code);
    log.records.push_back(std::move(rec));
  }
  return log;
}

FirstVisits deduplicate(const TransactionLog& log) {
  FirstVisits visits;
  for (const TransactionRecord& rec : log.records) {
    auto& per_item = visits[rec.subject_id];
    const auto [it, inserted] = per_item.emplace(rec.item_code, rec.timestamp);
    if (!inserted && rec.timestamp < it->second) it->second = rec.timestamp;
  }
  return visits;
}

VisitCountTable visit_counts(const FirstVisits& visits) {
  VisitCountTable counts;
  for (const auto& [subject, per_item] : visits)
    for (const auto& [item, date] : per_item) ++counts[item];
  return counts;
}

long total_visits(const VisitCountTable& counts) {
  long total = 0;
  for (const auto& [item, n] : counts) total += n;
  return total;
}

std::set<std::string> select_main_items(const VisitCountTable& counts, double percentile) {
  if (!(percentile >= 0.0 && percentile <= 1.0))
    throw std::invalid_argument("percentile outside [0,1]");
  if (counts.empty()) throw std::invalid_argument("empty visit-count table");

  std::vector<long> sorted;
  sorted.reserve(counts.size());
  for (const auto& [item, n] : counts) sorted.push_back(n);
  std::sort(sorted.begin(), sorted.end());

  // Nearest-rank order statistic. The epsilon guards against p*k landing a
  // hair above an integer (0.3 * 10 > 3 in binary), which would shift the
  // rank up by one.
  const long k = static_cast<long>(sorted.size());
  long rank = static_cast<long>(std::ceil(percentile * static_cast<double>(k) - 1e-9));
  rank = std::clamp(rank, 1L, k);
  const long threshold = sorted[static_cast<std::size_t>(rank - 1)];

  std::set<std::string> selected;
  for (const auto& [item, n] : counts)
    if (n > threshold) selected.insert(item);
  return selected;
}

std::map<std::string, Status> subject_statuses(const TransactionLog& log) {
  std::map<std::string, Status> statuses;
  for (const TransactionRecord& rec : log.records) {
    const auto [it, inserted] = statuses.emplace(rec.subject_id, rec.status);
    if (!inserted && it->second != rec.status)
      throw DataError("subject '" + rec.subject_id + "' has conflicting status values");
  }
  return statuses;
}

IndicatorDataset build_indicator_dataset(const TransactionLog& log,
                                         const std::set<std::string>& items,
                                         bool include_status) {
  if (items.empty()) throw std::invalid_argument("empty item set");
  for (const std::string& item : items)
    if (log.item_universe.count(item) == 0)
      throw std::invalid_argument("item '" + item + "' not in the log's item universe");

  const FirstVisits visits = deduplicate(log);

  IndicatorDataset ds;
  ds.items.assign(items.begin(), items.end());  // std::set iterates sorted
  ds.indicators =
      IndicatorMatrix::Zero(static_cast<Eigen::Index>(visits.size()), ds.item_count());

  Eigen::Index row = 0;
  for (const auto& [subject, per_item] : visits) {  // std::map iterates sorted
    for (const auto& [item, date] : per_item) {
      const auto it = items.find(item);
      if (it == items.end()) continue;  // non-main item: row may stay all zero
      const auto col = static_cast<Eigen::Index>(std::distance(items.begin(), it));
      ds.indicators(row, col) = 1;
    }
    ++row;
  }

  if (include_status) {
    const std::map<std::string, Status> statuses = subject_statuses(log);
    StatusVector status(static_cast<Eigen::Index>(visits.size()));
    row = 0;
    for (const auto& [subject, per_item] : visits)
      status(row++) = static_cast<std::uint8_t>(statuses.at(subject));
    ds.status = std::move(status);
  }
  return ds;
}

}  // namespace itemnet
