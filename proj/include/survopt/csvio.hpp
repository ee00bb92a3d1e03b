#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace survopt::csvio {

// Shortest decimal string that round-trips the double (to_chars); integral
// values come out without an exponent or trailing zeros.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// LF line endings, '.' decimal separator, no quoting (cells must not
// contain commas or newlines; violations throw std::logic_error).
void write_csv(const std::filesystem::path& path, const Table& t);

// Strict reader for the writer's dialect. Ragged rows or an unreadable
// file throw std::runtime_error naming the line.
Table read_csv(const std::filesystem::path& path);

// Reproduce-or-document comparison against a reference table. The
// reference carries the computed table's header plus a trailing `flag`
// column; each row is flagged PASS (must match within tol) or DOC (the
// printed value is contradicted by the oracle — the computed value stands
// and the mismatch is reported, not failed). Reference cells holding "-"
// have no printed counterpart and are skipped.
struct CellDiff {
  std::string row_id;   // first column of the row
  std::string column;
  std::string computed;
  std::string reference;
  double rel_err = 0.0;  // |c - r| / |r| (or /1 when r = 0); NaN for text cells
  std::string flag;      // PASS or DOC
  bool ok = true;        // false only for failed PASS cells
};

struct DiffReport {
  std::vector<CellDiff> cells;
  int pass = 0;
  int doc = 0;
  int fail = 0;
  bool ok() const { return fail == 0; }
};

// Structural mismatch (header, row count, row ids, unknown flag) throws
// std::runtime_error; cell-level disagreement is reported, not thrown.
DiffReport diff_tables(const Table& computed, const Table& reference,
                       double tol);

std::string render_report(const std::string& title, const DiffReport& r,
                          double tol);

}  // namespace survopt::csvio
