#include "survopt/csvio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace survopt::csvio {

namespace {

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

void check_cell(const std::string& cell) {
  if (cell.find(',') != std::string::npos ||
      cell.find('\n') != std::string::npos ||
      cell.find('\r') != std::string::npos)
    throw std::logic_error("csv cell contains a separator: " + cell);
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    check_cell(row[i]);
    if (i) os << ',';
    os << row[i];
  }
  os << '\n';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_csv(const std::filesystem::path& path, const Table& t) {
  std::ofstream os(path, std::ios::binary);  // binary keeps LF endings
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  write_row(os, t.header);
  for (const auto& row : t.rows) {
    if (row.size() != t.header.size())
      throw std::logic_error("row width does not match header in " +
                             path.string());
    write_row(os, row);
  }
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
  Table t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && is.eof()) break;
    auto fields = split_fields(line);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size())
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected " + std::to_string(t.header.size()) +
                               " fields, got " + std::to_string(fields.size()));
    t.rows.push_back(std::move(fields));
  }
  if (t.header.empty())
    throw std::runtime_error("empty csv: " + path.string());
  return t;
}

DiffReport diff_tables(const Table& computed, const Table& reference,
                       double tol) {
  if (reference.header.size() != computed.header.size() + 1 ||
      reference.header.back() != "flag")
    throw std::runtime_error("reference header must be the computed header "
                             "plus a trailing flag column");
  for (std::size_t c = 0; c < computed.header.size(); ++c)
    if (reference.header[c] != computed.header[c])
      throw std::runtime_error("header mismatch in column " +
                               std::to_string(c + 1) + ": " +
                               computed.header[c] + " vs " +
                               reference.header[c]);
  if (reference.rows.size() != computed.rows.size())
    throw std::runtime_error("row count mismatch: computed " +
                             std::to_string(computed.rows.size()) +
                             ", reference " +
                             std::to_string(reference.rows.size()));

  DiffReport rep;
  for (std::size_t r = 0; r < computed.rows.size(); ++r) {
    const auto& crow = computed.rows[r];
    const auto& rrow = reference.rows[r];
    const std::string& flag = rrow.back();
    if (flag != "PASS" && flag != "DOC")
      throw std::runtime_error("unknown flag '" + flag + "' in reference row " +
                               std::to_string(r + 1));
    if (crow.at(0) != rrow.at(0))
      throw std::runtime_error("row id mismatch at row " +
                               std::to_string(r + 1) + ": " + crow[0] +
                               " vs " + rrow[0]);
    for (std::size_t c = 1; c < crow.size(); ++c) {
      if (rrow[c] == "-") continue;  // nothing published for this cell
      CellDiff cell;
      cell.row_id = crow[0];
      cell.column = computed.header[c];
      cell.computed = crow[c];
      cell.reference = rrow[c];
      cell.flag = flag;
      const auto cv = parse_double(crow[c]);
      const auto rv = parse_double(rrow[c]);
      bool agrees;
      if (cv && rv) {
        const double den = std::abs(*rv) > 0.0 ? std::abs(*rv) : 1.0;
        cell.rel_err = std::abs(*cv - *rv) / den;
        agrees = cell.rel_err <= tol;
      } else {
        cell.rel_err = std::numeric_limits<double>::quiet_NaN();
        agrees = crow[c] == rrow[c];
      }
      if (flag == "PASS") {
        cell.ok = agrees;
        if (agrees)
          ++rep.pass;
        else
          ++rep.fail;
      } else {
        cell.ok = true;  // documented discrepancy, computed value stands
        ++rep.doc;
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

std::string render_report(const std::string& title, const DiffReport& r,
                          double tol) {
  std::ostringstream os;
  os << title << ": " << r.pass << " PASS, " << r.doc << " DOC, " << r.fail
     << " FAIL (tolerance " << format_double(tol * 100.0) << "%)\n";
  for (const auto& cell : r.cells) {
    char rel[32];
    if (std::isnan(cell.rel_err))
      std::snprintf(rel, sizeof rel, "text");
    else
      std::snprintf(rel, sizeof rel, "rel %.2e", cell.rel_err);
    os << "  " << cell.row_id << " [" << cell.column
       << "]: computed=" << cell.computed << " reference=" << cell.reference
       << " " << rel << " ";
    if (cell.flag == "DOC")
      os << "DOC (published value contradicted by the checked model; "
            "computed value stands)";
    else
      os << (cell.ok ? "PASS" : "FAIL");
    os << '\n';
  }
  return os.str();
}

}  // namespace survopt::csvio
