#include "scartest/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace scartest {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(std::string s) {
  const auto issp = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  std::size_t b = 0, e = s.size();
  while (b < e && issp(s[b])) ++b;
  while (e > b && issp(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_number(const std::string& cell, std::size_t line_no,
                    const std::string& col) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
    throw std::invalid_argument("csv: non-numeric cell '" + cell +
                                "' in column '" + col + "' at line " +
                                std::to_string(line_no));
  }
  if (!std::isfinite(v)) {
    throw std::invalid_argument("csv: non-finite value in column '" + col +
                                "' at line " + std::to_string(line_no));
  }
  return v;
}

std::uint8_t parse_indicator(const std::string& cell, std::size_t line_no,
                             const std::string& col) {
  const double v = parse_number(cell, line_no, col);
  if (v == 0.0) return 0;
  if (v == 1.0) return 1;
  throw std::invalid_argument("csv: invalid label '" + cell + "' in column '" +
                              col + "' at line " + std::to_string(line_no) +
                              " (expected 0 or 1)");
}

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

RawTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("csv: cannot open file '" + path + "'");
  RawTable t;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("csv: missing header row in '" + path + "'");
  }
  t.header = split_line(line);
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size()) {
      throw std::invalid_argument(
          "csv: row with " + std::to_string(cells.size()) + " fields, header has " +
          std::to_string(t.header.size()) + " (line " +
          std::to_string(t.rows.size() + 2) + ")");
    }
    t.rows.push_back(std::move(cells));
  }
  if (t.rows.empty()) throw std::invalid_argument("csv: no data rows in '" + path + "'");
  return t;
}

std::size_t find_column(const RawTable& t, const std::string& name) {
  for (std::size_t j = 0; j < t.header.size(); ++j) {
    if (t.header[j] == name) return j;
  }
  throw std::invalid_argument("csv: no column named '" + name + "'");
}

}  // namespace

PUDataset load_pu_csv(const std::string& path, const std::string& label_column) {
  const RawTable t = read_table(path);
  const std::size_t sj = find_column(t, label_column);
  const std::size_t n = t.rows.size();
  const std::size_t d = t.header.size() - 1;
  if (d == 0) throw std::invalid_argument("csv: no feature columns");

  PUDataset ds;
  ds.features = FeatureMatrix(n, d);
  ds.s.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t f = 0;
    for (std::size_t j = 0; j < t.header.size(); ++j) {
      if (j == sj) {
        ds.s[i] = parse_indicator(t.rows[i][j], i + 2, t.header[j]);
      } else {
        ds.features(i, f++) = parse_number(t.rows[i][j], i + 2, t.header[j]);
      }
    }
  }
  ds.validate();
  return ds;
}

OracleDataset load_oracle_csv(const std::string& path, const std::string& y_column,
                              const std::string& s_column) {
  const RawTable t = read_table(path);
  const std::size_t yj = find_column(t, y_column);
  std::size_t sj = t.header.size();  // sentinel: absent
  if (!s_column.empty()) sj = find_column(t, s_column);

  const std::size_t n = t.rows.size();
  const std::size_t d = t.header.size() - 1 - (sj < t.header.size() ? 1 : 0);
  if (d == 0) throw std::invalid_argument("csv: no feature columns");

  OracleDataset ds;
  ds.features = FeatureMatrix(n, d);
  ds.y.resize(n);
  if (sj < t.header.size()) ds.s.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t f = 0;
    for (std::size_t j = 0; j < t.header.size(); ++j) {
      if (j == yj) {
        ds.y[i] = parse_indicator(t.rows[i][j], i + 2, t.header[j]);
      } else if (j == sj) {
        ds.s[i] = parse_indicator(t.rows[i][j], i + 2, t.header[j]);
      } else {
        ds.features(i, f++) = parse_number(t.rows[i][j], i + 2, t.header[j]);
      }
    }
  }
  ds.validate();
  return ds;
}

namespace {

void write_header(std::ostream& out, std::size_t d, const char* extra1,
                  const char* extra2) {
  for (std::size_t j = 0; j < d; ++j) out << 'x' << (j + 1) << ',';
  out << extra1;
  if (extra2) out << ',' << extra2;
  out << '\n';
}

}  // namespace

void write_pu_csv(const std::string& path, const PUDataset& ds) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  write_header(out, ds.features.cols(), "s", nullptr);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.features.cols(); ++j) {
      out << format_double(ds.features(i, j)) << ',';
    }
    out << int(ds.s[i]) << '\n';
  }
}

void write_oracle_csv(const std::string& path, const OracleDataset& ds) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  const bool with_s = ds.has_labels();
  write_header(out, ds.features.cols(), with_s ? "s" : "y", with_s ? "y" : nullptr);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.features.cols(); ++j) {
      out << format_double(ds.features(i, j)) << ',';
    }
    if (with_s) out << int(ds.s[i]) << ',';
    out << int(ds.y[i]) << '\n';
  }
}

}  // namespace scartest
