// Copyright 2026 The wl1nmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wl1nmf/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace wl1nmf {
namespace {

[[noreturn]] void fail(const std::string& source, long line,
                       const std::string& msg) {
  std::ostringstream s;
  s << source << ":" << line << ": " << msg;
  throw DataError(s.str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    const std::size_t start = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

template <class T>
bool parse_int(std::string_view s, T& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool next_line(std::istream& in, std::string& line, long& number) {
  if (!std::getline(in, line)) return false;
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open for reading");
  return in;
}

template <class Fn>
void write_file(const std::string& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open for writing");
  fn(out);
  out.flush();
  if (!out) throw DataError(path + ": write failed");
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

SparseNonnegMatrix parse_matrix_market(std::istream& in,
                                       const std::string& source) {
  std::string line;
  long number = 0;
  if (!next_line(in, line, number)) fail(source, 1, "empty file");
  const auto banner = split_ws(line);
  if (banner.size() != 5 || lower(banner[0]) != "%%matrixmarket" ||
      lower(banner[1]) != "matrix") {
    fail(source, number, "expected '%%MatrixMarket matrix <format> <field> <symmetry>'");
  }
  if (lower(banner[2]) != "coordinate") {
    fail(source, number, "only the coordinate format is supported");
  }
  const std::string field = lower(banner[3]);
  if (field != "real" && field != "integer" && field != "pattern") {
    fail(source, number, "unsupported field '" + std::string(banner[3]) + "'");
  }
  if (lower(banner[4]) != "general") {
    fail(source, number,
         "unsupported symmetry '" + std::string(banner[4]) + "' (only general)");
  }
  const bool pattern = field == "pattern";

  bool have_size = false;
  long long m = 0, n = 0, nnz = 0, seen = 0;
  std::vector<SparseNonnegMatrix::Triplet> triplets;
  while (next_line(in, line, number)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    const auto tok = split_ws(body);
    if (!have_size) {
      if (tok.size() != 3 || !parse_int(tok[0], m) || !parse_int(tok[1], n) ||
          !parse_int(tok[2], nnz) || m < 0 || n < 0 || nnz < 0) {
        fail(source, number, "malformed size line, expected 'm n nnz'");
      }
      if (m > INT32_MAX || n > INT32_MAX) fail(source, number, "dimensions too large");
      have_size = true;
      triplets.reserve(static_cast<std::size_t>(nnz));
      continue;
    }
    if (tok.size() != (pattern ? 2u : 3u)) {
      fail(source, number, pattern ? "expected 'i j'" : "expected 'i j value'");
    }
    long long i = 0, j = 0;
    if (!parse_int(tok[0], i) || !parse_int(tok[1], j)) {
      fail(source, number, "malformed index");
    }
    if (i < 1 || i > m || j < 1 || j > n) {
      fail(source, number, "index out of range");
    }
    double v = 1.0;
    if (!pattern) {
      bool ok;
      if (field == "integer") {
        long long iv = 0;
        ok = parse_int(tok[2], iv);
        v = static_cast<double>(iv);
      } else {
        ok = parse_double(tok[2], v);
      }
      if (!ok || !std::isfinite(v)) fail(source, number, "malformed value");
      if (v < 0.0) fail(source, number, "negative value");
    }
    if (++seen > nnz) fail(source, number, "more entries than declared");
    triplets.push_back({static_cast<Index>(i - 1), static_cast<Index>(j - 1), v});
  }
  if (!have_size) fail(source, number, "missing size line");
  if (seen != nnz) {
    std::ostringstream msg;
    msg << "declared " << nnz << " entries, found " << seen;
    fail(source, number, msg.str());
  }
  return SparseNonnegMatrix::FromTriplets(static_cast<Index>(m),
                                          static_cast<Index>(n),
                                          std::move(triplets));
}

SparseNonnegMatrix read_matrix_market(const std::string& path) {
  auto in = open_in(path);
  return parse_matrix_market(in, path);
}

void format_matrix_market(const SparseNonnegMatrix& x, std::ostream& out,
                          const std::vector<std::string>& comments) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  for (const auto& c : comments) out << "% " << c << "\n";
  out << x.rows() << " " << x.cols() << " " << x.nnz() << "\n";
  for (Index j = 0; j < x.cols(); ++j) {
    const auto rows = x.col_rows(j);
    const auto vals = x.col_values(j);
    for (std::size_t e = 0; e < rows.size(); ++e) {
      out << rows[e] + 1 << " " << j + 1 << " " << format_real(vals[e]) << "\n";
    }
  }
}

void write_matrix_market(const SparseNonnegMatrix& x, const std::string& path,
                         const std::vector<std::string>& comments) {
  write_file(path, [&](std::ostream& out) { format_matrix_market(x, out, comments); });
}

DenseMatrix parse_dense_csv(std::istream& in, const std::string& source) {
  std::string line;
  long number = 0;
  bool first = true;
  bool have_header = false;
  long long hm = 0, hn = 0;
  std::vector<std::vector<double>> rows;
  while (next_line(in, line, number)) {
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const auto tok = split_ws(body.substr(1));
      if (!first || tok.size() != 2 || !parse_int(tok[0], hm) ||
          !parse_int(tok[1], hn) || hm < 0 || hn < 0) {
        fail(source, number, "expected header '# m n' on the first line only");
      }
      have_header = true;
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view cell =
          body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - start);
      double v = 0.0;
      if (!parse_double(cell, v) || !std::isfinite(v)) {
        fail(source, number, "malformed number '" + std::string(trim(cell)) + "'");
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(source, number, "row length differs from the first row");
    }
    rows.push_back(std::move(row));
  }
  const long long m = static_cast<long long>(rows.size());
  const long long n = rows.empty() ? (have_header ? hn : 0)
                                   : static_cast<long long>(rows.front().size());
  if (have_header && (hm != m || hn != n)) {
    std::ostringstream msg;
    msg << "header says " << hm << "x" << hn << ", data is " << m << "x" << n;
    fail(source, number, msg.str());
  }
  if (rows.empty()) return DenseMatrix(0, static_cast<Index>(n));
  return DenseMatrix::FromRows(rows);
}

DenseMatrix read_dense_csv(const std::string& path) {
  auto in = open_in(path);
  return parse_dense_csv(in, path);
}

void format_dense_csv(const DenseMatrix& a, std::ostream& out, bool header) {
  if (header) out << "# " << a.rows() << " " << a.cols() << "\n";
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ",";
      out << format_real(a(i, j));
    }
    out << "\n";
  }
}

void write_dense_csv(const DenseMatrix& a, const std::string& path,
                     bool header) {
  write_file(path, [&](std::ostream& out) { format_dense_csv(a, out, header); });
}

void format_trace_csv(const SolveTrace& trace, std::ostream& out) {
  out << "sweep,objective,seconds,w_sparsity,h_sparsity\n";
  for (const auto& r : trace.sweeps) {
    out << r.sweep << "," << format_real(r.objective) << ","
        << format_real(r.seconds) << "," << format_real(r.w_sparsity) << ","
        << format_real(r.h_sparsity) << "\n";
  }
}

void write_trace_csv(const SolveTrace& trace, const std::string& path) {
  write_file(path, [&](std::ostream& out) { format_trace_csv(trace, out); });
}

}  // namespace wl1nmf
