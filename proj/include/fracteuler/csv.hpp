#pragma once

// Plain CSV I/O. Lines starting with '#' are metadata comments. Matrices
// are row-major after a "dim,<n>" header line.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "fracteuler/core.hpp"
#include "fracteuler/graph_laplacian.hpp"

namespace fracteuler::csv {

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Shortest round-trip decimal form, so repeated runs are byte-identical.
[[nodiscard]] inline std::string format(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_number(std::string_view field, double& out) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc() && res.ptr == field.data() + field.size();
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Non-comment, non-blank lines.
inline std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(t);
  }
  return lines;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace detail

[[nodiscard]] inline Matrix read_matrix(std::istream& in) {
  const auto lines = detail::data_lines(in);
  if (lines.empty()) throw ParseError("matrix CSV is empty");
  const auto header = detail::split(lines[0]);
  double dim_value = 0.0;
  if (header.size() != 2 || detail::trim(header[0]) != "dim" ||
      !detail::parse_number(header[1], dim_value) || dim_value < 1.0 ||
      dim_value != static_cast<double>(static_cast<long>(dim_value))) {
    throw ParseError("matrix CSV must start with a 'dim,<n>' header");
  }
  const auto n = static_cast<Eigen::Index>(dim_value);
  if (static_cast<Eigen::Index>(lines.size()) != n + 1) {
    throw ParseError(fracteuler::detail::concat("matrix CSV declares dim ", n, " but has ",
                                                lines.size() - 1, " rows"));
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto fields = detail::split(lines[static_cast<std::size_t>(i) + 1]);
    if (static_cast<Eigen::Index>(fields.size()) != n) {
      throw ParseError(fracteuler::detail::concat("row ", i, " has ", fields.size(), " entries, expected ", n));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      double v = 0.0;
      if (!detail::parse_number(fields[static_cast<std::size_t>(j)], v)) {
        throw ParseError(fracteuler::detail::concat("entry (", i, ", ", j, ") is not a number"));
      }
      m(i, j) = v;
    }
  }
  return m;
}

[[nodiscard]] inline Matrix read_matrix(const std::string& path) {
  auto in = detail::open_input(path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
  out << "dim," << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format(m(i, j));
    }
    out << '\n';
  }
}

/// Every number in the file, row by row. A non-numeric first line is
/// treated as a column header and skipped.
[[nodiscard]] inline Vector read_vector(std::istream& in) {
  const auto lines = detail::data_lines(in);
  std::vector<double> values;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto fields = detail::split(lines[k]);
    for (const auto& f : fields) {
      double v = 0.0;
      if (detail::parse_number(f, v)) {
        values.push_back(v);
      } else if (k != 0) {
        throw ParseError(fracteuler::detail::concat("line ", k + 1, ": '", std::string(f), "' is not a number"));
      } else {
        values.clear();
        break;
      }
    }
  }
  if (values.empty()) throw ParseError("vector CSV has no numbers");
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

[[nodiscard]] inline Vector read_vector(const std::string& path) {
  auto in = detail::open_input(path);
  return read_vector(in);
}

/// Row writer that joins fields with commas.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(&out) {}

  void comment(const std::string& text) { *out_ << "# " << text << '\n'; }

  void header(const std::vector<std::string>& columns) { row(columns); }

  template <class... Fields>
  void row_of(const Fields&... fields) {
    bool first = true;
    ((*out_ << (first ? "" : ",") << field(fields), first = false), ...);
    *out_ << '\n';
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k > 0) *out_ << ',';
      *out_ << fields[k];
    }
    *out_ << '\n';
  }

 private:
  static std::string field(double v) { return format(v); }
  static std::string field(const std::string& s) { return s; }
  static std::string field(const char* s) { return s; }
  template <class Int>
    requires std::is_integral_v<Int>
  static std::string field(Int v) {
    return std::to_string(v);
  }

  std::ostream* out_;
};

}  // namespace fracteuler::csv
