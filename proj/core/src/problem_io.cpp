// Copyright 2026 The xPIPG Authors
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

#include "xpipg/problem_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace xpipg {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_problem(std::ostream& out, const ConicQP& qp) {
  const auto write_matrix = [&](std::string_view name, const SparseMatrix& a) {
    const auto entries = a.triplets();
    out << name << ' ' << entries.size() << '\n';
    for (const Triplet& t : entries) {
      out << t.row << ' ' << t.col << ' ' << format_real(t.value) << '\n';
    }
  };
  const auto write_vector = [&](std::string_view name, const Vector& v) {
    out << name << '\n';
    for (Index i = 0; i < v.size(); ++i) out << format_real(v[i]) << '\n';
  };

  out << "conicqp v1\n";
  out << "n " << qp.num_variables() << '\n';
  out << "m " << qp.num_constraints() << '\n';
  write_matrix("P", qp.P);
  write_vector("q", qp.q);
  write_matrix("H", qp.H);
  write_vector("g", qp.g);
  write_vector("lower", qp.box.lower);
  write_vector("upper", qp.box.upper);
  out << "cone " << qp.cone.blocks.size() << '\n';
  for (const ConeBlock& b : qp.cone.blocks) {
    out << to_string(b.kind) << ' ' << b.dim << '\n';
  }
}

std::string write_problem(const ConicQP& qp) {
  std::ostringstream out;
  write_problem(out, qp);
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line split on single spaces; throws at end of input.
  std::vector<std::string> next(std::string_view expecting) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw ParseError(line_ + 1, "unexpected end of input, expected " +
                                      std::string(expecting));
    }
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t end = line.find(' ', start);
      const std::size_t stop = end == std::string::npos ? line.size() : end;
      fields.push_back(line.substr(start, stop - start));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    for (const std::string& f : fields) {
      if (f.empty()) fail("malformed line, expected " + std::string(expecting));
    }
    return fields;
  }

  void expect_end() {
    std::string line;
    if (std::getline(in_, line)) {
      ++line_;
      fail("trailing content after cone section");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, message);
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

Index parse_count(const LineReader& r, const std::string& text) {
  if (text.empty() || text.size() > 18) r.fail("invalid count '" + text + "'");
  Index value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') r.fail("invalid count '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

double parse_real(const LineReader& r, const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end != begin + text.size() || !std::isfinite(value)) {
    r.fail("invalid number '" + text + "'");
  }
  return value;
}

Index read_header_count(LineReader& r, std::string_view key) {
  const auto fields = r.next(key);
  if (fields.size() != 2 || fields[0] != key) {
    r.fail("expected '" + std::string(key) + " <count>'");
  }
  return parse_count(r, fields[1]);
}

SparseMatrix read_matrix(LineReader& r, std::string_view name, Index rows,
                         Index cols) {
  const Index count = read_header_count(r, name);
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(count));
  for (Index k = 0; k < count; ++k) {
    const auto fields = r.next("triplet 'r c v'");
    if (fields.size() != 3) r.fail("expected triplet 'r c v'");
    const Triplet t{parse_count(r, fields[0]), parse_count(r, fields[1]),
                    parse_real(r, fields[2])};
    if (t.row >= rows || t.col >= cols) {
      r.fail(std::string(name) + " entry out of range");
    }
    entries.push_back(t);
  }
  try {
    return SparseMatrix::from_triplets(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

Vector read_vector(LineReader& r, std::string_view name, Index size) {
  const auto header = r.next(name);
  if (header.size() != 1 || header[0] != name) {
    r.fail("expected section '" + std::string(name) + "'");
  }
  Vector v(size);
  for (Index i = 0; i < size; ++i) {
    const auto fields = r.next("a number");
    if (fields.size() != 1) r.fail("expected one number per line");
    v[i] = parse_real(r, fields[0]);
  }
  return v;
}

}  // namespace

ConicQP read_problem(std::istream& in) {
  LineReader r(in);
  const auto header = r.next("header");
  if (header.size() != 2 || header[0] != "conicqp" || header[1] != "v1") {
    r.fail("expected header 'conicqp v1'");
  }
  const Index n = read_header_count(r, "n");
  const Index m = read_header_count(r, "m");

  ConicQP qp;
  qp.P = read_matrix(r, "P", n, n);
  qp.q = read_vector(r, "q", n);
  qp.H = read_matrix(r, "H", m, n);
  qp.g = read_vector(r, "g", m);
  qp.box.lower = read_vector(r, "lower", n);
  qp.box.upper = read_vector(r, "upper", n);

  const Index blocks = read_header_count(r, "cone");
  for (Index k = 0; k < blocks; ++k) {
    const auto fields = r.next("cone block");
    if (fields.size() != 2) r.fail("expected '<kind> <dim>'");
    ConeBlock b;
    if (fields[0] == "zero") {
      b.kind = ConeKind::kZero;
    } else if (fields[0] == "nonneg") {
      b.kind = ConeKind::kNonneg;
    } else if (fields[0] == "soc") {
      b.kind = ConeKind::kSecondOrder;
    } else {
      r.fail("unknown cone kind '" + fields[0] + "'");
    }
    b.dim = parse_count(r, fields[1]);
    if (b.dim < 1) r.fail("cone block dimension must be positive");
    qp.cone.blocks.push_back(b);
  }
  if (qp.cone.dim() != m) r.fail("cone dimensions do not sum to m");
  r.expect_end();
  return qp;
}

ConicQP read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_problem(in);
}

}  // namespace xpipg
