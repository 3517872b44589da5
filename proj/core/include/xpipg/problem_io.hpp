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

// Reader and writer for the line-oriented `conicqp v1` problem format. See
// docs/conicqp_format.md for the grammar. Numbers are written with %.17g so a
// write/read/write cycle is byte-identical.

#ifndef XPIPG_PROBLEM_IO_HPP
#define XPIPG_PROBLEM_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "xpipg/problem.hpp"

namespace xpipg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Shortest text that round-trips through strtod: "%.17g", "inf", "-inf".
std::string format_real(double value);

void write_problem(std::ostream& out, const ConicQP& qp);
std::string write_problem(const ConicQP& qp);

// Throws ParseError carrying the 1-based line number of the first offending
// line. Structural validity only; call validate() for the semantic checks.
ConicQP read_problem(std::istream& in);
ConicQP read_problem_file(const std::string& path);

}  // namespace xpipg

#endif  // XPIPG_PROBLEM_IO_HPP
