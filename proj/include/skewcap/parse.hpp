#pragma once

#include "skewcap/opmatrix.hpp"
#include "skewcap/weyl.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace skewcap {

// Carries 1-based position information for diagnostics.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

// Grammar: sum of terms; a term is a product of factors (juxtaposition or
// '*'); factors are rationals, u, x[i,j], d[i,j], or parenthesized elements,
// each with an optional '^' power. Products multiply in the Weyl algebra.
WeylElement parse_weyl_element(int n, const std::string& text);

UPoly parse_upoly(const std::string& text);

// Line-oriented matrix file: optional '#' comments, a required "dim N" line,
// an optional "vars M" line, then one "i j <expression>" line per explicit
// entry. When "vars" is absent the generator indices seen in the expressions
// determine the coefficient ring.
struct ParsedMatrix {
    int dim;
    int n;
    std::vector<std::tuple<int, int, WeylElement>> entries;
};
ParsedMatrix parse_matrix_file(const std::string& contents);

// Fill the unset mirror entries: X[j][i] = -X[i][j] (alternating) or
// X[-j][-i] = -X[i][j] (anti-alternating). Explicit entries always win.
OpMatrix complete_alternating(const ParsedMatrix& pm);
OpMatrix complete_anti_alternating(const ParsedMatrix& pm);

}  // namespace skewcap
