#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rep/cohomology.hpp"
#include "rep/ncalg.hpp"
#include "rep/repscheme.hpp"

namespace rep {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_), column(column_) {}
};

// A parsed algebra file: the presentation plus its optional header name.
struct AlgebraFile {
    std::string name;
    Presentation presentation;
};

// Grammar:
//   file      := [ "algebra" IDENT ] "generators" IDENT+ [ "relations" poly-line* "end" ]
//   poly-line := one noncommutative polynomial; '*' concatenation, '^' positive
//                integer powers of single generators, integer or p/q coefficients.
// '#' starts a comment. The relations section is optional (free algebra).
AlgebraFile parse_algebra(const std::string& text);

std::string print_algebra(const AlgebraFile& alg);

std::string nc_polynomial_to_string(const NCPolynomial& f,
                                    const std::vector<std::string>& names);

// Point file: n, then m blocks of n rows of n whitespace-separated rationals.
RepPoint parse_point(const std::string& text, int num_generators);

// Vector file: one row of whitespace-separated rationals.
std::vector<Rat> parse_vector(const std::string& text);

std::string print_point(const RepPoint& p);

// Resolution file:
//   rows R2 cols R
//   entry I J = coeff ( leftword | rightword ) [ + ... ]
// Words are '*'-joined generator names, '1' for the empty word. Omitted
// entries are zero.
ResolutionStep parse_resolution(const std::string& text, const Presentation& pres);

// Family file for scans: one "label: point-file-path" per line.
std::vector<std::pair<std::string, std::string>> parse_family(const std::string& text);

std::string comm_polynomial_to_string(const CommPolynomial& f,
                                      const std::vector<std::string>& names);

}  // namespace rep
