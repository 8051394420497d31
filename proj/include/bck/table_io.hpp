#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "bck/algebra.hpp"

namespace bck {

/// Cayley-table text format: a line with n, then n lines of n space-separated
/// integers (line x, column y holds x.y). Lines starting with '#' are skipped.
struct ParsedTable {
    std::size_t order = 0;
    RawTable table;
};

/// Throws ParseError on empty input, bad tokens, or a wrong number of rows/columns.
ParsedTable read_table(std::istream& in);
ParsedTable read_table_file(const std::string& path);

void write_table(std::ostream& out, const BckAlgebra& a);
std::string format_table(const BckAlgebra& a);
void write_table_file(const std::string& path, const BckAlgebra& a);

}  // namespace bck
