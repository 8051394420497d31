#include "bck/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace bck {

namespace {

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
        if (ec != std::errc{} || ptr != line.data() + j)
            throw ParseError("invalid integer '" + line.substr(i, j - i) + "' on line " + std::to_string(line_no), i);
        out.push_back(v);
        i = j;
    }
    return out;
}

}  // namespace

ParsedTable read_table(std::istream& in) {
    std::vector<std::pair<std::size_t, std::vector<long long>>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        auto ints = parse_ints(line, line_no);
        if (ints.empty()) continue;
        rows.emplace_back(line_no, std::move(ints));
    }
    if (rows.empty()) throw ParseError("empty table input", 0);
    if (rows[0].second.size() != 1 || rows[0].second[0] < 1)
        throw ParseError("first line must hold the order n >= 1 (line " + std::to_string(rows[0].first) + ")", 0);
    ParsedTable out;
    out.order = static_cast<std::size_t>(rows[0].second[0]);
    if (rows.size() - 1 != out.order)
        throw ParseError("expected " + std::to_string(out.order) + " table rows, found " +
                             std::to_string(rows.size() - 1),
                         0);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].second.size() != out.order)
            throw ParseError("line " + std::to_string(rows[r].first) + " has " +
                                 std::to_string(rows[r].second.size()) + " entries, expected " +
                                 std::to_string(out.order),
                             0);
        out.table.push_back(std::move(rows[r].second));
    }
    return out;
}

ParsedTable read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_table(in);
}

void write_table(std::ostream& out, const BckAlgebra& a) {
    const std::size_t n = a.order();
    out << n << '\n';
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << a.op(x, y);
        out << '\n';
    }
}

std::string format_table(const BckAlgebra& a) {
    std::ostringstream os;
    write_table(os, a);
    return os.str();
}

void write_table_file(const std::string& path, const BckAlgebra& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_table(out, a);
    if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace bck
