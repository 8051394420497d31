#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bck/enumeration.hpp"
#include "bck/json_io.hpp"
#include "bck/table_io.hpp"

namespace bck {

namespace fs = std::filesystem;
using nlohmann::json;

// FNV-1a over the row-major cells.
std::string table_hash(std::span<const Element> cells) {
    std::uint64_t h = 1469598103934665603ULL;
    for (Element v : cells) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xFFu;
            h *= 1099511628211ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void save_catalog(const Catalog& catalog, const std::string& dir) {
    fs::create_directories(dir);
    json entries = json::array();
    for (const auto& e : catalog.entries) {
        const std::string file = table_hash(e.algebra.cells()) + ".txt";
        write_table_file((fs::path(dir) / file).string(), e.algebra);
        json j = to_json(e);
        j["file"] = file;
        entries.push_back(std::move(j));
    }
    json index = {{"order", catalog.order},
                  {"count", catalog.entries.size()},
                  {"count_source", "computed by exhaustive enumeration"},
                  {"entries", entries}};
    std::ofstream out(fs::path(dir) / "index.json");
    if (!out) throw Error("cannot write catalog index in '" + dir + "'");
    out << index.dump(2) << '\n';
}

Catalog load_catalog(const std::string& dir) {
    std::ifstream in(fs::path(dir) / "index.json");
    if (!in) throw Error("no catalog index in '" + dir + "'");
    json index;
    try {
        index = json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(std::string("bad catalog index: ") + ex.what());
    }
    const auto n = index.at("order").get<std::size_t>();
    std::vector<Cells> tables;
    for (const auto& j : index.at("entries")) {
        const auto file = j.at("file").get<std::string>();
        auto parsed = read_table_file((fs::path(dir) / file).string());
        if (parsed.order != n) throw Error("catalog entry '" + file + "' has the wrong order");
        BckAlgebra a = BckAlgebra::from_table(parsed.order, parsed.table);
        Cells cells(a.cells().begin(), a.cells().end());
        if (table_hash(cells) + ".txt" != file) throw Error("catalog entry '" + file + "' does not match its hash");
        if (canonical_form(a) != cells) throw Error("catalog entry '" + file + "' is not in canonical form");
        tables.push_back(std::move(cells));
    }
    if (tables.size() != index.at("count").get<std::size_t>()) throw Error("catalog count mismatch");
    return catalog_from_tables(n, tables);
}

}  // namespace bck
