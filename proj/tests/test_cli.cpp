#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run bck_run(std::vector<std::string> args) {
    args.insert(args.begin(), "bck");
    std::ostringstream out, err;
    int code = bck::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BCK_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("verify") {
    CHECK(bck_run({"verify", data("pi.txt")}).code == 0);
    auto bad = bck_run({"verify", data("bad_bck4.txt")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("BCK4") != std::string::npos);
    CHECK(bck_run({"verify", data("empty.txt")}).code == 2);
    CHECK(bck_run({"verify", data("short_row.txt")}).code == 2);
    CHECK(bck_run({"verify", data("no_such_file.txt")}).code == 2);
}

TEST_CASE("props") {
    auto r = bck_run({"props", data("tc.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("commutative=yes") != std::string::npos);
    CHECK(r.out.find("positive_implicative=no") != std::string::npos);
    auto j = nlohmann::json::parse(bck_run({"--format", "json", "props", data("pi.txt")}).out);
    CHECK(j["command"] == "props");
    CHECK(j["results"]["commutative"] == false);
    CHECK(j["results"]["positive_implicative"] == true);
}

TEST_CASE("degree") {
    auto r = bck_run({"degree", data("pi.txt"), "--kind", "cd"});
    CHECK(r.code == 0);
    CHECK(r.out.find("7/9 (count=7 total=9)") != std::string::npos);
    CHECK(bck_run({"degree", data("tc.txt"), "--eq", "x . y = (x . y) . y"}).out.find("8/9") != std::string::npos);
    auto j = nlohmann::json::parse(bck_run({"--format", "json", "degree", data("pi.txt"), "--kind", "emd"}).out);
    CHECK(j["results"]["degree"]["reduced"] == "1/1");
    CHECK(j["results"]["outside_hypothesis"] == true);
    CHECK(bck_run({"degree", data("pi.txt")}).code == 2);
    CHECK(bck_run({"degree", data("pi.txt"), "--kind", "cd", "--eq", "x = x"}).code == 2);
    CHECK(bck_run({"degree", data("pi.txt"), "--eq", "x + y = y"}).code == 2);
    CHECK(bck_run({"degree", data("union22.txt"), "--kind", "dnd"}).code == 1);
}

TEST_CASE("family and construct") {
    auto m3 = bck_run({"family", "--name", "M", "--n", "3"});
    CHECK(m3.code == 0);
    CHECK(m3.out == "3\n0 0 0\n1 0 0\n2 2 0\n");
    auto d = bck_run({"family", "--name", "D", "--n", "4"});
    CHECK(d.out.find("4 2 1 1 0") != std::string::npos);
    CHECK(bck_run({"family", "--name", "B", "--n", "2"}).code == 2);
    CHECK(bck_run({"family", "--name", "Z", "--n", "4"}).code == 2);

    auto dir = std::filesystem::temp_directory_path() / "bck_cli_test";
    std::filesystem::create_directories(dir);
    const auto two = (dir / "two.txt").string(), three = (dir / "c3.txt").string(), prod = (dir / "p.txt").string();
    CHECK(bck_run({"family", "--name", "C", "--n", "2", "--out", two}).code == 0);
    CHECK(bck_run({"family", "--name", "C", "--n", "3", "--out", three}).code == 0);
    CHECK(bck_run({"construct", "union", two, two}).out == "3\n0 0 0\n1 0 1\n2 2 0\n");
    CHECK(bck_run({"construct", "iseki", two}).out == "3\n0 0 0\n1 0 0\n2 2 0\n");
    CHECK(bck_run({"construct", "product", two, three, "--out", prod}).code == 0);
    auto dec = bck_run({"decompose", prod});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("{2,3}") != std::string::npos);
    CHECK(bck_run({"construct", "iseki", two, two}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("decompose") {
    CHECK(bck_run({"decompose", data("tc.txt")}).out.find("{3}") != std::string::npos);
    auto r = bck_run({"decompose", data("pi.txt")});
    CHECK(r.code == 1);
    CHECK(r.out.find("NotCommutative") != std::string::npos);
}

TEST_CASE("gap") {
    auto r = bck_run({"gap", "--eq", "EM", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("candidate gap (computed range only): 1/3") != std::string::npos);
    auto t = bck_run({"gap", "--eq", "x & y = y & x", "--max-n", "10"});
    CHECK(t.out.find("every d_n = 1") != std::string::npos);
    auto j = nlohmann::json::parse(bck_run({"--format", "json", "gap", "--eq", "I", "--max-n", "6"}).out);
    CHECK(j["results"]["sequence"].size() == 5);
    CHECK(bck_run({"gap", "--eq", "EM", "--max-n", "2"}).code == 2);
}

TEST_CASE("enumerate, spectrum, audit") {
    auto e = bck_run({"enumerate", "--order", "3"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("order 3: 3 algebras", 0) == 0);
    auto s = bck_run({"spectrum", "--order", "4", "--kind", "dnd"});
    CHECK(s.code == 0);
    CHECK(s.out.find("missing:  {}") != std::string::npos);
    auto dir = (std::filesystem::temp_directory_path() / "bck_cli_catalog").string();
    std::filesystem::remove_all(dir);
    CHECK(bck_run({"enumerate", "--order", "4", "--out", dir}).code == 0);
    auto a = bck_run({"audit", "--order", "4", "--catalog", dir});
    CHECK(a.code == 1);  // the catalog holds counterexamples to two of the audited statements
    CHECK(a.out.find("counterexample") != std::string::npos);
    CHECK(bck_run({"audit", "--order", "3", "--catalog", dir}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("jobs flag leaves output unchanged") {
    auto one = bck_run({"--format", "json", "enumerate", "--order", "4"});
    auto many = bck_run({"--format", "json", "--jobs", "4", "enumerate", "--order", "4"});
    CHECK(one.out == many.out);
}

TEST_CASE("usage errors") {
    CHECK(bck_run({}).code == 2);
    CHECK(bck_run({"frobnicate"}).code == 2);
    CHECK(bck_run({"--format", "xml", "verify", data("pi.txt")}).code == 2);
    CHECK(bck_run({"--help"}).code == 0);
}

TEST_CASE("decompose on an unbounded commutative algebra") {
    auto r = bck_run({"decompose", data("union22.txt")});
    CHECK(r.code == 1);
    CHECK(r.err.find("no product of chains") != std::string::npos);
}
