#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using dodgson::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DODGSON_FIXTURES) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("dodgson_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("det on the worked examples") {
    const Result r1 = invoke({"det", fixture("example1.txt"), "--method", "condense"});
    CHECK(r1.code == 0);
    CHECK(r1.out == "-82\n");

    const Result r2 = invoke({"det", fixture("example2.txt"), "--method", "auto", "--trace"});
    CHECK(r2.code == 0);
    CHECK(first_line(r2.out) == "-163");
    CHECK(r2.out.find("method: condense") != std::string::npos);
    CHECK(r2.out.find("sign: -1") != std::string::npos);
    CHECK(r2.out.find("mitigation: 3 operations") != std::string::npos);

    CHECK(invoke({"det", fixture("one.txt")}).out == "7\nmethod: condense\n");
}

TEST_CASE("det op counts") {
    const Result r = invoke({"det", fixture("example1.txt"), "--method", "condense", "--count-ops"});
    CHECK(r.out == "-82\nmults: 28\ndivs: 5\nadds: 14\n");
    const Result c = invoke({"det", fixture("example1.txt"), "--method", "cofactor", "--count-ops"});
    CHECK(c.out.find("mults: 40\n") != std::string::npos);
}

TEST_CASE("explicit methods print identical output on every exact fixture") {
    for (const char* name : {"example1.txt", "example2.txt", "one.txt", "rational.txt"}) {
        CAPTURE(name);
        const Result c = invoke({"det", fixture(name), "--method", "condense"});
        CHECK(c.code == 0);
        CHECK(invoke({"det", fixture(name), "--method", "cofactor"}).out == c.out);
        CHECK(invoke({"det", fixture(name), "--method", "bareiss"}).out == c.out);
    }
}

TEST_CASE("det exit codes") {
    CHECK(invoke({"det", fixture("zero_block.txt"), "--method", "condense"}).code == 4);
    const Result fallback = invoke({"det", fixture("zero_block.txt")});
    CHECK(fallback.code == 0);
    CHECK(first_line(fallback.out) == "0");
    CHECK(fallback.out.find("method: bareiss (fallback:") != std::string::npos);

    CHECK(invoke({"det", temp_file("rect.txt", "1 2 3\n4 5 6\n")}).code == 3);
    const Result bad = invoke({"det", temp_file("bad.txt", "1 2\n3 zz\n")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(bad.err.find("zz") != std::string::npos);
    CHECK(invoke({"det", fixture("no_such_file.txt")}).code == 2);
    CHECK(invoke({"det", fixture("example1.txt"), "--method", "magic"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("bench") {
    const Result a = invoke({"bench", "--sizes", "5..5", "--trials", "20", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out.find("0.3610") != std::string::npos);
    CHECK(invoke({"bench", "--sizes", "5..5", "--trials", "20", "--seed", "42"}).out == a.out);
    CHECK(invoke({"bench", "--sizes", "2..5"}).code == 2);
    CHECK(invoke({"bench", "--sizes", "3..11"}).code == 2);
    CHECK(invoke({"bench", "--sizes", "6..4"}).code == 2);
    CHECK(invoke({"bench", "--sizes", "x"}).code == 2);
    CHECK(invoke({"bench", "--trials", "0"}).code == 2);
}

TEST_CASE("huckel") {
    const Result h3 = invoke({"huckel", "--chain", "3", "--alpha", "-1.0", "--beta", "-0.5", "--show-poly"});
    CHECK(h3.code == 0);
    CHECK(h3.out.find("polynomial: x^3 - 2*x\n") != std::string::npos);
    CHECK(h3.out.find("symbolic: (α−E)³ − 2β²(α−E)\n") != std::string::npos);
    CHECK(h3.out.find("energies:\n-1.70710678118655\n-1\n-0.292893218813453\n") != std::string::npos);
    CHECK(h3.err.empty());

    const Result h1 = invoke({"huckel", "--chain", "1"});
    CHECK(h1.code == 0);
    CHECK(h1.out.find("energies:\n0\n") != std::string::npos);

    const Result h2 = invoke({"huckel", "--chain", "2", "--alpha", "0", "--beta", "1"});
    CHECK(h2.out.find("energies:\n-1\n1\n") != std::string::npos);
    CHECK(h2.err.find("warning") != std::string::npos);

    const Result edges = invoke({"huckel", "--edges", fixture("allyl.txt"), "--alpha", "-1.0", "--beta", "-0.5"});
    CHECK(edges.out == invoke({"huckel", "--chain", "3", "--alpha", "-1.0", "--beta", "-0.5"}).out);

    CHECK(invoke({"huckel"}).code == 2);
    CHECK(invoke({"huckel", "--chain", "2", "--beta", "0"}).code == 2);
    CHECK(invoke({"huckel", "--chain", "2", "--edges", fixture("allyl.txt")}).code == 2);
    CHECK(invoke({"huckel", "--edges", temp_file("bad_pi.txt", "atoms 2\nedge 1 5\n")}).code == 2);
}
