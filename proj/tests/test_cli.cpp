#include "cli.hpp"

#include "linked/oracle.hpp"
#include "linked/profile_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace linked;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "linked");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("linked_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = (path / name).string();
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) { return read_file(path); }

} // namespace

TEST_CASE("check: K3 fixture is linked") {
    TempDir dir;
    const auto graph = dir.write("k3.edges", "0 1\n0 2\n1 2\n");
    const auto profile = dir.file("k3.txt");
    REQUIRE(run({"gen", "--model", "edges", "--graph", graph, "--out", profile}).code == 0);

    auto r = run({"check", profile, "--mode", "strong", "--witness"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: LINKED\n") != std::string::npos);
    CHECK(r.out.find("witness: a > b > c\n") != std::string::npos);
    CHECK(r.out.find("edges: 3\n") != std::string::npos);
}

TEST_CASE("check: single edge on three candidates is not linked") {
    TempDir dir;
    const auto profile = dir.write("one.txt", "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n");
    auto r = run({"check", profile});
    CHECK(r.code == 1);
    CHECK(r.out.find("verdict: NOT LINKED\n") != std::string::npos);
    CHECK(r.out.find("seeds tried: 1\n") != std::string::npos);
    CHECK(r.out.find("max stuck set: 2\n") != std::string::npos);

    auto detailed = run({"check", profile, "--witness"});
    CHECK(detailed.out.find("stuck {a, b}: a b\n") != std::string::npos);
}

TEST_CASE("check: errors exit 2") {
    TempDir dir;
    CHECK(run({"check", dir.file("missing.txt")}).code == 2);
    const auto bad = dir.write("bad.txt", "1: a > b\n");
    auto r = run({"check", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", bad, "--mode", "beta"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("check: JSON report") {
    TempDir dir;
    const auto profile = dir.write("k3.txt", write_native(gen_edge_realizing(graph_from_mask(3, 0b111))));
    auto r = run({"check", profile, "--json"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"input", "mode", "m", "n", "edges", "verdict", "witness", "elapsed_ms"});
    CHECK(j["verdict"] == "linked");
    CHECK(j["witness"] == nlohmann::json::array({"a", "b", "c"}));
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 6);

    const auto path = dir.write("path.txt", "candidates: a, b, c\n1: a > b > c\n1: c > b > a\n");
    auto weak = run({"check", path, "--json", "--mode", "weak"});
    CHECK(weak.code == 1);
    auto w = nlohmann::json::parse(weak.out);
    CHECK(w["witness"].is_null());
    CHECK(w["edges"] == 2);
    CHECK(w["mode"] == "weak");
}

TEST_CASE("check: graph output, soc input and threads") {
    TempDir dir;
    const auto soc = dir.write("k2.soc", "# NUMBER ALTERNATIVES: 2\n# ALTERNATIVE NAME 1: x\n# ALTERNATIVE NAME 2: y\n1: 1,2\n1: 2,1\n");
    const auto dot = dir.file("g.dot");
    auto r = run({"check", soc, "--graph-out", dot, "--threads", "3"});
    CHECK(r.code == 0);
    CHECK(slurp(dot) == "graph {\n  \"x\" -- \"y\";\n}\n");

    const auto soc_as_txt = dir.write("k2.txt", slurp(soc));
    CHECK(run({"check", soc_as_txt}).code == 2);
    CHECK(run({"check", soc_as_txt, "--format", "soc"}).code == 0);
}

TEST_CASE("check: single candidate") {
    TempDir dir;
    const auto p = dir.write("one.txt", "candidates: solo\n2: solo\n");
    auto r = run({"check", p, "--witness"});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness: solo\n") != std::string::npos);
}

TEST_CASE("gen: impartial culture is deterministic") {
    auto a = run({"gen", "--model", "ic", "--candidates", "5", "--votes", "20", "--seed", "7"});
    auto b = run({"gen", "--model", "ic", "--candidates", "5", "--votes", "20", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto e = parse_native(a.out);
    CHECK(e.m() == 5);
    CHECK(e.n() == 20);
    CHECK(e == gen_impartial_culture(5, 20, 7));
}

TEST_CASE("gen: edges model") {
    TempDir dir;
    const auto k2 = dir.write("k2.edges", "# K2\n0 1\n");
    auto r = run({"gen", "--model", "edges", "--graph", k2});
    CHECK(r.code == 0);
    CHECK(r.out == "candidates: a, b\n1: a > b\n1: b > a\n");

    // isolated trailing vertices via --candidates
    auto padded = run({"gen", "--model", "edges", "--graph", k2, "--candidates", "3"});
    CHECK(padded.out == "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n");

    const auto dot = dir.write("named.dot", "graph {\n  \"x\" -- \"y\";\n  \"z\";\n}\n");
    auto named = run({"gen", "--model", "edges", "--graph", dot});
    CHECK(named.code == 0);
    CHECK(named.out == "candidates: x, y, z\n1: x > y > z\n1: y > x > z\n");

    const auto numeric = dir.write("ids.dot", "graph g { 0 -- 2; 1 }\n");
    CHECK(run({"gen", "--model", "edges", "--graph", numeric}).out == "candidates: a, b, c\n1: a > c > b\n1: c > a > b\n");
}

TEST_CASE("gen: invalid flag combinations exit 2") {
    TempDir dir;
    const auto k2 = dir.write("k2.edges", "0 1\n");
    CHECK(run({"gen", "--model", "ic", "--candidates", "0"}).code == 2);
    CHECK(run({"gen", "--model", "ic"}).code == 2);
    CHECK(run({"gen", "--model", "ic", "--candidates", "3", "--graph", k2}).code == 2);
    CHECK(run({"gen", "--model", "edges"}).code == 2);
    CHECK(run({"gen", "--model", "edges", "--graph", k2, "--votes", "3"}).code == 2);
    CHECK(run({"gen", "--model", "edges", "--graph", k2, "--candidates", "1"}).code == 2);
    CHECK(run({"gen", "--model", "mallows", "--candidates", "3"}).code == 2);
    const auto bad = dir.write("bad.edges", "0 x\n");
    CHECK(run({"gen", "--model", "edges", "--graph", bad}).code == 2);
    const auto loop = dir.write("loop.edges", "1 1\n");
    CHECK(run({"gen", "--model", "edges", "--graph", loop}).code == 2);
}

TEST_CASE("oracle command") {
    TempDir dir;
    const auto k3 = dir.write("k3.txt", write_native(gen_edge_realizing(graph_from_mask(3, 0b111))));
    auto r = run({"oracle", k3});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("AGREE: linked\n", 0) == 0);

    const auto path = dir.write("path.txt", write_native(gen_edge_realizing(graph_from_mask(3, 0b101))));
    auto p = run({"oracle", path});
    CHECK(p.code == 0);
    CHECK(p.out == "AGREE: not linked\n");

    const auto big = dir.write("big.txt", write_native(gen_impartial_culture(12, 4, 1)));
    CHECK(run({"oracle", big}).code == 2);
    CHECK(run({"oracle", big, "--cap", "12"}).code == 0);
}

TEST_CASE("parse_graph_input") {
    auto in = cli::parse_graph_input("0 1\n\n# c\n2 3\n");
    CHECK(in.graph.m() == 4);
    CHECK(in.graph.edge_count() == 2);
    CHECK(in.names.empty());
    CHECK_THROWS(cli::parse_graph_input("graph { \"a\" -- }"));
    CHECK_THROWS(cli::parse_graph_input("graph { \"a\" -- \"b\" } extra"));
    auto chain = cli::parse_graph_input("strict graph { a -- b -- c; }");
    CHECK(chain.graph.edge_count() == 2);
    CHECK(chain.names == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("binary exit codes") {
    TempDir dir;
    const auto one = dir.write("one.txt", "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n");
    const auto k3 = dir.write("k3.txt", write_native(gen_edge_realizing(graph_from_mask(3, 0b111))));
    auto status = [](const std::string& cmd) {
        const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    const std::string bin = LINKED_CLI_BINARY;
    CHECK(status(bin + " check " + k3) == 0);
    CHECK(status(bin + " check " + one) == 1);
    CHECK(status(bin + " check " + dir.file("nope.txt")) == 2);
}
