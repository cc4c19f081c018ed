#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dinrep/cli.hpp"
#include "support/checks.hpp"

using namespace dinrep;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = DINREP_FIXTURES_DIR;

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

fs::path scratch_file(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "dinrep_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& path, const std::string& contents) {
    std::ofstream out(path);
    REQUIRE(out);
    out << contents;
}

nlohmann::json first_line_json(const std::string& text) {
    auto end = text.find('\n');
    return nlohmann::json::parse(text.substr(0, end));
}

}  // namespace

TEST_CASE("din reproduces the shipped instance end to end") {
    RunResult r = run({"din", fixture("fig2.json")});
    CHECK(r.code == 0);
    auto j = first_line_json(r.out);
    CHECK(j["value"] == 77);
    CHECK(j["nu"] == 40);
    CHECK(j["b_total"] == 96);
    CHECK(j["b"] == nlohmann::json::parse("[0,5,4,6,6,8,9,10,10,12,11,15]"));
    CHECK(r.out.find("din = 77") != std::string::npos);

    SUBCASE("quiet mode strips the summary but not the machine line") {
        RunResult q = run({"din", fixture("fig2.json"), "-q"});
        CHECK(q.code == 0);
        CHECK(q.out == j.dump() + "\n");
    }
    SUBCASE("byte-identical across runs") {
        RunResult again = run({"din", fixture("fig2.json")});
        CHECK(again.out == r.out);
        CHECK(again.err == r.err);
    }
    SUBCASE("certificates and emitted files are byte-identical too") {
        fs::path rep1 = scratch_file("det1.rep.json");
        fs::path rep2 = scratch_file("det2.rep.json");
        RunResult one =
            run({"din", fixture("fig2.json"), "--certificate", "--emit-rep", rep1.string()});
        RunResult two =
            run({"din", fixture("fig2.json"), "--certificate", "--emit-rep", rep2.string()});
        CHECK(one.out == two.out);
        std::ostringstream b1, b2;
        b1 << std::ifstream(rep1).rdbuf();
        b2 << std::ifstream(rep2).rdbuf();
        CHECK(b1.str() == b2.str());
        CHECK(!b1.str().empty());
    }
}

TEST_CASE("emitted representations verify as din") {
    fs::path rep = scratch_file("fig2.rep.json");
    RunResult emit = run({"din", fixture("fig2.json"), "--emit-rep", rep.string(), "-q"});
    REQUIRE(emit.code == 0);
    RunResult check = run({"verify", fixture("fig2.json"), "--rep", rep.string(), "--kind", "din"});
    CHECK(check.code == 0);
    auto j = first_line_json(check.out);
    CHECK(j["ok"] == true);

    SUBCASE("a corrupted representation fails verification with exit 1") {
        std::ifstream in(rep);
        nlohmann::json jr;
        in >> jr;
        jr["assignment"][1].erase(0);  // drop one color occurrence
        fs::path bad = scratch_file("fig2.bad.rep.json");
        write(bad, jr.dump());
        RunResult broken =
            run({"verify", fixture("fig2.json"), "--rep", bad.string(), "--kind", "din"});
        CHECK(broken.code == 1);
        auto jb = first_line_json(broken.out);
        CHECK(jb["ok"] == false);
        CHECK(jb.contains("violation"));
    }
}

TEST_CASE("certificate output is self-consistent") {
    RunResult r = run({"din", fixture("fig2.json"), "--certificate", "-q"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    auto result = nlohmann::json::parse(first);
    auto cert = nlohmann::json::parse(second);
    CHECK(cert["kind"] == "din");
    CHECK(cert["value"] == result["value"]);
    CHECK(cert["capacity_total"] == result["b_total"]);
    CHECK(cert["matching_weight"] == result["nu"]);
    long long total = 0;
    for (const auto& row : cert["matching"]) total += row[2].get<long long>();
    CHECK(total == result["nu"]);
    // value = pairs + b(V) - nu
    CHECK(cert["value"] ==
          cert["pair_count"].get<long long>() + cert["capacity_total"].get<long long>() -
              cert["matching_weight"].get<long long>());
}

TEST_CASE("error paths set the documented exit codes") {
    fs::path cyclic = scratch_file("cyclic.json");
    write(cyclic, R"({"n":2,"arcs":[[0,1],[1,0]]})");
    RunResult r = run({"din", cyclic.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("not-a-dag") != std::string::npos);
    CHECK(r.out.empty());

    fs::path big = scratch_file("big.json");
    write(big, R"({"n":5,"arcs":[[0,1],[1,2],[2,3],[3,4]]})");
    RunResult guard = run({"oracle", "din", big.string()});
    CHECK(guard.code == 3);
    CHECK(guard.err.find("guard-exceeded") != std::string::npos);

    CHECK(run({"din", "/nonexistent/th.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", cyclic.string(), "--rep", "x", "--kind", "zap"}).code == 2);
}

TEST_CASE("batched inputs keep their order and isolation") {
    fs::path small = scratch_file("small.json");
    write(small, R"({"n":2,"arcs":[[0,1]]})");
    fs::path broken = scratch_file("broken.json");
    write(broken, R"({"n":2,"arcs":[[0,1],[1,0]]})");
    RunResult r = run({"din", fixture("fig2.json"), broken.string(), small.string(), "-q"});
    CHECK(r.code == 2);  // the middle file fails, the others still run
    std::istringstream lines(r.out);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK(nlohmann::json::parse(first)["file"].get<std::string>().find("fig2") !=
          std::string::npos);
    CHECK(nlohmann::json::parse(second)["value"] == 2);
    CHECK(r.err.find("not-a-dag") != std::string::npos);
}

TEST_CASE("analyze on both instance kinds") {
    RunResult directed = run({"analyze", fixture("fig2.json"), "-q"});
    CHECK(directed.code == 0);
    auto j = first_line_json(directed.out);
    CHECK(j["dag"] == true);
    CHECK(j["hamiltonian"] == true);
    CHECK(j["triangle_free"] == true);
    CHECK(j["bipartite"] == false);
    CHECK(j["scc_count"] == 12);

    RunResult undirected = run({"analyze", fixture("sperner20.json"), "-q"});
    auto ju = first_line_json(undirected.out);
    CHECK(ju["dag"].is_null());
    CHECK(ju["diamond_free"] == false);
    CHECK(ju["pair_count"] == 180);
}

TEST_CASE("remaining subcommands") {
    SUBCASE("poset-in on the ordered fixture graph") {
        fs::path p3 = scratch_file("p3poset.json");
        write(p3, R"({"n":3,"edges":[[0,1],[1,2]],"order_arcs":[[0,1],[1,2]]})");
        fs::path rep = scratch_file("p3poset.rep.json");
        RunResult r = run({"poset-in", p3.string(), "--emit-rep", rep.string(), "-q"});
        CHECK(r.code == 0);
        CHECK(first_line_json(r.out)["value"] == 4);
        CHECK(run({"verify", p3.string(), "--rep", rep.string(), "--kind", "poset"}).code == 0);
        // a directed instance is ordered by reachability
        RunResult fig2 = run({"poset-in", fixture("fig2.json"), "-q"});
        CHECK(first_line_json(fig2.out)["value"] == 77);
    }
    SUBCASE("ell-in with an explicit demand row") {
        fs::path p3 = scratch_file("p3plain.json");
        write(p3, R"({"n":3,"edges":[[0,1],[1,2]]})");
        fs::path demands = scratch_file("demands.json");
        write(demands, "[1,2,3]");
        RunResult r = run({"ell-in", p3.string(), "--demands", demands.string(), "-q"});
        CHECK(r.code == 0);
        CHECK(first_line_json(r.out)["value"] == 4);
        CHECK(run({"ell-in", p3.string()}).code == 2);  // no demands anywhere
    }
    SUBCASE("ell-in with embedded demands") {
        fs::path p3 = scratch_file("p3demands.json");
        write(p3, R"({"n":3,"edges":[[0,1],[1,2]],"demands":[1,2,3]})");
        fs::path rep = scratch_file("p3demands.rep.json");
        RunResult r = run({"ell-in", p3.string(), "--emit-rep", rep.string(), "-q"});
        CHECK(first_line_json(r.out)["value"] == 4);
        CHECK(run({"verify", p3.string(), "--rep", rep.string(), "--kind", "ell"}).code == 0);
    }
    SUBCASE("wdin marks its output as non-optimal") {
        fs::path digon = scratch_file("digon.json");
        write(digon, R"({"n":2,"arcs":[[0,1],[1,0]]})");
        fs::path rep = scratch_file("digon.rep.json");
        RunResult r = run({"wdin", digon.string(), "--emit-rep", rep.string(), "-q"});
        CHECK(r.code == 0);
        auto j = first_line_json(r.out);
        CHECK(j["optimal"] == false);
        CHECK(j["colors"] == 1);
        RunResult check =
            run({"verify", digon.string(), "--rep", rep.string(), "--kind", "wdin"});
        CHECK(check.code == 0);
    }
    SUBCASE("bmatch with embedded capacities") {
        fs::path inst = scratch_file("edge.json");
        write(inst, R"({"n":2,"edges":[[0,1]],"capacities":[2,2]})");
        RunResult r = run({"bmatch", inst.string(), "--certificate", "-q"});
        CHECK(r.code == 0);
        auto j = first_line_json(r.out);
        CHECK(j["nu"] == 2);
        CHECK(j["matching"] == nlohmann::json::parse("[[0,1,2]]"));
    }
    SUBCASE("oracles") {
        fs::path p3 = scratch_file("p3arcs.json");
        write(p3, R"({"n":3,"arcs":[[0,1],[1,2]]})");
        CHECK(first_line_json(run({"oracle", "din", p3.string(), "-q"}).out)["value"] == 4);
        CHECK(first_line_json(run({"oracle", "din-ham", p3.string(), "-q"}).out)["value"] == 4);
        fs::path und = scratch_file("p3und.json");
        write(und, R"({"n":3,"edges":[[0,1],[1,2]],"demands":[1,2,3],"capacities":[1,1,1]})");
        CHECK(first_line_json(run({"oracle", "ecc", und.string(), "-q"}).out)["value"] == 2);
        CHECK(first_line_json(run({"oracle", "in", und.string(), "-q"}).out)["value"] == 4);
        CHECK(first_line_json(run({"oracle", "nu", und.string(), "-q"}).out)["value"] == 1);
    }
    SUBCASE("bound") {
        RunResult r = run({"bound", fixture("fig2.json"), "-q"});
        CHECK(r.code == 0);
        auto j = first_line_json(r.out);
        CHECK(j["lower"] == 21);
        CHECK(j["chain_count"] == 1);
        CHECK(j["upper"].get<long long>() >= 77);
    }
    SUBCASE("export-dot") {
        fs::path digon = scratch_file("digon2.json");
        write(digon, R"({"n":2,"arcs":[[0,1],[1,0]]})");
        RunResult r = run({"export-dot", digon.string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("digraph G {") == 0);
        RunResult cond = run({"export-dot", digon.string(), "--condensation"});
        CHECK(cond.out.find("{0,1}") != std::string::npos);
        RunResult und = run({"export-dot", digon.string(), "--underlying"});
        CHECK(und.out.find("graph G {") == 0);
        CHECK(und.out.find("0 -- 1") != std::string::npos);
        fs::path dot = scratch_file("digon.dot");
        RunResult to_file = run({"export-dot", digon.string(), "-o", dot.string()});
        CHECK(to_file.code == 0);
        CHECK(to_file.out.empty());
        std::ifstream in(dot);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        CHECK(buffer.str() == r.out);
    }
    SUBCASE("plain edge list input works everywhere") {
        fs::path text = scratch_file("p3.txt");
        write(text, "digraph 3\n0 1\n1 2\n");
        CHECK(first_line_json(run({"din", text.string(), "-q"}).out)["value"] == 4);
    }
}
