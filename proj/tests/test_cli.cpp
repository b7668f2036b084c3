#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "staruniv/graph.hpp"
#include "staruniv/serialize.hpp"

using namespace staruniv;

namespace {

std::string cli_path() {
    if (const char* env = std::getenv("STARUNIV_CLI"))
        return env;
#ifdef STARUNIV_CLI_FALLBACK
    return STARUNIV_CLI_FALLBACK;
#else
    return "staruniv";
#endif
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_bytes = "") {
    std::string in_file = "/tmp/staruniv_cli_in.json";
    std::string out_file = "/tmp/staruniv_cli_out.json";
    {
        std::ofstream f(in_file, std::ios::binary);
        f << stdin_bytes;
    }
    std::string cmd = cli_path() + " " + args + " < " + in_file + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    f << bytes;
}

} // namespace

TEST_CASE("check --topo on a subdivision host exits 0 with a certificate") {
    Graph k4 = build_clique(4);
    Graph host = k4;
    for (const auto& [u, v] : std::vector<Edge>(k4.edges()))
        host = subdivide_edge(host, u, v, 1);
    write_file("/tmp/staruniv_k4.json", encode_json(k4));
    write_file("/tmp/staruniv_subdiv.json", encode_json(host));
    RunResult r = run("check --topo --pattern /tmp/staruniv_k4.json --host "
                      "/tmp/staruniv_subdiv.json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["found"] == true);
    CHECK(doc.contains("certificate"));

    // and the emitted document re-verifies through the verify subcommand
    write_file("/tmp/staruniv_cert.json", r.out);
    RunResult v = run("verify --input /tmp/staruniv_cert.json");
    CHECK(v.exit_code == 0);
    CHECK(json::parse(v.out)["failed"] == 0);
}

TEST_CASE("check --star on a degree-2 host exits 1") {
    write_file("/tmp/staruniv_p5.json", encode_json(build_path(5)));
    RunResult r = run("check --star 1,1,2 --host /tmp/staruniv_p5.json");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out)["found"] == false);
}

TEST_CASE("malformed json exits 2 with a byte offset") {
    write_file("/tmp/staruniv_bad.json", "{\"n\": 2,");
    RunResult r = run("check --star 1,1 --host /tmp/staruniv_bad.json");
    CHECK(r.exit_code == 2);
    json doc = json::parse(r.out);
    CHECK(doc["error"]["type"] == "parse");
    CHECK(doc["error"]["certificate"]["byte_offset"].get<int>() > 0);
}

TEST_CASE("byte-identical outputs across invocations") {
    write_file("/tmp/staruniv_p5.json", encode_json(build_path(5)));
    RunResult a = run("decompose --star 1,2,2 --relaxed-m 1 --input /tmp/staruniv_p5.json");
    RunResult b = run("decompose --star 1,2,2 --relaxed-m 1 --input /tmp/staruniv_p5.json");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("blowup, derive, suppress round") {
    write_file("/tmp/staruniv_k2.json", encode_json(build_clique(2)));
    RunResult blown = run("blowup --n 3 --input /tmp/staruniv_k2.json");
    CHECK(blown.exit_code == 0);
    json g = json::parse(blown.out);
    CHECK(g["n"] == 5);

    RunResult sup = run("suppress --input -", encode_json(build_path(4)));
    CHECK(sup.exit_code == 0);
    CHECK(json::parse(sup.out)["n"] == 2);

    RunResult bare = run("suppress --input -", encode_json(build_cycle(4)));
    CHECK(bare.exit_code == 2);
    CHECK(json::parse(bare.out)["error"]["type"] == "structural");

    write_file("/tmp/staruniv_blown.json", blown.out);
    RunResult derived = run("derive --t 3 --input /tmp/staruniv_blown.json");
    CHECK(derived.exit_code == 0);
    json dg = json::parse(derived.out);
    CHECK(dg["edges"].size() == 1);
}

TEST_CASE("gamma-star figure mode emits attachments") {
    RunResult r = run("gamma-star --k 4 --rays 3 --len 5 --figure1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["attachments"]["1"] == json::array({0, 1}));
    CHECK(doc["attachments"]["5"] == json::array({0, 1, 2}));
}

TEST_CASE("gadget checks run end to end") {
    RunResult c1 = run("gadget --star 2,2,2,2 --alpha 112 --depth 2 --N 5 --check claim1");
    CHECK(c1.exit_code == 0);
    CHECK(json::parse(c1.out)["pass"] == true);

    RunResult c2 =
        run("gadget --star 2,2,2,2 --alpha 112 --depth 2 --N 5 --check claim2 --sample 10");
    CHECK(c2.exit_code == 0);

    RunResult small = run("gadget --star 2,2,2,2 --alpha 1 --depth 1 --N 2 --check claim1");
    CHECK(small.exit_code == 2); // N below leg count without the override

    RunResult forced =
        run("gadget --star 2,2,2,2 --alpha 1 --depth 1 --N 2 --check claim1 --allow-small-N");
    CHECK(forced.exit_code == 0);
}

TEST_CASE("embed subcommand routes between branches") {
    // short branch: K4 is star-free without the long path
    write_file("/tmp/staruniv_k4.json", encode_json(build_clique(4)));
    RunResult shortr = run("embed --star 1,2,2 --input /tmp/staruniv_k4.json");
    CHECK(shortr.exit_code == 0);
    json doc = json::parse(shortr.out);
    CHECK(doc["branch"] == "short");

    // long branch under a relaxed m (k = 4 pattern avoids the k3 flag)
    write_file("/tmp/staruniv_longpath.json", encode_json(build_path(70)));
    RunResult longr =
        run("embed --star 1,1,2,2 --relaxed-m 8 --input /tmp/staruniv_longpath.json");
    CHECK(longr.exit_code == 0);
    json ldoc = json::parse(longr.out);
    CHECK(ldoc["branch"] == "long-path");
    CHECK(ldoc["non_theorem"] == true);

    write_file("/tmp/staruniv_emb.json", longr.out);
    RunResult v = run("verify --input /tmp/staruniv_emb.json");
    CHECK(v.exit_code == 0);
}

TEST_CASE("check --minor and embed-skfree emit verifiable documents") {
    // K5 as a minor of the Petersen graph
    std::vector<Edge> pedges;
    for (int i = 0; i < 5; ++i) {
        pedges.push_back({i, (i + 1) % 5});
        pedges.push_back({i, i + 5});
        pedges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    write_file("/tmp/staruniv_petersen.json", encode_json(Graph(10, pedges)));
    write_file("/tmp/staruniv_k5.json", encode_json(build_clique(5)));
    RunResult m = run("check --minor --pattern /tmp/staruniv_k5.json --host "
                      "/tmp/staruniv_petersen.json");
    CHECK(m.exit_code == 0);
    write_file("/tmp/staruniv_minorcert.json", m.out);
    CHECK(run("verify --input /tmp/staruniv_minorcert.json").exit_code == 0);

    ColoredGraph c4(build_cycle(4), {0, 1, 2, 3});
    RunResult e = run("embed-skfree --k 4 --input -", encode_json(c4));
    CHECK(e.exit_code == 0);
    json doc = json::parse(e.out);
    CHECK(doc["required"]["rays"] == 4);
    write_file("/tmp/staruniv_skfreecert.json", e.out);
    CHECK(run("verify --input /tmp/staruniv_skfreecert.json").exit_code == 0);
}

TEST_CASE("trivial-universal emits the subdivided clique") {
    RunResult r = run("trivial-universal --kind cycle_girth --k 1 --n 3");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 6);
    CHECK(doc["edges"].size() == 6);

    RunResult d = run("trivial-universal --dot --kind cycle_girth --k 1 --n 3");
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("graph {") != std::string::npos);
    CHECK(d.out.find(" -- ") != std::string::npos);
}

TEST_CASE("registry persistence keeps indices stable") {
    std::system("rm -rf /tmp/staruniv_reg && mkdir -p /tmp/staruniv_reg");
    // admit an edge component twice; index must be stable across runs
    ColoredGraph edge(build_path(1), {1, 0});
    RunResult a = run("registry admit --dir /tmp/staruniv_reg --star 1,2,2 --input -",
                      encode_json(edge));
    CHECK(a.exit_code == 0);
    json first = json::parse(a.out);
    RunResult b = run("registry admit --dir /tmp/staruniv_reg --star 1,2,2 --input -",
                      encode_json(edge));
    CHECK(json::parse(b.out) == first);

    RunResult l = run("registry list --dir /tmp/staruniv_reg --star 1,2,2");
    CHECK(l.exit_code == 0);
    CHECK(json::parse(l.out)["buckets"].contains("1"));
}
