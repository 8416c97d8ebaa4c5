#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "quadfree/graph.hpp"
#include "quadfree/graph6.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path;
fs::path work_dir;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const fs::path out_path = work_dir / "stdout.txt";
    const fs::path err_path = work_dir / "stderr.txt";
    const std::string cmd = "\"" + cli_path + "\" " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = (status == -1) ? -1 : WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("version and usage errors") {
    RunResult v = run_cli("--version");
    CHECK(v.code == 0);
    CHECK(v.out.find("1.0.0") != std::string::npos);

    CHECK(run_cli("").code == 2);                  // a subcommand is required
    CHECK(run_cli("frobnicate").code == 2);        // unknown subcommand
    CHECK(run_cli("search --n 6").code == 2);      // missing required --out
    CHECK(run_cli("field").code == 2);             // missing required --q
    CHECK(run_cli("bounds").code == 2);            // neither --q nor --reiman
    CHECK(run_cli("bounds --reiman").code == 2);   // --reiman without --n
    CHECK(run_cli("field --q 6").code == 2);       // 6 is not a prime power
}

TEST_CASE("field reports and tables") {
    RunResult r = run_cli("field --q 4");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["subcommand"] == "field");
    CHECK(j["field"]["p"] == 2);
    CHECK(j["field"]["k"] == 2);
    CHECK(j["field"]["q"] == 4);

    RunResult csv = run_cli("field --q 3 --dump-tables");
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "0,0,0\n0,1,2\n0,2,1\n");
}

TEST_CASE("plane counts") {
    RunResult r = run_cli("plane --q 3 --list-absolute");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["points"] == 13);
    CHECK(j["lines"] == 13);
    CHECK(j["absolute_count"] == 4);
    CHECK(j["absolute_count_is_q_plus_1"] == true);
    CHECK(j["absolute_points"].size() == 4);
}

TEST_CASE("construct, then verify the construction") {
    const fs::path g6 = work_dir / "full.g6";
    const fs::path rep = work_dir / "full.json";
    RunResult c = run_cli("construct --q 2 --out " + g6.string() + " --report " +
                          rep.string());
    REQUIRE(c.code == 0);
    json report = json::parse(slurp(rep));
    CHECK(report["n"] == 7);
    CHECK(report["e"] == 9);
    CHECK(report["c4_free"] == true);

    quadfree::Graph g = quadfree::graph6_decode(slurp(g6));
    CHECK(g.n() == 7);
    CHECK(g.e() == 9);
    CHECK(quadfree::is_c4_free(g));

    RunResult v = run_cli("verify --in " + g6.string() + " --q 2");
    CHECK(v.code == 0);
    json vr = json::parse(v.out);
    CHECK(vr["c4_free"] == true);
    CHECK(vr["two_paths"].get<uint64_t>() <= 21);  // C(7,2)

    // the vertex-deleted variant
    const fs::path del = work_dir / "deleted.g6";
    RunResult d = run_cli("construct --q 2 --delete-min --out " + del.string());
    REQUIRE(d.code == 0);
    json dj = json::parse(d.out);
    CHECK(dj["n"] == 6);
    CHECK(dj["e"] == 7);
    CHECK(dj["c4_free"] == true);
    RunResult dv = run_cli("verify --in " + del.string() + " --q 2");
    CHECK(dv.code == 0);
}

TEST_CASE("verify rejects a graph with a 4-cycle") {
    const fs::path bad = work_dir / "c4.g6";
    write_file(bad, "C]\n");  // the 4-cycle
    RunResult r = run_cli("verify --in " + bad.string() + " --q 2");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["c4_free"] == false);
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"].size() == 4);
    CHECK(r.err.find("4-cycle") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
    RunResult fin = run_cli("bounds --q 6 --lemma final --json");
    REQUIRE(fin.code == 0);
    json j = json::parse(fin.out);
    const json& f = j["results"]["final"];
    CHECK(f["A"]["z_bound"] == "-1/4");
    CHECK(f["B"]["z_bound"] == "-3/4");
    CHECK(f["C"]["z_bound"] == "-7/4");
    CHECK(f["D"]["z_bound"] == "3/4");
    for (const char* c : {"A", "B", "C", "D"})
        CHECK(f[c]["integer_feasible"] == false);

    RunResult rb = run_cli("bounds --reiman --n 12");
    CHECK(rb.code == 0);
    CHECK(rb.out == "reiman bound: 23\n");

    RunResult l8 = run_cli("bounds --q 6 --lemma 8 --printed-denominator --json");
    REQUIRE(l8.code == 0);
    json j8 = json::parse(l8.out);
    CHECK(j8["results"]["lemma8"]["value"] == "-81/80");
    CHECK(j8["results"]["lemma8"]["feasible"] == false);
    CHECK(j8["results"]["lemma8_printed_denominator"]["value"] == "-81/70");

    RunResult all = run_cli("bounds --q 6 --json");
    REQUIRE(all.code == 0);
    json ja = json::parse(all.out);
    for (const char* key : {"lemma1", "lemma4", "lemma5", "lemma6", "lemma7",
                            "lemma8", "final"})
        CHECK(ja["results"].contains(key));
    CHECK(ja["results"]["lemma1"]["band_all_infeasible"] == true);
}

TEST_CASE("search subcommand writes results and witnesses") {
    const fs::path dir = work_dir / "search6";
    RunResult r = run_cli("search --n 6 --all-extremal --out " + dir.string());
    REQUIRE(r.code == 0);
    json j = json::parse(slurp(dir / "result.json"));
    CHECK(j["ex"] == 7);
    CHECK(j["optimal"] == true);
    CHECK(j["extremal_count"] == 4);

    quadfree::Graph w = quadfree::graph6_decode(slurp(dir / "witness.g6"));
    CHECK(w.n() == 6);
    CHECK(w.e() == 7);
    CHECK(quadfree::is_c4_free(w));

    std::istringstream ext(slurp(dir / "extremal.g6"));
    std::string line;
    unsigned count = 0;
    while (std::getline(ext, line))
        if (!line.empty()) {
            quadfree::Graph g = quadfree::graph6_decode(line);
            CHECK(g.n() == 6);
            CHECK(g.e() == 7);
            CHECK(quadfree::is_c4_free(g));
            ++count;
        }
    CHECK(count == 4);

    // seeding with the witness just found reproduces the result
    const fs::path dir2 = work_dir / "search6_seeded";
    RunResult s = run_cli("search --n 6 --seed-witness " +
                          (dir / "witness.g6").string() + " --out " +
                          dir2.string());
    REQUIRE(s.code == 0);
    json j2 = json::parse(slurp(dir2 / "result.json"));
    CHECK(j2["ex"] == 7);
    CHECK(j2["optimal"] == true);
}

TEST_CASE("reports are deterministic apart from wall time") {
    RunResult a = run_cli("bounds --q 8 --lemma final --json");
    RunResult b = run_cli("bounds --q 8 --lemma final --json");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    ja.erase("wall_secs");
    jb.erase("wall_secs");
    CHECK(ja.dump() == jb.dump());

    const fs::path g1 = work_dir / "det1.g6";
    const fs::path g2 = work_dir / "det2.g6";
    CHECK(run_cli("construct --q 3 --out " + g1.string()).code == 0);
    CHECK(run_cli("construct --q 3 --out " + g2.string()).code == 0);
    CHECK(slurp(g1) == slurp(g2));
    CHECK(!slurp(g1).empty());
}

int run_all(int argc, char** argv) {
    doctest::Context ctx;
    int forwarded = argc;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        cli_path = argv[argc - 1];
        forwarded = argc - 1;
    }
    ctx.applyCommandLine(forwarded, argv);
    if (cli_path.empty()) {
        std::cerr << "usage: test_cli [doctest options] <path-to-quadfree>\n";
        return 1;
    }
    work_dir = fs::temp_directory_path() /
               ("quadfree_cli_" + std::to_string(::getpid()));
    fs::create_directories(work_dir);
    const int rc = ctx.run();
    fs::remove_all(work_dir);
    return rc;
}

int main(int argc, char** argv) { return run_all(argc, argv); }
