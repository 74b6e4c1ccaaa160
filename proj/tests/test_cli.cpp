#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "magmoid/core.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "magmoid_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "out.txt";
    std::string cmd = std::string(MAGMOID_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
}

std::string write_fixture(const std::string& name, const magmoid::Magmoid& m) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << magmoid::serialize_magmoid(m);
    return p.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check reports axioms with the three-state exit codes") {
    std::string ex = write_fixture("ex72.mgd", fixtures::ex72());
    auto r = run("check " + ex + " --axiom S3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "#R axiom=S3 holds=true"));

    magmoid::Magmoid single = magmoid::make_magmoid("single", {"a", "b"});
    single.set_cell(0, 1, 0);
    std::string sp = write_fixture("single.mgd", single);
    auto r2 = run("check " + sp + " --axiom S3");
    CHECK(r2.exit_code == 1);
    CHECK(contains(r2.out, "holds=false"));

    CHECK(run("check " + ex + " --axiom Q9").exit_code == 2);
    CHECK(run("bogus-command").exit_code == 2);
    CHECK(run("check /nonexistent.mgd --axiom S3").exit_code == 2);
}

TEST_CASE("classify emits the taxonomy") {
    std::string ex = write_fixture("ex72.mgd", fixtures::ex72());
    auto r = run("classify " + ex);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "#R class=inverse_semigroup value=true"));
    CHECK(contains(r.out, "#R unique_local_units=false"));
    CHECK(contains(r.out, "#R identity=y"));
}

TEST_CASE("units and inverses emit per-element records") {
    std::string ex = write_fixture("ex72.mgd", fixtures::ex72());
    auto u = run("units " + ex);
    CHECK(u.exit_code == 0);
    CHECK(contains(u.out, "#R global_two_sided={y}"));
    CHECK(contains(u.out, "local_left={x,y}"));

    auto i = run("inverses " + ex + " --kind I");
    CHECK(i.exit_code == 0);
    CHECK(contains(i.out, "#R element=x kind=I inverses={x}"));
}

TEST_CASE("involutions searches self-maps") {
    std::string z = write_fixture("z2.mgd", fixtures::z2());
    auto r = run("involutions " + z);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "#R involutions=1"));
    CHECK(contains(r.out, "#R map=e->e,a->a"));
}

TEST_CASE("restrict output re-parses and classifies") {
    std::string ex = write_fixture("ex72.mgd", fixtures::ex72());
    auto r = run("restrict " + ex + " --mode pregroupoid");
    CHECK(r.exit_code == 0);
    magmoid::Magmoid back = magmoid::parse_magmoid(r.out);
    CHECK(magmoid::are_isomorphic(back, fixtures::discrete2()));

    fs::path p = work_dir() / "restricted.mgd";
    std::ofstream(p) << r.out;
    auto c = run("classify " + p.string());
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "#R class=groupoid value=true"));

    // hypothesis failure -> exit 2
    std::string iv = write_fixture("interval.mgd", fixtures::interval());
    CHECK(run("restrict " + iv + " --mode pregroupoid").exit_code == 2);
}

TEST_CASE("heapify derives the ternary table") {
    std::string z = write_fixture("z2.mgd", fixtures::z2());
    auto r = run("heapify " + z);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "heapoid z2_heap"));
    CHECK(contains(r.out, "heap=true"));
}

TEST_CASE("iso compares two files") {
    std::string ex = write_fixture("ex72.mgd", fixtures::ex72());
    std::string sw = write_fixture("swapped.mgd", magmoid::relabel(fixtures::ex72(), {1, 0}));
    auto r = run("iso " + ex + " " + sw);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "#R isomorphic=true"));

    std::string lz = write_fixture("lz.mgd", fixtures::left_zero());
    auto r2 = run("iso " + ex + " " + lz);
    CHECK(r2.exit_code == 1);
    CHECK(contains(r2.out, "#R isomorphic=false"));
}

TEST_CASE("enumerate count lines and determinism across workers") {
    auto base = run("enumerate --order 2 --count-only");
    CHECK(base.exit_code == 0);
    CHECK(contains(base.out, "#R count order=2 mode=labeled filter=none value=80"));
    for (int w : {1, 4, 8}) {
        auto r = run("enumerate --order 2 --count-only --workers " + std::to_string(w));
        CHECK(r.out == base.out);
    }
    auto iso = run("enumerate --order 2 --count-only --upto-iso");
    CHECK(contains(iso.out, "mode=uptoIso filter=none value=44"));
    auto sg = run("enumerate --order 2 --count-only --filter semigroup");
    CHECK(contains(sg.out, "filter=semigroup value=8"));
    CHECK(run("enumerate --order 9 --count-only").exit_code == 2);
}

TEST_CASE("verify reports passes and writes witnesses") {
    auto ok = run("verify --order 2 --props P6.6,P7.2");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "#R prop=P6.6"));
    CHECK(contains(ok.out, "#R failures=0"));

    fs::path wdir = work_dir() / "witnesses";
    fs::remove_all(wdir);
    auto bad = run("verify --order 2 --props mutated-P6.3 --witness-dir " + wdir.string());
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "#R witness_file="));
    bool found = false;
    for (const auto& entry : fs::directory_iterator(wdir)) {
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        magmoid::Magmoid w = magmoid::parse_magmoid(buf.str());
        CHECK(w.order() == 2);
        found = true;
    }
    CHECK(found);
}
