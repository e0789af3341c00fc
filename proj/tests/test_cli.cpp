#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "plie/io.hpp"

using namespace plie;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr, merged
};

const char* binary() {
    const char* bin = std::getenv("PLIE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "PLIE_BIN must point at the CLI binary");
    return bin;
}

RunResult run(const std::string& args) {
    std::string cmd = std::string(binary()) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

struct TempDir {
    fs::path path;
    TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("plie_cli_") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

Partition ones(std::int64_t n) { return Partition(std::vector<std::int64_t>(n, 1)); }

StructureTensor heis3() {
    StructureTensor T(3, ones(3), Side::ring);
    T.set_coeff(0, 1, 2, 1);
    T.set_coeff(1, 0, 2, 2);
    return T;
}

StructureTensor sl2_5() {
    StructureTensor T(5, ones(3), Side::ring);
    T.set_coeff(2, 0, 0, 2);
    T.set_coeff(0, 2, 0, 3);
    T.set_coeff(2, 1, 1, 3);
    T.set_coeff(1, 2, 1, 2);
    T.set_coeff(0, 1, 2, 1);
    T.set_coeff(1, 0, 2, 4);
    return T;
}

}  // namespace

TEST_CASE("cli: usage errors exit 2, help exits 0") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("orbits --p 3").exit_code == 2);  // missing --partition
    CHECK(run("--help").exit_code == 0);
    CHECK(run("count --help").exit_code == 0);
}

TEST_CASE("cli: check prints verdicts and honors the requested laws") {
    TempDir dir("check");
    write_tensor(heis3(), dir.file("heis.txt"));
    RunResult r = run("check " + dir.file("heis.txt") + " --lie --nilpotent");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "side=ring\n"));
    CHECK(contains(r.output, "shape=(1,1,1)\n"));
    CHECK(contains(r.output, "alternating=yes\n"));
    CHECK(contains(r.output, "jacobi=yes\n"));
    CHECK(contains(r.output, "nilpotent=yes\n"));
    CHECK(!contains(r.output, "note:"));

    write_tensor(sl2_5(), dir.file("sl2.txt"));
    RunResult plain = run("check " + dir.file("sl2.txt") + " --lie");
    CHECK(plain.exit_code == 0);
    RunResult nil = run("check " + dir.file("sl2.txt") + " --nilpotent");
    CHECK(nil.exit_code == 1);
    CHECK(contains(nil.output, "nilpotent=no\n"));

    StructureTensor notalt(3, ones(2), Side::ring);
    notalt.set_coeff(0, 0, 1, 1);
    write_tensor(notalt, dir.file("notalt.txt"));
    RunResult bad = run("check " + dir.file("notalt.txt"));
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "alternating=no\n"));

    // Smallest part >= 2: the Jacobi verdict is unconditional, and says so.
    write_tensor(StructureTensor(3, Partition(std::vector<std::int64_t>{2, 2}), Side::ring),
                 dir.file("deep.txt"));
    RunResult deep = run("check " + dir.file("deep.txt") + " --nilpotent");
    CHECK(deep.exit_code == 0);
    CHECK(contains(deep.output, "note: Jacobi short-circuits on this shape"));

    CHECK(run("check " + dir.file("missing.txt")).exit_code == 2);
}

TEST_CASE("cli: orbits output is frozen and worker-count invariant") {
    RunResult r = run("orbits --p 3 --partition 1,1,1 --nilpotent");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "# p=3 shape=(1,1,1) side=ring\n"
          "# filter: alternating=yes jacobi=yes nilpotent=yes\n"
          "# space=27 group=11232\n"
          "orbits=2\n"
          "orbit size=1 rep=orbit_001.txt\n"
          "orbit size=26 rep=orbit_002.txt\n");

    RunResult r4 = run("orbits --p 3 --partition 1,1,1 --nilpotent --workers 4");
    CHECK(r4.exit_code == 0);
    CHECK(r4.output == r.output);

    RunResult lie = run("orbits --p 3 --partition 2,1 --lie");
    CHECK(lie.exit_code == 0);
    CHECK(contains(lie.output, "# space=9 group=36\n"));
    CHECK(contains(lie.output, "orbits=3\n"));

    RunResult alg = run("orbits --p 3 --partition 2,1 --nilpotent --side algebra");
    CHECK(alg.exit_code == 0);
    CHECK(contains(alg.output, "side=algebra\n"));
    CHECK(contains(alg.output, "orbits=2\n"));

    TempDir dir("orbits");
    std::string outdir = (dir.path / "reps").string();
    RunResult wrote = run("orbits --p 3 --partition 1,1,1 --nilpotent --out " + outdir);
    CHECK(wrote.exit_code == 0);
    CHECK(fs::exists(fs::path(outdir) / "summary.txt"));
    StructureTensor rep2 = read_tensor((fs::path(outdir) / "orbit_002.txt").string());
    CHECK(rep2.p() == 3);
    CHECK(!rep2.alpha().empty());

    // Out of the p >= n regime.
    RunResult low = run("orbits --p 2 --partition 1,1,1 --nilpotent");
    CHECK(low.exit_code == 2);
    CHECK(contains(low.output, "requires p >= n"));
    CHECK(run("orbits --p 4 --partition 1,1 --lie").exit_code == 2);

    // A space too large for the enumeration budget.
    RunResult big = run("orbits --p 5 --partition 1,1,1,1 --lie");
    CHECK(big.exit_code == 3);
    CHECK(contains(big.output, "budget exceeded"));
}

TEST_CASE("cli: correspond is a byte-level involution") {
    TempDir dir("corr");
    write_tensor(heis3(), dir.file("heis.txt"));
    RunResult fwd = run("correspond " + dir.file("heis.txt") + " --out " + dir.file("alg.txt"));
    CHECK(fwd.exit_code == 0);
    CHECK(fwd.output == "p=3 n=3 lambda=1,1,1 side=algebra\n1 2 3 1\n2 1 3 2\n");

    RunResult back = run("correspond " + dir.file("alg.txt"));
    CHECK(back.exit_code == 0);
    CHECK(back.output == tensor_to_text(heis3()));

    std::ofstream(dir.file("broken.txt")) << "p=3 n=3 lambda=1,1,1 side=ring\n1 9 3 1\n";
    RunResult bad = run("correspond " + dir.file("broken.txt"));
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "parse error"));
}

TEST_CASE("cli: group builds tables and reports invariants") {
    TempDir dir("group");
    write_tensor(heis3(), dir.file("heis.txt"));
    RunResult r = run("group " + dir.file("heis.txt") + " --out " + dir.file("table.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "order=27\n"
          "exponent=3\n"
          "type=(1,1,1)\n"
          "derived order=3\n");
    GroupTable G = read_group_table(dir.file("table.txt"));
    CHECK(G.order == 27);
    validate_group(G);

    // Nilpotency class not below p: construction is refused.
    StructureTensor fil(3, ones(4), Side::ring);
    fil.set_coeff(0, 1, 2, 1);
    fil.set_coeff(1, 0, 2, 2);
    fil.set_coeff(0, 2, 3, 1);
    fil.set_coeff(2, 0, 3, 2);
    write_tensor(fil, dir.file("fil.txt"));
    RunResult bad = run("group " + dir.file("fil.txt"));
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "nilpotency class 3 is not below p = 3"));

    // Same bracket at p = 5 is fine and keeps the additive type.
    StructureTensor fil5(5, ones(4), Side::ring);
    fil5.set_coeff(0, 1, 2, 1);
    fil5.set_coeff(1, 0, 2, 4);
    fil5.set_coeff(0, 2, 3, 1);
    fil5.set_coeff(2, 0, 3, 4);
    write_tensor(fil5, dir.file("fil5.txt"));
    RunResult ok5 = run("group " + dir.file("fil5.txt"));
    CHECK(ok5.exit_code == 0);
    CHECK(contains(ok5.output, "order=625\n"));
    CHECK(contains(ok5.output, "exponent=5\n"));
}

TEST_CASE("cli: count reports per-partition classes with cross-checks") {
    RunResult r = run("count --p 3 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "p=3 n=3\n"
          "partition (3) -> 1 [orbit cross-check 1, agrees]\n"
          "partition (2,1) -> 2 [orbit cross-check 2, agrees]\n"
          "partition (1,1,1) -> 2 [orbit cross-check 2, agrees]\n"
          "total 5\n");
    RunResult r4 = run("count --p 3 --n 3 --workers 4");
    CHECK(r4.output == r.output);

    CHECK(run("count --p 3 --n 2").output ==
          "p=3 n=2\n"
          "partition (2) -> 1 [orbit cross-check 1, agrees]\n"
          "partition (1,1) -> 1 [orbit cross-check 1, agrees]\n"
          "total 2\n");

    RunResult low = run("count --p 2 --n 3");
    CHECK(low.exit_code == 2);
    CHECK(contains(low.output, "requires p >= n"));

    RunResult nofile = run("count --p 5 --n 4");
    CHECK(nofile.exit_code == 2);
    CHECK(contains(nofile.output, "missing transversal"));

    // Transversal directory: the full validation path runs behind the flag.
    TempDir dir("count_tv");
    write_tensor(StructureTensor(3, ones(3), Side::ring), dir.file("ab.txt"));
    write_tensor(heis3(), dir.file("heis.txt"));
    std::ofstream(dir.file("manifest.txt")) << "p=3 n=3\nab.txt\nheis.txt\n";
    RunResult tv = run("count --p 3 --n 3 --transversal " + dir.path.string());
    CHECK(tv.exit_code == 0);
    CHECK(contains(tv.output, "total 5\n"));
    CHECK(contains(tv.output, "note: completeness verified by exhaustive enumeration\n"));

    RunResult mismatch = run("count --p 5 --n 3 --transversal " + dir.path.string());
    CHECK(mismatch.exit_code == 2);
    CHECK(contains(mismatch.output, "transversal directory is for p=3 n=3"));
}

TEST_CASE("cli: verify covers pair mode and the full suite") {
    TempDir dir("verify");
    write_tensor(heis3(), dir.file("ring.txt"));
    write_tensor(theta(heis3()), dir.file("alg.txt"));
    RunResult good = run("verify --ring-file " + dir.file("ring.txt") + " --algebra-file " +
                         dir.file("alg.txt"));
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "[ok]"));
    CHECK(!contains(good.output, "[FAIL]"));

    StructureTensor corrupt = theta(heis3());
    corrupt.set_coeff(0, 1, 2, 2);
    write_tensor(corrupt, dir.file("corrupt.txt"));
    RunResult bad = run("verify --ring-file " + dir.file("ring.txt") + " --algebra-file " +
                        dir.file("corrupt.txt"));
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "[FAIL]"));
    CHECK(contains(bad.output, "witness"));

    CHECK(run("verify --ring-file " + dir.file("ring.txt")).exit_code == 2);
    CHECK(run("verify").exit_code == 2);

    RunResult suite = run("verify --p 2 --n 2");
    CHECK(suite.exit_code == 0);
    CHECK(contains(suite.output, "== shape (2) representative 1 of 1 ==\n"));
    CHECK(contains(suite.output, "== shape (1,1) representative 1 of 1 ==\n"));
    CHECK(contains(suite.output, "central-nilpotent-endomorphism-sets-coincide"));
    CHECK(contains(suite.output, "verify: all checks passed\n"));
    CHECK(!contains(suite.output, "[FAIL]"));

    RunResult low = run("verify --p 2 --n 3");
    CHECK(low.exit_code == 2);
}

TEST_CASE("cli: bch prints the closed forms, over Q and mod p") {
    RunResult q = run("bch --class 3");
    CHECK(q.exit_code == 0);
    CHECK(q.output ==
          "1 * [x]\n"
          "1 * [y]\n"
          "1/2 * [x,y]\n"
          "-1/12 * [x,y,x]\n"
          "1/12 * [x,y,y]\n");

    RunResult mod5 = run("bch --class 3 --p 5");
    CHECK(mod5.exit_code == 0);
    CHECK(mod5.output ==
          "1 * [x] (mod 5)\n"
          "1 * [y] (mod 5)\n"
          "3 * [x,y] (mod 5)\n"
          "2 * [x,y,x] (mod 5)\n"
          "3 * [x,y,y] (mod 5)\n");

    RunResult mod3 = run("bch --class 2 --p 3");
    CHECK(mod3.exit_code == 0);
    CHECK(mod3.output ==
          "1 * [x] (mod 3)\n"
          "1 * [y] (mod 3)\n"
          "2 * [x,y] (mod 3)\n");

    RunResult badmod = run("bch --class 3 --p 3");
    CHECK(badmod.exit_code == 2);
    CHECK(contains(badmod.output, "class 3 is not below p = 3"));

    CHECK(run("bch --class 0").exit_code == 2);
    CHECK(run("bch --class 3 --p 4").exit_code == 2);
}
