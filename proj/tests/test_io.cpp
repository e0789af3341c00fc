#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "plie/io.hpp"
#include "plie/magnus_lazard.hpp"

using namespace plie;
namespace fs = std::filesystem;

namespace {

Partition ones(std::int64_t n) { return Partition(std::vector<std::int64_t>(n, 1)); }

StructureTensor heis3() {
    StructureTensor T(3, ones(3), Side::ring);
    T.set_coeff(0, 1, 2, 1);
    T.set_coeff(1, 0, 2, 2);
    return T;
}

struct TempDir {
    fs::path path;
    TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("plie_io_") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("tensor text round trip and canonical bytes") {
    StructureTensor T = heis3();
    std::string text = tensor_to_text(T);
    CHECK(text == "p=3 n=3 lambda=1,1,1 side=ring\n1 2 3 1\n2 1 3 2\n");
    StructureTensor back = tensor_from_text(text);
    CHECK(back == T);
    CHECK(back.side() == T.side());
    CHECK(back.shape() == T.shape());
    CHECK(tensor_to_text(back) == text);

    // Mixed shape, algebra side, entry order in the file is irrelevant.
    StructureTensor S(3, Partition(std::vector<std::int64_t>{2, 1}), Side::algebra);
    S.set_coeff(0, 1, 0, 2);
    S.set_coeff(1, 0, 0, 1);
    std::string stext = tensor_to_text(S);
    CHECK(stext == "p=3 n=3 lambda=2,1 side=algebra\n1 2 1 2\n2 1 1 1\n");
    CHECK(tensor_from_text("p=3 n=3 lambda=2,1 side=algebra\n2 1 1 1\n1 2 1 2\n") == S);

    // Comments, blank lines, and ragged whitespace are all tolerated.
    std::string messy =
        "# a structure-constant file\n"
        "p=3   n=3\tlambda=1,1,1 side=ring\n"
        "\n"
        "1 2 3 1   # the only free entry\n"
        "2 1 3 2\n";
    CHECK(tensor_from_text(messy) == T);

    // Values are reduced mod p on the way in.
    CHECK(tensor_from_text("p=3 n=3 lambda=1,1,1 side=ring\n1 2 3 4\n2 1 3 -1\n") == T);

    // Zero tensor: header only.
    StructureTensor Z(2, Partition(std::vector<std::int64_t>{2}), Side::ring);
    CHECK(tensor_to_text(Z) == "p=2 n=2 lambda=2 side=ring\n");
    CHECK(tensor_from_text(tensor_to_text(Z)) == Z);
}

TEST_CASE("tensor files on disk") {
    TempDir dir("tensor");
    std::string path = dir.file("t.txt");
    write_tensor(heis3(), path);
    CHECK(slurp(path) == tensor_to_text(heis3()));
    CHECK(read_tensor(path) == heis3());

    CHECK_THROWS_AS(read_tensor(dir.file("missing.txt")), ParseError);
}

TEST_CASE("tensor parse errors carry file and line") {
    auto expect_error = [](const std::string& text, std::int64_t line) {
        try {
            tensor_from_text(text, "bad.txt");
            FAIL("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.file == "bad.txt");
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find("bad.txt:") == 0);
        }
    };
    expect_error("q=3 n=3 lambda=1,1,1 side=ring\n", 1);               // wrong key
    expect_error("p=3 n=3 lambda=1,1,1\n", 1);                        // missing side
    expect_error("p=3 n=3 lambda=1,1,1 side=middle\n", 1);            // bad side
    expect_error("p=3 n=4 lambda=1,1,1 side=ring\n", 1);              // lambda sum != n
    expect_error("p=3 n=3 lambda=1,1,2 side=ring\n", 1);              // not weakly decreasing
    expect_error("p=1 n=3 lambda=1,1,1 side=ring\n", 1);              // modulus too small
    expect_error("p=3 n=3 lambda=1,1,1 side=ring\n1 2 x 1\n", 2);     // non-integer
    expect_error("p=3 n=3 lambda=1,1,1 side=ring\n1 2 4 1\n", 2);     // index range
    expect_error("p=3 n=3 lambda=1,1,1 side=ring\n0 2 3 1\n", 2);     // 1-based
    expect_error("p=3 n=3 lambda=1,1,1 side=ring\n1 2 3\n", 2);       // short row
    expect_error("p=3 n=3 lambda=1,1,1 side=ring\n1 2 3 1\n1 2 3 1\n", 3);  // duplicate
}

TEST_CASE("group table text round trip") {
    GroupTable G = gp(heis3());
    std::string text = group_to_text(G);
    CHECK(text.rfind("order=27 p=3\n", 0) == 0);
    GroupTable back = group_from_text(text);
    CHECK(back.same_table(G));
    CHECK(!back.has_source());  // text format carries no source structure
    CHECK(group_to_text(back) == text);

    TempDir dir("group");
    std::string path = dir.file("g.txt");
    write_group_table(G, path);
    CHECK(slurp(path) == text);
    CHECK(read_group_table(path).same_table(G));
}

TEST_CASE("group table parse errors") {
    auto expect_error = [](const std::string& text) {
        CHECK_THROWS_AS(group_from_text(text, "g.txt"), ParseError);
    };
    expect_error("order=2\n0 1\n1 0\n");           // missing p
    expect_error("order=2 p=3\n0 1\n");            // truncated rows
    expect_error("order=2 p=3\n0 1\n1 2\n");       // entry out of range
    expect_error("order=2 p=3\n1 0\n0 1\n");       // index 0 not the identity
    expect_error("order=3 p=3\n0 1 2\n1 2 0\n2 0 1 0\n");  // trailing token

    // Valid table parses and validates.
    GroupTable C3 = group_from_text("order=3 p=3\n0 1 2\n1 2 0\n2 0 1\n");
    validate_group(C3);
    CHECK(element_order(C3, 1) == 3);
}

TEST_CASE("orbit report directories") {
    TensorFilter nil{true, true, true};
    OrbitReport rep = orbits(3, ones(3), Side::ring, nil);
    REQUIRE(rep.orbit_count() == 2);

    std::string summary = orbit_summary_text(rep);
    CHECK(summary ==
          "# p=3 shape=(1,1,1) side=ring\n"
          "# filter: alternating=yes jacobi=yes nilpotent=yes\n"
          "# space=27 group=11232\n"
          "orbits=2\n"
          "orbit size=1 rep=orbit_001.txt\n"
          "orbit size=26 rep=orbit_002.txt\n");

    TempDir dir("orbits");
    write_orbit_report(rep, dir.str());
    CHECK(slurp(dir.file("summary.txt")) == summary);
    StructureTensor r1 = read_tensor(dir.file("orbit_001.txt"));
    StructureTensor r2 = read_tensor(dir.file("orbit_002.txt"));
    CHECK(r1 == rep.reps[0]);
    CHECK(r2 == rep.reps[1]);
}

TEST_CASE("transversal directories") {
    TempDir dir("tv");
    Transversal tv = transversal_brute(3, 3);
    write_transversal(tv, dir.str());
    CHECK(fs::exists(dir.path / "manifest.txt"));
    CHECK(fs::exists(dir.path / "entry_001.txt"));
    CHECK(fs::exists(dir.path / "entry_002.txt"));
    std::string manifest = slurp(dir.file("manifest.txt"));
    CHECK(manifest == "p=3 n=3\nentry_001.txt\nentry_002.txt\n");

    Transversal back = read_transversal(dir.str());
    CHECK(back.p == 3);
    CHECK(back.n == 3);
    CHECK(back.source == Transversal::Source::file);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0] == tv.entries[0]);
    CHECK(back.entries[1] == tv.entries[1]);
    CHECK(back.complete);
    CHECK(back.completeness_note == "completeness verified by exhaustive enumeration");

    // Manifest naming a missing file.
    TempDir dir2("tv_bad");
    std::ofstream(dir2.file("manifest.txt")) << "p=3 n=3\nnothere.txt\n";
    CHECK_THROWS_AS(read_transversal(dir2.str()), ParseError);

    // Entry with the wrong p is rejected with the manifest as context.
    TempDir dir3("tv_wrongp");
    std::ofstream(dir3.file("manifest.txt")) << "p=3 n=3\nentry_001.txt\n";
    write_tensor(StructureTensor(5, ones(3), Side::ring), dir3.file("entry_001.txt"));
    CHECK_THROWS_AS(read_transversal(dir3.str()), ParseError);
}

TEST_CASE("count report files") {
    CountReport rep = count_report(3, 2, transversal_brute(3, 2));
    TempDir dir("count");
    std::string path = dir.file("report.txt");
    write_count_report(rep, path);
    CHECK(slurp(path) == rep.to_string());
}
