#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "plie/counting.hpp"
#include "plie/magnus_lazard.hpp"

using namespace plie;

namespace {

Partition ones(std::int64_t n) { return Partition(std::vector<std::int64_t>(n, 1)); }
Partition prt(std::vector<std::int64_t> v) { return Partition(std::move(v)); }

FpLieAlgebra abelian(std::int64_t p, std::int64_t dim) { return FpLieAlgebra(p, dim); }

FpLieAlgebra heis(std::int64_t p) {
    FpLieAlgebra K(p, 3);
    K.set_coeff(0, 1, 2, 1);
    K.set_coeff(1, 0, 2, p - 1);
    return K;
}

// Heisenberg plus a one-dimensional abelian direct summand.
FpLieAlgebra heis_plus_line(std::int64_t p) {
    FpLieAlgebra K(p, 4);
    K.set_coeff(0, 1, 2, 1);
    K.set_coeff(1, 0, 2, p - 1);
    return K;
}

FpLieAlgebra filiform4(std::int64_t p) {
    FpLieAlgebra K(p, 4);
    K.set_coeff(0, 1, 2, 1);
    K.set_coeff(1, 0, 2, p - 1);
    K.set_coeff(0, 2, 3, 1);
    K.set_coeff(2, 0, 3, p - 1);
    return K;
}

StructureTensor heis_tensor() {
    StructureTensor T(3, ones(3), Side::ring);
    T.set_coeff(0, 1, 2, 1);
    T.set_coeff(1, 0, 2, 2);
    return T;
}

GroupTable cyclic(std::int64_t m, std::int64_t p) {
    GroupTable G;
    G.p = p;
    G.order = m;
    G.table.resize(static_cast<std::size_t>(m * m));
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            G.table[static_cast<std::size_t>(a * m + b)] = static_cast<std::int32_t>((a + b) % m);
    return G;
}

}  // namespace

TEST_CASE("endomorphism sets of the dimension-3 algebras") {
    auto ab = c_set(abelian(3, 3));
    CHECK(ab.size() == 729);
    auto hs = c_set(heis(3));
    CHECK(hs.size() == 9);

    // Jordan-type strata split the sets, and the pieces add back up.
    std::map<std::vector<std::int64_t>, std::size_t> want_ab = {
        {{3}, 624}, {{2, 1}, 104}, {{1, 1, 1}, 1}};
    std::map<std::vector<std::int64_t>, std::size_t> want_hs = {
        {{3}, 0}, {{2, 1}, 8}, {{1, 1, 1}, 1}};
    std::size_t sum_ab = 0, sum_hs = 0;
    for (const auto& lam : all_partitions(3)) {
        auto sa = c_set_lambda(abelian(3, 3), lam);
        auto sh = c_set_lambda(heis(3), lam);
        CHECK(sa.size() == want_ab.at(lam.parts()));
        CHECK(sh.size() == want_hs.at(lam.parts()));
        sum_ab += sa.size();
        sum_hs += sh.size();
        for (const auto& e : sa) CHECK(e.jordan == lam);
        for (const auto& e : sh) CHECK(e.jordan == lam);
    }
    CHECK(sum_ab == 729);
    CHECK(sum_hs == 9);

    // Every member annihilates the derived subalgebra and is nilpotent.
    for (const auto& e : hs) {
        CHECK(e.sigma.pow(3).is_zero());
        Coords z = e.sigma.apply_row(Coords{0, 0, 1});
        CHECK(z == Coords{0, 0, 0});
    }
}

TEST_CASE("endomorphism-set preconditions") {
    FpLieAlgebra notlie(5, 3);
    notlie.set_coeff(0, 1, 2, 1);  // not alternating
    CHECK_THROWS_WITH_AS(c_set(notlie), "c_set: bracket cube is not a Lie algebra",
                         std::invalid_argument);

    FpLieAlgebra sl2(5, 3);
    sl2.set_coeff(2, 0, 0, 2);
    sl2.set_coeff(0, 2, 0, 3);
    sl2.set_coeff(2, 1, 1, 3);
    sl2.set_coeff(1, 2, 1, 2);
    sl2.set_coeff(0, 1, 2, 1);
    sl2.set_coeff(1, 0, 2, 4);
    REQUIRE(sl2.is_lie());
    REQUIRE(!sl2.is_nilpotent());
    CHECK_THROWS_WITH_AS(c_set(sl2), "c_set: nilpotent Lie algebra required",
                         std::invalid_argument);
}

TEST_CASE("bracket-preserving matrix groups") {
    CHECK(aut_lie(abelian(3, 3)).size() == 11232);
    CHECK(aut_lie(heis(3)).size() == 432);
    CHECK(aut_lie(abelian(3, 1)).size() == 2);
    for (const auto& E : aut_lie(heis(3))) CHECK(E.invertible());
}

TEST_CASE("reciprocal orbit sums are integers") {
    for (const auto& lam : all_partitions(3)) {
        Rational ra = orbit_sum(abelian(3, 3), lam);
        CHECK(ra.is_integer());
        CHECK(ra == Rational(1));
    }
    CHECK(orbit_sum(heis(3), prt({3})) == Rational(0));
    CHECK(orbit_sum(heis(3), prt({2, 1})) == Rational(1));
    CHECK(orbit_sum(heis(3), prt({1, 1, 1})) == Rational(1));
}

TEST_CASE("exhaustive transversals") {
    Transversal tv = transversal_brute(3, 3);
    CHECK(tv.p == 3);
    CHECK(tv.n == 3);
    CHECK(tv.source == Transversal::Source::brute);
    CHECK(tv.complete);
    REQUIRE(tv.entries.size() == 2);
    // Zero bracket sorts first; the other class is the nonabelian one.
    CHECK(tv.entries[0].derived_basis().empty());
    CHECK(tv.entries[1].derived_basis().size() == 1);

    CHECK(transversal_brute(3, 2).entries.size() == 1);
    CHECK(transversal_brute(2, 2).entries.size() == 1);
    CHECK(transversal_brute(5, 2).entries.size() == 1);
}

TEST_CASE("file transversals are validated and cross-checked") {
    // Complete file at a size the brute check can still afford.
    Transversal ok = transversal_from_algebras(3, 3, {abelian(3, 3), heis(3)});
    CHECK(ok.complete);
    CHECK(ok.source == Transversal::Source::file);
    CHECK(ok.completeness_note == "completeness verified by exhaustive enumeration");

    // Missing class: refuted by the brute cross-check.
    Transversal part = transversal_from_algebras(3, 3, {abelian(3, 3)});
    CHECK(!part.complete);
    CHECK(part.completeness_note == "file transversal covers 1 of 2 isomorphism classes");

    // Pairwise-isomorphic entries are rejected outright.
    FpLieAlgebra permuted(3, 3);
    permuted.set_coeff(0, 2, 1, 1);
    permuted.set_coeff(2, 0, 1, 2);
    CHECK_THROWS_WITH_AS(transversal_from_algebras(3, 3, {heis(3), permuted}),
                         "transversal: duplicate classes (entries 0 and 1 are isomorphic)",
                         std::invalid_argument);

    // Wrong field or dimension, non-Lie, non-nilpotent entries.
    CHECK_THROWS_AS(transversal_from_algebras(3, 3, {abelian(5, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(transversal_from_algebras(3, 3, {abelian(3, 2)}), std::invalid_argument);

    // Beyond the brute budget the file's completeness claim is kept, flagged.
    Transversal big =
        transversal_from_algebras(5, 4, {abelian(5, 4), heis_plus_line(5), filiform4(5)});
    CHECK(big.complete);
    CHECK(big.entries.size() == 3);
    CHECK(big.completeness_note ==
          "file-sourced transversal: completeness is the file's claim (exhaustive cross-check "
          "beyond budget)");
}

TEST_CASE("class counts in the admissible regime") {
    Transversal tv3 = transversal_brute(3, 3);
    CHECK(count_partition(3, 3, prt({3}), tv3) == 1);
    CHECK(count_partition(3, 3, prt({2, 1}), tv3) == 2);
    CHECK(count_partition(3, 3, prt({1, 1, 1}), tv3) == 2);
    CHECK(count_total(3, 3, tv3) == 5);

    Transversal tv2 = transversal_brute(3, 2);
    CHECK(count_total(3, 2, tv2) == 2);
    CHECK(count_total(3, 1, transversal_brute(3, 1)) == 1);
    CHECK(count_total(2, 2, transversal_brute(2, 2)) == 2);
    CHECK(count_total(5, 2, transversal_brute(5, 2)) == 2);
    CHECK(count_total(2, 1, transversal_brute(2, 1)) == 1);
    CHECK(count_total(5, 1, transversal_brute(5, 1)) == 1);

    // Out of regime or mismatched inputs.
    CHECK_THROWS_WITH_AS(count_total(2, 3, transversal_brute(3, 3)),
                         "count: requires p >= n (got p = 2, n = 3)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_total(5, 3, tv3), "count: transversal mismatch",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_partition(3, 3, prt({2}), tv3), "count: partition does not sum to n",
                         std::invalid_argument);
}

TEST_CASE("count report freezes its text format") {
    CountReport rep = count_report(3, 2, transversal_brute(3, 2));
    CHECK(rep.cross_checks_agree());
    CHECK(rep.to_string() ==
          "p=3 n=2\n"
          "partition (2) -> 1 [orbit cross-check 1, agrees]\n"
          "partition (1,1) -> 1 [orbit cross-check 1, agrees]\n"
          "total 2\n");

    CountReport rep3 = count_report(3, 3, transversal_brute(3, 3));
    CHECK(rep3.total == 5);
    CHECK(rep3.cross_checks_agree());
    REQUIRE(rep3.rows.size() == 3);
    for (const auto& row : rep3.rows) {
        REQUIRE(row.cross_check.has_value());
        CHECK(*row.cross_check == row.count);
    }

    // Without cross-checks the bracketed clauses disappear.
    CountReport plain = count_report(3, 2, transversal_brute(3, 2), {}, 1, false);
    CHECK(plain.to_string() ==
          "p=3 n=2\n"
          "partition (2) -> 1\n"
          "partition (1,1) -> 1\n"
          "total 2\n");
    CHECK(plain.cross_checks_agree());  // vacuously
}

TEST_CASE("central endomorphism counts on group tables") {
    CHECK(n_endo(cyclic(27, 3), 3).size() == 9);
    CHECK(n_endo(cyclic(9, 3), 2).size() == 3);
    CHECK(n_endo(gp(heis_tensor()), 3).size() == 9);
    CHECK(n_endo(gp(StructureTensor(3, ones(3), Side::ring)), 3).size() == 729);

    // Each returned map really is an endomorphism with trivial triple composite.
    GroupTable H = gp(heis_tensor());
    auto maps = n_endo(H, 3);
    for (const auto& f : maps) {
        for (std::int64_t a = 0; a < 27; ++a)
            for (std::int64_t b = 0; b < 27; ++b)
                CHECK(f[static_cast<std::size_t>(H.mul(a, b))] ==
                      H.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]));
        for (std::int64_t a = 0; a < 27; ++a) {
            std::int64_t x = f[static_cast<std::size_t>(
                f[static_cast<std::size_t>(f[static_cast<std::size_t>(a)])])];
            CHECK(x == 0);
        }
    }
}

TEST_CASE("structure-side endomorphism maps at p = 2") {
    StructureTensor t2(2, prt({2}), Side::ring);
    CHECK(central_nilpotent_endo_maps(t2).size() == 2);
    StructureTensor t11(2, prt({1, 1}), Side::ring);
    CHECK(central_nilpotent_endo_maps(t11).size() == 4);
}

TEST_CASE("group-side and structure-side endomorphism sets coincide") {
    for (const auto& T :
         {StructureTensor(3, ones(3), Side::ring), heis_tensor(),
          StructureTensor(3, prt({2, 1}), Side::ring), StructureTensor(3, prt({3}), Side::ring)}) {
        GroupTable G = gp(T);
        NeReport rep = verify_ne_equals_c(G);
        CHECK(rep.pass);
        CHECK(rep.group_side == rep.lie_side);
        CHECK(rep.detail == "both sides have " + std::to_string(rep.group_side) + " maps");
    }
    NeReport ab = verify_ne_equals_c(gp(StructureTensor(3, ones(3), Side::ring)));
    CHECK(ab.group_side == 729);
    NeReport hs = verify_ne_equals_c(gp(heis_tensor()));
    CHECK(hs.group_side == 9);
    NeReport c27 = verify_ne_equals_c(gp(StructureTensor(3, prt({3}), Side::ring)));
    CHECK(c27.group_side == 9);

    CHECK_THROWS_WITH_AS(verify_ne_equals_c(cyclic(9, 3)),
                         "verify_ne_equals_c: table carries no source structure",
                         std::invalid_argument);
}
