#include <doctest.h>

#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>

#include "plie/budget.hpp"
#include "plie/fp.hpp"
#include "plie/gl.hpp"
#include "plie/matrix.hpp"
#include "plie/parallel.hpp"
#include "plie/partition.hpp"
#include "plie/rational.hpp"

using namespace plie;

TEST_CASE("modular helpers") {
    CHECK(mod_reduce(-1, 7) == 6);
    CHECK(mod_reduce(14, 7) == 0);
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(3, 0, 5) == 1);
    CHECK(mod_inverse(2, 7) == 4);
    CHECK_THROWS_AS(mod_inverse(0, 7), std::domain_error);
    // 1/6 mod 7: 6^{-1} = 6
    CHECK(rational_reduce(1, 6, 7) == 6);
    CHECK_THROWS_AS(rational_reduce(1, 7, 7), std::domain_error);
}

TEST_CASE("rational arithmetic stays normalized") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(6, 3).is_integer());
    CHECK(!Rational(1, 3).is_integer());
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(-1, 12).to_string() == "-1/12");
    CHECK(Rational(-1, 12).reduce_mod(5) == 2);  // -1 * 12^{-1} = -3 = 2 (mod 5)
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    Rational sum(0);
    for (int i = 0; i < 8; ++i) sum += Rational(1, 8);
    CHECK(sum == Rational(1));
    CHECK(sum.is_integer());
}

TEST_CASE("partitions") {
    Partition lam(std::vector<std::int64_t>{2, 1});
    CHECK(lam.n() == 3);
    CHECK(lam.size() == 2);
    CHECK(lam.part(0) == 2);
    CHECK(lam.to_string() == "(2,1)");
    CHECK(Partition::parse("2,1") == lam);
    CHECK(lam.dual() == lam);

    Partition three(std::vector<std::int64_t>{3});
    CHECK(three.dual() == Partition(std::vector<std::int64_t>{1, 1, 1}));
    CHECK(three.dual().dual() == three);

    CHECK_THROWS_AS(Partition(std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<std::int64_t>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<std::int64_t>{0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);

    auto all3 = all_partitions(3);
    REQUIRE(all3.size() == 3);
    CHECK(all3[0] == Partition(std::vector<std::int64_t>{3}));
    CHECK(all3[1] == Partition(std::vector<std::int64_t>{2, 1}));
    CHECK(all3[2] == Partition(std::vector<std::int64_t>{1, 1, 1}));
    CHECK(all_partitions(1).size() == 1);
    CHECK(all_partitions(4).size() == 5);
    CHECK(all_partitions(7).size() == 15);
}

TEST_CASE("matrix arithmetic over F_p") {
    FpMatrix m(5, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 3);
    m.set(1, 1, 4);
    CHECK(m.det() == mod_reduce(1 * 4 - 2 * 3, 5));
    CHECK(m.rank() == 2);
    CHECK(m.invertible());
    CHECK((m * m.inverse()) == FpMatrix::identity(5, 2));
    CHECK((m.inverse() * m) == FpMatrix::identity(5, 2));
    CHECK(m.pow(0) == FpMatrix::identity(5, 2));
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.transpose().at(0, 1) == 3);

    std::vector<std::int64_t> row{1, 1};
    auto image = m.apply_row(row);  // (1+3, 2+4) mod 5
    CHECK(image == std::vector<std::int64_t>{4, 1});

    FpMatrix sing(5, 2, 2);
    sing.set(0, 0, 1);
    sing.set(1, 0, 2);
    CHECK(sing.rank() == 1);
    CHECK(!sing.invertible());
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("nilpotency and Jordan type") {
    FpMatrix j(3, 3, 3);  // one Jordan block of size 2 plus a zero row
    j.set(0, 1, 1);
    CHECK(j.is_nilpotent());
    CHECK(jordan_type(j) == Partition(std::vector<std::int64_t>{2, 1}));

    FpMatrix big(3, 3, 3);
    big.set(0, 1, 1);
    big.set(1, 2, 1);
    CHECK(jordan_type(big) == Partition(std::vector<std::int64_t>{3}));

    FpMatrix zero(3, 3, 3);
    CHECK(jordan_type(zero) == Partition(std::vector<std::int64_t>{1, 1, 1}));

    CHECK(!FpMatrix::identity(3, 3).is_nilpotent());
    CHECK_THROWS_AS(jordan_type(FpMatrix::identity(3, 3)), std::invalid_argument);
}

TEST_CASE("block triangular patterns") {
    // (2,1) shape: diagonal blocks of sizes 1 and 1.
    FpMatrix lower(3, 2, 2);
    lower.set(0, 0, 1);
    lower.set(1, 0, 2);
    lower.set(1, 1, 1);
    std::vector<std::int64_t> sizes{1, 1};
    CHECK(block_pattern_check(lower, sizes, BlockPattern::lower));
    CHECK(!block_pattern_check(lower, sizes, BlockPattern::upper));
    CHECK(block_pattern_check(lower.transpose(), sizes, BlockPattern::upper));

    FpMatrix sing(3, 2, 2);
    sing.set(1, 0, 1);  // diagonal block not invertible
    CHECK(!block_pattern_check(sing, sizes, BlockPattern::lower));

    // Single block of size 2: any invertible matrix qualifies either way.
    FpMatrix full(3, 2, 2);
    full.set(0, 1, 1);
    full.set(1, 0, 1);
    CHECK(block_pattern_check(full, {2}, BlockPattern::lower));
    CHECK(block_pattern_check(full, {2}, BlockPattern::upper));
}

TEST_CASE("row spaces") {
    FpRowSpace sp(3, 3);
    CHECK(sp.add({1, 0, 2}));
    CHECK(sp.add({0, 1, 1}));
    CHECK(!sp.add({1, 1, 0}));  // sum of the first two
    CHECK(sp.rank() == 2);
    CHECK(sp.contains({2, 0, 1}));
    CHECK(!sp.contains({0, 0, 1}));
    auto span = sp.enumerate();
    CHECK(span.size() == 9);

    std::set<std::vector<std::int64_t>> all(span.begin(), span.end());
    CHECK(all.size() == 9);
    CHECK(all.count({0, 0, 0}) == 1);
}

TEST_CASE("GL orders and enumeration") {
    CHECK(gl_order(1, 3) == 2);
    CHECK(gl_order(1, 5) == 4);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(3, 3) == 11232);

    auto g23 = gl_enumerate(2, 3, {});
    CHECK(static_cast<std::int64_t>(g23.size()) == 48);
    for (std::size_t i = 1; i < g23.size(); ++i) CHECK(g23[i - 1] < g23[i]);  // sorted, no dups
    for (const auto& g : g23) CHECK(g.invertible());

    GlEnumerator en(2, 2, {});
    std::int64_t count = 0;
    while (en.next()) ++count;
    CHECK(count == 6);

    Budgets tight;
    tight.gl_order_cap = 100;
    CHECK_THROWS_AS(gl_enumerate(3, 3, tight), BudgetError);
    try {
        gl_enumerate(3, 3, tight);
    } catch (const BudgetError& e) {
        CHECK(e.attempted() == 11232);
        CHECK(e.cap() == 100);
    }
}

TEST_CASE("parallel_for covers every index exactly once, any worker count") {
    for (int workers : {1, 2, 4, 7}) {
        std::vector<std::atomic<int>> hits(101);
        parallel_for(101, workers, [&](std::int64_t begin, std::int64_t end, int) {
            for (std::int64_t i = begin; i < end; ++i) hits[static_cast<std::size_t>(i)]++;
        });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    // Empty range is a no-op.
    parallel_for(0, 4, [&](std::int64_t, std::int64_t, int) { CHECK(false); });
}
