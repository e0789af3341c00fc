// Acceptance suite: one verdict line per criterion, exit 0 only when all pass.
// Limits are pinned here, not taken from the environment.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "plie/bch.hpp"
#include "plie/correspondence.hpp"
#include "plie/counting.hpp"
#include "plie/io.hpp"
#include "plie/magnus_lazard.hpp"

using namespace plie;

namespace {

constexpr double kCountSecondsLimit = 60.0;     // criterion 1
constexpr double kGencorrSecondsLimit = 600.0;  // criterion 3
constexpr double kSampledSecondsLimit = 300.0;  // criterion 7
constexpr std::int64_t kSampledTriples = 1'000'000;

int failures = 0;

void report(int k, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void criterion(int k, const std::string& name, F body) {
    try {
        auto [pass, detail] = body();
        report(k, name, pass, detail);
    } catch (const std::exception& e) {
        report(k, name, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

Partition ones(std::int64_t n) { return Partition(std::vector<std::int64_t>(n, 1)); }

const std::vector<std::pair<std::int64_t, std::int64_t>> kConfigs = {
    {3, 1}, {3, 2}, {3, 3}, {2, 1}, {2, 2}, {5, 1}, {5, 2}};

struct Verdict {
    bool pass;
    std::string detail;
};

Verdict criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    Transversal tv = transversal_brute(3, 3, {}, 1);
    CountReport rep = count_report(3, 3, tv, {}, 1, true);
    double dt = seconds_since(t0);
    bool pass = rep.total == 5 && rep.rows.size() == 3 && rep.rows[0].count == 1 &&
                rep.rows[1].count == 2 && rep.rows[2].count == 2 && rep.cross_checks_agree() &&
                dt < kCountSecondsLimit;
    return {pass, "total " + std::to_string(rep.total) + ", breakdown " +
                      std::to_string(rep.rows[0].count) + "/" + std::to_string(rep.rows[1].count) +
                      "/" + std::to_string(rep.rows[2].count) + ", single worker, " +
                      fmt_seconds(dt) + " (limit " + fmt_seconds(kCountSecondsLimit) + ")"};
}

Verdict criterion2() {
    TensorFilter nil{true, true, true};
    std::int64_t checked = 0;
    for (auto [p, n] : kConfigs) {
        Transversal tv = transversal_brute(p, n);
        for (const auto& lam : all_partitions(n)) {
            std::int64_t by_sum = count_partition(p, n, lam, tv);
            std::int64_t by_orbits = orbits(p, lam, Side::ring, nil).orbit_count();
            if (by_sum != by_orbits)
                return {false, "p=" + std::to_string(p) + " lambda=" + lam.to_string() +
                                   ": endomorphism count " + std::to_string(by_sum) +
                                   " vs orbit count " + std::to_string(by_orbits)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (p, partition) pairs agree with orbit enumeration"};
}

// Shared between criteria 3 and 9 so the expensive sweep runs once per worker count.
std::string gencorr_w4_text;
std::string gencorr_w1_text;

Verdict criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    GencorrReport rep = verify_gencorr(3, 3, {}, 4);
    double dt = seconds_since(t0);
    gencorr_w4_text = rep.to_string();
    bool pass = rep.all_pass() && dt < kGencorrSecondsLimit;
    return {pass, std::to_string(rep.checks.size()) + " checks over shapes (3), (2,1), (1,1,1), " +
                      fmt_seconds(dt) + " (limit " + fmt_seconds(kGencorrSecondsLimit) + ")"};
}

std::vector<StructureTensor> reps_order27() {
    std::vector<StructureTensor> reps;
    TensorFilter nil{true, true, true};
    for (const auto& lam : all_partitions(3))
        for (const auto& T : orbits(3, lam, Side::ring, nil).reps) reps.push_back(T);
    return reps;
}

Verdict criterion4() {
    std::int64_t rep_count = 0;
    for (const auto& T : reps_order27()) {
        GroupTable G = gp(T);
        AssocCheck ac = check_associativity(G);
        if (!ac.ok || !ac.exhaustive || ac.triples_checked != 19683)
            return {false, "associativity sweep incomplete on shape " + T.shape().to_string()};
        MlReport ml = verify_ml_properties(G, T);
        if (ml.checks.size() != 8) return {false, "expected 8 property checks"};
        if (!ml.all_pass()) return {false, "property failure:\n" + ml.to_string()};
        std::string text = ml.to_string();
        if (text.find("all 27 elements") == std::string::npos ||
            text.find("all 729 pairs") == std::string::npos ||
            text.find("pairs of normal subgroups") == std::string::npos)
            return {false, "property details do not show full coverage:\n" + text};
        ++rep_count;
    }
    return {rep_count == 5,
            std::to_string(rep_count) +
                " class representatives of order 27: 19683 triples, 27 elements, 729 pairs, "
                "full lattices, all normal-subgroup pairs"};
}

Verdict criterion5() {
    struct Case {
        StructureTensor T;
        std::int64_t expect;  // -1: only require equality
        const char* label;
    };
    std::vector<Case> cases;
    cases.push_back({StructureTensor(3, ones(3), Side::ring), 729, "elementary abelian 27"});
    StructureTensor heis(3, ones(3), Side::ring);
    heis.set_coeff(0, 1, 2, 1);
    heis.set_coeff(1, 0, 2, 2);
    cases.push_back({heis, 9, "extraspecial 27"});
    cases.push_back({StructureTensor(3, Partition(std::vector<std::int64_t>{2}), Side::ring), -1,
                     "cyclic 9"});
    cases.push_back({StructureTensor(3, ones(2), Side::ring), -1, "elementary abelian 9"});
    std::string detail;
    for (const auto& c : cases) {
        NeReport rep = verify_ne_equals_c(gp(c.T));
        if (!rep.pass || rep.group_side != rep.lie_side ||
            (c.expect >= 0 && rep.group_side != c.expect))
            return {false, std::string(c.label) + ": " + rep.detail};
        if (!detail.empty()) detail += ", ";
        detail += std::string(c.label) + " " + std::to_string(rep.group_side) + "=" +
                  std::to_string(rep.lie_side);
    }
    return {true, detail};
}

Verdict criterion6() {
    std::int64_t sums = 0;
    for (auto [p, n] : kConfigs) {
        Transversal tv = transversal_brute(p, n);
        for (const auto& K : tv.entries)
            for (const auto& lam : all_partitions(n)) {
                Rational s = orbit_sum(K, lam);
                if (!s.is_integer())
                    return {false, "non-integral reciprocal sum " + s.to_string() + " at p=" +
                                       std::to_string(p) + " lambda=" + lam.to_string()};
                ++sums;
            }
    }
    return {true, "all " + std::to_string(sums) + " reciprocal orbit sums are integers"};
}

Verdict criterion7() {
    BchSeries s2 = bch_terms(2);
    BchSeries s3 = bch_terms(3);
    using W = std::vector<std::uint8_t>;
    bool closed =
        s2.terms.size() == 3 && s2.terms[0].coeff == Rational(1) && s2.terms[0].word == W{0} &&
        s2.terms[1].coeff == Rational(1) && s2.terms[1].word == W{1} &&
        s2.terms[2].coeff == Rational(1, 2) && s2.terms[2].word == W{0, 1} &&
        s3.terms.size() == 5 && s3.terms[3].coeff == Rational(-1, 12) &&
        s3.terms[3].word == W{0, 1, 0} && s3.terms[4].coeff == Rational(1, 12) &&
        s3.terms[4].word == W{0, 1, 1};
    if (!closed) return {false, "closed forms through weight 3 do not match"};

    // Every exponential table in this suite's scope passes associativity in full.
    for (const auto& T : reps_order27()) {
        AssocCheck ac = check_associativity(gp(T));
        if (!ac.ok || !ac.exhaustive) return {false, "order-27 table failed the exhaustive sweep"};
    }

    // Class-3 structure of order 625: sampled associativity, timed.
    StructureTensor fil(5, ones(4), Side::ring);
    fil.set_coeff(0, 1, 2, 1);
    fil.set_coeff(1, 0, 2, 4);
    fil.set_coeff(0, 2, 3, 1);
    fil.set_coeff(2, 0, 3, 4);
    Budgets budgets;
    budgets.assoc_samples = kSampledTriples;
    auto t0 = std::chrono::steady_clock::now();
    GroupTable G = gp(fil, budgets);
    AssocCheck ac = check_associativity(G, budgets);
    double dt = seconds_since(t0);
    bool pass = G.order == 625 && ac.ok && !ac.exhaustive && ac.triples_checked == kSampledTriples &&
                dt < kSampledSecondsLimit;
    return {pass, "closed forms match; order-625 class-3 table sampled " +
                      std::to_string(ac.triples_checked) + " triples in " + fmt_seconds(dt) +
                      " (limit " + fmt_seconds(kSampledSecondsLimit) + ")"};
}

Verdict criterion8() {
    std::vector<StructureTensor> cases = {
        StructureTensor(3, ones(3), Side::ring),
        StructureTensor(3, Partition(std::vector<std::int64_t>{2, 1}), Side::ring),
    };
    StructureTensor heis(3, ones(3), Side::ring);
    heis.set_coeff(0, 1, 2, 1);
    heis.set_coeff(1, 0, 2, 2);
    cases.push_back(heis);
    StructureTensor m27(3, Partition(std::vector<std::int64_t>{2, 1}), Side::ring);
    m27.set_coeff(0, 1, 0, 1);
    m27.set_coeff(1, 0, 0, 2);
    cases.push_back(m27);

    for (const auto& T : cases) {
        GroupTable G = gp(T);
        StructureTensor back = lp_class2(G);
        if (back.alpha() != T.alpha() || back.shape() != T.shape())
            return {false, "logarithm did not return the source coefficients on shape " +
                               T.shape().to_string()};
        if (!gp(back).same_table(G))
            return {false, "re-exponentiated table differs on shape " + T.shape().to_string()};
    }
    return {true, "4 structures (both order-27 shapes with zero and nonzero brackets) round-trip "
                  "byte-for-byte"};
}

Verdict criterion9() {
    // Criterion 1 output.
    std::string count_w1 = count_report(3, 3, transversal_brute(3, 3, {}, 1), {}, 1, true).to_string();
    std::string count_w4 = count_report(3, 3, transversal_brute(3, 3, {}, 4), {}, 4, true).to_string();
    if (count_w1 != count_w4) return {false, "count reports differ between workers 1 and 4"};

    // Criterion 2 outputs: orbit summaries for every configuration.
    TensorFilter nil{true, true, true};
    for (auto [p, n] : kConfigs)
        for (const auto& lam : all_partitions(n)) {
            std::string w1 = orbit_summary_text(orbits(p, lam, Side::ring, nil, {}, 1));
            std::string w4 = orbit_summary_text(orbits(p, lam, Side::ring, nil, {}, 4));
            if (w1 != w4)
                return {false, "orbit summaries differ between workers at p=" + std::to_string(p) +
                                   " lambda=" + lam.to_string()};
        }

    // Criterion 3 output: the four-worker text was stored by criterion 3.
    gencorr_w1_text = verify_gencorr(3, 3, {}, 1).to_string();
    if (gencorr_w4_text.empty()) return {false, "criterion 3 did not run"};
    if (gencorr_w1_text != gencorr_w4_text)
        return {false, "verification reports differ between workers 1 and 4"};
    return {true, "count report, orbit summaries, and verification report are byte-identical "
                  "for workers 1 and 4"};
}

}  // namespace

int main() {
    criterion(1, "class count for order 3^3 by abelian type", criterion1);
    criterion(2, "endomorphism counts equal orbit counts on every admissible shape", criterion2);
    criterion(3, "exhaustive correspondence sweep at p=3, n=3", criterion3);
    criterion(4, "group/structure property suite on all order-27 classes", criterion4);
    criterion(5, "endomorphism-set equality on both sides", criterion5);
    criterion(6, "reciprocal orbit sums are integral", criterion6);
    criterion(7, "series closed forms and associativity of exponential tables", criterion7);
    criterion(8, "exponential/logarithm round trip is byte-exact", criterion8);
    criterion(9, "worker counts 1 and 4 produce identical bytes", criterion9);

    if (failures == 0) {
        std::cout << "acceptance: all 9 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
