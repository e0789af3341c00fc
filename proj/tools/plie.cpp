// Command-line surface over the library: predicate checks, orbit enumeration,
// the coefficient correspondence, group construction, verification suites,
// counting, and the BCH series. All output is deterministic text, invariant
// under the worker count, so runs can be compared byte for byte.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 budget exceeded.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plie/bch.hpp"
#include "plie/correspondence.hpp"
#include "plie/counting.hpp"
#include "plie/io.hpp"
#include "plie/magnus_lazard.hpp"

namespace {

using namespace plie;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

// The correspondence and counting commands live in the p >= n regime.
void require_regime(std::int64_t p, std::int64_t n) {
    require_prime(p);
    if (p < n)
        throw std::invalid_argument("requires p >= n (got p = " + std::to_string(p) +
                                    ", n = " + std::to_string(n) + ")");
}

Side parse_side(const std::string& s) {
    if (s == "ring") return Side::ring;
    if (s == "algebra") return Side::algebra;
    throw std::invalid_argument("--side must be 'ring' or 'algebra', got '" + s + "'");
}

const char* verdict(bool b) { return b ? "yes" : "no"; }

struct CommonOpts {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::string partition;
    std::string side = "ring";
    bool lie = false;
    bool nilpotent = false;
    std::string input;
    std::string output;
    std::string transversal_dir;
    int workers = 1;
    Budgets budgets;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--gl-order-cap", o.budgets.gl_order_cap, "Largest |GL| swept exhaustively");
    cmd->add_option("--tensor-space-cap", o.budgets.tensor_space_cap,
                    "Largest enumerated coefficient space");
    cmd->add_option("--assoc-full-cap", o.budgets.assoc_full_cap,
                    "Largest order checked associatively in full");
    cmd->add_option("--assoc-samples", o.budgets.assoc_samples,
                    "Sampled associativity triples above the full cap");
}

void add_workers_flag(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--workers", o.workers, "Worker thread count (output-invariant)")
        ->check(CLI::Range(1, 64));
}

int cmd_check(const CommonOpts& o) {
    StructureTensor T = read_tensor(o.input);
    bool alt = T.is_alternating();
    bool jac = T.jacobi_holds();
    bool nil = alt && jac && T.is_nilpotent();  // nilpotency presupposes a Lie structure
    std::cout << "side=" << side_name(T.side()) << "\n";
    std::cout << "shape=" << T.shape().to_string() << "\n";
    std::cout << "alternating=" << verdict(alt) << "\n";
    std::cout << "jacobi=" << verdict(jac) << "\n";
    if (T.shape().part(static_cast<std::int64_t>(T.shape().size()) - 1) >= 2)
        std::cout << "note: Jacobi short-circuits on this shape (λ_t ≥ 2)\n";
    std::cout << "nilpotent=" << verdict(nil) << "\n";
    bool ok = alt && (!o.lie || jac) && (!o.nilpotent || (jac && nil));
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_orbits(const CommonOpts& o) {
    Partition shape = Partition::parse(o.partition);
    require_regime(o.p, shape.n());
    TensorFilter filter;
    filter.alternating = true;
    filter.jacobi = o.lie || o.nilpotent;
    filter.nilpotent = o.nilpotent;
    OrbitReport rep = orbits(o.p, shape, parse_side(o.side), filter, o.budgets, o.workers);
    if (!o.output.empty()) write_orbit_report(rep, o.output);
    std::cout << orbit_summary_text(rep);
    return kExitOk;
}

int cmd_correspond(const CommonOpts& o) {
    StructureTensor image = theta(read_tensor(o.input));
    std::string text = tensor_to_text(image);
    if (!o.output.empty()) write_tensor(image, o.output);
    std::cout << text;
    return kExitOk;
}

int cmd_group(const CommonOpts& o) {
    StructureTensor T = read_tensor(o.input);
    require_prime(T.p());
    GroupTable G = gp(T, o.budgets, o.workers);
    if (!o.output.empty()) write_group_table(G, o.output);
    std::cout << "order=" << G.order << "\n";
    std::cout << "exponent=" << exponent_of(G) << "\n";
    std::cout << "type=" << group_type(G).to_string() << "\n";
    std::cout << "derived order=" << derived_subgroup(G).size() << "\n";
    return kExitOk;
}

int cmd_count(const CommonOpts& o) {
    require_regime(o.p, o.n);
    Transversal tv;
    if (!o.transversal_dir.empty()) {
        tv = read_transversal(o.transversal_dir, o.budgets, o.workers);
        if (tv.p != o.p || tv.n != o.n)
            throw std::invalid_argument("transversal directory is for p=" + std::to_string(tv.p) +
                                        " n=" + std::to_string(tv.n));
    } else if (o.n <= 3) {
        tv = transversal_brute(o.p, o.n, o.budgets, o.workers);
    } else {
        throw std::invalid_argument(
            "missing transversal: exhaustive classification covers n <= 3; pass --transversal "
            "<dir> for larger n");
    }
    CountReport rep = count_report(o.p, o.n, tv, o.budgets, o.workers, true);
    std::cout << rep.to_string();
    return rep.cross_checks_agree() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const CommonOpts& o, const std::string& ring_file, const std::string& algebra_file) {
    if (!ring_file.empty() || !algebra_file.empty()) {
        if (ring_file.empty() || algebra_file.empty())
            throw std::invalid_argument("pair mode needs both --ring-file and --algebra-file");
        GencorrReport rep = verify_pair(read_tensor(ring_file), read_tensor(algebra_file));
        std::cout << rep.to_string();
        return rep.all_pass() ? kExitOk : kExitVerificationFailure;
    }

    if (o.p == 0 || o.n == 0)
        throw std::invalid_argument("verify needs --p and --n, or --ring-file/--algebra-file");
    require_regime(o.p, o.n);

    bool all_ok = true;
    GencorrReport rep = verify_gencorr(o.p, o.n, o.budgets, o.workers);
    std::cout << rep.to_string();
    all_ok = rep.all_pass();

    // Exponential/logarithm properties and the endomorphism-set equality, on
    // one representative per isomorphism class of every shape.
    TensorFilter filter{true, true, true};
    for (const auto& lam : all_partitions(o.n)) {
        OrbitReport orb = orbits(o.p, lam, Side::ring, filter, o.budgets, o.workers);
        for (std::int64_t k = 0; k < orb.orbit_count(); ++k) {
            const StructureTensor& T = orb.reps[static_cast<std::size_t>(k)];
            std::cout << "== shape " << lam.to_string() << " representative " << (k + 1) << " of "
                      << orb.orbit_count() << " ==\n";
            GroupTable G = gp(T, o.budgets, o.workers);
            MlReport ml = verify_ml_properties(G, T, o.budgets);
            std::cout << ml.to_string();
            if (!ml.all_pass()) all_ok = false;
            NeReport ne = verify_ne_equals_c(G, o.budgets);
            std::cout << (ne.pass ? "[ok]   " : "[FAIL] ")
                      << "central-nilpotent-endomorphism-sets-coincide — " << ne.detail << "\n";
            if (!ne.pass) all_ok = false;
        }
    }
    std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILURES above") << "\n";
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_bch(std::int64_t cls, std::int64_t modulus) {
    if (cls < 1) throw std::invalid_argument("--class must be at least 1");
    BchSeries series = bch_terms(static_cast<int>(cls));
    if (modulus == 0) {
        std::cout << series.to_string();
        return kExitOk;
    }
    require_prime(modulus);
    if (cls >= modulus)
        throw std::invalid_argument("class " + std::to_string(cls) +
                                    " is not below p = " + std::to_string(modulus) +
                                    "; denominators are not invertible");
    for (const auto& term : series.terms) {
        std::cout << term.coeff.reduce_mod(modulus) << " * [";
        for (std::size_t i = 0; i < term.word.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << (term.word[i] == 0 ? "x" : "y");
        }
        std::cout << "] (mod " << modulus << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correspondence engine for p-power rings, truncated-polynomial Lie algebras, "
                 "and finite p-groups of class below p"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string ring_file, algebra_file;
    std::int64_t bch_class = 2, bch_mod = 0;

    CLI::App* check = app.add_subcommand("check", "Predicate verdicts for a structure-constant file");
    check->add_option("file", o.input, "structure-constant file")->required();
    check->add_flag("--lie", o.lie, "require the Jacobi law for exit 0");
    check->add_flag("--nilpotent", o.nilpotent, "require nilpotency for exit 0");

    CLI::App* orb = app.add_subcommand("orbits", "Isomorphism classes on a shape, as orbits");
    orb->add_option("--p", o.p, "prime modulus")->required();
    orb->add_option("--partition", o.partition, "shape, e.g. 2,1")->required();
    orb->add_option("--side", o.side, "ring or algebra");
    orb->add_flag("--lie", o.lie, "filter to Jacobi-law tensors");
    orb->add_flag("--nilpotent", o.nilpotent, "filter to nilpotent tensors");
    orb->add_option("--out", o.output, "directory for representatives + summary");
    add_workers_flag(orb, o);
    add_budget_flags(orb, o);

    CLI::App* corr = app.add_subcommand("correspond", "Apply the coefficient correspondence");
    corr->add_option("file", o.input, "structure-constant file")->required();
    corr->add_option("--out", o.output, "write the image here");

    CLI::App* grp = app.add_subcommand("group", "Build the exponential group table");
    grp->add_option("file", o.input, "structure-constant file")->required();
    grp->add_option("--out", o.output, "write the multiplication table here");
    add_workers_flag(grp, o);
    add_budget_flags(grp, o);

    CLI::App* cnt = app.add_subcommand("count", "Count classes of order p^n by abelian type");
    cnt->add_option("--p", o.p, "prime modulus")->required();
    cnt->add_option("--n", o.n, "exponent of the order")->required();
    cnt->add_option("--transversal", o.transversal_dir, "directory with manifest.txt");
    add_workers_flag(cnt, o);
    add_budget_flags(cnt, o);

    CLI::App* ver = app.add_subcommand("verify", "Run the verification suites");
    ver->add_option("--p", o.p, "prime modulus");
    ver->add_option("--n", o.n, "total shape size");
    ver->add_option("--ring-file", ring_file, "ring-side file for pair mode");
    ver->add_option("--algebra-file", algebra_file, "algebra-side file for pair mode");
    add_workers_flag(ver, o);
    add_budget_flags(ver, o);

    CLI::App* bch = app.add_subcommand("bch", "Print the truncated BCH series");
    bch->add_option("--class", bch_class, "nilpotency class bound")->required();
    bch->add_option("--p", bch_mod, "reduce coefficients modulo this prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o);
        if (orb->parsed()) return cmd_orbits(o);
        if (corr->parsed()) return cmd_correspond(o);
        if (grp->parsed()) return cmd_group(o);
        if (cnt->parsed()) return cmd_count(o);
        if (ver->parsed()) return cmd_verify(o, ring_file, algebra_file);
        if (bch->parsed()) return cmd_bch(bch_class, bch_mod);
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
