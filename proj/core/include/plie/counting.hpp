// Isomorphism-class counting through endomorphism sets: C(K) is the set of
// central, bracket-compatible, nilpotent endomorphisms of a nilpotent Lie
// algebra K (exactly the T-actions turning K into a truncated polynomial
// algebra with T killing brackets), partitioned by Jordan type and weighted by
// reciprocal conjugation-orbit sizes under Aut(K). Summing over a transversal
// of nilpotent algebras counts groups of order p^n whose derived subgroup has
// exponent dividing p, split by abelian-group type.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plie/budget.hpp"
#include "plie/group.hpp"
#include "plie/lie.hpp"
#include "plie/matrix.hpp"
#include "plie/partition.hpp"
#include "plie/rational.hpp"
#include "plie/tensor.hpp"

namespace plie {

struct CentralNilEndo {
    FpMatrix sigma;     // rows act on the right of coordinate rows
    Partition jordan;   // Jordan type of sigma
};

// All sigma with sigma^n = 0, Im sigma inside the center, and
// [x sigma, y] = [x, y] sigma: the two membership conditions are linear, so the
// solution subspace is enumerated and then filtered by nilpotency. Requires K
// nilpotent (else std::invalid_argument). Every returned sigma kills the
// derived subalgebra; that consequence is asserted.
std::vector<CentralNilEndo> c_set(const FpLieAlgebra& K, const Budgets& budgets = {});

// The members of c_set with the given Jordan type.
std::vector<CentralNilEndo> c_set_lambda(const FpLieAlgebra& K, const Partition& lam,
                                         const Budgets& budgets = {});

// The bracket-preserving subgroup of GL_n(F_p), by exhaustive sweep; verified
// closed under product and inverse.
std::vector<FpMatrix> aut_lie(const FpLieAlgebra& K, const Budgets& budgets = {});

// Sum over sigma in C(K, lam) of 1/|conjugation orbit of sigma|, as an exact
// rational. The result must be an integer equal to the number of conjugation
// orbits; any discrepancy throws std::logic_error.
Rational orbit_sum(const FpLieAlgebra& K, const Partition& lam, const Budgets& budgets = {});

struct Transversal {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::vector<FpLieAlgebra> entries;  // pairwise non-isomorphic, nilpotent
    enum class Source { brute, file } source = Source::brute;
    // Brute-force transversals are complete by exhaustion. File transversals
    // claim completeness; the claim is refuted when a brute cross-check is
    // affordable and finds more classes, and carries a disclaimer otherwise.
    bool complete = true;
    std::string completeness_note;
};

// Exhaustive transversal via orbit enumeration on the elementary-abelian shape
// (budget-bound; practical for n <= 3).
Transversal transversal_brute(std::int64_t p, std::int64_t n, const Budgets& budgets = {},
                              int workers = 1);

// Wraps externally supplied algebras: validates that each is a nilpotent Lie
// algebra of dimension n, rejects duplicates (std::invalid_argument), and
// cross-checks completeness against the brute path when that fits the budgets.
Transversal transversal_from_algebras(std::int64_t p, std::int64_t n,
                                      std::vector<FpLieAlgebra> entries,
                                      const Budgets& budgets = {}, int workers = 1);

// Sum of orbit_sum(K, lam) over the transversal. Requires p >= n (the regime
// where the correspondence is available); smaller p throws std::invalid_argument.
std::int64_t count_partition(std::int64_t p, std::int64_t n, const Partition& lam,
                             const Transversal& transversal, const Budgets& budgets = {});

// Sum of count_partition over all partitions of n.
std::int64_t count_total(std::int64_t p, std::int64_t n, const Transversal& transversal,
                         const Budgets& budgets = {});

struct CountRow {
    Partition lam;
    std::int64_t count = 0;
    // Independent orbit count on the same shape from the basis-change action;
    // absent when its enumeration exceeds the budgets.
    std::optional<std::int64_t> cross_check;
};

struct CountReport {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::vector<CountRow> rows;
    std::int64_t total = 0;
    std::string completeness_note;

    bool cross_checks_agree() const;
    std::string to_string() const;
};

CountReport count_report(std::int64_t p, std::int64_t n, const Transversal& transversal,
                         const Budgets& budgets = {}, int workers = 1, bool cross_check = true);

// Endomorphisms of E with image inside the center and trivial n-fold composite,
// enumerated from generator images and returned as full element maps, sorted.
std::vector<std::vector<std::int64_t>> n_endo(const GroupTable& E, std::int64_t n,
                                              const Budgets& budgets = {});

// Module endomorphisms of T's module with image inside the structure's center,
// bracket compatibility, and trivial n-fold composite, as element maps, sorted.
// On an elementary-abelian shape these are exactly the c_set maps.
std::vector<std::vector<std::int64_t>> central_nilpotent_endo_maps(const StructureTensor& T,
                                                                   const Budgets& budgets = {});

struct NeReport {
    bool pass = false;
    std::int64_t group_side = 0;  // |N_E|
    std::int64_t lie_side = 0;    // |C| on the source structure
    std::string detail;
};

// Set equality of n_endo(E) and the endomorphism set of E's source structure,
// compared as maps on the shared element set. E must carry its source.
NeReport verify_ne_equals_c(const GroupTable& E, const Budgets& budgets = {});

}  // namespace plie
