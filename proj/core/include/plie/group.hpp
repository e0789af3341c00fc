// Finite p-groups as explicit multiplication tables. Element ordering is the
// lexicographic coordinate order of the underlying module, identity at index 0.
// Tables built from a bracket structure keep the source shape and coefficients
// so round-trip checks can compare table bytes and coefficients exactly.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "plie/budget.hpp"
#include "plie/module.hpp"
#include "plie/partition.hpp"
#include "plie/tensor.hpp"

namespace plie {

struct GroupTable {
    std::int64_t p = 0;
    std::int64_t order = 0;
    // Row-major: table[a * order + b] is the index of the product a*b.
    std::vector<std::int32_t> table;

    // Source structure when the table came out of the exponential construction;
    // absent when the table was loaded from a bare multiplication table.
    std::optional<Partition> shape;
    Side side = Side::ring;
    std::vector<std::int64_t> alpha;

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return table[static_cast<std::size_t>(a * order + b)];
    }
    bool has_source() const { return shape.has_value(); }
    Module source_module() const;
    StructureTensor source_tensor() const;

    // Table-level equality (source structure excluded): same p, order, and entries.
    bool same_table(const GroupTable& other) const {
        return p == other.p && order == other.order && table == other.table;
    }
};

struct AssocCheck {
    bool ok = false;
    bool exhaustive = false;
    std::int64_t triples_checked = 0;
    std::array<std::int64_t, 3> witness{0, 0, 0};  // first failing triple if !ok
};

bool has_identity(const GroupTable& G);
bool is_latin(const GroupTable& G);
// Full m^3 sweep when order <= assoc_full_cap, otherwise assoc_samples triples
// from a fixed-seed generator (deterministic, sequential).
AssocCheck check_associativity(const GroupTable& G, const Budgets& budgets = {});
// Throws std::invalid_argument unless identity/Latin/associativity all hold.
void validate_group(const GroupTable& G, const Budgets& budgets = {});

std::int64_t inverse_of(const GroupTable& G, std::int64_t a);
std::int64_t power(const GroupTable& G, std::int64_t a, std::int64_t k);
std::int64_t element_order(const GroupTable& G, std::int64_t a);
std::int64_t exponent_of(const GroupTable& G);
bool is_abelian(const GroupTable& G);
std::vector<std::int64_t> center(const GroupTable& G);

// x^{-1} y^{-1} x y.
std::int64_t commutator(const GroupTable& G, std::int64_t x, std::int64_t y);

// Smallest subgroup containing the seed, as a sorted index list.
std::vector<std::int64_t> subgroup_closure(const GroupTable& G,
                                           const std::vector<std::int64_t>& seed);
std::vector<std::int64_t> derived_subgroup(const GroupTable& G);

// A generating sequence found greedily (each element extends the closure of the
// previous ones); empty for the trivial group.
std::vector<std::int64_t> generating_sequence(const GroupTable& G);

// Type invariants: p^{omega_i} = |Omega_i : Omega_{i-1}| where
// Omega_i = {x : x^{p^i} = 1}; each Omega_i must be a subgroup (throws
// std::logic_error otherwise), and the type is the dual of (omega_1, omega_2, ...).
Partition group_type(const GroupTable& G);

struct SubgroupData {
    std::vector<std::int64_t> derived;
    std::vector<std::vector<std::int64_t>> subgroups;  // sorted lists, sorted
    std::vector<std::vector<std::int64_t>> normals;
};

bool is_normal(const GroupTable& G, const std::vector<std::int64_t>& H);
std::vector<std::vector<std::int64_t>> all_subgroups(const GroupTable& G, const Budgets& budgets = {});
SubgroupData commutator_and_subgroups(const GroupTable& G, const Budgets& budgets = {});

// Subgroup generated by all commutators [h, k] with h in H, k in K.
std::vector<std::int64_t> commutator_subgroup(const GroupTable& G,
                                              const std::vector<std::int64_t>& H,
                                              const std::vector<std::int64_t>& K);

// Exhaustive isomorphism test by invariant pruning (element-order multiset,
// type, derived-subgroup and center orders) followed by backtracking over
// generator images.
bool groups_isomorphic(const GroupTable& G1, const GroupTable& G2, const Budgets& budgets = {});

}  // namespace plie
