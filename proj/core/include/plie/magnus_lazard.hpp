// The exponential construction: a nilpotent bracket structure of class c < p
// becomes a group on the same element set via the truncated BCH product, and at
// class <= 2 the construction inverts in closed form (Baer's trick). The
// verifier checks the correspondence properties that make the two directions
// mutually inverse: shared underlying set, identity, element orders, commutator
// degeneracy, subgroup/subring and normal/ideal lattices, and commutator
// subgroups against bracket-generated ideals.
#pragma once

#include <string>
#include <vector>

#include "plie/budget.hpp"
#include "plie/group.hpp"
#include "plie/tensor.hpp"

namespace plie {

// Multiplication table of the group exp(T): x * y = z(x, y) with the BCH series
// truncated at the nilpotency class of T. Requires T alternating + Jacobi +
// nilpotent of class < p (otherwise the series denominators are not invertible);
// violations throw std::invalid_argument. The result passes has_identity,
// is_latin, and check_associativity within the given budgets, and carries T as
// its source structure.
GroupTable gp(const StructureTensor& T, const Budgets& budgets = {}, int workers = 1);

// Inverse of gp at class <= 2 on odd-order tables: x + y := x * y * c^{(m-1)/2}
// where c = [x, y] is the group commutator and m its order (the exact negative
// half, well-defined for odd m), bracket := commutator. Requires class <= 2,
// odd order, and derived subgroup of exponent dividing p. Tables produced by gp
// round-trip byte-for-byte (the element labeling already matches the module
// coordinate order); foreign tables are recovered relative to a greedily chosen
// adapted basis, i.e. up to a basis change.
StructureTensor lp_class2(const GroupTable& G, const Budgets& budgets = {});

struct MlCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MlReport {
    std::vector<MlCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string to_string() const;
};

// Exhaustive property suite for G = gp(T): same underlying set, identity = 0,
// element order = additive order (every element), commutator trivial iff
// bracket zero (every pair), subgroup lattice = subring lattice and normal
// subgroups = ideals, and [H,K] = bracket-generated ideal for every pair of
// normal subgroups. Failures carry a witness in the detail string.
MlReport verify_ml_properties(const GroupTable& G, const StructureTensor& T,
                              const Budgets& budgets = {});

}  // namespace plie
