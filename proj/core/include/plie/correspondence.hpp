// The dictionary between the two sides: a structure tensor names the same
// bracket data whether the carrier is the abelian p-group U or the truncated
// polynomial module V, and the basis-change groups on both sides cut out the
// same matrix pairs (E on the socle, F on the Frattini-style quotient).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plie/budget.hpp"
#include "plie/matrix.hpp"
#include "plie/tensor.hpp"

namespace plie {

// A basis-change pair. E is the induced matrix on the socle (row convention:
// row i holds the image of the i-th socle basis vector), F the induced matrix
// on U/pU resp. V/TV. For automorphisms of the module, E is block lower
// triangular and F block upper triangular with identical diagonal blocks,
// the blocks being the runs of equal shape parts.
struct AdmissiblePair {
    FpMatrix E, F, E_inv;
    Side side;

    AdmissiblePair(FpMatrix E_, FpMatrix F_, Side side_);
    AdmissiblePair(FpMatrix E_, FpMatrix F_, FpMatrix E_inv_, Side side_);

    static AdmissiblePair identity(std::int64_t p, std::int64_t t, Side side);
    AdmissiblePair inverse() const;

    std::int64_t p() const { return E.p(); }
    std::int64_t t() const { return E.rows(); }

    bool operator==(const AdmissiblePair& o) const {
        return side == o.side && E == o.E && F == o.F;
    }
    std::strong_ordering operator<=>(const AdmissiblePair& o) const;
};

// compose(h, g) is "g first, then h": act(T, compose(h, g)) == act(act(T, g), h).
AdmissiblePair compose(const AdmissiblePair& h, const AdmissiblePair& g);

// Pattern test against a shape: block triangularity plus matching invertible
// diagonal blocks.
bool is_admissible(const AdmissiblePair& g, const Partition& shape);

// prod_j |GL_{d_j}(F_p)| * p^{2 sum_{j<k} d_j d_k}, saturated at INT64_MAX.
std::int64_t admissible_pair_count(std::int64_t p, const Partition& shape);

// The full pattern group in a fixed deterministic order.
std::vector<AdmissiblePair> admissible_pairs(std::int64_t p, const Partition& shape, Side side,
                                             const Budgets& budgets = {});

// The correspondence: identical coefficients, other carrier.
StructureTensor theta(const StructureTensor& T);
AdmissiblePair theta_pair(const AdmissiblePair& g);

// Basis change of the structure constants:
//   alpha'_{ij}^m = sum_{a,b,c} F_{ia} F_{jb} alpha_{ab}^c (E^{-1})_{cm}.
StructureTensor act(const StructureTensor& T, const AdmissiblePair& g);

struct TensorFilter {
    bool alternating = true;
    bool jacobi = false;     // coefficient identity for the Jacobi law
    bool nilpotent = false;  // requires jacobi
};

// All coefficient arrays passing the filter, in lexicographic order
// (alternating arrays are generated from their free positions i < j).
std::vector<std::vector<std::int64_t>> enumerate_alphas(std::int64_t p, const Partition& shape,
                                                        const TensorFilter& filter,
                                                        const Budgets& budgets = {});
std::vector<StructureTensor> enumerate_tensors(std::int64_t p, const Partition& shape, Side side,
                                               const TensorFilter& filter,
                                               const Budgets& budgets = {});

struct OrbitReport {
    std::int64_t p;
    Partition shape;
    Side side;
    TensorFilter filter;
    std::int64_t space_size = 0;
    std::int64_t group_size = 0;
    std::vector<StructureTensor> reps;  // lexicographically least member of each orbit
    std::vector<std::int64_t> sizes;    // same order as reps
    std::int64_t orbit_count() const { return static_cast<std::int64_t>(reps.size()); }
};

// Orbit decomposition of the filtered tensor space under the pattern group.
// Deterministic for any worker count.
OrbitReport orbits(std::int64_t p, const Partition& shape, Side side, const TensorFilter& filter,
                   const Budgets& budgets = {}, int workers = 1);

// A pair g with act(a, g) == b, if one exists. Both tensors must live on the
// same module.
std::optional<AdmissiblePair> isomorphism_witness(const StructureTensor& a,
                                                  const StructureTensor& b,
                                                  const Budgets& budgets = {});
bool are_isomorphic(const StructureTensor& a, const StructureTensor& b,
                    const Budgets& budgets = {});

// An automorphism of the module, tabulated on elements. images[i] is the image
// of the i-th generator; perm maps element indices, perm_inv is its inverse.
struct ModuleAutomorphism {
    std::vector<Coords> images;
    std::vector<std::int64_t> perm, perm_inv;
};

// Every module automorphism (ring side: of the abelian group U; algebra side:
// of the F_p[T]-module V), found by exhausting generator images over the
// torsion submodules that can receive them and keeping the bijections.
std::vector<ModuleAutomorphism> module_automorphisms(std::int64_t p, const Partition& shape,
                                                     Side side, const Budgets& budgets = {});

// The (E, F) pairs induced by the automorphisms, sorted and deduplicated.
std::vector<AdmissiblePair> module_automorphism_pairs(std::int64_t p, const Partition& shape,
                                                      Side side, const Budgets& budgets = {});

struct GencorrCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GencorrReport {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::vector<GencorrCheck> checks;
    bool all_pass() const;
    std::string to_string() const;  // one line per check plus a summary line
};

// Exhaustive verification of the correspondence for all shapes of total size n:
// pattern groups equal the automorphism-induced pairs on both sides and agree
// across sides, the action matches element-level transport, theta is an
// involution commuting with the action, the Lie and nilpotency laws transfer,
// and orbit counts coincide filter by filter.
GencorrReport verify_gencorr(std::int64_t p, std::int64_t n, const Budgets& budgets = {},
                             int workers = 1);

// Transfer checks for one explicit ring/algebra tensor pair: theta(ring) must
// equal the algebra tensor, and the structural verdicts must agree.
GencorrReport verify_pair(const StructureTensor& ring_side, const StructureTensor& algebra_side);

}  // namespace plie
