// Structure tensors: the coefficient cubes alpha_ij^l defining a bracket
//   [u_i, u_j] = sum_l alpha_ij^l p^{l_l - 1} u_l      (ring side)
//   [v_i, v_j] = sum_l alpha_ij^l T^{l_l - 1} v_l      (algebra side)
// on the module of the given shape. The bracket always lands in the socle and
// kills pU resp. TV, so a tensor is exactly an element of Hom(W x W, Omega_1)
// where W is the rank-t quotient modulo pU resp. TV.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "plie/lie.hpp"
#include "plie/module.hpp"

namespace plie {

class StructureTensor {
public:
    StructureTensor(std::int64_t p, Partition shape, Side side);  // zero tensor
    StructureTensor(std::int64_t p, Partition shape, Side side, std::vector<std::int64_t> alpha);

    const Module& module() const { return mod_; }
    std::int64_t p() const { return mod_.p(); }
    std::int64_t t() const { return mod_.t(); }
    const Partition& shape() const { return mod_.shape(); }
    Side side() const { return mod_.side(); }

    const std::vector<std::int64_t>& alpha() const { return a_; }
    std::int64_t coeff(std::int64_t i, std::int64_t j, std::int64_t l) const {
        std::int64_t tt = t();
        return a_[static_cast<std::size_t>((i * tt + j) * tt + l)];
    }
    void set_coeff(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t v);
    void set_alpha(std::vector<std::int64_t> alpha);  // full coefficient array, reduced mod p

    // Bracket of two module elements; only their images mod pU resp. TV matter.
    Coords bracket(const Coords& x, const Coords& y) const;

    // Bracket factors through the exterior square: alpha_ii = 0 and
    // alpha_ij = -alpha_ji (the diagonal condition is what matters at p = 2).
    bool is_alternating() const;

    // Jacobi identity for the induced bracket. When the smallest part is >= 2
    // the socle sits inside pU resp. TV and Jacobi holds unconditionally;
    // otherwise the displayed coefficient identity is tested, with l running
    // over the parts equal to 1.
    bool jacobi_holds() const;

    // Structure induced on the rank-t quotient modulo pU resp. TV: keeps the
    // coefficients alpha_ij^l with l a part of size 1. Not necessarily Lie.
    FpLieAlgebra quotient_by_mho1() const;

    // Nilpotency of the whole structure, decided on the quotient (brackets of
    // socle elements with everything vanish, so the quotient carries it all).
    // Requires a Lie tensor.
    bool is_nilpotent() const;

    // Lower central series of the full structure: F_p-dimensions of
    // L^2, L^3, ... inside the socle, computed directly from the bracket.
    std::vector<std::int64_t> lcs_socle_dims() const;
    // Largest c with L^c != 0, from the full structure. Requires nilpotency.
    std::int64_t nilpotency_class() const;

    bool operator==(const StructureTensor& o) const;
    std::strong_ordering operator<=>(const StructureTensor& o) const;  // alpha, lexicographic

private:
    Module mod_;
    std::vector<std::int64_t> a_;
};

// All-ones shape tensor carrying the same cube as the algebra.
StructureTensor to_tensor(const FpLieAlgebra& K, Side side = Side::ring);
// Inverse of to_tensor; requires an all-ones shape.
FpLieAlgebra to_lie_algebra(const StructureTensor& T);

}  // namespace plie
