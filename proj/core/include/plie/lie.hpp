// Finite-dimensional algebras over F_p given by a raw structure-constant cube
// b[i][j][l]: [e_i, e_j] = sum_l b_ij^l e_l. Nothing is assumed at construction;
// the predicates below classify the cube.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "plie/matrix.hpp"

namespace plie {

struct LieInvariants {
    std::int64_t center_dim = 0;
    std::int64_t derived_dim = 0;
    // Dimensions of the lower central series L^1 = L, L^{k+1} = [L^k, L], down to 0.
    std::vector<std::int64_t> lcs_dims;
    bool nilpotent = false;
    std::int64_t nilpotency_class = 0;  // meaningful only when nilpotent
};

class FpLieAlgebra {
public:
    FpLieAlgebra(std::int64_t p, std::int64_t dim);  // abelian
    FpLieAlgebra(std::int64_t p, std::int64_t dim, std::vector<std::int64_t> bracket_cube);

    std::int64_t p() const { return p_; }
    std::int64_t dim() const { return dim_; }
    const std::vector<std::int64_t>& cube() const { return b_; }

    std::int64_t coeff(std::int64_t i, std::int64_t j, std::int64_t l) const {
        return b_[static_cast<std::size_t>((i * dim_ + j) * dim_ + l)];
    }
    void set_coeff(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t v);

    std::vector<std::int64_t> bracket(const std::vector<std::int64_t>& x,
                                      const std::vector<std::int64_t>& y) const;

    bool is_alternating() const;
    bool jacobi_holds() const;
    bool is_lie() const { return is_alternating() && jacobi_holds(); }
    bool is_nilpotent() const;

    std::vector<std::vector<std::int64_t>> center_basis() const;
    std::vector<std::vector<std::int64_t>> derived_basis() const;
    LieInvariants invariants() const;

    bool operator==(const FpLieAlgebra& o) const = default;
    std::strong_ordering operator<=>(const FpLieAlgebra& o) const;

private:
    std::int64_t p_, dim_;
    std::vector<std::int64_t> b_;
};

}  // namespace plie
