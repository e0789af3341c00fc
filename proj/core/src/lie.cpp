#include "plie/lie.hpp"

#include <stdexcept>

#include "plie/fp.hpp"

namespace plie {

FpLieAlgebra::FpLieAlgebra(std::int64_t p, std::int64_t dim)
    : p_(p), dim_(dim), b_(static_cast<std::size_t>(dim * dim * dim), 0) {
    if (!is_prime(p)) throw std::invalid_argument("FpLieAlgebra: p must be prime");
    if (dim < 1) throw std::invalid_argument("FpLieAlgebra: dim must be >= 1");
}

FpLieAlgebra::FpLieAlgebra(std::int64_t p, std::int64_t dim, std::vector<std::int64_t> bracket_cube)
    : FpLieAlgebra(p, dim) {
    if (bracket_cube.size() != b_.size())
        throw std::invalid_argument("FpLieAlgebra: bracket cube has wrong size");
    for (auto& v : bracket_cube) v = mod_reduce(v, p_);
    b_ = std::move(bracket_cube);
}

void FpLieAlgebra::set_coeff(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t v) {
    b_[static_cast<std::size_t>((i * dim_ + j) * dim_ + l)] = mod_reduce(v, p_);
}

std::vector<std::int64_t> FpLieAlgebra::bracket(const std::vector<std::int64_t>& x,
                                                const std::vector<std::int64_t>& y) const {
    if (static_cast<std::int64_t>(x.size()) != dim_ || static_cast<std::int64_t>(y.size()) != dim_)
        throw std::invalid_argument("FpLieAlgebra::bracket: length mismatch");
    std::vector<std::int64_t> z(static_cast<std::size_t>(dim_), 0);
    for (std::int64_t i = 0; i < dim_; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (std::int64_t j = 0; j < dim_; ++j) {
            std::int64_t f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] % p_;
            if (f == 0) continue;
            for (std::int64_t l = 0; l < dim_; ++l)
                z[static_cast<std::size_t>(l)] =
                    mod_reduce(z[static_cast<std::size_t>(l)] + f * coeff(i, j, l), p_);
        }
    }
    return z;
}

bool FpLieAlgebra::is_alternating() const {
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t l = 0; l < dim_; ++l)
            if (coeff(i, i, l) != 0) return false;
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = i + 1; j < dim_; ++j)
            for (std::int64_t l = 0; l < dim_; ++l)
                if (mod_reduce(coeff(i, j, l) + coeff(j, i, l), p_) != 0) return false;
    return true;
}

bool FpLieAlgebra::jacobi_holds() const {
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = 0; j < dim_; ++j)
            for (std::int64_t k = 0; k < dim_; ++k)
                for (std::int64_t m = 0; m < dim_; ++m) {
                    std::int64_t s = 0;
                    for (std::int64_t l = 0; l < dim_; ++l)
                        s += coeff(i, j, l) * coeff(l, k, m) + coeff(j, k, l) * coeff(l, i, m) +
                             coeff(k, i, l) * coeff(l, j, m);
                    if (mod_reduce(s, p_) != 0) return false;
                }
    return true;
}

std::vector<std::vector<std::int64_t>> FpLieAlgebra::center_basis() const {
    // z central iff z * ad(e_j) = 0 for all j, with ad(e_j)_{am} = b_aj^m.
    FpMatrix big(p_, dim_, dim_ * dim_);
    for (std::int64_t a = 0; a < dim_; ++a)
        for (std::int64_t j = 0; j < dim_; ++j)
            for (std::int64_t m = 0; m < dim_; ++m) big.set(a, j * dim_ + m, coeff(a, j, m));
    // Nullspace of big as row vectors: brute solve via elimination on transpose.
    FpMatrix bt = big.transpose();
    // Solve bt * z^T = 0 i.e. find nullspace of big acting on the right of rows.
    // Use row reduction of big^T: columns of big^T index the z coordinates.
    std::vector<std::vector<std::int64_t>> out;
    // Gaussian elimination for the nullspace of the linear map z -> z*big.
    std::int64_t rows = dim_ * dim_, cols = dim_;
    std::vector<std::int64_t> a(static_cast<std::size_t>(rows * cols));
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c) a[static_cast<std::size_t>(r * cols + c)] = bt.at(r, c);
    // Reduce; free columns give the basis.
    std::vector<std::int64_t> pivot_col;
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
        std::int64_t piv = -1;
        for (std::int64_t r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r * cols + col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (std::int64_t c = 0; c < cols; ++c)
            std::swap(a[static_cast<std::size_t>(piv * cols + c)], a[static_cast<std::size_t>(rank * cols + c)]);
        std::int64_t inv = mod_inverse(a[static_cast<std::size_t>(rank * cols + col)], p_);
        for (std::int64_t c = 0; c < cols; ++c) {
            auto& v = a[static_cast<std::size_t>(rank * cols + c)];
            v = mod_mul(v, inv, p_);
        }
        for (std::int64_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::int64_t f = a[static_cast<std::size_t>(r * cols + col)];
            if (f == 0) continue;
            for (std::int64_t c = 0; c < cols; ++c) {
                auto& v = a[static_cast<std::size_t>(r * cols + c)];
                v = mod_reduce(v - f * a[static_cast<std::size_t>(rank * cols + c)], p_);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::int64_t col = 0; col < cols; ++col) {
        bool is_pivot = false;
        for (std::int64_t pc : pivot_col)
            if (pc == col) is_pivot = true;
        if (is_pivot) continue;
        std::vector<std::int64_t> z(static_cast<std::size_t>(cols), 0);
        z[static_cast<std::size_t>(col)] = 1;
        for (std::int64_t r = 0; r < rank; ++r) {
            std::int64_t v = a[static_cast<std::size_t>(r * cols + col)];
            if (v != 0) z[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = mod_reduce(-v, p_);
        }
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> FpLieAlgebra::derived_basis() const {
    FpRowSpace span(p_, dim_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = 0; j < dim_; ++j) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(dim_));
            for (std::int64_t l = 0; l < dim_; ++l) v[static_cast<std::size_t>(l)] = coeff(i, j, l);
            span.add(std::move(v));
        }
    return span.basis();
}

bool FpLieAlgebra::is_nilpotent() const { return invariants().nilpotent; }

LieInvariants FpLieAlgebra::invariants() const {
    LieInvariants inv;
    inv.center_dim = static_cast<std::int64_t>(center_basis().size());
    inv.derived_dim = static_cast<std::int64_t>(derived_basis().size());

    inv.lcs_dims.push_back(dim_);
    // current = basis of L^k as a row space; L^{k+1} = span{[v, e_j]}.
    FpRowSpace current(p_, dim_);
    for (std::int64_t i = 0; i < dim_; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(dim_), 0);
        e[static_cast<std::size_t>(i)] = 1;
        current.add(std::move(e));
    }
    for (std::int64_t step = 0; step <= dim_ + 1; ++step) {
        FpRowSpace next(p_, dim_);
        for (const auto& v : current.basis())
            for (std::int64_t j = 0; j < dim_; ++j) {
                std::vector<std::int64_t> e(static_cast<std::size_t>(dim_), 0);
                e[static_cast<std::size_t>(j)] = 1;
                next.add(bracket(v, e));
            }
        std::int64_t d = next.rank();
        inv.lcs_dims.push_back(d);
        if (d == 0) {
            inv.nilpotent = true;
            inv.nilpotency_class = static_cast<std::int64_t>(inv.lcs_dims.size()) - 1;
            break;
        }
        if (d >= current.rank()) {
            inv.nilpotent = false;
            inv.nilpotency_class = 0;
            break;
        }
        current = std::move(next);
    }
    return inv;
}

std::strong_ordering FpLieAlgebra::operator<=>(const FpLieAlgebra& o) const {
    if (auto c = dim_ <=> o.dim_; c != 0) return c;
    return b_ <=> o.b_;
}

}  // namespace plie
