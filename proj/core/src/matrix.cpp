#include "plie/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "plie/fp.hpp"

namespace plie {

FpMatrix::FpMatrix(std::int64_t p, std::int64_t rows, std::int64_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), 0) {
    if (!is_prime(p)) throw std::invalid_argument("FpMatrix: p must be prime");
    if (rows < 1 || cols < 1) throw std::invalid_argument("FpMatrix: bad dimensions");
}

FpMatrix FpMatrix::identity(std::int64_t p, std::int64_t n) {
    FpMatrix m(p, n, n);
    for (std::int64_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(std::int64_t i, std::int64_t j, std::int64_t v) {
    e_[static_cast<std::size_t>(i * cols_ + j)] = mod_reduce(v, p_);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("FpMatrix: incompatible product");
    FpMatrix r(p_, rows_, o.cols_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < o.cols_; ++j) {
            std::int64_t acc = 0;
            for (std::int64_t k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            r.set(i, j, acc);
        }
    return r;
}

FpMatrix FpMatrix::pow(std::int64_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::pow: square matrices only");
    FpMatrix r = identity(p_, rows_);
    FpMatrix b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(p_, cols_, rows_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

namespace {

// Gaussian elimination in place; returns (rank, det_of_leading_square_part).
std::pair<std::int64_t, std::int64_t> eliminate(std::vector<std::int64_t>& a, std::int64_t rows,
                                                std::int64_t cols, std::int64_t p) {
    std::int64_t rank = 0;
    std::int64_t det = 1;
    for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r * cols + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::int64_t j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pivot * cols + j)],
                          a[static_cast<std::size_t>(rank * cols + j)]);
            det = mod_reduce(-det, p);
        }
        std::int64_t lead = a[static_cast<std::size_t>(rank * cols + col)];
        det = mod_mul(det, lead, p);
        std::int64_t inv = mod_inverse(lead, p);
        for (std::int64_t j = col; j < cols; ++j) {
            auto& v = a[static_cast<std::size_t>(rank * cols + j)];
            v = mod_mul(v, inv, p);
        }
        for (std::int64_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::int64_t f = a[static_cast<std::size_t>(r * cols + col)];
            if (f == 0) continue;
            for (std::int64_t j = col; j < cols; ++j) {
                auto& v = a[static_cast<std::size_t>(r * cols + j)];
                v = mod_reduce(v - f * a[static_cast<std::size_t>(rank * cols + j)], p);
            }
        }
        ++rank;
    }
    return {rank, det};
}

}  // namespace

std::int64_t FpMatrix::rank() const {
    auto a = e_;
    return eliminate(a, rows_, cols_, p_).first;
}

std::int64_t FpMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::det: square matrices only");
    auto a = e_;
    auto [rank, det] = eliminate(a, rows_, cols_, p_);
    return rank == rows_ ? det : 0;
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::inverse: square matrices only");
    std::int64_t n = rows_;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n * 2 * n), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) a[static_cast<std::size_t>(i * 2 * n + j)] = at(i, j);
        a[static_cast<std::size_t>(i * 2 * n + n + i)] = 1;
    }
    auto [rank, det] = eliminate(a, n, 2 * n, p_);
    (void)rank;  // pivots can land in the augmented half, so test the left block instead
    (void)det;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (a[static_cast<std::size_t>(i * 2 * n + j)] != (i == j ? 1 : 0))
                throw std::domain_error("FpMatrix::inverse: singular matrix");
    FpMatrix r(p_, n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) r.set(i, j, a[static_cast<std::size_t>(i * 2 * n + n + j)]);
    return r;
}

bool FpMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

bool FpMatrix::is_nilpotent() const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::is_nilpotent: square matrices only");
    return pow(rows_).is_zero();
}

std::vector<std::int64_t> FpMatrix::apply_row(const std::vector<std::int64_t>& x) const {
    if (static_cast<std::int64_t>(x.size()) != rows_)
        throw std::invalid_argument("FpMatrix::apply_row: length mismatch");
    std::vector<std::int64_t> y(static_cast<std::size_t>(cols_), 0);
    for (std::int64_t j = 0; j < cols_; ++j) {
        std::int64_t acc = 0;
        for (std::int64_t i = 0; i < rows_; ++i) acc += x[static_cast<std::size_t>(i)] * at(i, j);
        y[static_cast<std::size_t>(j)] = mod_reduce(acc, p_);
    }
    return y;
}

std::strong_ordering FpMatrix::operator<=>(const FpMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return e_ <=> o.e_;
}

Partition jordan_type(const FpMatrix& sigma) {
    if (sigma.rows() != sigma.cols()) throw std::invalid_argument("jordan_type: square matrices only");
    if (!sigma.is_nilpotent()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    std::int64_t n = sigma.rows();
    // parts_ge[i] = #{parts >= i+1} = rank(sigma^i) - rank(sigma^{i+1})
    std::vector<std::int64_t> parts_ge;
    FpMatrix power = FpMatrix::identity(sigma.p(), n);
    std::int64_t prev_rank = n;
    for (std::int64_t i = 1; i <= n && prev_rank > 0; ++i) {
        power = power * sigma;
        std::int64_t r = power.rank();
        parts_ge.push_back(prev_rank - r);
        prev_rank = r;
    }
    // Dual of the counts vector gives the parts themselves.
    return Partition(parts_ge).dual();
}

bool block_pattern_check(const FpMatrix& M, const std::vector<std::int64_t>& block_sizes,
                         BlockPattern pattern) {
    std::int64_t total = 0;
    for (std::int64_t d : block_sizes) {
        if (d < 1) throw std::invalid_argument("block_pattern_check: block sizes must be >= 1");
        total += d;
    }
    if (M.rows() != M.cols() || M.rows() != total)
        throw std::invalid_argument("block_pattern_check: dimension mismatch");

    std::vector<std::int64_t> offset{0};
    for (std::int64_t d : block_sizes) offset.push_back(offset.back() + d);
    std::int64_t r = static_cast<std::int64_t>(block_sizes.size());

    for (std::int64_t bi = 0; bi < r; ++bi)
        for (std::int64_t bj = 0; bj < r; ++bj) {
            bool must_vanish = (pattern == BlockPattern::lower) ? bj > bi : bj < bi;
            if (!must_vanish) continue;
            for (std::int64_t i = offset[bi]; i < offset[bi + 1]; ++i)
                for (std::int64_t j = offset[bj]; j < offset[bj + 1]; ++j)
                    if (M.at(i, j) != 0) return false;
        }

    for (std::int64_t b = 0; b < r; ++b) {
        FpMatrix diag(M.p(), block_sizes[b], block_sizes[b]);
        for (std::int64_t i = 0; i < block_sizes[b]; ++i)
            for (std::int64_t j = 0; j < block_sizes[b]; ++j)
                diag.set(i, j, M.at(offset[b] + i, offset[b] + j));
        if (!diag.invertible()) return false;
    }
    return true;
}

FpRowSpace::FpRowSpace(std::int64_t p, std::int64_t width) : p_(p), width_(width) {
    if (!is_prime(p)) throw std::invalid_argument("FpRowSpace: p must be prime");
    if (width < 1) throw std::invalid_argument("FpRowSpace: width must be >= 1");
}

std::int64_t FpRowSpace::reduce(std::vector<std::int64_t>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::int64_t piv = pivots_[k];
        std::int64_t f = v[static_cast<std::size_t>(piv)];
        if (f == 0) continue;
        for (std::int64_t j = 0; j < width_; ++j)
            v[static_cast<std::size_t>(j)] =
                mod_reduce(v[static_cast<std::size_t>(j)] - f * rows_[k][static_cast<std::size_t>(j)], p_);
    }
    for (std::int64_t j = 0; j < width_; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) return j;
    return -1;
}

bool FpRowSpace::add(std::vector<std::int64_t> v) {
    if (static_cast<std::int64_t>(v.size()) != width_)
        throw std::invalid_argument("FpRowSpace::add: length mismatch");
    for (auto& x : v) x = mod_reduce(x, p_);
    std::int64_t piv = reduce(v);
    if (piv < 0) return false;
    std::int64_t inv = mod_inverse(v[static_cast<std::size_t>(piv)], p_);
    for (auto& x : v) x = mod_mul(x, inv, p_);
    // Back-substitute into existing rows to keep reduced form.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::int64_t f = rows_[k][static_cast<std::size_t>(piv)];
        if (f == 0) continue;
        for (std::int64_t j = 0; j < width_; ++j)
            rows_[k][static_cast<std::size_t>(j)] = mod_reduce(
                rows_[k][static_cast<std::size_t>(j)] - f * v[static_cast<std::size_t>(j)], p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool FpRowSpace::contains(std::vector<std::int64_t> v) const {
    if (static_cast<std::int64_t>(v.size()) != width_)
        throw std::invalid_argument("FpRowSpace::contains: length mismatch");
    for (auto& x : v) x = mod_reduce(x, p_);
    return reduce(v) < 0;
}

std::vector<std::vector<std::int64_t>> FpRowSpace::enumerate() const {
    std::vector<std::vector<std::int64_t>> out;
    std::int64_t count = ipow(p_, rank());
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::int64_t> coeff(rows_.size(), 0);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(width_), 0);
        std::int64_t rem = idx;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::int64_t c = rem % p_;
            rem /= p_;
            if (c != 0)
                for (std::int64_t j = 0; j < width_; ++j)
                    v[static_cast<std::size_t>(j)] = mod_reduce(
                        v[static_cast<std::size_t>(j)] + c * rows_[k][static_cast<std::size_t>(j)], p_);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace plie
