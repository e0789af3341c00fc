// Dense matrices over the prime field F_p, plus the row-space helper used for
// rank/span computations throughout the engine. Everything acts on the RIGHT of
// row vectors: (x*M)_j = sum_i x_i M_{ij}.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "plie/partition.hpp"

namespace plie {

class FpMatrix {
public:
    FpMatrix(std::int64_t p, std::int64_t rows, std::int64_t cols);
    static FpMatrix identity(std::int64_t p, std::int64_t n);

    std::int64_t p() const { return p_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    std::int64_t at(std::int64_t i, std::int64_t j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    void set(std::int64_t i, std::int64_t j, std::int64_t v);

    const std::vector<std::int64_t>& entries() const { return e_; }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix pow(std::int64_t k) const;
    FpMatrix transpose() const;

    std::int64_t rank() const;
    std::int64_t det() const;
    bool invertible() const { return rows_ == cols_ && det() != 0; }
    FpMatrix inverse() const;  // throws std::domain_error when singular

    bool is_zero() const;
    bool is_nilpotent() const;  // square matrices; M^rows == 0

    // Row vector times matrix.
    std::vector<std::int64_t> apply_row(const std::vector<std::int64_t>& x) const;

    bool operator==(const FpMatrix& o) const = default;
    std::strong_ordering operator<=>(const FpMatrix& o) const;

private:
    std::int64_t p_, rows_, cols_;
    std::vector<std::int64_t> e_;
};

// Jordan type of a nilpotent matrix: the partition whose number of parts >= i
// equals rank(sigma^{i-1}) - rank(sigma^i). Throws if sigma is not nilpotent.
Partition jordan_type(const FpMatrix& sigma);

enum class BlockPattern { lower, upper };

// Checks that M is block triangular for the given diagonal block sizes d_1..d_r
// (lower: everything strictly above the diagonal blocks is zero; upper: below)
// with every diagonal block invertible. Throws on dimension mismatch.
bool block_pattern_check(const FpMatrix& M, const std::vector<std::int64_t>& block_sizes,
                         BlockPattern pattern);

// Incremental row space over F_p kept in reduced echelon form.
class FpRowSpace {
public:
    FpRowSpace(std::int64_t p, std::int64_t width);

    // Returns true when the vector enlarged the span.
    bool add(std::vector<std::int64_t> v);
    bool contains(std::vector<std::int64_t> v) const;
    std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }
    std::int64_t width() const { return width_; }
    const std::vector<std::vector<std::int64_t>>& basis() const { return rows_; }

    // All p^rank vectors of the span, in deterministic order.
    std::vector<std::vector<std::int64_t>> enumerate() const;

private:
    std::int64_t reduce(std::vector<std::int64_t>& v) const;  // returns pivot column or -1
    std::int64_t p_, width_;
    std::vector<std::vector<std::int64_t>> rows_;  // sorted by pivot column
    std::vector<std::int64_t> pivots_;
};

}  // namespace plie
