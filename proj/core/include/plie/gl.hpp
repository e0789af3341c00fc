// Enumeration of GL_t(F_p) in a fixed deterministic order.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plie/budget.hpp"
#include "plie/matrix.hpp"

namespace plie {

// |GL_t(F_p)| = prod_{i=0}^{t-1} (p^t - p^i); saturates at int64 max on overflow.
std::int64_t gl_order(std::int64_t t, std::int64_t p);

// Streams the invertible t x t matrices in row-major lexicographic entry order.
// The candidate walk touches p^(t^2) matrices, which stays within a small factor
// of |GL_t| (prod (1-p^-k)^-1 < 4), so the group-order budget covers it.
class GlEnumerator {
public:
    GlEnumerator(std::int64_t t, std::int64_t p, const Budgets& budgets);
    std::optional<FpMatrix> next();
    std::int64_t order() const { return order_; }

private:
    std::int64_t t_, p_, order_;
    std::vector<std::int64_t> entries_;
    bool exhausted_ = false;
    bool started_ = false;
    bool advance();
};

// Materializes the whole group; deterministic order matching GlEnumerator.
std::vector<FpMatrix> gl_enumerate(std::int64_t t, std::int64_t p, const Budgets& budgets);

}  // namespace plie
