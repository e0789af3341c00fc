// Enumeration budgets shared by every exhaustive routine in the library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plie {

struct Budgets {
    // Largest matrix-group order an enumeration is allowed to materialize.
    std::int64_t gl_order_cap = 10'000'000;
    // Largest tensor/endomorphism candidate space an exhaustive scan may walk.
    std::int64_t tensor_space_cap = 1'000'000;
    // Group orders up to this bound get the full m^3 associativity check;
    // larger tables fall back to assoc_samples random triples.
    std::int64_t assoc_full_cap = 243;
    std::int64_t assoc_samples = 1'000'000;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what_happened, std::int64_t attempted, std::int64_t cap)
        : std::runtime_error(what_happened + ": size " + std::to_string(attempted) +
                             " exceeds budget " + std::to_string(cap)),
          attempted_(attempted),
          cap_(cap) {}

    std::int64_t attempted() const { return attempted_; }
    std::int64_t cap() const { return cap_; }

private:
    std::int64_t attempted_;
    std::int64_t cap_;
};

inline void check_budget(const std::string& what, std::int64_t attempted, std::int64_t cap) {
    if (attempted > cap) throw BudgetError(what, attempted, cap);
}

}  // namespace plie
