// Modular arithmetic over Z/m for small m (m a prime or prime power throughout).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plie {

// Least non-negative residue, works for negative a.
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return mod_reduce(a * b, m);  // operands stay far below 2^31 in this library
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mod_mul(r, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t x = 0, y = 0;
    std::int64_t g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not a unit modulo " +
                                std::to_string(m));
    return mod_reduce(x, m);
}

// num/den reduced modulo `modulus`; requires den to be a unit modulo `modulus`.
// The one operation the whole Baker-Campbell-Hausdorff machinery hangs on.
inline std::int64_t rational_reduce(std::int64_t num, std::int64_t den, std::int64_t modulus) {
    if (modulus <= 1) throw std::invalid_argument("rational_reduce: modulus must be > 1");
    if (den == 0) throw std::invalid_argument("rational_reduce: zero denominator");
    if (gcd_i64(den, modulus) != 1)
        throw std::domain_error("rational_reduce: denominator " + std::to_string(den) +
                                " shares a factor with modulus " + std::to_string(modulus));
    return mod_mul(mod_reduce(num, modulus), mod_inverse(den, modulus), modulus);
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace plie
