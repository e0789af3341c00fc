#include "plie/module.hpp"

#include <stdexcept>

#include "plie/fp.hpp"

namespace plie {

Side side_parse(const std::string& s) {
    if (s == "ring") return Side::ring;
    if (s == "algebra") return Side::algebra;
    throw std::invalid_argument("side must be 'ring' or 'algebra', got '" + s + "'");
}

Module::Module(std::int64_t p, Partition shape, Side side)
    : p_(p), shape_(std::move(shape)), side_(side) {
    if (!is_prime(p_)) throw std::invalid_argument("Module: p must be prime");
    comp_mod_.reserve(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) comp_mod_.push_back(ipow(p_, shape_.part(i)));
    stride_.assign(static_cast<std::size_t>(t()), 1);
    for (std::int64_t i = t() - 2; i >= 0; --i)
        stride_[static_cast<std::size_t>(i)] =
            stride_[static_cast<std::size_t>(i + 1)] * comp_mod_[static_cast<std::size_t>(i + 1)];
    order_ = stride_[0] * comp_mod_[0];
}

void Module::validate(const Coords& x) const {
    if (static_cast<std::int64_t>(x.size()) != t())
        throw std::invalid_argument("Module: coordinate length mismatch");
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t v = x[static_cast<std::size_t>(i)];
        if (v < 0 || v >= comp_mod_[static_cast<std::size_t>(i)])
            throw std::invalid_argument("Module: coordinate out of range");
    }
}

Coords Module::add(const Coords& x, const Coords& y) const {
    Coords z(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t m = comp_mod_[static_cast<std::size_t>(i)];
        std::int64_t a = x[static_cast<std::size_t>(i)];
        std::int64_t b = y[static_cast<std::size_t>(i)];
        if (side_ == Side::ring) {
            z[static_cast<std::size_t>(i)] = mod_reduce(a + b, m);
        } else {
            // digit-wise mod p: polynomial addition of coefficient words
            std::int64_t out = 0, place = 1;
            while (place < m) {
                out += ((a + b) % p_) * place;
                a /= p_;
                b /= p_;
                place *= p_;
            }
            z[static_cast<std::size_t>(i)] = out;
        }
    }
    return z;
}

Coords Module::negate(const Coords& x) const { return scalar(x, -1); }

Coords Module::scalar(const Coords& x, std::int64_t k) const {
    Coords z(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t m = comp_mod_[static_cast<std::size_t>(i)];
        std::int64_t a = x[static_cast<std::size_t>(i)];
        if (side_ == Side::ring) {
            z[static_cast<std::size_t>(i)] = mod_mul(mod_reduce(k, m), a, m);
        } else {
            std::int64_t kp = mod_reduce(k, p_);
            std::int64_t out = 0, place = 1;
            while (place < m) {
                out += ((a % p_) * kp % p_) * place;
                a /= p_;
                place *= p_;
            }
            z[static_cast<std::size_t>(i)] = out;
        }
    }
    return z;
}

Coords Module::scalar(const Coords& x, const Rational& r) const {
    Coords z(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t m = comp_mod_[static_cast<std::size_t>(i)];
        std::int64_t a = x[static_cast<std::size_t>(i)];
        if (side_ == Side::ring) {
            z[static_cast<std::size_t>(i)] = mod_mul(rational_reduce(r.num, r.den, m), a, m);
        } else {
            std::int64_t kp = rational_reduce(r.num, r.den, p_);
            std::int64_t out = 0, place = 1;
            while (place < m) {
                out += ((a % p_) * kp % p_) * place;
                a /= p_;
                place *= p_;
            }
            z[static_cast<std::size_t>(i)] = out;
        }
    }
    return z;
}

bool Module::is_zero(const Coords& x) const {
    for (std::int64_t v : x)
        if (v != 0) return false;
    return true;
}

std::int64_t Module::additive_order(const Coords& x) const {
    std::int64_t ord = 1;
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t a = x[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (side_ == Side::ring) {
            std::int64_t m = comp_mod_[static_cast<std::size_t>(i)];
            std::int64_t o = m / gcd_i64(a, m);
            ord = std::max(ord, o);
        } else {
            ord = std::max(ord, p_);  // nonzero polynomial words all have additive order p
        }
    }
    return ord;
}

std::vector<std::int64_t> Module::bar(const Coords& x) const {
    std::vector<std::int64_t> b(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) b[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] % p_;
    return b;
}

Coords Module::mho1_image(const Coords& x) const {
    // ring: p*x; algebra: T*x shifts the coefficient word one place up.
    // Both are (x_i * p) mod p^{l_i} on the integer encoding.
    Coords z(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i)
        z[static_cast<std::size_t>(i)] =
            (x[static_cast<std::size_t>(i)] * p_) % comp_mod_[static_cast<std::size_t>(i)];
    return z;
}

Coords Module::component_scale(const Coords& x, std::int64_t c) const {
    if (side_ == Side::ring) return scalar(x, c);
    Coords acc = zero();
    Coords w = x;
    while (c > 0) {
        std::int64_t d = c % p_;
        if (d != 0) acc = add(acc, scalar(w, d));
        w = mho1_image(w);
        c /= p_;
    }
    return acc;
}

bool Module::in_mho1(const Coords& x) const {
    for (std::int64_t i = 0; i < t(); ++i)
        if (x[static_cast<std::size_t>(i)] % p_ != 0) return false;
    return true;
}

bool Module::in_omega1(const Coords& x) const {
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t socle = comp_mod_[static_cast<std::size_t>(i)] / p_;  // p^{l_i - 1}
        if (x[static_cast<std::size_t>(i)] % socle != 0) return false;
    }
    return true;
}

Coords Module::omega1_element(const std::vector<std::int64_t>& c) const {
    if (static_cast<std::int64_t>(c.size()) != t())
        throw std::invalid_argument("Module::omega1_element: length mismatch");
    Coords z(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t socle = comp_mod_[static_cast<std::size_t>(i)] / p_;
        z[static_cast<std::size_t>(i)] = mod_reduce(c[static_cast<std::size_t>(i)], p_) * socle;
    }
    return z;
}

std::vector<std::int64_t> Module::omega1_coords(const Coords& x) const {
    if (!in_omega1(x)) throw std::invalid_argument("Module::omega1_coords: element not in the socle");
    std::vector<std::int64_t> c(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        std::int64_t socle = comp_mod_[static_cast<std::size_t>(i)] / p_;
        c[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] / socle;
    }
    return c;
}

std::vector<Coords> Module::omega1_basis() const {
    std::vector<Coords> basis;
    for (std::int64_t i = 0; i < t(); ++i) {
        Coords z = zero();
        z[static_cast<std::size_t>(i)] = comp_mod_[static_cast<std::size_t>(i)] / p_;
        basis.push_back(std::move(z));
    }
    return basis;
}

std::int64_t Module::index_of(const Coords& x) const {
    validate(x);
    std::int64_t idx = 0;
    for (std::int64_t i = 0; i < t(); ++i)
        idx += x[static_cast<std::size_t>(i)] * stride_[static_cast<std::size_t>(i)];
    return idx;
}

Coords Module::element(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::invalid_argument("Module::element: index out of range");
    Coords x(static_cast<std::size_t>(t()));
    for (std::int64_t i = 0; i < t(); ++i) {
        x[static_cast<std::size_t>(i)] = index / stride_[static_cast<std::size_t>(i)];
        index %= stride_[static_cast<std::size_t>(i)];
    }
    return x;
}

std::int64_t Module::unit_index(std::int64_t i) const { return stride_[static_cast<std::size_t>(i)]; }

}  // namespace plie
