// The underlying additive module of a structure: on the ring side
// U = Z/p^{l_1} + ... + Z/p^{l_t}, on the algebra side V = F_p[T]/(T^{l_1}) + ...
// Component i is stored as one integer in [0, p^{l_i}): a plain residue on the
// ring side, the base-p coefficient word c_0 + c_1 T + ... on the algebra side.
// Under this encoding the two sides share indexing, the socle basis element
// p^{l_i - 1} u_i resp. T^{l_i - 1} v_i, and the "multiply by p resp. T" map;
// only addition and scalar multiplication differ (with vs without carries).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plie/partition.hpp"
#include "plie/rational.hpp"

namespace plie {

enum class Side { ring, algebra };

inline std::string side_name(Side s) { return s == Side::ring ? "ring" : "algebra"; }
inline Side other_side(Side s) { return s == Side::ring ? Side::algebra : Side::ring; }
Side side_parse(const std::string& s);

using Coords = std::vector<std::int64_t>;

class Module {
public:
    Module(std::int64_t p, Partition shape, Side side);

    std::int64_t p() const { return p_; }
    const Partition& shape() const { return shape_; }
    Side side() const { return side_; }
    std::int64_t t() const { return shape_.size(); }
    std::int64_t n() const { return shape_.n(); }
    std::int64_t order() const { return order_; }
    std::int64_t component_modulus(std::int64_t i) const { return comp_mod_[static_cast<std::size_t>(i)]; }

    Coords zero() const { return Coords(static_cast<std::size_t>(t()), 0); }
    Coords add(const Coords& x, const Coords& y) const;
    Coords negate(const Coords& x) const;
    Coords sub(const Coords& x, const Coords& y) const { return add(x, negate(y)); }
    Coords scalar(const Coords& x, std::int64_t k) const;
    // Componentwise num/den * x via rational_reduce with modulus p^{l_i}.
    Coords scalar(const Coords& x, const Rational& r) const;

    bool is_zero(const Coords& x) const;
    std::int64_t additive_order(const Coords& x) const;

    // Image in the Frattini-style quotient U/pU resp. V/TV: t residues mod p.
    std::vector<std::int64_t> bar(const Coords& x) const;

    // Multiplication by p (ring) resp. T (algebra); identical integer formula.
    Coords mho1_image(const Coords& x) const;
    // Action of a coordinate value c on x: plain c*x on the ring side; on the
    // algebra side c acts through its base-p digits as a polynomial in T.
    Coords component_scale(const Coords& x, std::int64_t c) const;
    bool in_mho1(const Coords& x) const;

    // The socle Omega_1 = {x : p x = 0} resp. {x : T x = 0}.
    bool in_omega1(const Coords& x) const;
    // Element sum_i c_i * (p^{l_i-1} u_i) from F_p coordinates c.
    Coords omega1_element(const std::vector<std::int64_t>& c) const;
    // Inverse of omega1_element; requires membership.
    std::vector<std::int64_t> omega1_coords(const Coords& x) const;
    std::vector<Coords> omega1_basis() const;

    // Lexicographic element indexing: index 0 is zero, component t-1 varies fastest.
    std::int64_t index_of(const Coords& x) const;
    Coords element(std::int64_t index) const;
    std::int64_t unit_index(std::int64_t i) const;  // index of the generator u_i

    void validate(const Coords& x) const;  // length and range check

    bool operator==(const Module& o) const {
        return p_ == o.p_ && shape_ == o.shape_ && side_ == o.side_;
    }

private:
    std::int64_t p_;
    Partition shape_;
    Side side_;
    std::vector<std::int64_t> comp_mod_;  // p^{l_i}
    std::vector<std::int64_t> stride_;
    std::int64_t order_;
};

}  // namespace plie
