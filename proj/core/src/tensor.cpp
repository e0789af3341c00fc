#include "plie/tensor.hpp"

#include <stdexcept>

#include "plie/fp.hpp"

namespace plie {

StructureTensor::StructureTensor(std::int64_t p, Partition shape, Side side)
    : mod_(p, std::move(shape), side), a_(static_cast<std::size_t>(t() * t() * t()), 0) {}

StructureTensor::StructureTensor(std::int64_t p, Partition shape, Side side,
                                 std::vector<std::int64_t> alpha)
    : StructureTensor(p, std::move(shape), side) {
    if (alpha.size() != a_.size()) throw std::invalid_argument("StructureTensor: alpha has wrong size");
    for (auto& v : alpha) v = mod_reduce(v, this->p());
    a_ = std::move(alpha);
}

void StructureTensor::set_coeff(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t v) {
    std::int64_t tt = t();
    a_[static_cast<std::size_t>((i * tt + j) * tt + l)] = mod_reduce(v, p());
}

void StructureTensor::set_alpha(std::vector<std::int64_t> alpha) {
    if (alpha.size() != a_.size()) throw std::invalid_argument("StructureTensor: alpha has wrong size");
    for (auto& v : alpha) v = mod_reduce(v, p());
    a_ = std::move(alpha);
}

Coords StructureTensor::bracket(const Coords& x, const Coords& y) const {
    mod_.validate(x);
    mod_.validate(y);
    auto xb = mod_.bar(x);
    auto yb = mod_.bar(y);
    std::int64_t tt = t();
    std::vector<std::int64_t> c(static_cast<std::size_t>(tt), 0);
    for (std::int64_t i = 0; i < tt; ++i) {
        if (xb[static_cast<std::size_t>(i)] == 0) continue;
        for (std::int64_t j = 0; j < tt; ++j) {
            std::int64_t f = xb[static_cast<std::size_t>(i)] * yb[static_cast<std::size_t>(j)] % p();
            if (f == 0) continue;
            for (std::int64_t l = 0; l < tt; ++l)
                c[static_cast<std::size_t>(l)] += f * coeff(i, j, l);
        }
    }
    for (auto& v : c) v = mod_reduce(v, p());
    return mod_.omega1_element(c);
}

bool StructureTensor::is_alternating() const {
    std::int64_t tt = t();
    for (std::int64_t i = 0; i < tt; ++i)
        for (std::int64_t l = 0; l < tt; ++l)
            if (coeff(i, i, l) != 0) return false;
    for (std::int64_t i = 0; i < tt; ++i)
        for (std::int64_t j = i + 1; j < tt; ++j)
            for (std::int64_t l = 0; l < tt; ++l)
                if (mod_reduce(coeff(i, j, l) + coeff(j, i, l), p()) != 0) return false;
    return true;
}

bool StructureTensor::jacobi_holds() const {
    std::int64_t tt = t();
    if (shape().part(tt - 1) >= 2) return true;  // socle inside pU resp. TV
    std::int64_t d_last = shape().multiplicities().back();  // parts equal to 1
    std::int64_t start = tt - d_last;
    for (std::int64_t i = 0; i < tt; ++i)
        for (std::int64_t j = 0; j < tt; ++j)
            for (std::int64_t k = 0; k < tt; ++k)
                for (std::int64_t m = 0; m < tt; ++m) {
                    std::int64_t s = 0;
                    for (std::int64_t l = start; l < tt; ++l)
                        s += coeff(i, j, l) * coeff(l, k, m) + coeff(k, i, l) * coeff(l, j, m) +
                             coeff(j, k, l) * coeff(l, i, m);
                    if (mod_reduce(s, p()) != 0) return false;
                }
    return true;
}

FpLieAlgebra StructureTensor::quotient_by_mho1() const {
    std::int64_t tt = t();
    FpLieAlgebra q(p(), tt);
    for (std::int64_t i = 0; i < tt; ++i)
        for (std::int64_t j = 0; j < tt; ++j)
            for (std::int64_t l = 0; l < tt; ++l)
                if (shape().part(l) == 1) q.set_coeff(i, j, l, coeff(i, j, l));
    return q;
}

bool StructureTensor::is_nilpotent() const {
    if (!is_alternating() || !jacobi_holds())
        throw std::invalid_argument("StructureTensor::is_nilpotent: tensor is not Lie");
    return quotient_by_mho1().is_nilpotent();
}

std::vector<std::int64_t> StructureTensor::lcs_socle_dims() const {
    std::int64_t tt = t();
    // L^2 = span{[u_i, u_j]} inside the socle, coordinates w.r.t. the socle basis.
    FpRowSpace current(p(), tt);
    for (std::int64_t i = 0; i < tt; ++i)
        for (std::int64_t j = 0; j < tt; ++j) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(tt));
            for (std::int64_t l = 0; l < tt; ++l) v[static_cast<std::size_t>(l)] = coeff(i, j, l);
            current.add(std::move(v));
        }
    std::vector<std::int64_t> dims{current.rank()};
    // [w, u_j] for a socle element w: only the coordinates at parts of size 1
    // survive in the image mod pU resp. TV.
    for (std::int64_t step = 0; step <= tt + 1 && dims.back() > 0; ++step) {
        FpRowSpace next(p(), tt);
        for (const auto& w : current.basis()) {
            for (std::int64_t j = 0; j < tt; ++j) {
                std::vector<std::int64_t> v(static_cast<std::size_t>(tt), 0);
                for (std::int64_t i = 0; i < tt; ++i) {
                    if (shape().part(i) != 1) continue;
                    std::int64_t wi = w[static_cast<std::size_t>(i)];
                    if (wi == 0) continue;
                    for (std::int64_t l = 0; l < tt; ++l)
                        v[static_cast<std::size_t>(l)] =
                            mod_reduce(v[static_cast<std::size_t>(l)] + wi * coeff(i, j, l), p());
                }
                next.add(std::move(v));
            }
        }
        if (next.rank() >= current.rank()) {
            dims.push_back(next.rank());
            break;  // stabilized without reaching zero: not nilpotent
        }
        dims.push_back(next.rank());
        current = std::move(next);
    }
    return dims;
}

std::int64_t StructureTensor::nilpotency_class() const {
    auto dims = lcs_socle_dims();  // dims of L^2, L^3, ...
    if (dims.back() != 0)
        throw std::invalid_argument("StructureTensor::nilpotency_class: structure is not nilpotent");
    // dims = dims of L^2, ..., L^{c+1} = 0, so the class c is the list length.
    return static_cast<std::int64_t>(dims.size());
}

bool StructureTensor::operator==(const StructureTensor& o) const {
    return mod_ == o.mod_ && a_ == o.a_;
}

std::strong_ordering StructureTensor::operator<=>(const StructureTensor& o) const {
    return a_ <=> o.a_;
}

StructureTensor to_tensor(const FpLieAlgebra& K, Side side) {
    Partition shape(std::vector<std::int64_t>(static_cast<std::size_t>(K.dim()), 1));
    return StructureTensor(K.p(), shape, side, K.cube());
}

FpLieAlgebra to_lie_algebra(const StructureTensor& T) {
    if (T.shape().part(0) != 1)
        throw std::invalid_argument("to_lie_algebra: requires an all-ones shape");
    return FpLieAlgebra(T.p(), T.t(), T.alpha());
}

}  // namespace plie
