#include "plie/gl.hpp"

#include <limits>
#include <stdexcept>

#include "plie/fp.hpp"

namespace plie {

std::int64_t gl_order(std::int64_t t, std::int64_t p) {
    if (t < 1) throw std::invalid_argument("gl_order: t must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("gl_order: p must be prime");
    unsigned __int128 acc = 1;
    unsigned __int128 pt = 1;
    for (std::int64_t i = 0; i < t; ++i) pt *= static_cast<unsigned __int128>(p);
    unsigned __int128 pi = 1;
    const unsigned __int128 cap = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
    for (std::int64_t i = 0; i < t; ++i) {
        acc *= pt - pi;
        pi *= static_cast<unsigned __int128>(p);
        if (acc > cap) return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(acc);
}

GlEnumerator::GlEnumerator(std::int64_t t, std::int64_t p, const Budgets& budgets)
    : t_(t), p_(p), order_(gl_order(t, p)), entries_(static_cast<std::size_t>(t * t), 0) {
    check_budget("gl_enumerate over GL_" + std::to_string(t) + "(F_" + std::to_string(p) + ")",
                 order_, budgets.gl_order_cap);
}

bool GlEnumerator::advance() {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (++*it < p_) return true;
        *it = 0;
    }
    return false;
}

std::optional<FpMatrix> GlEnumerator::next() {
    if (exhausted_) return std::nullopt;
    while (true) {
        if (started_) {
            if (!advance()) {
                exhausted_ = true;
                return std::nullopt;
            }
        } else {
            started_ = true;  // first candidate is the zero matrix; filtered below
        }
        FpMatrix m(p_, t_, t_);
        for (std::int64_t i = 0; i < t_; ++i)
            for (std::int64_t j = 0; j < t_; ++j)
                m.set(i, j, entries_[static_cast<std::size_t>(i * t_ + j)]);
        if (m.invertible()) return m;
    }
}

std::vector<FpMatrix> gl_enumerate(std::int64_t t, std::int64_t p, const Budgets& budgets) {
    GlEnumerator e(t, p, budgets);
    std::vector<FpMatrix> out;
    out.reserve(static_cast<std::size_t>(e.order()));
    while (auto m = e.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace plie
