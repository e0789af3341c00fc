#include "plie/correspondence.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "plie/fp.hpp"
#include "plie/gl.hpp"
#include "plie/parallel.hpp"

namespace plie {

namespace {

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    if (prod > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(prod);
}

std::int64_t sat_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t k = 0; k < exp; ++k) r = sat_mul(r, base);
    return r;
}

// Block group index for every basis position: runs of equal shape parts.
std::vector<std::int64_t> block_groups(const Partition& shape) {
    std::vector<std::int64_t> grp(static_cast<std::size_t>(shape.size()));
    std::int64_t g = 0;
    for (std::int64_t i = 0; i < shape.size(); ++i) {
        if (i > 0 && shape.part(i) != shape.part(i - 1)) ++g;
        grp[static_cast<std::size_t>(i)] = g;
    }
    return grp;
}

// alpha'_{ij}^m = sum_{a,b,c} F_{ia} F_{jb} alpha_{ab}^c Einv_{cm}, done as three
// one-mode contractions. Buffers hold t^3 entries; input values must be in [0, p).
void act_into(const std::int64_t* a, const FpMatrix& F, const FpMatrix& Einv, std::int64_t t,
              std::int64_t p, std::int64_t* t1, std::int64_t* t2, std::int64_t* out) {
    const std::int64_t* Fe = F.entries().data();
    const std::int64_t* Ee = Einv.entries().data();
    for (std::int64_t i = 0; i < t; ++i) {
        const std::int64_t* Fi = Fe + i * t;
        for (std::int64_t b = 0; b < t; ++b)
            for (std::int64_t c = 0; c < t; ++c) {
                std::int64_t s = 0;
                for (std::int64_t x = 0; x < t; ++x) s += Fi[x] * a[(x * t + b) * t + c];
                t1[(i * t + b) * t + c] = s % p;
            }
    }
    for (std::int64_t j = 0; j < t; ++j) {
        const std::int64_t* Fj = Fe + j * t;
        for (std::int64_t i = 0; i < t; ++i)
            for (std::int64_t c = 0; c < t; ++c) {
                std::int64_t s = 0;
                for (std::int64_t b = 0; b < t; ++b) s += Fj[b] * t1[(i * t + b) * t + c];
                t2[(i * t + j) * t + c] = s % p;
            }
    }
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = 0; j < t; ++j)
            for (std::int64_t m = 0; m < t; ++m) {
                std::int64_t s = 0;
                for (std::int64_t c = 0; c < t; ++c) s += t2[(i * t + j) * t + c] * Ee[c * t + m];
                out[(i * t + j) * t + m] = s % p;
            }
}

struct ActScratch {
    std::vector<std::int64_t> t1, t2, out;
    explicit ActScratch(std::int64_t t)
        : t1(static_cast<std::size_t>(t * t * t)),
          t2(static_cast<std::size_t>(t * t * t)),
          out(static_cast<std::size_t>(t * t * t)) {}
};

}  // namespace

AdmissiblePair::AdmissiblePair(FpMatrix E_, FpMatrix F_, Side side_)
    : E(std::move(E_)), F(std::move(F_)), E_inv(E.inverse()), side(side_) {
    if (E.p() != F.p() || E.rows() != E.cols() || F.rows() != F.cols() || E.rows() != F.rows())
        throw std::invalid_argument("AdmissiblePair: E and F must be square of equal size");
}

AdmissiblePair::AdmissiblePair(FpMatrix E_, FpMatrix F_, FpMatrix E_inv_, Side side_)
    : E(std::move(E_)), F(std::move(F_)), E_inv(std::move(E_inv_)), side(side_) {
    if (!(E * E_inv == FpMatrix::identity(E.p(), E.rows())))
        throw std::invalid_argument("AdmissiblePair: E_inv is not the inverse of E");
}

AdmissiblePair AdmissiblePair::identity(std::int64_t p, std::int64_t t, Side side) {
    FpMatrix I = FpMatrix::identity(p, t);
    return AdmissiblePair(I, I, I, side);
}

AdmissiblePair AdmissiblePair::inverse() const { return AdmissiblePair(E_inv, F.inverse(), E, side); }

std::strong_ordering AdmissiblePair::operator<=>(const AdmissiblePair& o) const {
    if (auto c = E <=> o.E; c != std::strong_ordering::equal) return c;
    return F <=> o.F;
}

AdmissiblePair compose(const AdmissiblePair& h, const AdmissiblePair& g) {
    if (h.side != g.side) throw std::invalid_argument("compose: mixed sides");
    return AdmissiblePair(h.E * g.E, h.F * g.F, g.E_inv * h.E_inv, h.side);
}

bool is_admissible(const AdmissiblePair& g, const Partition& shape) {
    std::int64_t t = shape.size();
    if (g.t() != t) return false;
    const auto& sizes = shape.multiplicities();
    if (!block_pattern_check(g.E, sizes, BlockPattern::lower)) return false;
    if (!block_pattern_check(g.F, sizes, BlockPattern::upper)) return false;
    std::int64_t off = 0;
    for (std::int64_t d : sizes) {
        for (std::int64_t x = 0; x < d; ++x)
            for (std::int64_t y = 0; y < d; ++y)
                if (g.E.at(off + x, off + y) != g.F.at(off + x, off + y)) return false;
        off += d;
    }
    return true;
}

std::int64_t admissible_pair_count(std::int64_t p, const Partition& shape) {
    const auto& mult = shape.multiplicities();
    std::int64_t count = 1;
    for (std::int64_t d : mult) count = sat_mul(count, gl_order(d, p));
    std::int64_t cross = 0;
    for (std::size_t j = 0; j < mult.size(); ++j)
        for (std::size_t k = j + 1; k < mult.size(); ++k) cross += mult[j] * mult[k];
    return sat_mul(count, sat_pow(p, 2 * cross));
}

std::vector<AdmissiblePair> admissible_pairs(std::int64_t p, const Partition& shape, Side side,
                                             const Budgets& budgets) {
    std::int64_t t = shape.size();
    const auto& mult = shape.multiplicities();
    std::int64_t total = admissible_pair_count(p, shape);
    check_budget("pattern pair enumeration", total, budgets.gl_order_cap);

    auto grp = block_groups(shape);
    std::vector<std::int64_t> off(mult.size(), 0);
    for (std::size_t j = 1; j < mult.size(); ++j) off[j] = off[j - 1] + mult[j - 1];

    std::vector<std::vector<FpMatrix>> gls;
    gls.reserve(mult.size());
    for (std::int64_t d : mult) gls.push_back(gl_enumerate(d, p, budgets));

    std::vector<std::pair<std::int64_t, std::int64_t>> elow, fupp;
    for (std::int64_t a = 0; a < t; ++a)
        for (std::int64_t b = 0; b < t; ++b) {
            if (grp[static_cast<std::size_t>(a)] > grp[static_cast<std::size_t>(b)]) elow.emplace_back(a, b);
            if (grp[static_cast<std::size_t>(a)] < grp[static_cast<std::size_t>(b)]) fupp.emplace_back(a, b);
        }

    // Mixed-radix odometer: block choices, then E entries, then F entries;
    // the last digit varies fastest.
    std::vector<std::int64_t> radix;
    for (const auto& l : gls) radix.push_back(static_cast<std::int64_t>(l.size()));
    for (std::size_t k = 0; k < elow.size() + fupp.size(); ++k) radix.push_back(p);
    std::vector<std::int64_t> dig(radix.size(), 0);

    std::vector<AdmissiblePair> out;
    out.reserve(static_cast<std::size_t>(total));
    while (true) {
        FpMatrix E(p, t, t), F(p, t, t);
        for (std::size_t j = 0; j < mult.size(); ++j) {
            const FpMatrix& M = gls[j][static_cast<std::size_t>(dig[j])];
            for (std::int64_t x = 0; x < mult[j]; ++x)
                for (std::int64_t y = 0; y < mult[j]; ++y) {
                    E.set(off[j] + x, off[j] + y, M.at(x, y));
                    F.set(off[j] + x, off[j] + y, M.at(x, y));
                }
        }
        std::size_t base = mult.size();
        for (std::size_t k = 0; k < elow.size(); ++k)
            E.set(elow[k].first, elow[k].second, dig[base + k]);
        base += elow.size();
        for (std::size_t k = 0; k < fupp.size(); ++k)
            F.set(fupp[k].first, fupp[k].second, dig[base + k]);
        out.emplace_back(std::move(E), std::move(F), side);

        std::size_t pos = dig.size();
        while (pos > 0) {
            --pos;
            if (++dig[pos] < radix[pos]) break;
            dig[pos] = 0;
            if (pos == 0) {
                if (static_cast<std::int64_t>(out.size()) != total)
                    throw std::logic_error("pattern pair enumeration does not match the count formula");
                return out;
            }
        }
    }
}

StructureTensor theta(const StructureTensor& T) {
    return StructureTensor(T.p(), T.shape(), other_side(T.side()), T.alpha());
}

AdmissiblePair theta_pair(const AdmissiblePair& g) {
    return AdmissiblePair(g.E, g.F, g.E_inv, other_side(g.side));
}

StructureTensor act(const StructureTensor& T, const AdmissiblePair& g) {
    if (g.side != T.side()) throw std::invalid_argument("act: pair and tensor live on different sides");
    if (g.t() != T.t() || g.p() != T.p())
        throw std::invalid_argument("act: pair and tensor have different dimensions");
    ActScratch s(T.t());
    act_into(T.alpha().data(), g.F, g.E_inv, T.t(), T.p(), s.t1.data(), s.t2.data(), s.out.data());
    return StructureTensor(T.p(), T.shape(), T.side(), s.out);
}

std::vector<std::vector<std::int64_t>> enumerate_alphas(std::int64_t p, const Partition& shape,
                                                        const TensorFilter& filter,
                                                        const Budgets& budgets) {
    if (filter.nilpotent && !(filter.jacobi && filter.alternating))
        throw std::invalid_argument("enumerate_alphas: nilpotency filter requires the Lie filters");
    std::int64_t t = shape.size();
    std::size_t cube = static_cast<std::size_t>(t * t * t);

    std::vector<std::int64_t> free_pos;  // flat positions, increasing
    if (filter.alternating) {
        for (std::int64_t i = 0; i < t; ++i)
            for (std::int64_t j = i + 1; j < t; ++j)
                for (std::int64_t l = 0; l < t; ++l) free_pos.push_back((i * t + j) * t + l);
        std::sort(free_pos.begin(), free_pos.end());
    } else {
        for (std::size_t k = 0; k < cube; ++k) free_pos.push_back(static_cast<std::int64_t>(k));
    }
    check_budget("tensor space enumeration", sat_pow(p, static_cast<std::int64_t>(free_pos.size())),
                 budgets.tensor_space_cap);

    StructureTensor probe(p, shape, Side::ring);
    std::vector<std::int64_t> vals(free_pos.size(), 0);
    std::vector<std::int64_t> alpha(cube, 0);
    std::vector<std::vector<std::int64_t>> out;
    while (true) {
        for (std::size_t k = 0; k < free_pos.size(); ++k) {
            std::int64_t pos = free_pos[k];
            alpha[static_cast<std::size_t>(pos)] = vals[k];
            if (filter.alternating) {
                std::int64_t l = pos % t, ij = pos / t, j = ij % t, i = ij / t;
                alpha[static_cast<std::size_t>((j * t + i) * t + l)] = (p - vals[k]) % p;
            }
        }
        bool keep = true;
        if (filter.jacobi || filter.nilpotent) {
            probe.set_alpha(alpha);
            if (filter.jacobi && !probe.jacobi_holds()) keep = false;
            if (keep && filter.nilpotent && !probe.is_nilpotent()) keep = false;
        }
        if (keep) out.push_back(alpha);

        std::size_t pos = vals.size();
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++vals[pos] < p) break;
            vals[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

std::vector<StructureTensor> enumerate_tensors(std::int64_t p, const Partition& shape, Side side,
                                               const TensorFilter& filter, const Budgets& budgets) {
    auto alphas = enumerate_alphas(p, shape, filter, budgets);
    std::vector<StructureTensor> out;
    out.reserve(alphas.size());
    for (auto& a : alphas) out.emplace_back(p, shape, side, std::move(a));
    return out;
}

OrbitReport orbits(std::int64_t p, const Partition& shape, Side side, const TensorFilter& filter,
                   const Budgets& budgets, int workers) {
    auto alphas = enumerate_alphas(p, shape, filter, budgets);
    auto pairs = admissible_pairs(p, shape, side, budgets);
    std::int64_t t = shape.size();
    std::int64_t np = static_cast<std::int64_t>(pairs.size());

    OrbitReport rep{p, shape, side, filter, static_cast<std::int64_t>(alphas.size()), np, {}, {}};
    std::vector<char> visited(alphas.size(), 0);
    std::vector<std::int64_t> img(pairs.size());
    std::atomic<bool> escaped{false};

    for (std::size_t seed = 0; seed < alphas.size(); ++seed) {
        if (visited[seed]) continue;
        const std::int64_t* a = alphas[seed].data();
        parallel_for(np, workers, [&](std::int64_t b, std::int64_t e, int) {
            ActScratch s(t);
            for (std::int64_t k = b; k < e; ++k) {
                act_into(a, pairs[static_cast<std::size_t>(k)].F,
                         pairs[static_cast<std::size_t>(k)].E_inv, t, p, s.t1.data(), s.t2.data(),
                         s.out.data());
                auto it = std::lower_bound(alphas.begin(), alphas.end(), s.out);
                if (it == alphas.end() || *it != s.out) {
                    escaped.store(true);
                    img[static_cast<std::size_t>(k)] = -1;
                } else {
                    img[static_cast<std::size_t>(k)] = it - alphas.begin();
                }
            }
        });
        if (escaped.load())
            throw std::logic_error("orbits: the filtered space is not closed under the pattern group");
        std::int64_t size = 0;
        for (std::int64_t k = 0; k < np; ++k) {
            std::int64_t idx = img[static_cast<std::size_t>(k)];
            if (idx < static_cast<std::int64_t>(seed))
                throw std::logic_error("orbits: seed is not the least member of its orbit");
            if (!visited[static_cast<std::size_t>(idx)]) {
                visited[static_cast<std::size_t>(idx)] = 1;
                ++size;
            }
        }
        rep.reps.emplace_back(p, shape, side, alphas[seed]);
        rep.sizes.push_back(size);
    }
    std::int64_t covered = 0;
    for (std::int64_t s : rep.sizes) covered += s;
    if (covered != rep.space_size) throw std::logic_error("orbits: orbit sizes do not cover the space");
    return rep;
}

std::optional<AdmissiblePair> isomorphism_witness(const StructureTensor& a, const StructureTensor& b,
                                                  const Budgets& budgets) {
    if (!(a.module() == b.module()))
        throw std::invalid_argument("isomorphism_witness: tensors live on different modules");
    auto pairs = admissible_pairs(a.p(), a.shape(), a.side(), budgets);
    ActScratch s(a.t());
    for (const auto& g : pairs) {
        act_into(a.alpha().data(), g.F, g.E_inv, a.t(), a.p(), s.t1.data(), s.t2.data(), s.out.data());
        if (s.out == b.alpha()) return g;
    }
    return std::nullopt;
}

bool are_isomorphic(const StructureTensor& a, const StructureTensor& b, const Budgets& budgets) {
    return isomorphism_witness(a, b, budgets).has_value();
}

namespace {

// x_i * g on the ring side is plain integer scaling; on the algebra side the
// component is a polynomial acting digit by digit through multiplication by T.
// All x with mho1^k(x) = 0: component j runs over multiples of p^{max(l_j-k,0)}.
std::vector<Coords> torsion_elements(const Module& M, std::int64_t k) {
    std::int64_t t = M.t();
    std::vector<std::int64_t> step(static_cast<std::size_t>(t)), count(static_cast<std::size_t>(t));
    for (std::int64_t j = 0; j < t; ++j) {
        std::int64_t lj = M.shape().part(j);
        std::int64_t red = std::min(lj, k);
        step[static_cast<std::size_t>(j)] = ipow(M.p(), lj - red);
        count[static_cast<std::size_t>(j)] = ipow(M.p(), red);
    }
    std::vector<Coords> out;
    Coords idx(static_cast<std::size_t>(t), 0);
    while (true) {
        Coords x(static_cast<std::size_t>(t));
        for (std::int64_t j = 0; j < t; ++j)
            x[static_cast<std::size_t>(j)] =
                idx[static_cast<std::size_t>(j)] * step[static_cast<std::size_t>(j)];
        out.push_back(std::move(x));
        std::int64_t pos = t;
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++idx[static_cast<std::size_t>(pos)] < count[static_cast<std::size_t>(pos)]) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            if (pos == 0) return out;
        }
    }
}

std::vector<AdmissiblePair> pairs_of_automorphisms(const Module& M,
                                                   const std::vector<ModuleAutomorphism>& auts) {
    std::int64_t t = M.t();
    std::vector<AdmissiblePair> out;
    out.reserve(auts.size());
    for (const auto& a : auts) {
        FpMatrix E(M.p(), t, t), F(M.p(), t, t);
        for (std::int64_t i = 0; i < t; ++i) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(t), 0);
            c[static_cast<std::size_t>(i)] = 1;
            Coords s_img = M.element(a.perm[static_cast<std::size_t>(M.index_of(M.omega1_element(c)))]);
            auto e_row = M.omega1_coords(s_img);
            auto f_row = M.bar(a.images[static_cast<std::size_t>(i)]);
            for (std::int64_t j = 0; j < t; ++j) {
                E.set(i, j, e_row[static_cast<std::size_t>(j)]);
                F.set(i, j, f_row[static_cast<std::size_t>(j)]);
            }
        }
        out.emplace_back(std::move(E), std::move(F), M.side());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<ModuleAutomorphism> module_automorphisms(std::int64_t p, const Partition& shape,
                                                     Side side, const Budgets& budgets) {
    Module M(p, shape, side);
    std::int64_t t = M.t();
    std::vector<std::vector<Coords>> cand;
    cand.reserve(static_cast<std::size_t>(t));
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < t; ++i) {
        cand.push_back(torsion_elements(M, shape.part(i)));
        total = sat_mul(total, static_cast<std::int64_t>(cand.back().size()));
    }
    check_budget("module endomorphism candidates", total, budgets.tensor_space_cap);
    // The scan applies every candidate to every element once.
    check_budget("module automorphism scan", sat_mul(total, M.order()),
                 100 * budgets.tensor_space_cap);

    std::vector<ModuleAutomorphism> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(t), 0);
    std::vector<std::int64_t> perm(static_cast<std::size_t>(M.order()));
    std::vector<char> seen(static_cast<std::size_t>(M.order()));
    std::vector<std::vector<Coords>> scaled(static_cast<std::size_t>(t));
    while (true) {
        std::vector<Coords> images;
        images.reserve(static_cast<std::size_t>(t));
        FpMatrix F(p, t, t);
        for (std::int64_t i = 0; i < t; ++i) {
            images.push_back(cand[static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]]);
            auto row = M.bar(images.back());
            for (std::int64_t j = 0; j < t; ++j) F.set(i, j, row[static_cast<std::size_t>(j)]);
        }
        // Tabulate sigma on every element and decide bijectivity directly.
        for (std::int64_t i = 0; i < t; ++i) {
            auto& tab = scaled[static_cast<std::size_t>(i)];
            tab.assign(static_cast<std::size_t>(M.component_modulus(i)), Coords());
            for (std::int64_t c = 0; c < M.component_modulus(i); ++c)
                tab[static_cast<std::size_t>(c)] = M.component_scale(images[static_cast<std::size_t>(i)], c);
        }
        std::fill(seen.begin(), seen.end(), 0);
        bool bij = true;
        for (std::int64_t e = 0; e < M.order(); ++e) {
            Coords x = M.element(e);
            Coords y = scaled[0][static_cast<std::size_t>(x[0])];
            for (std::int64_t i = 1; i < t; ++i)
                y = M.add(y, scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[static_cast<std::size_t>(i)])]);
            std::int64_t idx = M.index_of(y);
            perm[static_cast<std::size_t>(e)] = idx;
            if (seen[static_cast<std::size_t>(idx)]) bij = false;
            seen[static_cast<std::size_t>(idx)] = 1;
        }
        if (bij != F.invertible())
            throw std::logic_error(
                "module_automorphisms: quotient invertibility disagrees with element bijectivity");
        if (bij) {
            std::vector<std::int64_t> inv(perm.size());
            for (std::size_t e = 0; e < perm.size(); ++e)
                inv[static_cast<std::size_t>(perm[e])] = static_cast<std::int64_t>(e);
            out.push_back(ModuleAutomorphism{std::move(images), perm, std::move(inv)});
        }

        std::size_t pos = choice.size();
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++choice[pos] < cand[pos].size()) break;
            choice[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

std::vector<AdmissiblePair> module_automorphism_pairs(std::int64_t p, const Partition& shape,
                                                      Side side, const Budgets& budgets) {
    Module M(p, shape, side);
    return pairs_of_automorphisms(M, module_automorphisms(p, shape, side, budgets));
}

bool GencorrReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string GencorrReport::to_string() const {
    std::ostringstream os;
    std::int64_t failed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
        if (!c.pass) ++failed;
    }
    if (failed == 0)
        os << "all " << checks.size() << " checks passed\n";
    else
        os << failed << " of " << checks.size() << " checks FAILED\n";
    return os.str();
}

namespace {

// The Jacobi and alternating laws tested on module elements with side-native
// arithmetic, independent of the coefficient identities.
bool element_level_lie(const StructureTensor& T) {
    const Module& M = T.module();
    std::int64_t t = T.t();
    std::vector<Coords> gens;
    for (std::int64_t i = 0; i < t; ++i) {
        Coords u = M.zero();
        u[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(u));
    }
    for (std::int64_t e = 0; e < M.order(); ++e) {
        Coords x = M.element(e);
        if (!M.is_zero(T.bracket(x, x))) return false;
    }
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = 0; j < t; ++j)
            for (std::int64_t k = 0; k < t; ++k) {
                Coords s = T.bracket(T.bracket(gens[static_cast<std::size_t>(i)],
                                               gens[static_cast<std::size_t>(j)]),
                                     gens[static_cast<std::size_t>(k)]);
                s = M.add(s, T.bracket(T.bracket(gens[static_cast<std::size_t>(k)],
                                                 gens[static_cast<std::size_t>(i)]),
                                       gens[static_cast<std::size_t>(j)]));
                s = M.add(s, T.bracket(T.bracket(gens[static_cast<std::size_t>(j)],
                                                 gens[static_cast<std::size_t>(k)]),
                                       gens[static_cast<std::size_t>(i)]));
                if (!M.is_zero(s)) return false;
            }
    return true;
}

// Lower central series computed on module elements: spans of actual bracket
// values, iterated against the whole module.
std::vector<std::int64_t> element_level_lcs(const StructureTensor& T) {
    const Module& M = T.module();
    std::int64_t t = T.t();
    FpRowSpace cur(T.p(), t);
    for (std::int64_t e = 0; e < M.order(); ++e) {
        Coords x = M.element(e);
        for (std::int64_t f = 0; f < M.order(); ++f)
            cur.add(M.omega1_coords(T.bracket(x, M.element(f))));
    }
    std::vector<std::int64_t> dims{cur.rank()};
    for (std::int64_t step = 0; step <= t + 1 && dims.back() > 0; ++step) {
        FpRowSpace next(T.p(), t);
        for (const auto& c : cur.enumerate()) {
            Coords w = M.omega1_element(c);
            for (std::int64_t f = 0; f < M.order(); ++f)
                next.add(M.omega1_coords(T.bracket(w, M.element(f))));
        }
        if (next.rank() >= cur.rank()) {
            dims.push_back(next.rank());
            break;
        }
        dims.push_back(next.rank());
        cur = std::move(next);
    }
    return dims;
}

std::string plural(std::int64_t k, const char* noun) {
    return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

}  // namespace

GencorrReport verify_gencorr(std::int64_t p, std::int64_t n, const Budgets& budgets, int workers) {
    GencorrReport rep{p, n, {}};
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back(GencorrCheck{name, pass, detail});
    };

    for (const Partition& shape : all_partitions(n)) {
        std::string tag = " " + shape.to_string();
        std::int64_t t = shape.size();

        // Pattern group versus the automorphisms it is supposed to describe.
        std::array<Side, 2> sides{Side::ring, Side::algebra};
        std::array<std::vector<AdmissiblePair>, 2> pats;
        std::array<std::vector<ModuleAutomorphism>, 2> auts;
        for (int s = 0; s < 2; ++s) {
            pats[static_cast<std::size_t>(s)] = admissible_pairs(p, shape, sides[static_cast<std::size_t>(s)], budgets);
            Module M(p, shape, sides[static_cast<std::size_t>(s)]);
            auts[static_cast<std::size_t>(s)] = module_automorphisms(p, shape, sides[static_cast<std::size_t>(s)], budgets);
            auto induced = pairs_of_automorphisms(M, auts[static_cast<std::size_t>(s)]);
            auto sorted_pats = pats[static_cast<std::size_t>(s)];
            std::sort(sorted_pats.begin(), sorted_pats.end());
            bool ok = sorted_pats.size() == induced.size() &&
                      std::equal(sorted_pats.begin(), sorted_pats.end(), induced.begin());
            bool every_admissible = true;
            for (const auto& g : induced)
                if (!is_admissible(g, shape)) every_admissible = false;
            add("pattern-pairs-match-automorphisms " + side_name(sides[static_cast<std::size_t>(s)]) + tag,
                ok && every_admissible,
                plural(static_cast<std::int64_t>(auts[static_cast<std::size_t>(s)].size()), "automorphism") +
                    " induce " + plural(static_cast<std::int64_t>(induced.size()), "pair") + ", pattern group has " +
                    std::to_string(pats[static_cast<std::size_t>(s)].size()));
        }
        {
            std::int64_t formula = admissible_pair_count(p, shape);
            bool ok = formula == static_cast<std::int64_t>(pats[0].size()) &&
                      formula == static_cast<std::int64_t>(pats[1].size());
            add("pair-count-formula" + tag, ok, "formula gives " + std::to_string(formula));
        }
        {
            auto a = pats[0], b = pats[1];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            bool ok = a.size() == b.size();
            for (std::size_t k = 0; ok && k < a.size(); ++k)
                ok = a[k].E == b[k].E && a[k].F == b[k].F;
            add("pair-groups-agree-across-sides" + tag, ok,
                plural(static_cast<std::int64_t>(a.size()), "pair") + " on each side");
        }

        auto alphas = enumerate_alphas(p, shape, TensorFilter{true, false, false}, budgets);
        std::int64_t space = static_cast<std::int64_t>(alphas.size());

        // The coefficient action must equal transport along each automorphism:
        // act(T, pair(sigma)^{-1}) computed on coefficients versus
        // sigma([sigma^{-1} u_i, sigma^{-1} u_j]) computed on module elements.
        for (int s = 0; s < 2; ++s) {
            Module M(p, shape, sides[static_cast<std::size_t>(s)]);
            const auto& aut_list = auts[static_cast<std::size_t>(s)];
            // Inverted induced pair per automorphism, aligned with aut_list.
            std::vector<AdmissiblePair> inv_pairs;
            inv_pairs.reserve(aut_list.size());
            for (const auto& a : aut_list) {
                FpMatrix E(p, t, t), F(p, t, t);
                for (std::int64_t i = 0; i < t; ++i) {
                    std::vector<std::int64_t> c(static_cast<std::size_t>(t), 0);
                    c[static_cast<std::size_t>(i)] = 1;
                    auto erow = M.omega1_coords(
                        M.element(a.perm[static_cast<std::size_t>(M.index_of(M.omega1_element(c)))]));
                    auto frow = M.bar(a.images[static_cast<std::size_t>(i)]);
                    for (std::int64_t j = 0; j < t; ++j) {
                        E.set(i, j, erow[static_cast<std::size_t>(j)]);
                        F.set(i, j, frow[static_cast<std::size_t>(j)]);
                    }
                }
                inv_pairs.push_back(AdmissiblePair(E, F, sides[static_cast<std::size_t>(s)]).inverse());
            }
            std::int64_t sample_count = std::min<std::int64_t>(space, 24);
            bool ok = true;
            std::int64_t compared = 0;
            StructureTensor T(p, shape, sides[static_cast<std::size_t>(s)]);
            for (std::int64_t k = 0; k < sample_count && ok; ++k) {
                std::size_t idx = static_cast<std::size_t>(k * space / sample_count);
                T.set_alpha(alphas[idx]);
                for (std::size_t ai = 0; ai < aut_list.size(); ++ai) {
                    const auto& a = aut_list[ai];
                    StructureTensor lhs = act(T, inv_pairs[ai]);
                    bool match = true;
                    for (std::int64_t i = 0; i < t && match; ++i)
                        for (std::int64_t j = 0; j < t && match; ++j) {
                            Coords x = M.element(a.perm_inv[static_cast<std::size_t>(M.unit_index(i))]);
                            Coords y = M.element(a.perm_inv[static_cast<std::size_t>(M.unit_index(j))]);
                            Coords z = M.element(a.perm[static_cast<std::size_t>(M.index_of(T.bracket(x, y)))]);
                            auto row = M.omega1_coords(z);
                            for (std::int64_t m = 0; m < t; ++m)
                                if (lhs.coeff(i, j, m) != row[static_cast<std::size_t>(m)]) match = false;
                        }
                    if (!match) {
                        ok = false;
                        break;
                    }
                    ++compared;
                }
            }
            add("action-matches-transport " + side_name(sides[static_cast<std::size_t>(s)]) + tag, ok,
                plural(compared, "tensor/automorphism comparison"));
        }

        // theta is an involution exchanging the sides and fixing coefficients.
        {
            bool ok = true;
            StructureTensor T(p, shape, Side::ring);
            for (const auto& a : alphas) {
                T.set_alpha(a);
                StructureTensor A = theta(T);
                if (A.side() != Side::algebra || A.alpha() != a || !(theta(A) == T)) {
                    ok = false;
                    break;
                }
            }
            add("theta-involution" + tag, ok, plural(space, "tensor"));
        }

        // theta(act(T, g)) == act(theta(T), theta(g)) over the whole space and group.
        {
            const auto& group = pats[0];
            std::int64_t np = static_cast<std::int64_t>(group.size());
            std::vector<AdmissiblePair> flipped;
            flipped.reserve(group.size());
            for (const auto& g : group) flipped.push_back(theta_pair(g));
            std::vector<char> worker_ok(static_cast<std::size_t>(std::max(workers, 1)), 1);
            parallel_for(space, workers, [&](std::int64_t b, std::int64_t e, int w) {
                ActScratch ring_s(t), alg_s(t);
                for (std::int64_t k = b; k < e; ++k) {
                    const std::int64_t* a = alphas[static_cast<std::size_t>(k)].data();
                    for (std::int64_t gidx = 0; gidx < np; ++gidx) {
                        const auto& g = group[static_cast<std::size_t>(gidx)];
                        const auto& h = flipped[static_cast<std::size_t>(gidx)];
                        act_into(a, g.F, g.E_inv, t, p, ring_s.t1.data(), ring_s.t2.data(),
                                 ring_s.out.data());
                        act_into(a, h.F, h.E_inv, t, p, alg_s.t1.data(), alg_s.t2.data(),
                                 alg_s.out.data());
                        if (ring_s.out != alg_s.out) {
                            worker_ok[static_cast<std::size_t>(w)] = 0;
                            return;
                        }
                    }
                }
            });
            bool ok = std::all_of(worker_ok.begin(), worker_ok.end(), [](char c) { return c != 0; });
            add("theta-equivariance" + tag, ok,
                std::to_string(space) + " tensors x " + plural(np, "pair"));
        }

        // The Lie laws hold on one side iff they hold on the other; both agree
        // with the coefficient identities.
        std::vector<std::size_t> lie_indices;
        {
            bool ok = true;
            StructureTensor TR(p, shape, Side::ring), TA(p, shape, Side::algebra);
            for (std::size_t k = 0; k < alphas.size(); ++k) {
                TR.set_alpha(alphas[k]);
                TA.set_alpha(alphas[k]);
                bool ring_lie = element_level_lie(TR);
                bool alg_lie = element_level_lie(TA);
                bool coeff_lie = TR.is_alternating() && TR.jacobi_holds();
                if (ring_lie != alg_lie || ring_lie != coeff_lie) {
                    ok = false;
                    break;
                }
                if (ring_lie) lie_indices.push_back(k);
            }
            add("lie-law-transfers" + tag, ok,
                plural(static_cast<std::int64_t>(lie_indices.size()), "Lie structure") + " among " +
                    std::to_string(space));
        }

        // Nilpotency and the whole lower central series transfer.
        {
            bool ok = true;
            std::int64_t nilcount = 0;
            StructureTensor TR(p, shape, Side::ring), TA(p, shape, Side::algebra);
            for (std::size_t k : lie_indices) {
                TR.set_alpha(alphas[k]);
                TA.set_alpha(alphas[k]);
                auto ring_dims = element_level_lcs(TR);
                auto alg_dims = element_level_lcs(TA);
                auto coeff_dims = TR.lcs_socle_dims();
                bool nil = ring_dims.back() == 0;
                if (ring_dims != alg_dims || ring_dims != coeff_dims ||
                    nil != TR.is_nilpotent() || nil != TA.is_nilpotent()) {
                    ok = false;
                    break;
                }
                if (nil) ++nilcount;
            }
            add("nilpotency-transfers" + tag, ok,
                plural(nilcount, "nilpotent structure") + " among " +
                    std::to_string(lie_indices.size()) + " Lie");
        }

        // Orbit decompositions agree filter by filter.
        {
            std::array<TensorFilter, 3> filters{TensorFilter{true, false, false},
                                                TensorFilter{true, true, false},
                                                TensorFilter{true, true, true}};
            std::array<const char*, 3> fname{"alternating", "lie", "lie+nilpotent"};
            bool ok = true;
            std::string detail;
            for (std::size_t fi = 0; fi < filters.size(); ++fi) {
                OrbitReport ring_rep = orbits(p, shape, Side::ring, filters[fi], budgets, workers);
                OrbitReport alg_rep = orbits(p, shape, Side::algebra, filters[fi], budgets, workers);
                bool same = ring_rep.orbit_count() == alg_rep.orbit_count() &&
                            ring_rep.sizes == alg_rep.sizes &&
                            ring_rep.space_size == alg_rep.space_size;
                for (std::size_t k = 0; same && k < ring_rep.reps.size(); ++k)
                    same = ring_rep.reps[k].alpha() == alg_rep.reps[k].alpha();
                if (!same) ok = false;
                if (!detail.empty()) detail += ", ";
                detail += std::string(fname[fi]) + ": " + std::to_string(ring_rep.orbit_count()) +
                          " orbits on " + std::to_string(ring_rep.space_size);
            }
            add("orbit-counts-agree" + tag, ok, detail);
        }
    }
    return rep;
}

GencorrReport verify_pair(const StructureTensor& ring_side, const StructureTensor& algebra_side) {
    GencorrReport rep{ring_side.p(), ring_side.shape().n(), {}};
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back(GencorrCheck{name, pass, detail});
    };

    bool sides_ok = ring_side.side() == Side::ring && algebra_side.side() == Side::algebra;
    add("sides-as-labeled", sides_ok,
        side_name(ring_side.side()) + " / " + side_name(algebra_side.side()));
    bool shape_ok = ring_side.p() == algebra_side.p() && ring_side.shape() == algebra_side.shape();
    add("shapes-match", shape_ok,
        ring_side.shape().to_string() + " vs " + algebra_side.shape().to_string());
    if (!sides_ok || !shape_ok) return rep;

    bool theta_ok = ring_side.alpha() == algebra_side.alpha();
    std::string theta_detail = "coefficient arrays are identical";
    if (!theta_ok) {
        std::int64_t t = ring_side.t();
        for (std::int64_t i = 0; i < t && theta_ok == false; ++i)
            for (std::int64_t j = 0; j < t; ++j)
                for (std::int64_t l = 0; l < t; ++l)
                    if (ring_side.coeff(i, j, l) != algebra_side.coeff(i, j, l)) {
                        theta_detail = "witness: entry (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + "," + std::to_string(l + 1) +
                                       ") is " + std::to_string(ring_side.coeff(i, j, l)) +
                                       " on the ring side, " +
                                       std::to_string(algebra_side.coeff(i, j, l)) +
                                       " on the algebra side";
                        i = j = l = t;
                    }
    }
    add("theta-maps-ring-to-algebra", theta_ok, theta_detail);

    bool r_alt = ring_side.is_alternating(), a_alt = algebra_side.is_alternating();
    add("alternating-agrees", r_alt == a_alt,
        std::string(r_alt ? "yes" : "no") + " / " + (a_alt ? "yes" : "no"));

    bool r_lie = r_alt && ring_side.jacobi_holds();
    bool a_lie = a_alt && algebra_side.jacobi_holds();
    bool r_el = element_level_lie(ring_side), a_el = element_level_lie(algebra_side);
    bool lie_ok = r_lie == a_lie && r_lie == r_el && a_lie == a_el;
    std::string lie_detail = std::string(r_lie ? "lie" : "not lie") + " / " +
                             (a_lie ? "lie" : "not lie");
    if (!lie_ok) {
        const StructureTensor& bad = (r_lie == r_el && a_lie != a_el) || a_lie != r_lie
                                         ? algebra_side
                                         : ring_side;
        std::string flat;
        for (std::size_t k = 0; k < bad.alpha().size(); ++k) {
            if (k) flat += ",";
            flat += std::to_string(bad.alpha()[k]);
        }
        lie_detail += "; witness tensor (" + side_name(bad.side()) + " side) alpha=[" + flat + "]";
    }
    add("lie-law-agrees", lie_ok, lie_detail);

    if (r_lie && a_lie && r_lie == a_lie) {
        auto rd = element_level_lcs(ring_side);
        auto ad = element_level_lcs(algebra_side);
        bool nil_r = rd.back() == 0, nil_a = ad.back() == 0;
        add("nilpotency-agrees", rd == ad && nil_r == nil_a,
            std::string(nil_r ? "nilpotent" : "not nilpotent") + " / " +
                (nil_a ? "nilpotent" : "not nilpotent"));
    }
    return rep;
}

}  // namespace plie
