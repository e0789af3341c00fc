#include "plie/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "plie/correspondence.hpp"
#include "plie/fp.hpp"
#include "plie/gl.hpp"

namespace plie {

namespace {

std::int64_t sat_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 62) / base) return std::int64_t{1} << 62;
        r *= base;
    }
    return r;
}

// Reduced row echelon form of a homogeneous system over F_p.
struct Rref {
    std::vector<std::vector<std::int64_t>> rows;  // pivot entries normalized to 1
    std::vector<std::int64_t> pivot_cols;         // one per row, increasing
    std::vector<std::int64_t> free_cols;
};

Rref rref(std::int64_t p, std::int64_t cols, std::vector<std::vector<std::int64_t>> rows) {
    Rref r;
    std::size_t done = 0;
    for (std::int64_t c = 0; c < cols && done < rows.size(); ++c) {
        std::size_t pivot = done;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(c)] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[done], rows[pivot]);
        std::int64_t inv = mod_pow(mod_reduce(rows[done][static_cast<std::size_t>(c)], p), p - 2, p);
        for (auto& v : rows[done]) v = mod_reduce(v * inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == done) continue;
            std::int64_t f = mod_reduce(rows[i][static_cast<std::size_t>(c)], p);
            if (f == 0) continue;
            for (std::int64_t j = 0; j < cols; ++j)
                rows[i][static_cast<std::size_t>(j)] = mod_reduce(
                    rows[i][static_cast<std::size_t>(j)] - f * rows[done][static_cast<std::size_t>(j)], p);
        }
        r.pivot_cols.push_back(c);
        ++done;
    }
    rows.resize(done);
    r.rows = std::move(rows);
    for (std::int64_t c = 0; c < cols; ++c)
        if (!std::binary_search(r.pivot_cols.begin(), r.pivot_cols.end(), c)) r.free_cols.push_back(c);
    return r;
}

// One basis vector per free column (that column set to 1, pivots back-solved).
std::vector<std::vector<std::int64_t>> nullspace_basis(std::int64_t p, std::int64_t cols,
                                                       std::vector<std::vector<std::int64_t>> rows) {
    Rref r = rref(p, cols, std::move(rows));
    std::vector<std::vector<std::int64_t>> basis;
    for (std::int64_t fc : r.free_cols) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[static_cast<std::size_t>(r.pivot_cols[i])] =
                mod_reduce(-r.rows[i][static_cast<std::size_t>(fc)], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Every solution, free coordinates in lexicographic digit order (last fastest).
std::vector<std::vector<std::int64_t>> nullspace_enumerate(std::int64_t p, std::int64_t cols,
                                                           std::vector<std::vector<std::int64_t>> rows,
                                                           std::int64_t cap, const char* what) {
    Rref r = rref(p, cols, std::move(rows));
    std::int64_t nfree = static_cast<std::int64_t>(r.free_cols.size());
    check_budget(what, sat_pow(p, nfree), cap);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(nfree), 0);
    for (;;) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(cols), 0);
        for (std::int64_t i = 0; i < nfree; ++i)
            v[static_cast<std::size_t>(r.free_cols[static_cast<std::size_t>(i)])] =
                digits[static_cast<std::size_t>(i)];
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            std::int64_t acc = 0;
            for (std::int64_t j = 0; j < nfree; ++j)
                acc += r.rows[i][static_cast<std::size_t>(r.free_cols[static_cast<std::size_t>(j)])] *
                       digits[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(r.pivot_cols[i])] = mod_reduce(-acc, p);
        }
        out.push_back(std::move(v));
        std::int64_t pos = nfree - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
            digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace

std::vector<CentralNilEndo> c_set(const FpLieAlgebra& K, const Budgets& budgets) {
    if (!K.is_lie()) throw std::invalid_argument("c_set: bracket cube is not a Lie algebra");
    if (!K.is_nilpotent()) throw std::invalid_argument("c_set: nilpotent Lie algebra required");
    std::int64_t n = K.dim(), p = K.p();

    // Functionals vanishing on the center; "row of sigma lies in Z" becomes
    // linear equations against these.
    std::vector<std::vector<std::int64_t>> zrows = K.center_basis();
    std::vector<std::vector<std::int64_t>> ann = nullspace_basis(p, n, std::move(zrows));

    auto idx = [n](std::int64_t a, std::int64_t b) {
        return static_cast<std::size_t>(a * n + b);
    };
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& f : ann)
        for (std::int64_t a = 0; a < n; ++a) {
            std::vector<std::int64_t> row(static_cast<std::size_t>(n * n), 0);
            for (std::int64_t b = 0; b < n; ++b) row[idx(a, b)] = f[static_cast<std::size_t>(b)];
            rows.push_back(std::move(row));
        }
    // [u_a sigma, u_b] = [u_a, u_b] sigma, coefficient of e_l:
    //   sum_c sigma_ac beta_cb^l = sum_c beta_ab^c sigma_cl.
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t l = 0; l < n; ++l) {
                std::vector<std::int64_t> row(static_cast<std::size_t>(n * n), 0);
                bool nonzero = false;
                for (std::int64_t c = 0; c < n; ++c) {
                    std::int64_t v1 = K.coeff(c, b, l);
                    if (v1 != 0) {
                        row[idx(a, c)] = mod_reduce(row[idx(a, c)] + v1, p);
                        nonzero = true;
                    }
                    std::int64_t v2 = K.coeff(a, b, c);
                    if (v2 != 0) {
                        row[idx(c, l)] = mod_reduce(row[idx(c, l)] - v2, p);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }

    std::vector<std::vector<std::int64_t>> sols =
        nullspace_enumerate(p, n * n, std::move(rows), budgets.tensor_space_cap, "c_set solution space");

    std::vector<std::vector<std::int64_t>> derived = K.derived_basis();
    std::vector<CentralNilEndo> out;
    for (const auto& v : sols) {
        FpMatrix sigma(p, n, n);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) sigma.set(a, b, v[idx(a, b)]);
        if (!sigma.is_nilpotent()) continue;
        for (const auto& d : derived) {
            std::vector<std::int64_t> img = sigma.apply_row(d);
            for (std::int64_t x : img)
                if (x % p != 0)
                    throw std::logic_error("c_set: a member does not kill the derived subalgebra");
        }
        out.push_back(CentralNilEndo{sigma, jordan_type(sigma)});
    }
    return out;
}

std::vector<CentralNilEndo> c_set_lambda(const FpLieAlgebra& K, const Partition& lam,
                                         const Budgets& budgets) {
    std::vector<CentralNilEndo> out;
    for (auto& e : c_set(K, budgets))
        if (e.jordan == lam) out.push_back(std::move(e));
    return out;
}

std::vector<FpMatrix> aut_lie(const FpLieAlgebra& K, const Budgets& budgets) {
    std::int64_t n = K.dim(), p = K.p();
    bool zero_cube = true;
    for (std::int64_t v : K.cube())
        if (v % p != 0) zero_cube = false;

    std::vector<FpMatrix> auts;
    GlEnumerator gl(n, p, budgets);
    while (auto g = gl.next()) {
        if (zero_cube) {
            auts.push_back(std::move(*g));
            continue;
        }
        bool stab = true;
        for (std::int64_t i = 0; i < n && stab; ++i)
            for (std::int64_t j = 0; j < n && stab; ++j)
                for (std::int64_t l = 0; l < n; ++l) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (std::int64_t a = 0; a < n; ++a) {
                        for (std::int64_t b = 0; b < n; ++b) {
                            std::int64_t beta = K.coeff(a, b, l);
                            if (beta != 0) lhs += g->at(i, a) * g->at(j, b) % p * beta;
                        }
                        rhs += K.coeff(i, j, a) * g->at(a, l);
                    }
                    if (mod_reduce(lhs - rhs, p) != 0) {
                        stab = false;
                        break;
                    }
                }
        if (stab) auts.push_back(std::move(*g));
    }

    // Closure verification. All of GL is closed by definition; otherwise check
    // inverses fully and products within a pairwise budget (sampled rows above it).
    if (static_cast<std::int64_t>(auts.size()) != gl_order(n, p)) {
        auto member = [&](const FpMatrix& m) {
            return std::binary_search(auts.begin(), auts.end(), m);
        };
        for (const auto& g : auts)
            if (!member(g.inverse()))
                throw std::logic_error("aut_lie: stabilizer not closed under inverse");
        std::int64_t total = static_cast<std::int64_t>(auts.size());
        std::int64_t stride = std::max<std::int64_t>(1, total * total / 1'000'000);
        for (std::int64_t i = 0; i < total; i += stride)
            for (std::int64_t j = 0; j < total; ++j)
                if (!member(auts[static_cast<std::size_t>(i)] * auts[static_cast<std::size_t>(j)]))
                    throw std::logic_error("aut_lie: stabilizer not closed under product");
    }
    return auts;
}

Rational orbit_sum(const FpLieAlgebra& K, const Partition& lam, const Budgets& budgets) {
    std::vector<CentralNilEndo> S = c_set_lambda(K, lam, budgets);
    if (S.empty()) return Rational(0);
    std::vector<FpMatrix> auts = aut_lie(K, budgets);
    std::vector<FpMatrix> inv;
    inv.reserve(auts.size());
    for (const auto& g : auts) inv.push_back(g.inverse());

    std::map<std::vector<std::int64_t>, std::int64_t> index_of;
    for (std::size_t i = 0; i < S.size(); ++i)
        index_of[S[i].sigma.entries()] = static_cast<std::int64_t>(i);

    std::vector<std::int64_t> orbit_id(S.size(), -1);
    std::vector<std::int64_t> orbit_sz;
    for (std::size_t seed = 0; seed < S.size(); ++seed) {
        if (orbit_id[seed] != -1) continue;
        std::int64_t id = static_cast<std::int64_t>(orbit_sz.size());
        std::vector<std::int64_t> queue{static_cast<std::int64_t>(seed)};
        orbit_id[seed] = id;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const FpMatrix& x = S[static_cast<std::size_t>(queue[qi])].sigma;
            for (std::size_t gi = 0; gi < auts.size(); ++gi) {
                FpMatrix y = auts[gi] * x * inv[gi];
                auto it = index_of.find(y.entries());
                if (it == index_of.end())
                    throw std::logic_error("orbit_sum: conjugation left the Jordan stratum");
                if (orbit_id[static_cast<std::size_t>(it->second)] == -1) {
                    orbit_id[static_cast<std::size_t>(it->second)] = id;
                    queue.push_back(it->second);
                }
            }
        }
        orbit_sz.push_back(static_cast<std::int64_t>(queue.size()));
    }

    Rational total(0);
    for (std::size_t i = 0; i < S.size(); ++i)
        total += Rational(1, orbit_sz[static_cast<std::size_t>(orbit_id[i])]);
    std::int64_t orbits_direct = static_cast<std::int64_t>(orbit_sz.size());
    if (!total.is_integer() || total.num != orbits_direct)
        throw std::logic_error("orbit_sum: reciprocal sum " + total.to_string() +
                               " disagrees with the direct orbit count " +
                               std::to_string(orbits_direct));
    return total;
}

Transversal transversal_brute(std::int64_t p, std::int64_t n, const Budgets& budgets, int workers) {
    Partition shape(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
    TensorFilter filter{true, true, true};
    OrbitReport rep = orbits(p, shape, Side::ring, filter, budgets, workers);
    Transversal tv;
    tv.p = p;
    tv.n = n;
    tv.source = Transversal::Source::brute;
    tv.complete = true;
    for (const auto& T : rep.reps) tv.entries.push_back(to_lie_algebra(T));
    return tv;
}

Transversal transversal_from_algebras(std::int64_t p, std::int64_t n,
                                      std::vector<FpLieAlgebra> entries, const Budgets& budgets,
                                      int workers) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& K = entries[i];
        if (K.p() != p || K.dim() != n)
            throw std::invalid_argument("transversal: entry " + std::to_string(i) +
                                        " has the wrong field or dimension");
        if (!K.is_lie())
            throw std::invalid_argument("transversal: entry " + std::to_string(i) +
                                        " is not a Lie algebra");
        if (!K.is_nilpotent())
            throw std::invalid_argument("transversal: entry " + std::to_string(i) +
                                        " is not nilpotent");
    }
    auto inv_key = [](const FpLieAlgebra& K) {
        LieInvariants v = K.invariants();
        return std::tuple(v.center_dim, v.derived_dim, v.lcs_dims, v.nilpotency_class);
    };
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (inv_key(entries[i]) != inv_key(entries[j])) continue;
            if (are_isomorphic(to_tensor(entries[i]), to_tensor(entries[j]), budgets))
                throw std::invalid_argument("transversal: duplicate classes (entries " +
                                            std::to_string(i) + " and " + std::to_string(j) +
                                            " are isomorphic)");
        }

    Transversal tv;
    tv.p = p;
    tv.n = n;
    tv.entries = std::move(entries);
    tv.source = Transversal::Source::file;
    try {
        Transversal brute = transversal_brute(p, n, budgets, workers);
        if (tv.entries.size() < brute.entries.size()) {
            tv.complete = false;
            tv.completeness_note = "file transversal covers " + std::to_string(tv.entries.size()) +
                                   " of " + std::to_string(brute.entries.size()) +
                                   " isomorphism classes";
        } else if (tv.entries.size() > brute.entries.size()) {
            throw std::logic_error("transversal: more pairwise non-isomorphic entries than classes");
        } else {
            tv.complete = true;
            tv.completeness_note = "completeness verified by exhaustive enumeration";
        }
    } catch (const BudgetError&) {
        tv.complete = true;
        tv.completeness_note =
            "file-sourced transversal: completeness is the file's claim (exhaustive cross-check "
            "beyond budget)";
    }
    return tv;
}

namespace {

void require_counting_regime(std::int64_t p, std::int64_t n, const Transversal& tv) {
    if (p < n)
        throw std::invalid_argument("count: requires p >= n (got p = " + std::to_string(p) +
                                    ", n = " + std::to_string(n) + ")");
    if (tv.p != p || tv.n != n) throw std::invalid_argument("count: transversal mismatch");
}

}  // namespace

std::int64_t count_partition(std::int64_t p, std::int64_t n, const Partition& lam,
                             const Transversal& transversal, const Budgets& budgets) {
    require_counting_regime(p, n, transversal);
    if (lam.n() != n) throw std::invalid_argument("count: partition does not sum to n");
    Rational total(0);
    for (const auto& K : transversal.entries) total += orbit_sum(K, lam, budgets);
    if (!total.is_integer()) throw std::logic_error("count_partition: non-integral total");
    return total.num;
}

std::int64_t count_total(std::int64_t p, std::int64_t n, const Transversal& transversal,
                         const Budgets& budgets) {
    std::int64_t total = 0;
    for (const auto& lam : all_partitions(n)) total += count_partition(p, n, lam, transversal, budgets);
    return total;
}

bool CountReport::cross_checks_agree() const {
    for (const auto& r : rows)
        if (r.cross_check && *r.cross_check != r.count) return false;
    return true;
}

std::string CountReport::to_string() const {
    std::string s = "p=" + std::to_string(p) + " n=" + std::to_string(n) + "\n";
    for (const auto& r : rows) {
        s += "partition " + r.lam.to_string() + " -> " + std::to_string(r.count);
        if (r.cross_check)
            s += " [orbit cross-check " + std::to_string(*r.cross_check) +
                 (*r.cross_check == r.count ? ", agrees]" : ", DISAGREES]");
        s += "\n";
    }
    s += "total " + std::to_string(total) + "\n";
    if (!completeness_note.empty()) s += "note: " + completeness_note + "\n";
    return s;
}

CountReport count_report(std::int64_t p, std::int64_t n, const Transversal& transversal,
                         const Budgets& budgets, int workers, bool cross_check) {
    require_counting_regime(p, n, transversal);
    CountReport rep;
    rep.p = p;
    rep.n = n;
    rep.completeness_note = transversal.completeness_note;
    for (const auto& lam : all_partitions(n)) {
        CountRow row{lam, count_partition(p, n, lam, transversal, budgets), std::nullopt};
        if (cross_check) {
            try {
                TensorFilter filter{true, true, true};
                row.cross_check = orbits(p, lam, Side::ring, filter, budgets, workers).orbit_count();
            } catch (const BudgetError&) {
            }
        }
        rep.total += row.count;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<std::vector<std::int64_t>> n_endo(const GroupTable& E, std::int64_t n,
                                              const Budgets& budgets) {
    std::int64_t m = E.order;
    std::vector<std::int64_t> Z = center(E);
    std::vector<std::int64_t> gens = generating_sequence(E);
    std::int64_t k = static_cast<std::int64_t>(gens.size());
    check_budget("n_endo candidate space", sat_pow(static_cast<std::int64_t>(Z.size()), k),
                 budgets.tensor_space_cap);

    // Expression of every element as (earlier element) * generator, by sweeping.
    struct Step {
        std::int64_t x, parent, genidx;
    };
    std::vector<Step> steps;
    {
        std::vector<char> known(static_cast<std::size_t>(m), 0);
        known[0] = 1;
        std::vector<std::int64_t> list{0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t ki = 0; ki < list.size(); ++ki)
                for (std::int64_t j = 0; j < k; ++j) {
                    std::int64_t x = E.mul(list[ki], gens[static_cast<std::size_t>(j)]);
                    if (!known[static_cast<std::size_t>(x)]) {
                        known[static_cast<std::size_t>(x)] = 1;
                        list.push_back(x);
                        steps.push_back({x, list[ki], j});
                        grew = true;
                    }
                }
        }
        if (static_cast<std::int64_t>(list.size()) != m)
            throw std::logic_error("n_endo: generators fail to generate");
    }

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> pick(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> phi(static_cast<std::size_t>(m));
    for (;;) {
        phi.assign(static_cast<std::size_t>(m), 0);
        for (const Step& s : steps)
            phi[static_cast<std::size_t>(s.x)] =
                E.mul(phi[static_cast<std::size_t>(s.parent)],
                      Z[static_cast<std::size_t>(pick[static_cast<std::size_t>(s.genidx)])]);
        bool ok = true;
        for (std::int64_t a = 0; a < m && ok; ++a)
            for (std::int64_t b = 0; b < m; ++b)
                if (phi[static_cast<std::size_t>(E.mul(a, b))] !=
                    E.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)])) {
                    ok = false;
                    break;
                }
        if (ok) {
            // n-fold composite trivial; a homomorphism vanishing on generators
            // vanishes everywhere, so generators suffice.
            for (std::int64_t j = 0; j < k && ok; ++j) {
                std::int64_t x = gens[static_cast<std::size_t>(j)];
                for (std::int64_t it = 0; it < n; ++it) x = phi[static_cast<std::size_t>(x)];
                if (x != 0) ok = false;
            }
        }
        if (ok) out.push_back(phi);

        std::int64_t pos = k - 1;
        while (pos >= 0 &&
               pick[static_cast<std::size_t>(pos)] == static_cast<std::int64_t>(Z.size()) - 1)
            pick[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::int64_t>> central_nilpotent_endo_maps(const StructureTensor& T,
                                                                   const Budgets& budgets) {
    const Module& M = T.module();
    std::int64_t m = M.order(), t = M.t(), n = M.n(), p = M.p();

    std::vector<Coords> elts;
    elts.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) elts.push_back(M.element(i));

    // Center of the bracket structure (bilinearity: basis tests suffice).
    std::vector<std::int64_t> zcenter;
    for (std::int64_t e = 0; e < m; ++e) {
        bool central = true;
        for (std::int64_t j = 0; j < t && central; ++j) {
            Coords u = M.element(M.unit_index(j));
            if (!M.is_zero(T.bracket(elts[static_cast<std::size_t>(e)], u)) ||
                !M.is_zero(T.bracket(u, elts[static_cast<std::size_t>(e)])))
                central = false;
        }
        if (central) zcenter.push_back(e);
    }

    // Candidate images of generator u_i: central elements killed by the i-th
    // torsion bound, so the coordinate action extends linearly.
    std::vector<std::vector<std::int64_t>> cand(static_cast<std::size_t>(t));
    std::int64_t space = 1;
    for (std::int64_t i = 0; i < t; ++i) {
        for (std::int64_t z : zcenter) {
            Coords w = elts[static_cast<std::size_t>(z)];
            for (std::int64_t k = 0; k < M.shape().part(i); ++k) w = M.mho1_image(w);
            if (M.is_zero(w)) cand[static_cast<std::size_t>(i)].push_back(z);
        }
        space = std::min(space * static_cast<std::int64_t>(cand[static_cast<std::size_t>(i)].size()),
                         std::int64_t{1} << 62);
    }
    check_budget("central endomorphism candidate space", space, budgets.tensor_space_cap);

    // Bracket images of basis pairs, for the compatibility check.
    std::vector<std::int64_t> br_units(static_cast<std::size_t>(t * t));
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = 0; j < t; ++j)
            br_units[static_cast<std::size_t>(i * t + j)] = M.index_of(
                T.bracket(elts[static_cast<std::size_t>(M.unit_index(i))],
                          elts[static_cast<std::size_t>(M.unit_index(j))]));

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> pick(static_cast<std::size_t>(t), 0);
    for (;;) {
        std::vector<Coords> img(static_cast<std::size_t>(t));
        for (std::int64_t i = 0; i < t; ++i)
            img[static_cast<std::size_t>(i)] = elts[static_cast<std::size_t>(
                cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])])];

        std::vector<std::int64_t> phi(static_cast<std::size_t>(m));
        for (std::int64_t e = 0; e < m; ++e) {
            Coords acc = M.zero();
            for (std::int64_t i = 0; i < t; ++i) {
                std::int64_t c = elts[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)];
                if (c != 0)
                    acc = M.add(acc, M.component_scale(img[static_cast<std::size_t>(i)], c));
            }
            phi[static_cast<std::size_t>(e)] = M.index_of(acc);
        }

        bool ok = true;
        for (std::int64_t i = 0; i < t && ok; ++i)
            for (std::int64_t j = 0; j < t; ++j) {
                Coords u = elts[static_cast<std::size_t>(M.unit_index(j))];
                Coords lhs = T.bracket(img[static_cast<std::size_t>(i)], u);
                std::int64_t rhs =
                    phi[static_cast<std::size_t>(br_units[static_cast<std::size_t>(i * t + j)])];
                if (M.index_of(lhs) != rhs) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            for (std::int64_t i = 0; i < t && ok; ++i) {
                std::int64_t x = M.unit_index(i);
                for (std::int64_t it = 0; it < n; ++it) x = phi[static_cast<std::size_t>(x)];
                if (x != 0) ok = false;
            }
        }
        if (ok) out.push_back(std::move(phi));

        std::int64_t pos = t - 1;
        while (pos >= 0 &&
               pick[static_cast<std::size_t>(pos)] ==
                   static_cast<std::int64_t>(cand[static_cast<std::size_t>(pos)].size()) - 1)
            pick[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
    }
    (void)p;
    std::sort(out.begin(), out.end());
    return out;
}

NeReport verify_ne_equals_c(const GroupTable& E, const Budgets& budgets) {
    if (!E.has_source())
        throw std::invalid_argument("verify_ne_equals_c: table carries no source structure");
    StructureTensor T = E.source_tensor();
    std::int64_t n = T.shape().n();

    std::vector<std::vector<std::int64_t>> group_side = n_endo(E, n, budgets);

    std::vector<std::vector<std::int64_t>> lie_side;
    bool all_ones = T.shape().part(0) == 1;
    if (all_ones) {
        const Module& M = T.module();
        std::vector<Coords> elts;
        for (std::int64_t i = 0; i < M.order(); ++i) elts.push_back(M.element(i));
        for (const auto& e : c_set(to_lie_algebra(T), budgets)) {
            std::vector<std::int64_t> map(static_cast<std::size_t>(M.order()));
            for (std::int64_t i = 0; i < M.order(); ++i)
                map[static_cast<std::size_t>(i)] =
                    M.index_of(e.sigma.apply_row(elts[static_cast<std::size_t>(i)]));
            lie_side.push_back(std::move(map));
        }
        std::sort(lie_side.begin(), lie_side.end());
    } else {
        lie_side = central_nilpotent_endo_maps(T, budgets);
    }

    NeReport rep;
    rep.group_side = static_cast<std::int64_t>(group_side.size());
    rep.lie_side = static_cast<std::int64_t>(lie_side.size());
    rep.pass = group_side == lie_side;
    if (rep.pass) {
        rep.detail = "both sides have " + std::to_string(rep.group_side) + " maps";
    } else {
        std::vector<std::vector<std::int64_t>> diff;
        std::set_symmetric_difference(group_side.begin(), group_side.end(), lie_side.begin(),
                                      lie_side.end(), std::back_inserter(diff));
        std::string w = "witness map (";
        const auto& d = diff.front();
        for (std::size_t i = 0; i < d.size() && i < 10; ++i) {
            if (i) w += ",";
            w += std::to_string(d[i]);
        }
        if (d.size() > 10) w += ",...";
        w += ")";
        rep.detail = std::to_string(rep.group_side) + " group-side vs " +
                     std::to_string(rep.lie_side) + " structure-side maps; " + w;
    }
    return rep;
}

}  // namespace plie
