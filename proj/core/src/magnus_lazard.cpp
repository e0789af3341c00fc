#include "plie/magnus_lazard.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plie/bch.hpp"
#include "plie/parallel.hpp"

namespace plie {

GroupTable gp(const StructureTensor& T, const Budgets& budgets, int workers) {
    if (!T.is_alternating() || !T.jacobi_holds())
        throw std::invalid_argument("gp: not a Lie structure (alternating + Jacobi required)");
    if (!T.is_nilpotent()) throw std::invalid_argument("gp: nilpotent structure required");
    std::int64_t c = T.nilpotency_class();
    if (c >= T.p())
        throw std::invalid_argument("gp: hypothesis violation: nilpotency class " +
                                    std::to_string(c) + " is not below p = " + std::to_string(T.p()));

    const Module& M = T.module();
    std::int64_t m = M.order();
    BchSeries series = bch_terms(static_cast<int>(c));

    std::vector<Coords> elts;
    elts.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) elts.push_back(M.element(i));

    GroupTable G;
    G.p = T.p();
    G.order = m;
    G.table.assign(static_cast<std::size_t>(m * m), 0);
    G.shape = T.shape();
    G.side = T.side();
    G.alpha = T.alpha();
    parallel_for(m, workers, [&](std::int64_t lo, std::int64_t hi, int) {
        for (std::int64_t a = lo; a < hi; ++a)
            for (std::int64_t b = 0; b < m; ++b)
                G.table[static_cast<std::size_t>(a * m + b)] = static_cast<std::int32_t>(
                    M.index_of(bch_eval(T, elts[static_cast<std::size_t>(a)],
                                        elts[static_cast<std::size_t>(b)], series)));
    });
    validate_group(G, budgets);
    return G;
}

namespace {

// x + y := x y [x,y]^{(m-1)/2}: the class-<=2 inverse of the BCH product. For
// tables produced by gp this is exactly the module addition.
struct BaerSum {
    const GroupTable& G;

    std::int64_t add(std::int64_t x, std::int64_t y) const {
        std::int64_t c = commutator(G, x, y);
        if (c == 0) return G.mul(x, y);
        std::int64_t mc = element_order(G, c);
        return G.mul(G.mul(x, y), power(G, c, (mc - 1) / 2));
    }
    std::int64_t scale(std::int64_t x, std::int64_t k) const {
        std::int64_t r = 0;
        for (std::int64_t i = 0; i < k; ++i) r = add(r, x);
        return r;
    }
    // Smallest power of p driving x into the subset marked by `in`.
    std::int64_t order_into(std::int64_t x, const std::vector<char>& in) const {
        std::int64_t q = 1;
        while (!in[static_cast<std::size_t>(x)]) {
            x = scale(x, G.p);
            q *= G.p;
            if (q > G.order) throw std::logic_error("lp_class2: additive order diverged");
        }
        return q;
    }
};

}  // namespace

StructureTensor lp_class2(const GroupTable& G, const Budgets& budgets) {
    validate_group(G, budgets);
    if (G.order % 2 == 0)
        throw std::invalid_argument("lp_class2: even order not supported (halving the commutator needs odd orders)");

    std::int64_t m = G.order;
    std::vector<char> central(static_cast<std::size_t>(m), 0);
    for (std::int64_t z : center(G)) central[static_cast<std::size_t>(z)] = 1;
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = x + 1; y < m; ++y) {
            std::int64_t c = commutator(G, x, y);
            if (!central[static_cast<std::size_t>(c)])
                throw std::invalid_argument("lp_class2: nilpotency class exceeds 2");
            if (c != 0 && power(G, c, G.p) != 0)
                throw std::invalid_argument(
                    "lp_class2: derived subgroup has exponent above p; the bracket cannot land in the socle");
        }

    BaerSum bs{G};
    Partition lam = group_type(G);

    // Fast path: the table's element labels already follow the lexicographic
    // coordinate order of a module of the group's type, as every gp output does.
    {
        Side side = G.has_source() ? G.side : Side::ring;
        Module M(G.p, lam, side);
        bool labeled = M.order() == m;
        std::vector<Coords> elts;
        if (labeled) {
            elts.reserve(static_cast<std::size_t>(m));
            for (std::int64_t i = 0; i < m; ++i) elts.push_back(M.element(i));
            for (std::int64_t x = 0; x < m && labeled; ++x)
                for (std::int64_t y = 0; y < m; ++y)
                    if (bs.add(x, y) != M.index_of(M.add(elts[static_cast<std::size_t>(x)],
                                                         elts[static_cast<std::size_t>(y)]))) {
                        labeled = false;
                        break;
                    }
        }
        if (labeled) {
            std::int64_t t = lam.size();
            std::vector<std::int64_t> alpha(static_cast<std::size_t>(t * t * t), 0);
            for (std::int64_t i = 0; i < t; ++i)
                for (std::int64_t j = i + 1; j < t; ++j) {
                    std::int64_t c = commutator(G, M.unit_index(i), M.unit_index(j));
                    std::vector<std::int64_t> sc = M.omega1_coords(elts[static_cast<std::size_t>(c)]);
                    for (std::int64_t l = 0; l < t; ++l) {
                        alpha[static_cast<std::size_t>((i * t + j) * t + l)] = sc[static_cast<std::size_t>(l)];
                        alpha[static_cast<std::size_t>((j * t + i) * t + l)] =
                            (G.p - sc[static_cast<std::size_t>(l)]) % G.p;
                    }
                }
            return StructureTensor(G.p, lam, side, std::move(alpha));
        }
    }

    // General path: build an adapted basis for the Baer sum greedily — among
    // elements outside the span so far, take one of maximal coset order whose
    // own additive order equals it (such an element always exists in a finite
    // abelian p-group), then read the bracket off in that basis.
    std::vector<std::int64_t> basis;
    std::vector<std::int64_t> span{0};
    std::vector<char> in_span(static_cast<std::size_t>(m), 0);
    in_span[0] = 1;
    std::vector<std::int64_t> basis_orders;
    std::vector<char> zero_only(static_cast<std::size_t>(m), 0);
    zero_only[0] = 1;
    while (static_cast<std::int64_t>(span.size()) < m) {
        std::int64_t best = -1, best_ord = 0;
        for (std::int64_t b = 0; b < m; ++b) {
            if (in_span[static_cast<std::size_t>(b)]) continue;
            std::int64_t coset_ord = bs.order_into(b, in_span);
            if (coset_ord <= best_ord) continue;
            if (bs.order_into(b, zero_only) != coset_ord) continue;
            best = b;
            best_ord = coset_ord;
        }
        if (best == -1) throw std::logic_error("lp_class2: no adapted basis extension found");
        basis.push_back(best);
        basis_orders.push_back(best_ord);
        // Extend the span by all multiples of the new basis element.
        std::vector<std::int64_t> new_span;
        for (std::int64_t s : span) {
            std::int64_t x = s;
            for (std::int64_t k = 0; k < best_ord; ++k) {
                if (!in_span[static_cast<std::size_t>(x)]) {
                    in_span[static_cast<std::size_t>(x)] = 1;
                    new_span.push_back(x);
                }
                x = bs.add(x, best);
            }
        }
        span.insert(span.end(), new_span.begin(), new_span.end());
    }

    std::vector<std::int64_t> parts;
    for (std::int64_t o : basis_orders) {
        std::int64_t e = 0;
        for (std::int64_t q = o; q > 1; q /= G.p) ++e;
        parts.push_back(e);
    }
    if (Partition(parts) != lam)
        throw std::logic_error("lp_class2: adapted basis type disagrees with the Omega-series type");

    Module M(G.p, lam, Side::ring);
    std::int64_t t = lam.size();
    // Tabulate coordinates -> group element and invert.
    std::vector<std::int64_t> to_group(static_cast<std::size_t>(m)),
        to_coords(static_cast<std::size_t>(m), -1);
    for (std::int64_t idx = 0; idx < m; ++idx) {
        Coords c = M.element(idx);
        std::int64_t g = 0;
        for (std::int64_t i = 0; i < t; ++i)
            g = bs.add(g, bs.scale(basis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
        to_group[static_cast<std::size_t>(idx)] = g;
        if (to_coords[static_cast<std::size_t>(g)] != -1)
            throw std::logic_error("lp_class2: adapted basis does not span freely");
        to_coords[static_cast<std::size_t>(g)] = idx;
    }

    std::vector<std::int64_t> alpha(static_cast<std::size_t>(t * t * t), 0);
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = i + 1; j < t; ++j) {
            std::int64_t c = commutator(G, basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)]);
            std::vector<std::int64_t> sc =
                M.omega1_coords(M.element(to_coords[static_cast<std::size_t>(c)]));
            for (std::int64_t l = 0; l < t; ++l) {
                alpha[static_cast<std::size_t>((i * t + j) * t + l)] = sc[static_cast<std::size_t>(l)];
                alpha[static_cast<std::size_t>((j * t + i) * t + l)] =
                    (G.p - sc[static_cast<std::size_t>(l)]) % G.p;
            }
        }
    return StructureTensor(G.p, lam, Side::ring, std::move(alpha));
}

namespace {

std::vector<std::int64_t> closure_under_tables(
    std::int64_t m, const std::vector<const std::vector<std::int32_t>*>& ops,
    const std::vector<std::int64_t>& seed) {
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    std::vector<std::int64_t> members;
    auto push = [&](std::int64_t x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
    };
    push(0);
    for (std::int64_t s : seed) push(s);
    for (std::size_t qi = 0; qi < members.size(); ++qi) {
        std::int64_t x = members[qi];
        for (std::size_t j = 0; j < members.size(); ++j) {
            for (const auto* op : ops) {
                push((*op)[static_cast<std::size_t>(x * m + members[j])]);
                push((*op)[static_cast<std::size_t>(members[j] * m + x)]);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::string set_preview(const std::vector<std::int64_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size() && i < 8; ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    if (s.size() > 8) out += ",...";
    out += "} (size " + std::to_string(s.size()) + ")";
    return out;
}

}  // namespace

std::string MlReport::to_string() const {
    std::string s;
    for (const auto& c : checks) {
        s += (c.pass ? "[ok]   " : "[FAIL] ");
        s += c.name;
        if (!c.detail.empty()) {
            s += " — ";
            s += c.detail;
        }
        s += "\n";
    }
    return s;
}

MlReport verify_ml_properties(const GroupTable& G, const StructureTensor& T,
                              const Budgets& budgets) {
    MlReport rep;
    const Module& M = T.module();
    std::int64_t m = M.order();
    auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back(MlCheck{name, pass, detail});
    };

    add_check("underlying-set-coincides", G.order == m && G.p == T.p(),
              std::to_string(G.order) + " group elements vs " + std::to_string(m) + " module elements");
    if (G.order != m) return rep;

    {
        GroupTable rebuilt = gp(T, budgets);
        add_check("table-is-exponential-of-structure", rebuilt.same_table(G),
                  "rebuilt table compared entrywise");
    }

    add_check("identity-is-additive-zero", has_identity(G), "row and column of index 0");

    std::vector<Coords> elts;
    elts.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) elts.push_back(M.element(i));

    {
        bool pass = true;
        std::string detail;
        for (std::int64_t a = 0; a < m; ++a) {
            std::int64_t og = element_order(G, a);
            std::int64_t oa = M.additive_order(elts[static_cast<std::size_t>(a)]);
            if (og != oa) {
                pass = false;
                detail = "element " + std::to_string(a) + ": group order " + std::to_string(og) +
                         ", additive order " + std::to_string(oa);
                break;
            }
        }
        if (pass) detail = "all " + std::to_string(m) + " elements";
        add_check("element-orders-coincide", pass, detail);
    }

    // Shared multiplication tables for the module-side closures.
    std::vector<std::int32_t> add_tab(static_cast<std::size_t>(m * m)),
        br_tab(static_cast<std::size_t>(m * m));
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b) {
            add_tab[static_cast<std::size_t>(a * m + b)] = static_cast<std::int32_t>(M.index_of(
                M.add(elts[static_cast<std::size_t>(a)], elts[static_cast<std::size_t>(b)])));
            br_tab[static_cast<std::size_t>(a * m + b)] = static_cast<std::int32_t>(M.index_of(
                T.bracket(elts[static_cast<std::size_t>(a)], elts[static_cast<std::size_t>(b)])));
        }

    {
        bool pass = true;
        std::string detail;
        std::int64_t checked = 0;
        for (std::int64_t a = 0; a < m && pass; ++a)
            for (std::int64_t b = 0; b < m; ++b) {
                ++checked;
                bool comm_trivial = commutator(G, a, b) == 0;
                bool br_zero = br_tab[static_cast<std::size_t>(a * m + b)] == 0;
                if (comm_trivial != br_zero) {
                    pass = false;
                    detail = "pair (" + std::to_string(a) + "," + std::to_string(b) +
                             "): commutator " + (comm_trivial ? "trivial" : "nontrivial") +
                             " but bracket " + (br_zero ? "zero" : "nonzero");
                    break;
                }
            }
        if (pass) detail = "all " + std::to_string(checked) + " pairs";
        add_check("commutator-vanishes-iff-bracket-vanishes", pass, detail);
    }

    // Subgroup lattice vs subring lattice, both by closure-extension sweeps.
    auto enumerate_closed = [&](const std::vector<const std::vector<std::int32_t>*>& ops) {
        std::set<std::vector<std::int64_t>> found;
        std::vector<std::vector<std::int64_t>> queue;
        auto add_set = [&](std::vector<std::int64_t> H) {
            if (found.insert(H).second) queue.push_back(std::move(H));
        };
        add_set(closure_under_tables(m, ops, {}));
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::vector<std::int64_t> H = queue[qi];
            if (static_cast<std::int64_t>(H.size()) == m) continue;
            for (std::int64_t g = 0; g < m; ++g) {
                if (std::binary_search(H.begin(), H.end(), g)) continue;
                std::vector<std::int64_t> seed = H;
                seed.push_back(g);
                add_set(closure_under_tables(m, ops, seed));
            }
        }
        return found;
    };

    check_budget("lattice comparison: order", m, 243);
    std::set<std::vector<std::int64_t>> subgroups;
    for (const auto& H : all_subgroups(G, budgets)) subgroups.insert(H);
    std::set<std::vector<std::int64_t>> subrings = enumerate_closed({&add_tab, &br_tab});

    {
        bool pass = subgroups == subrings;
        std::string detail;
        if (pass) {
            detail = std::to_string(subgroups.size()) + " subgroups = " +
                     std::to_string(subrings.size()) + " subrings";
        } else {
            for (const auto& H : subgroups)
                if (!subrings.count(H)) {
                    detail = "subgroup " + set_preview(H) + " is not a subring";
                    break;
                }
            if (detail.empty())
                for (const auto& H : subrings)
                    if (!subgroups.count(H)) {
                        detail = "subring " + set_preview(H) + " is not a subgroup";
                        break;
                    }
        }
        add_check("subgroups-equal-subrings", pass, detail);
    }

    // Normal subgroups vs (two-sided) ideals.
    auto is_ideal = [&](const std::vector<std::int64_t>& I) {
        for (std::int64_t x : I)
            for (std::int64_t u = 0; u < m; ++u) {
                if (!std::binary_search(I.begin(), I.end(),
                                        static_cast<std::int64_t>(
                                            br_tab[static_cast<std::size_t>(x * m + u)])))
                    return false;
                if (!std::binary_search(I.begin(), I.end(),
                                        static_cast<std::int64_t>(
                                            br_tab[static_cast<std::size_t>(u * m + x)])))
                    return false;
            }
        return true;
    };
    std::vector<std::vector<std::int64_t>> normals;
    for (const auto& H : subgroups)
        if (is_normal(G, H)) normals.push_back(H);
    std::vector<std::vector<std::int64_t>> ideals;
    for (const auto& H : subrings)
        if (is_ideal(H)) ideals.push_back(H);
    {
        bool pass = normals == ideals;
        std::string detail = std::to_string(normals.size()) + " normal subgroups vs " +
                             std::to_string(ideals.size()) + " ideals";
        add_check("normal-subgroups-equal-ideals", pass, detail);
    }

    // [H,K] as a group vs the ideal generated by the pairwise brackets.
    {
        auto bracket_ideal = [&](const std::vector<std::int64_t>& gens) {
            std::vector<char> in(static_cast<std::size_t>(m), 0);
            std::vector<std::int64_t> members;
            auto push = [&](std::int64_t x) {
                if (!in[static_cast<std::size_t>(x)]) {
                    in[static_cast<std::size_t>(x)] = 1;
                    members.push_back(x);
                }
            };
            push(0);
            for (std::int64_t g : gens) push(g);
            for (std::size_t qi = 0; qi < members.size(); ++qi) {
                std::int64_t x = members[qi];
                for (std::size_t j = 0; j < members.size(); ++j)
                    push(add_tab[static_cast<std::size_t>(x * m + members[j])]);
                for (std::int64_t u = 0; u < m; ++u) {
                    push(br_tab[static_cast<std::size_t>(x * m + u)]);
                    push(br_tab[static_cast<std::size_t>(u * m + x)]);
                }
            }
            std::sort(members.begin(), members.end());
            return members;
        };
        bool pass = true;
        std::string detail;
        std::int64_t pairs = 0;
        for (const auto& H : normals) {
            for (const auto& K : normals) {
                ++pairs;
                std::vector<std::int64_t> grp = commutator_subgroup(G, H, K);
                std::vector<std::int64_t> brs;
                for (std::int64_t h : H)
                    for (std::int64_t k : K)
                        brs.push_back(br_tab[static_cast<std::size_t>(h * m + k)]);
                std::sort(brs.begin(), brs.end());
                brs.erase(std::unique(brs.begin(), brs.end()), brs.end());
                std::vector<std::int64_t> ideal = bracket_ideal(brs);
                if (grp != ideal) {
                    pass = false;
                    detail = "pair " + set_preview(H) + ", " + set_preview(K) + ": group side " +
                             set_preview(grp) + " vs ideal " + set_preview(ideal);
                    break;
                }
            }
            if (!pass) break;
        }
        if (pass) detail = "all " + std::to_string(pairs) + " pairs of normal subgroups";
        add_check("commutator-subgroups-equal-bracket-ideals", pass, detail);
    }

    return rep;
}

}  // namespace plie
