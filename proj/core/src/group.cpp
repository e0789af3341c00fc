#include "plie/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace plie {

namespace {

// Seed for the sampled associativity fallback; fixed so repeated runs check the
// same triples.
constexpr std::uint64_t kAssocSeed = 0x243F6A8885A308D3ULL;

// Subgroup-lattice enumeration and isomorphism backtracking stay exhaustive
// only at desk scale; these caps mirror that.
constexpr std::int64_t kSubgroupOrderCap = 243;
constexpr std::int64_t kIsoOrderCap = 81;

std::int64_t log_base_p(std::int64_t v, std::int64_t p) {
    std::int64_t e = 0;
    while (v > 1) {
        if (v % p != 0) throw std::logic_error("log_base_p: not a power of p");
        v /= p;
        ++e;
    }
    return e;
}

}  // namespace

Module GroupTable::source_module() const {
    if (!has_source()) throw std::logic_error("GroupTable: no source structure attached");
    return Module(p, *shape, side);
}

StructureTensor GroupTable::source_tensor() const {
    if (!has_source()) throw std::logic_error("GroupTable: no source structure attached");
    return StructureTensor(p, *shape, side, alpha);
}

bool has_identity(const GroupTable& G) {
    for (std::int64_t a = 0; a < G.order; ++a)
        if (G.mul(0, a) != a || G.mul(a, 0) != a) return false;
    return true;
}

bool is_latin(const GroupTable& G) {
    std::int64_t m = G.order;
    std::vector<char> seen(static_cast<std::size_t>(m));
    for (std::int64_t a = 0; a < m; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t b = 0; b < m; ++b) {
            std::int64_t v = G.mul(a, b);
            if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t b = 0; b < m; ++b) {
            std::int64_t v = G.mul(b, a);
            if (seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    return true;
}

AssocCheck check_associativity(const GroupTable& G, const Budgets& budgets) {
    AssocCheck r;
    std::int64_t m = G.order;
    if (m <= budgets.assoc_full_cap) {
        r.exhaustive = true;
        for (std::int64_t a = 0; a < m; ++a)
            for (std::int64_t b = 0; b < m; ++b) {
                std::int64_t ab = G.mul(a, b);
                for (std::int64_t c = 0; c < m; ++c) {
                    ++r.triples_checked;
                    if (G.mul(ab, c) != G.mul(a, G.mul(b, c))) {
                        r.witness = {a, b, c};
                        return r;
                    }
                }
            }
        r.ok = true;
        return r;
    }
    std::mt19937_64 rng(kAssocSeed);
    auto um = static_cast<std::uint64_t>(m);
    for (std::int64_t i = 0; i < budgets.assoc_samples; ++i) {
        auto a = static_cast<std::int64_t>(rng() % um);
        auto b = static_cast<std::int64_t>(rng() % um);
        auto c = static_cast<std::int64_t>(rng() % um);
        ++r.triples_checked;
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
            r.witness = {a, b, c};
            return r;
        }
    }
    r.ok = true;
    return r;
}

void validate_group(const GroupTable& G, const Budgets& budgets) {
    if (G.order <= 0 || G.table.size() != static_cast<std::size_t>(G.order * G.order))
        throw std::invalid_argument("group table: bad dimensions");
    if (!has_identity(G)) throw std::invalid_argument("group table: index 0 is not an identity");
    if (!is_latin(G)) throw std::invalid_argument("group table: not a Latin square");
    AssocCheck a = check_associativity(G, budgets);
    if (!a.ok)
        throw std::invalid_argument("group table: associativity fails at (" +
                                    std::to_string(a.witness[0]) + "," + std::to_string(a.witness[1]) +
                                    "," + std::to_string(a.witness[2]) + ")");
}

std::int64_t inverse_of(const GroupTable& G, std::int64_t a) {
    for (std::int64_t b = 0; b < G.order; ++b)
        if (G.mul(a, b) == 0) return b;
    throw std::logic_error("inverse_of: no inverse found");
}

std::int64_t power(const GroupTable& G, std::int64_t a, std::int64_t k) {
    std::int64_t r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = G.mul(r, a);
    return r;
}

std::int64_t element_order(const GroupTable& G, std::int64_t a) {
    std::int64_t x = a, k = 1;
    while (x != 0) {
        x = G.mul(x, a);
        ++k;
        if (k > G.order) throw std::logic_error("element_order: diverged (not a group?)");
    }
    return k;
}

std::int64_t exponent_of(const GroupTable& G) {
    std::int64_t e = 1;
    for (std::int64_t a = 0; a < G.order; ++a) e = std::max(e, element_order(G, a));
    return e;
}

bool is_abelian(const GroupTable& G) {
    for (std::int64_t a = 0; a < G.order; ++a)
        for (std::int64_t b = a + 1; b < G.order; ++b)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

std::vector<std::int64_t> center(const GroupTable& G) {
    std::vector<std::int64_t> z;
    for (std::int64_t a = 0; a < G.order; ++a) {
        bool central = true;
        for (std::int64_t x = 0; x < G.order && central; ++x)
            if (G.mul(a, x) != G.mul(x, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::int64_t commutator(const GroupTable& G, std::int64_t x, std::int64_t y) {
    return G.mul(G.mul(inverse_of(G, x), inverse_of(G, y)), G.mul(x, y));
}

std::vector<std::int64_t> subgroup_closure(const GroupTable& G,
                                           const std::vector<std::int64_t>& seed) {
    // Product closure of a set containing the identity is already a subgroup
    // (inverses are positive powers in a finite group).
    std::vector<char> in(static_cast<std::size_t>(G.order), 0);
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
        // Pair x against everything known so far, both ways; later arrivals pick
        // up the remaining pairs when their own turn comes.
        for (std::size_t j = 0; j < members.size(); ++j) {
            push(G.mul(x, members[j]));
            push(G.mul(members[j], x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::int64_t> derived_subgroup(const GroupTable& G) {
    std::vector<std::int64_t> comms;
    for (std::int64_t x = 0; x < G.order; ++x)
        for (std::int64_t y = x + 1; y < G.order; ++y) comms.push_back(commutator(G, x, y));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(G, comms);
}

std::vector<std::int64_t> generating_sequence(const GroupTable& G) {
    std::vector<std::int64_t> gens;
    std::vector<std::int64_t> cl = subgroup_closure(G, {});
    while (static_cast<std::int64_t>(cl.size()) < G.order) {
        std::int64_t g = -1;
        for (std::int64_t x = 0; x < G.order; ++x)
            if (!std::binary_search(cl.begin(), cl.end(), x)) {
                g = x;
                break;
            }
        gens.push_back(g);
        cl = subgroup_closure(G, gens);
    }
    return gens;
}

Partition group_type(const GroupTable& G) {
    std::int64_t m = G.order;
    std::vector<std::int64_t> ord(static_cast<std::size_t>(m));
    std::int64_t expo = 1;
    for (std::int64_t a = 0; a < m; ++a) {
        ord[static_cast<std::size_t>(a)] = element_order(G, a);
        expo = std::max(expo, ord[static_cast<std::size_t>(a)]);
    }
    std::int64_t e = log_base_p(expo, G.p);
    // Omega_i = elements of order dividing p^i; each must be product-closed.
    std::vector<std::int64_t> sizes{1};
    std::int64_t pk = 1;
    for (std::int64_t i = 1; i <= e; ++i) {
        pk *= G.p;
        std::vector<std::int64_t> omega;
        std::vector<char> in(static_cast<std::size_t>(m), 0);
        for (std::int64_t a = 0; a < m; ++a)
            if (ord[static_cast<std::size_t>(a)] <= pk) {
                omega.push_back(a);
                in[static_cast<std::size_t>(a)] = 1;
            }
        for (std::int64_t x : omega)
            for (std::int64_t y : omega)
                if (!in[static_cast<std::size_t>(G.mul(x, y))])
                    throw std::logic_error("group_type: Omega_" + std::to_string(i) +
                                           " is not a subgroup (irregular group)");
        sizes.push_back(static_cast<std::int64_t>(omega.size()));
    }
    std::vector<std::int64_t> omega_indices;
    for (std::int64_t i = 1; i <= e; ++i)
        omega_indices.push_back(log_base_p(sizes[static_cast<std::size_t>(i)] /
                                               sizes[static_cast<std::size_t>(i - 1)],
                                           G.p));
    try {
        return Partition(omega_indices).dual();
    } catch (const std::invalid_argument&) {
        throw std::logic_error("group_type: omega indices do not form a partition (irregular group)");
    }
}

bool is_normal(const GroupTable& G, const std::vector<std::int64_t>& H) {
    std::vector<char> in(static_cast<std::size_t>(G.order), 0);
    for (std::int64_t h : H) in[static_cast<std::size_t>(h)] = 1;
    for (std::int64_t g = 0; g < G.order; ++g) {
        std::int64_t gi = inverse_of(G, g);
        for (std::int64_t h : H)
            if (!in[static_cast<std::size_t>(G.mul(G.mul(gi, h), g))]) return false;
    }
    return true;
}

std::vector<std::vector<std::int64_t>> all_subgroups(const GroupTable& G, const Budgets&) {
    check_budget("subgroup enumeration: order", G.order, kSubgroupOrderCap);
    std::set<std::vector<std::int64_t>> found;
    std::vector<std::vector<std::int64_t>> queue;
    auto add = [&](std::vector<std::int64_t> H) {
        if (found.insert(H).second) queue.push_back(std::move(H));
    };
    add(subgroup_closure(G, {}));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<std::int64_t> H = queue[qi];
        if (static_cast<std::int64_t>(H.size()) == G.order) continue;
        for (std::int64_t g = 0; g < G.order; ++g) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            std::vector<std::int64_t> seed = H;
            seed.push_back(g);
            add(subgroup_closure(G, seed));
        }
    }
    return {found.begin(), found.end()};
}

SubgroupData commutator_and_subgroups(const GroupTable& G, const Budgets& budgets) {
    SubgroupData d;
    d.derived = derived_subgroup(G);
    d.subgroups = all_subgroups(G, budgets);
    for (const auto& H : d.subgroups)
        if (is_normal(G, H)) d.normals.push_back(H);
    return d;
}

std::vector<std::int64_t> commutator_subgroup(const GroupTable& G,
                                              const std::vector<std::int64_t>& H,
                                              const std::vector<std::int64_t>& K) {
    std::vector<std::int64_t> comms;
    for (std::int64_t h : H)
        for (std::int64_t k : K) comms.push_back(commutator(G, h, k));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(G, comms);
}

namespace {

// Backtracking state for groups_isomorphic: generator images are chosen one at
// a time; after each choice the partial map is extended over the closure of the
// generators picked so far and checked to be a homomorphism there.
struct IsoSearch {
    const GroupTable& G1;
    const GroupTable& G2;
    std::vector<std::int64_t> gens;
    // Per level: elements of <g_0..g_i> in G1, and the build steps that extend
    // the previous level (x = parent * g_j with parent already mapped).
    struct Step {
        std::int64_t x, parent, genidx;
    };
    std::vector<std::vector<std::int64_t>> levels;
    std::vector<std::vector<Step>> recipes;
    std::vector<std::int64_t> ord2;
    std::vector<std::int64_t> phi;   // partial map, -1 = unset
    std::vector<char> used;          // image hit-set

    bool extend(std::size_t level, std::vector<std::int64_t>& im) {
        for (const Step& s : recipes[level]) {
            std::int64_t v = G2.mul(phi[static_cast<std::size_t>(s.parent)],
                                    im[static_cast<std::size_t>(s.genidx)]);
            if (phi[static_cast<std::size_t>(s.x)] != -1) {
                if (phi[static_cast<std::size_t>(s.x)] != v) return false;
                continue;
            }
            if (used[static_cast<std::size_t>(v)]) return false;
            phi[static_cast<std::size_t>(s.x)] = v;
            used[static_cast<std::size_t>(v)] = 1;
        }
        // Homomorphism on the whole level; pairs inside the previous level were
        // verified lower in the tree.
        const auto& L = levels[level];
        for (std::int64_t a : L)
            for (std::int64_t b : L) {
                std::int64_t ab = G1.mul(a, b);
                if (phi[static_cast<std::size_t>(ab)] == -1) return false;  // closure mismatch
                if (G2.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]) !=
                    phi[static_cast<std::size_t>(ab)])
                    return false;
            }
        return true;
    }

    void retract(std::size_t level) {
        for (const Step& s : recipes[level]) {
            if (phi[static_cast<std::size_t>(s.x)] != -1) {
                used[static_cast<std::size_t>(phi[static_cast<std::size_t>(s.x)])] = 0;
                phi[static_cast<std::size_t>(s.x)] = -1;
            }
        }
    }

    bool search(std::size_t level, std::vector<std::int64_t>& im) {
        if (level == gens.size())
            return static_cast<std::int64_t>(levels.back().size()) == G1.order;
        std::int64_t want = element_order(G1, gens[level]);
        for (std::int64_t h = 0; h < G2.order; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            if (ord2[static_cast<std::size_t>(h)] != want) continue;
            im.push_back(h);
            // Snapshot which entries this level sets so retract() can undo only
            // those (some recipe targets may coincide with earlier levels).
            if (extend(level, im) && search(level + 1, im)) return true;
            retract(level);
            im.pop_back();
        }
        return false;
    }
};

}  // namespace

bool groups_isomorphic(const GroupTable& G1, const GroupTable& G2, const Budgets&) {
    if (G1.order != G2.order || G1.p != G2.p) return false;
    check_budget("isomorphism backtracking: order", G1.order, kIsoOrderCap);

    std::int64_t m = G1.order;
    std::vector<std::int64_t> ord1(static_cast<std::size_t>(m)), ord2(static_cast<std::size_t>(m));
    for (std::int64_t a = 0; a < m; ++a) {
        ord1[static_cast<std::size_t>(a)] = element_order(G1, a);
        ord2[static_cast<std::size_t>(a)] = element_order(G2, a);
    }
    {
        auto s1 = ord1, s2 = ord2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    if (is_abelian(G1) != is_abelian(G2)) return false;
    if (center(G1).size() != center(G2).size()) return false;
    if (derived_subgroup(G1).size() != derived_subgroup(G2).size()) return false;

    IsoSearch s{G1, G2, generating_sequence(G1), {}, {}, std::move(ord2),
                std::vector<std::int64_t>(static_cast<std::size_t>(m), -1),
                std::vector<char>(static_cast<std::size_t>(m), 0)};
    if (s.gens.empty()) return true;  // trivial group

    // Precompute level closures and build recipes by breadth-first extension.
    std::vector<std::int64_t> sofar;
    std::vector<char> known(static_cast<std::size_t>(m), 0);
    known[0] = 1;
    std::vector<std::int64_t> knownlist{0};
    for (std::size_t i = 0; i < s.gens.size(); ++i) {
        sofar.push_back(s.gens[i]);
        s.levels.push_back(subgroup_closure(G1, sofar));
        std::vector<IsoSearch::Step> steps;
        // Repeatedly sweep: any unknown element of the level reachable as
        // known * g_j joins with a recipe step.
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t ki = 0; ki < knownlist.size(); ++ki) {
                std::int64_t parent = knownlist[ki];
                for (std::size_t j = 0; j <= i; ++j) {
                    std::int64_t x = G1.mul(parent, s.gens[j]);
                    if (!known[static_cast<std::size_t>(x)]) {
                        known[static_cast<std::size_t>(x)] = 1;
                        knownlist.push_back(x);
                        steps.push_back({x, parent, static_cast<std::int64_t>(j)});
                        grew = true;
                    }
                }
            }
        }
        s.recipes.push_back(std::move(steps));
        if (knownlist.size() != s.levels.back().size())
            throw std::logic_error("groups_isomorphic: generator closure mismatch");
    }

    s.phi[0] = 0;
    s.used[0] = 1;
    std::vector<std::int64_t> im;
    return s.search(0, im);
}

}  // namespace plie
