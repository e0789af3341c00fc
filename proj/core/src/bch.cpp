#include "plie/bch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plie {

namespace {

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Left-normed canonical form of a bracket word: words with equal first letters
// vanish, a leading (y, x) flips to -(x, y). Returns the sign (0 if the word
// dies) and rewrites the word in place.
int canonicalize(std::vector<std::uint8_t>& w) {
    if (w.size() < 2) return 1;
    if (w[0] == w[1]) return 0;
    if (w[0] > w[1]) {
        std::swap(w[0], w[1]);
        return -1;
    }
    return 1;
}

}  // namespace

std::string BchTerm::to_string() const {
    std::string s = coeff.to_string();
    s += " * [";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += (word[i] == 0 ? "x" : "y");
    }
    s += "]";
    return s;
}

std::string BchSeries::to_string() const {
    std::string s;
    for (const auto& t : terms) s += t.to_string() + "\n";
    return s;
}

BchSeries bch_terms(int class_bound) {
    if (class_bound < 1) throw std::invalid_argument("bch_terms: class bound must be >= 1");

    // Dynkin's formula: z = sum over k >= 1 and tuples (r_1,s_1),...,(r_k,s_k)
    // with (r_i,s_i) != (0,0) of
    //   (-1)^(k-1) / (k * w * prod r_i! s_i!) * R(x^r_1 y^s_1 ... x^r_k y^s_k)
    // where w is the total weight and R denotes the right-nested bracketing
    // [l_1, [l_2, [... [l_{w-1}, l_w]]]]. Right-nested and left-normed words are
    // related by R(l_1..l_w) = (-1)^(w-1) L(l_w, ..., l_1).
    std::map<std::vector<std::uint8_t>, Rational> acc;

    // Enumerate tuples depth-first: at each level pick (r, s) != (0, 0) with
    // r + s <= remaining weight, appending r copies of x then s copies of y.
    std::vector<std::uint8_t> letters;
    std::vector<std::pair<int, int>> stack;
    auto emit = [&]() {
        int w = static_cast<int>(letters.size());
        int k = static_cast<int>(stack.size());
        std::int64_t den = static_cast<std::int64_t>(k) * w;
        for (auto [r, s] : stack) den *= factorial(r) * factorial(s);
        Rational c((k % 2 == 1) ? 1 : -1, den);
        // Right-nested -> left-normed: reverse and pick up (-1)^(w-1).
        std::vector<std::uint8_t> word(letters.rbegin(), letters.rend());
        if (w % 2 == 0) c = -c;
        int sign = canonicalize(word);
        if (sign == 0) return;
        if (sign < 0) c = -c;
        acc[word] += c;
    };
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!stack.empty()) emit();
        if (remaining == 0) return;
        for (int r = 0; r <= remaining; ++r) {
            for (int s = (r == 0 ? 1 : 0); r + s <= remaining; ++s) {
                stack.emplace_back(r, s);
                letters.insert(letters.end(), r, 0);
                letters.insert(letters.end(), s, 1);
                self(self, remaining - r - s);
                letters.resize(letters.size() - static_cast<std::size_t>(r + s));
                stack.pop_back();
            }
        }
    };
    rec(rec, class_bound);

    BchSeries series;
    series.max_weight = class_bound;
    for (auto& [word, coeff] : acc) {
        if (coeff.is_zero()) continue;
        series.terms.push_back(BchTerm{coeff, word});
    }
    std::sort(series.terms.begin(), series.terms.end(), [](const BchTerm& a, const BchTerm& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return series;
}

Coords bch_eval(const StructureTensor& T, const Coords& x, const Coords& y,
                const BchSeries& series) {
    const Module& M = T.module();
    Coords z = M.zero();
    const Coords* gen[2] = {&x, &y};
    for (const auto& term : series.terms) {
        Coords v = *gen[term.word[0]];
        for (std::size_t i = 1; i < term.word.size(); ++i) v = T.bracket(v, *gen[term.word[i]]);
        if (M.is_zero(v)) continue;
        z = M.add(z, M.scalar(v, term.coeff));
    }
    return z;
}

}  // namespace plie
