// Baker-Campbell-Hausdorff series z(x, y) = log(exp x exp y), truncated at a
// given weight, expressed in left-normed bracket words. Evaluating z inside a
// nilpotent bracket structure of class c with the weight-c truncation turns the
// additive module into a group (multiplication table built elsewhere).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plie/rational.hpp"
#include "plie/tensor.hpp"

namespace plie {

// One summand coeff * [w0, w1, ..., w_{k-1}] where the word is read left-normed:
// [[...[[w0, w1], w2]...], w_{k-1}], letters 0 = x and 1 = y. A weight-1 word is
// the bare generator. Words of weight >= 2 always start with (0, 1): equal first
// letters vanish and a leading (1, 0) is flipped into -(0, 1) during collection.
struct BchTerm {
    Rational coeff;
    std::vector<std::uint8_t> word;

    int weight() const { return static_cast<int>(word.size()); }
    std::string to_string() const;
};

struct BchSeries {
    int max_weight = 0;
    // Sorted by (weight, word), no zero coefficients, no duplicate words.
    std::vector<BchTerm> terms;

    std::string to_string() const;
};

// All terms of z(x, y) of weight <= class_bound, via Dynkin's explicit formula.
// Weight 1 gives x + y; weight 2 gives (1/2)[x,y]; weight 3 gives
// -(1/12)[[x,y],x] + (1/12)[[x,y],y].
BchSeries bch_terms(int class_bound);

// z(x, y) inside the bracket structure of T, truncated at weight_cap. Exact
// when weight_cap >= the nilpotency class of T, since deeper brackets vanish.
// Coefficient denominators must be prime to p, which holds whenever
// weight_cap < p (their prime factors are at most the term weight).
Coords bch_eval(const StructureTensor& T, const Coords& x, const Coords& y,
                const BchSeries& series);

}  // namespace plie
