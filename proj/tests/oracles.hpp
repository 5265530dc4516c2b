#pragma once

// Test-only oracles, independent of the incremental basis construction they
// check: exhaustive enumeration of bracket monomials and plain rank counts.

#include <random>
#include <vector>

#include "qlie/lie.hpp"
#include "qlie/tensor.hpp"

namespace qlie::testing {

/// Every bracket monomial of one word length: all binary tree shapes, all
/// leaf assignments. Exponential; keep the word length small.
inline std::vector<LieWord> all_bracket_monomials(const Alphabet& alph, int wl) {
    std::vector<LieWord> out;
    if (wl == 1) {
        for (GenIndex g = 0; g < alph.size(); ++g) out.push_back(LieWord::leaf(alph, g));
        return out;
    }
    for (int k = 1; k < wl; ++k) {
        auto lefts = all_bracket_monomials(alph, k);
        auto rights = all_bracket_monomials(alph, wl - k);
        for (const LieWord& l : lefts)
            for (const LieWord& r : rights) out.push_back(LieWord::bracket(l, r));
    }
    return out;
}

/// Dimension of the word-length layer as the rank of all monomial
/// expansions.
inline std::size_t layer_dim_oracle(const Alphabet& alph, int wl) {
    TensorSpan span;
    for (const LieWord& w : all_bracket_monomials(alph, wl))
        span.add(expand(alph, LieElement::single(Rat(1), w)));
    return span.dim();
}

/// Dimension of the (word length, occurrences of one generator) layer.
inline std::size_t bigraded_dim_oracle(const Alphabet& alph, int wl, GenIndex g, int count) {
    TensorSpan span;
    for (const LieWord& w : all_bracket_monomials(alph, wl)) {
        if (w.wordlength_in(g) != count) continue;
        span.add(expand(alph, LieElement::single(Rat(1), w)));
    }
    return span.dim();
}

/// Uniformly random bracket monomial of a given word length.
inline LieWord random_monomial(const Alphabet& alph, int wl, std::mt19937_64& rng) {
    if (wl == 1) return LieWord::leaf(alph, static_cast<GenIndex>(rng() % alph.size()));
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned long>(wl - 1));
    return LieWord::bracket(random_monomial(alph, k, rng), random_monomial(alph, wl - k, rng));
}

}  // namespace qlie::testing
