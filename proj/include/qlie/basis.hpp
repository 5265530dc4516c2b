#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/lie.hpp"

namespace qlie {

/// A kept basis monomial together with its cached expansion and grading.
struct BasisElement {
    LieElement lie;
    TensorElement tensor;
    Multidegree mdeg;
    int degree = 0;
    int wordlength = 0;
};

/// Incremental basis builder for a free graded Lie algebra, organized by
/// multidegree cells. Within each cell the word-length-n layer is spanned by
/// brackets of generators against the layer below; candidates are kept
/// exactly when their expansions grow the cell's rank. Multidegrees do not
/// interact linearly (their expansions use disjoint words), so cell-local
/// rank decisions agree with global ones.
///
/// Instances memoize cells; use one instance per thread of work.
class FreeLieBasis {
  public:
    explicit FreeLieBasis(Alphabet alph) : alph_(std::move(alph)) {}

    const Alphabet& alphabet() const { return alph_; }

    /// Basis of the multidegree component (memoized).
    const std::vector<BasisElement>& cell(const Multidegree& m) {
        auto it = cells_.find(m);
        if (it != cells_.end()) return it->second;
        std::vector<BasisElement> out;
        int n = multidegree_wordlength(m);
        if (n == 1) {
            for (GenIndex g = 0; g < alph_.size(); ++g)
                if (m[g] == 1) {
                    BasisElement be;
                    be.lie = LieElement::generator(alph_, g);
                    be.tensor = TensorElement::generator(g);
                    be.mdeg = m;
                    be.degree = alph_[g].degree;
                    be.wordlength = 1;
                    out.push_back(std::move(be));
                }
        } else if (n > 1) {
            TensorSpan span;
            for (GenIndex g = 0; g < alph_.size(); ++g) {
                if (m[g] == 0) continue;
                Multidegree sub = m;
                --sub[g];
                TensorElement tg = TensorElement::generator(g);
                LieElement lg = LieElement::generator(alph_, g);
                for (const BasisElement& prev : cell(sub)) {
                    TensorElement cand = tensor_commutator(alph_, tg, prev.tensor);
                    if (cand.zero()) continue;
                    if (!span.add(cand)) continue;
                    BasisElement be;
                    be.lie = bracket(lg, prev.lie);
                    be.tensor = std::move(cand);
                    be.mdeg = m;
                    be.degree = multidegree_degree(alph_, m);
                    be.wordlength = n;
                    out.push_back(std::move(be));
                }
            }
        }
        return cells_.emplace(m, std::move(out)).first->second;
    }

    /// All multidegrees of word length n, in lexicographic order.
    std::vector<Multidegree> multidegrees_of_wordlength(int n) const {
        std::vector<Multidegree> out;
        Multidegree cur(alph_.size(), 0);
        enum_wl(0, n, cur, out);
        return out;
    }

    /// All multidegrees of total degree d, in lexicographic order.
    std::vector<Multidegree> multidegrees_of_degree(int d) const {
        std::vector<Multidegree> out;
        Multidegree cur(alph_.size(), 0);
        enum_deg(0, d, cur, out);
        return out;
    }

    /// Word-length layer: concatenation of the cells in lexicographic
    /// multidegree order.
    std::vector<const BasisElement*> layer_wordlength(int n) {
        std::vector<const BasisElement*> out;
        for (const Multidegree& m : multidegrees_of_wordlength(n))
            for (const BasisElement& be : cell(m)) out.push_back(&be);
        return out;
    }

    /// Bigraded layer: word length n with exactly `count` occurrences of
    /// generator g.
    std::vector<const BasisElement*> layer_bigraded(int n, GenIndex g, int count) {
        std::vector<const BasisElement*> out;
        for (const Multidegree& m : multidegrees_of_wordlength(n)) {
            if (m[g] != count) continue;
            for (const BasisElement& be : cell(m)) out.push_back(&be);
        }
        return out;
    }

    /// Degree layer (all word lengths).
    std::vector<const BasisElement*> layer_degree(int d) {
        std::vector<const BasisElement*> out;
        for (const Multidegree& m : multidegrees_of_degree(d))
            for (const BasisElement& be : cell(m)) out.push_back(&be);
        return out;
    }

    std::size_t dim_wordlength(int n) {
        std::size_t s = 0;
        for (const Multidegree& m : multidegrees_of_wordlength(n)) s += cell(m).size();
        return s;
    }

    std::size_t dim_degree(int d) {
        std::size_t s = 0;
        for (const Multidegree& m : multidegrees_of_degree(d)) s += cell(m).size();
        return s;
    }

  private:
    void enum_wl(GenIndex g, int remaining, Multidegree& cur,
                 std::vector<Multidegree>& out) const {
        if (g + 1 == alph_.size()) {
            cur[g] = remaining;
            out.push_back(cur);
            cur[g] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[g] = k;
            enum_wl(g + 1, remaining - k, cur, out);
        }
        cur[g] = 0;
    }

    void enum_deg(GenIndex g, int remaining, Multidegree& cur,
                  std::vector<Multidegree>& out) const {
        if (g == alph_.size()) {
            if (remaining == 0 && multidegree_wordlength(cur) > 0) out.push_back(cur);
            return;
        }
        int dg = alph_[g].degree;
        for (int k = 0; k * dg <= remaining; ++k) {
            cur[g] = k;
            enum_deg(g + 1, remaining - k * dg, cur, out);
        }
        cur[g] = 0;
    }

    Alphabet alph_;
    std::map<Multidegree, std::vector<BasisElement>> cells_;
};

/// Basis of the word-length-n component; expansions are linearly independent
/// and span the layer, so the count is the layer's dimension.
inline std::vector<LieElement> basis(const Alphabet& alph, int wordlength) {
    if (wordlength < 1) throw PreconditionError("basis: wordlength must be >= 1");
    FreeLieBasis b(alph);
    std::vector<LieElement> out;
    for (const BasisElement* be : b.layer_wordlength(wordlength)) out.push_back(be->lie);
    return out;
}

/// Sub-family of basis(n) with exactly filter_count occurrences of
/// filter_gen; its count is the dimension of the bigraded piece.
inline std::vector<LieElement> basis_bigraded(const Alphabet& alph, int wordlength,
                                              const std::string& filter_gen, int filter_count) {
    if (wordlength < 1) throw PreconditionError("basis_bigraded: wordlength must be >= 1");
    GenIndex g = alph.index_of(filter_gen);
    FreeLieBasis b(alph);
    std::vector<LieElement> out;
    for (const BasisElement* be : b.layer_bigraded(wordlength, g, filter_count))
        out.push_back(be->lie);
    return out;
}

/// Closed-form dimension of the word-length-n piece of the two-generator
/// algebra filtered to exactly two occurrences of the second generator (both
/// generators of odd degree).
inline int dim_formula_wlb2(int n) {
    if (n < 1) throw PreconditionError("dim_formula_wlb2: n must be >= 1");
    switch (n % 4) {
        case 0: return n / 2 - 1;
        case 2: return n / 2;
        default: return (n - 1) / 2;
    }
}

/// The element [ad^i(a)(b), ad^j(a)(b)].
inline LieElement pairbracket_element(const Alphabet& alph, int i, int j, GenIndex a, GenIndex b) {
    if (i < 0 || j < 0) throw PreconditionError("pairbracket_element: indices must be >= 0");
    LieElement ea = LieElement::generator(alph, a);
    LieElement eb = LieElement::generator(alph, b);
    return bracket(ad_power(ea, i, eb), ad_power(ea, j, eb));
}

/// Adjoint-power index pairs (i, j), i <= j, whose pair brackets form the
/// word-length-n basis of the doubly-filtered layer; the list's size is
/// dim_formula_wlb2(n).
inline std::vector<std::pair<int, int>> wlb2_pair_indices(int n) {
    std::vector<std::pair<int, int>> out;
    if (n < 2) return out;
    int top;  // largest first index of the shorthand pairs [k, n-k]
    switch (n % 4) {
        case 0: top = n / 2 - 1; break;
        case 2: top = n / 2; break;
        default: top = (n - 1) / 2; break;
    }
    for (int k = 1; k <= top; ++k) out.emplace_back(k - 1, n - k - 1);
    return out;
}

}  // namespace qlie
