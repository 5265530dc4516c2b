#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlie/generator.hpp"
#include "qlie/linalg.hpp"
#include "qlie/rational.hpp"

namespace qlie {

/// A word in the tensor algebra: the sequence of generator indices.
using Word = std::vector<GenIndex>;

inline int word_degree(const Alphabet& alph, const Word& w) {
    int d = 0;
    for (GenIndex g : w) d += alph[g].degree;
    return d;
}

/// Element of the tensor algebra TV: finitely many words with nonzero exact
/// rational coefficients, kept in lexicographic word order.
class TensorElement {
  public:
    TensorElement() = default;

    static TensorElement generator(GenIndex g) {
        TensorElement t;
        t.terms_[Word{g}] = 1;
        return t;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rat>& terms() const { return terms_; }

    Rat coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    TensorElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rat& s, TensorElement a) { return a *= s; }

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    /// Concatenation product in TV (no sign; signs enter via the commutator).
    friend TensorElement concat(const TensorElement& a, const TensorElement& b) {
        TensorElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }

    /// Degree, defined when all words agree on it.
    std::optional<int> degree(const Alphabet& alph) const {
        std::optional<int> d;
        for (const auto& [w, c] : terms_) {
            int wd = word_degree(alph, w);
            if (!d)
                d = wd;
            else if (*d != wd)
                return std::nullopt;
        }
        return d;
    }

    /// Word length, defined when all words have the same length.
    std::optional<int> wordlength() const {
        std::optional<int> n;
        for (const auto& [w, c] : terms_) {
            if (!n)
                n = static_cast<int>(w.size());
            else if (*n != static_cast<int>(w.size()))
                return std::nullopt;
        }
        return n;
    }

    /// Keep only words made entirely of the listed generators.
    TensorElement restrict_to(const std::vector<bool>& keep) const {
        TensorElement r;
        for (const auto& [w, c] : terms_) {
            bool ok = true;
            for (GenIndex g : w)
                if (!keep[g]) {
                    ok = false;
                    break;
                }
            if (ok) r.add_term(w, c);
        }
        return r;
    }

  private:
    std::map<Word, Rat> terms_;
};

/// Graded commutator a (x) b - (-1)^{deg a deg b} b (x) a of homogeneous
/// tensor elements.
inline TensorElement tensor_commutator(const Alphabet& alph, const TensorElement& a,
                                       const TensorElement& b) {
    if (a.zero() || b.zero()) return {};
    std::optional<int> da = a.degree(alph), db = b.degree(alph);
    if (!da || !db)
        throw PreconditionError("tensor_commutator: arguments must be degree-homogeneous");
    TensorElement r = concat(a, b);
    TensorElement ba = concat(b, a);
    if ((*da % 2) && (*db % 2))
        r += ba;
    else
        r -= ba;
    return r;
}

namespace detail {
inline void enum_words(const Alphabet& alph, int remaining, Word& cur, std::vector<Word>& out) {
    if (remaining == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (GenIndex g = 0; g < alph.size(); ++g) {
        if (alph[g].degree > remaining) continue;
        cur.push_back(g);
        enum_words(alph, remaining - alph[g].degree, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All tensor words of one total degree, in lexicographic order.
inline std::vector<Word> words_of_degree(const Alphabet& alph, int degree) {
    std::vector<Word> out;
    Word cur;
    detail::enum_words(alph, degree, cur, out);
    return out;
}

/// Lexicographically ordered registry of words acting as the explicit basis
/// label list behind dense coordinate vectors.
class WordIndex {
  public:
    WordIndex() = default;
    explicit WordIndex(std::vector<Word> words) : words_(std::move(words)) {
        for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
    }

    static WordIndex from_elements(const std::vector<const TensorElement*>& elems) {
        std::map<Word, std::size_t> seen;
        for (const TensorElement* e : elems)
            for (const auto& [w, c] : e->terms()) seen.emplace(w, 0);
        std::vector<Word> words;
        words.reserve(seen.size());
        for (auto& [w, _] : seen) words.push_back(w);
        return WordIndex(std::move(words));
    }

    std::size_t size() const { return words_.size(); }
    const Word& word(std::size_t i) const { return words_[i]; }

    std::optional<std::size_t> find(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Dense coordinates; throws if the element uses a word outside the index.
    Vec to_vec(const TensorElement& e) const {
        Vec v(words_.size(), Rat(0));
        for (const auto& [w, c] : e.terms()) {
            auto idx = find(w);
            if (!idx)
                throw DimensionMismatchError("WordIndex: element contains an unregistered word");
            v[*idx] = c;
        }
        return v;
    }

  private:
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
};

/// Sparse incremental span of tensor elements, pivoting on the
/// lexicographically least word of each row. Rows are kept fully reduced, so
/// dimension, membership and residues are exact RREF facts.
class TensorSpan {
  public:
    std::size_t dim() const { return rows_.size(); }

    TensorElement residue(TensorElement t) const {
        // Scan words in increasing order; reducing at a word only disturbs
        // strictly larger words, so the scan never needs to restart.
        Word resume;
        bool have_resume = false;
        for (;;) {
            const auto& terms = t.terms();
            auto it = have_resume ? terms.lower_bound(resume) : terms.begin();
            bool reduced = false;
            for (; it != terms.end(); ++it) {
                auto rit = rows_.find(it->first);
                if (rit == rows_.end()) continue;
                Rat c = it->second;
                resume = it->first;
                have_resume = true;
                TensorElement sub = rit->second;
                sub *= c;
                t -= sub;
                reduced = true;
                break;
            }
            if (!reduced) break;
        }
        return t;
    }

    bool contains(const TensorElement& t) const { return residue(t).zero(); }

    /// Returns true iff t enlarged the span.
    bool add(TensorElement t) {
        t = residue(std::move(t));
        if (t.zero()) return false;
        Word pw = t.terms().begin()->first;
        Rat inv = Rat(1) / t.terms().begin()->second;
        t *= inv;
        for (auto& [w, row] : rows_) {
            Rat c = row.coefficient(pw);
            if (c == 0) continue;
            TensorElement sub = t;
            sub *= c;
            row -= sub;
        }
        rows_.emplace(std::move(pw), std::move(t));
        return true;
    }

    /// RREF rows in pivot order.
    std::vector<const TensorElement*> rows() const {
        std::vector<const TensorElement*> r;
        r.reserve(rows_.size());
        for (const auto& [w, row] : rows_) r.push_back(&row);
        return r;
    }

  private:
    std::map<Word, TensorElement> rows_;  // pivot word -> normalized row
};

}  // namespace qlie
