#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/generator.hpp"
#include "qlie/tensor.hpp"

namespace qlie {

/// A bracket monomial: a binary tree whose leaves are generators and whose
/// inner nodes are brackets of their two subtrees. Immutable; copies share
/// structure.
class LieWord {
  public:
    static LieWord leaf(const Alphabet& alph, GenIndex g) {
        auto n = std::make_shared<Node>();
        n->degree = alph[g].degree;
        n->wordlength = 1;
        n->gen = g;
        return LieWord(std::move(n));
    }

    static LieWord bracket(const LieWord& left, const LieWord& right) {
        auto n = std::make_shared<Node>();
        n->degree = left.degree() + right.degree();
        n->wordlength = left.wordlength() + right.wordlength();
        n->left = left.node_;
        n->right = right.node_;
        return LieWord(std::move(n));
    }

    int degree() const { return node_->degree; }
    int wordlength() const { return node_->wordlength; }
    bool is_leaf() const { return node_->left == nullptr; }
    GenIndex leaf_generator() const { return node_->gen; }
    LieWord left() const { return LieWord(node_->left); }
    LieWord right() const { return LieWord(node_->right); }

    Multidegree multidegree(std::size_t alphabet_size) const {
        Multidegree m(alphabet_size, 0);
        collect(node_.get(), m);
        return m;
    }

    /// Occurrences of one generator among the leaves.
    int wordlength_in(GenIndex g) const { return count(node_.get(), g); }

    /// Left-normed style pretty print: "[a,[a,b]]".
    std::string pretty(const Alphabet& alph) const { return print(node_.get(), alph); }

  private:
    struct Node {
        int degree = 0;
        int wordlength = 0;
        std::shared_ptr<const Node> left, right;
        GenIndex gen = 0;
    };

    explicit LieWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static void collect(const Node* n, Multidegree& m) {
        if (!n->left) {
            ++m[n->gen];
            return;
        }
        collect(n->left.get(), m);
        collect(n->right.get(), m);
    }

    static int count(const Node* n, GenIndex g) {
        if (!n->left) return n->gen == g ? 1 : 0;
        return count(n->left.get(), g) + count(n->right.get(), g);
    }

    static std::string print(const Node* n, const Alphabet& alph) {
        if (!n->left) return alph[n->gen].name;
        return "[" + print(n->left.get(), alph) + "," + print(n->right.get(), alph) + "]";
    }

    std::shared_ptr<const Node> node_;
};

/// Formal rational combination of bracket monomials. The zero element is the
/// empty combination; the canonical form of an element is its tensor
/// expansion, where all equality and rank questions are decided.
class LieElement {
  public:
    LieElement() = default;

    static LieElement generator(const Alphabet& alph, GenIndex g) {
        return single(Rat(1), LieWord::leaf(alph, g));
    }
    static LieElement generator(const Alphabet& alph, const std::string& name) {
        return generator(alph, alph.index_of(name));
    }
    static LieElement single(Rat coeff, LieWord word) {
        LieElement e;
        if (coeff != 0) e.terms_.emplace_back(std::move(coeff), std::move(word));
        return e;
    }

    bool zero_form() const { return terms_.empty(); }
    const std::vector<std::pair<Rat, LieWord>>& terms() const { return terms_; }

    LieElement& operator+=(const LieElement& o) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        return *this;
    }
    LieElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [c, w] : terms_) c *= s;
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator*(const Rat& s, LieElement a) { return a *= s; }

    /// Degree, when every monomial agrees on it.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [c, w] : terms_) {
            if (!d)
                d = w.degree();
            else if (*d != w.degree())
                return std::nullopt;
        }
        return d;
    }

    /// Word length is only defined for sums of monomials of one word length.
    std::optional<int> wordlength() const {
        std::optional<int> n;
        for (const auto& [c, w] : terms_) {
            if (!n)
                n = w.wordlength();
            else if (*n != w.wordlength())
                return std::nullopt;
        }
        return n;
    }

    std::optional<Multidegree> multidegree(std::size_t alphabet_size) const {
        std::optional<Multidegree> m;
        for (const auto& [c, w] : terms_) {
            Multidegree wm = w.multidegree(alphabet_size);
            if (!m)
                m = std::move(wm);
            else if (*m != wm)
                return std::nullopt;
        }
        return m;
    }

    std::string pretty(const Alphabet& alph) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [c, w] : terms_) {
            std::string cs = to_string(c);
            if (first) {
                if (cs == "1")
                    s = w.pretty(alph);
                else if (cs == "-1")
                    s = "-" + w.pretty(alph);
                else
                    s = cs + "*" + w.pretty(alph);
                first = false;
                continue;
            }
            if (cs == "1")
                s += " + " + w.pretty(alph);
            else if (cs == "-1")
                s += " - " + w.pretty(alph);
            else if (cs.front() == '-')
                s += " - " + cs.substr(1) + "*" + w.pretty(alph);
            else
                s += " + " + cs + "*" + w.pretty(alph);
        }
        return s;
    }

  private:
    std::vector<std::pair<Rat, LieWord>> terms_;
};

/// Bilinear bracket of formal combinations; no simplification happens at
/// this level.
inline LieElement bracket(const LieElement& a, const LieElement& b) {
    LieElement r;
    for (const auto& [ca, wa] : a.terms())
        for (const auto& [cb, wb] : b.terms())
            r += LieElement::single(ca * cb, LieWord::bracket(wa, wb));
    return r;
}

/// j-fold adjoint [x,[x,...,[x,y]...]]; ad^0(x)(y) = y.
inline LieElement ad_power(const LieElement& x, int j, const LieElement& y) {
    LieElement r = y;
    for (int i = 0; i < j; ++i) r = bracket(x, r);
    return r;
}

namespace detail {
inline TensorElement expand_word(const Alphabet& alph, const LieWord& w) {
    if (w.is_leaf()) return TensorElement::generator(w.leaf_generator());
    TensorElement l = expand_word(alph, w.left());
    TensorElement r = expand_word(alph, w.right());
    // [u,v] = u(x)v - (-1)^{deg u deg v} v(x)u with both arguments
    // homogeneous by construction
    TensorElement out = concat(l, r);
    TensorElement vu = concat(r, l);
    if ((w.left().degree() % 2) && (w.right().degree() % 2))
        out += vu;
    else
        out -= vu;
    return out;
}
}  // namespace detail

/// Canonical form: the image of the element under the embedding of the free
/// Lie algebra into the tensor algebra, every bracket replaced by the graded
/// commutator.
inline TensorElement expand(const Alphabet& alph, const LieElement& e) {
    TensorElement t;
    for (const auto& [c, w] : e.terms()) {
        TensorElement tw = detail::expand_word(alph, w);
        tw *= c;
        t += tw;
    }
    return t;
}

}  // namespace qlie
