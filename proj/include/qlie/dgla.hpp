#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/basis.hpp"
#include "qlie/elimination.hpp"

namespace qlie {

/// Differential graded Lie algebra on a free underlying algebra: a degree -1
/// assignment on generators extended as a derivation. Construction validates
/// the degree contract of every assignment and checks delta^2 = 0 on all
/// generators; per-degree bases up to the cap are built eagerly so all
/// operations on a constructed value are const and safe to run concurrently.
class Dgla {
  public:
    Dgla(Alphabet alph, const std::map<std::string, LieElement>& diff, int max_degree)
        : alph_(std::move(alph)), diff_(alph_.size()), cap_(max_degree) {
        if (cap_ < 1) throw PreconditionError("Dgla: cap must be positive");
        for (const Generator& g : alph_.generators())
            if (g.degree > cap_)
                throw CapExceededError("Dgla: generator " + g.name + " of degree " +
                                       std::to_string(g.degree) + " exceeds cap " +
                                       std::to_string(cap_));
        for (const auto& [name, value] : diff) {
            GenIndex g = alph_.index_of(name);
            if (value.zero_form()) continue;
            auto vdeg = value.degree();
            if (!vdeg || *vdeg != alph_[g].degree - 1)
                throw MalformedDifferentialError(
                    "Dgla: differential of " + name + " must be homogeneous of degree " +
                    std::to_string(alph_[g].degree - 1));
            diff_[g] = value;
        }
        for (GenIndex g = 0; g < alph_.size(); ++g) {
            LieElement dd = apply_diff(diff_[g]);
            if (!expand(alph_, dd).zero())
                throw Error("Dgla: delta^2 != 0 on generator " + alph_[g].name);
        }
        FreeLieBasis builder(alph_);
        layers_.resize(static_cast<std::size_t>(cap_) + 1);
        for (int d = 1; d <= cap_; ++d)
            for (const BasisElement* be : builder.layer_degree(d))
                layers_[static_cast<std::size_t>(d)].push_back(*be);
    }

    const Alphabet& alphabet() const { return alph_; }
    int cap() const { return cap_; }

    const LieElement& diff_of(GenIndex g) const { return diff_[g]; }

    /// Derivation extension: delta[u,v] = [delta u, v] + (-1)^{deg u}[u, delta v].
    LieElement apply_diff(const LieElement& e) const {
        LieElement out;
        for (const auto& [c, w] : e.terms()) {
            LieElement dw = apply_diff_word(w);
            dw *= c;
            out += dw;
        }
        return out;
    }

    /// Basis of the degree-d component of the whole free Lie algebra.
    const std::vector<BasisElement>& layer(int d) const {
        if (d < 1 || d > cap_) throw CapExceededError("Dgla: degree outside cap");
        return layers_[static_cast<std::size_t>(d)];
    }

    std::size_t dim_at(int d) const {
        if (d < 1 || d > cap_) return 0;
        return layers_[static_cast<std::size_t>(d)].size();
    }

    std::vector<GenIndex> generators_of_degree(int d) const {
        std::vector<GenIndex> out;
        for (GenIndex g = 0; g < alph_.size(); ++g)
            if (alph_[g].degree == d) out.push_back(g);
        return out;
    }

  private:
    LieElement apply_diff_word(const LieWord& w) const {
        if (w.is_leaf()) return diff_[w.leaf_generator()];
        LieElement du = apply_diff_word(w.left());
        LieElement dv = apply_diff_word(w.right());
        LieElement out;
        if (!du.zero_form()) out += bracket(du, LieElement::single(1, w.right()));
        if (!dv.zero_form()) {
            LieElement t = bracket(LieElement::single(1, w.left()), dv);
            if (w.left().degree() % 2 != 0) t *= Rat(-1);
            out += t;
        }
        return out;
    }

    Alphabet alph_;
    std::vector<LieElement> diff_;
    int cap_;
    std::vector<std::vector<BasisElement>> layers_;
};

/// Differential induced on the tensor algebra, used to cross-check the
/// derivation extension: expanding then differentiating must agree with
/// differentiating then expanding.
inline TensorElement tensor_diff(const Dgla& d, const TensorElement& t) {
    const Alphabet& alph = d.alphabet();
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
        int prefix_deg = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const LieElement& dg = d.diff_of(w[i]);
            if (!dg.zero_form()) {
                TensorElement mid = expand(alph, dg);
                TensorElement pre;
                pre.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), c);
                TensorElement post;
                post.add_term(Word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end()), 1);
                TensorElement term = concat(concat(pre, mid), post);
                if (prefix_deg % 2 != 0) term *= Rat(-1);
                out += term;
            }
            prefix_deg += alph[w[i]].degree;
        }
    }
    return out;
}

/// Re-verifies delta^2 = 0 on every generator and spot-checks the derivation
/// rule through the tensor route on the stored basis monomials of small
/// degree.
inline bool check_differential(const Dgla& d) {
    const Alphabet& alph = d.alphabet();
    for (GenIndex g = 0; g < alph.size(); ++g)
        if (!expand(alph, d.apply_diff(d.diff_of(g))).zero()) return false;
    int sampled = 0;
    for (int deg = 1; deg <= d.cap() && sampled < 64; ++deg)
        for (const BasisElement& be : d.layer(deg)) {
            if (sampled >= 64) break;
            if (be.wordlength < 2) continue;
            TensorElement lhs = expand(alph, d.apply_diff(be.lie));
            TensorElement rhs = tensor_diff(d, be.tensor);
            if (!(lhs == rhs)) return false;
            ++sampled;
        }
    return true;
}

/// Word-length-1 component of each generator's differential, as coefficient
/// rows over the generators one degree below. Identically empty for a
/// minimal algebra.
inline std::map<std::string, std::map<std::string, Rat>> linear_part(const Dgla& d) {
    const Alphabet& alph = d.alphabet();
    std::map<std::string, std::map<std::string, Rat>> out;
    for (GenIndex g = 0; g < alph.size(); ++g) {
        const LieElement& dg = d.diff_of(g);
        if (dg.zero_form()) continue;
        TensorElement t = expand(alph, dg);
        std::map<std::string, Rat> row;
        for (const auto& [w, c] : t.terms())
            if (w.size() == 1) row[alph[w[0]].name] = c;
        if (!row.empty()) out[alph[g].name] = std::move(row);
    }
    return out;
}

inline bool is_minimal(const Dgla& d) { return linear_part(d).empty(); }

struct HomologyResult {
    std::size_t dim = 0;
    std::vector<LieElement> representatives;
};

inline Multidegree multidegree_of_word(const Alphabet& alph, const Word& w) {
    Multidegree m(alph.size(), 0);
    for (GenIndex g : w) ++m[g];
    return m;
}

namespace detail {
inline void enum_words_of_mdeg(const Alphabet& alph, Multidegree& left, Word& cur,
                               std::vector<Word>& out) {
    bool done = true;
    for (GenIndex g = 0; g < alph.size(); ++g) {
        if (left[g] == 0) continue;
        done = false;
        --left[g];
        cur.push_back(g);
        enum_words_of_mdeg(alph, left, cur, out);
        cur.pop_back();
        ++left[g];
    }
    if (done && !cur.empty()) out.push_back(cur);
}
}  // namespace detail

inline std::vector<Word> words_of_multidegree(const Alphabet& alph, const Multidegree& m) {
    std::vector<Word> out;
    Word cur;
    Multidegree left = m;
    detail::enum_words_of_mdeg(alph, left, cur, out);
    return out;
}

/// Expresses tensor elements of one degree layer in the layer's Lie basis.
/// The layer splits by multidegree, so each solve happens inside one small
/// cell rather than against the whole layer.
class LayerCoordinates {
  public:
    LayerCoordinates(const Dgla& d, int degree) : alph_(d.alphabet()) {
        const auto& basis = d.layer(degree);
        total_ = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i) cells_[basis[i].mdeg].indices.push_back(i);
        for (auto& [m, cell] : cells_) {
            cell.index = WordIndex(words_of_multidegree(alph_, m));
            std::vector<Vec> rows;
            for (std::size_t i : cell.indices) rows.push_back(cell.index.to_vec(basis[i].tensor));
            cell.solver = std::make_unique<CoordinateSolver>(rows, cell.index.size());
        }
    }

    /// Coordinates against the full layer basis, if the element lies in it.
    std::optional<Vec> coords(const TensorElement& t) const {
        Vec out(total_, Rat(0));
        std::map<Multidegree, TensorElement> parts;
        for (const auto& [w, c] : t.terms())
            parts[multidegree_of_word(alph_, w)].add_term(w, c);
        for (const auto& [m, part] : parts) {
            auto it = cells_.find(m);
            if (it == cells_.end()) return std::nullopt;
            auto local = it->second.solver->solve(it->second.index.to_vec(part));
            if (!local) return std::nullopt;
            for (std::size_t k = 0; k < it->second.indices.size(); ++k)
                out[it->second.indices[k]] = (*local)[k];
        }
        return out;
    }

  private:
    struct Cell {
        std::vector<std::size_t> indices;
        WordIndex index;
        std::unique_ptr<CoordinateSolver> solver;
    };
    const Alphabet& alph_;
    std::size_t total_ = 0;
    std::map<Multidegree, Cell> cells_;
};

/// H_degree(L, delta) = ker(delta)/im(delta) with representatives chosen as
/// deterministic complement picks of the image inside the kernel.
inline HomologyResult homology(const Dgla& d, int degree) {
    if (degree + 1 > d.cap()) throw CapExceededError("homology: degree + 1 exceeds cap");
    const auto& basis_d = d.layer(degree);
    HomologyResult res;
    if (basis_d.empty()) return res;

    // kernel of delta on this layer; basis elements with vanishing boundary
    // contribute unit vectors, the rest form a small block
    std::vector<TensorElement> dvals(basis_d.size());
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < basis_d.size(); ++i) {
        dvals[i] = expand(d.alphabet(), d.apply_diff(basis_d[i].lie));
        if (!dvals[i].zero()) live.push_back(i);
    }
    std::vector<Vec> kernel;
    for (std::size_t i = 0; i < basis_d.size(); ++i)
        if (dvals[i].zero()) kernel.push_back(unit_vec(basis_d.size(), i));
    if (!live.empty()) {
        std::vector<const TensorElement*> ptrs;
        for (std::size_t i : live) ptrs.push_back(&dvals[i]);
        WordIndex idx = WordIndex::from_elements(ptrs);
        std::vector<Vec> rows;
        for (std::size_t i : live) rows.push_back(idx.to_vec(dvals[i]));
        for (const Vec& kv : left_kernel(rows, idx.size())) {
            Vec full(basis_d.size(), Rat(0));
            for (std::size_t k = 0; k < live.size(); ++k) full[live[k]] = kv[k];
            kernel.push_back(std::move(full));
        }
    }

    // image of the boundary from one degree up, in layer coordinates
    LayerCoordinates layer_coords(d, degree);
    IncrementalSpan image(basis_d.size());
    for (const BasisElement& be : d.layer(degree + 1)) {
        TensorElement t = expand(d.alphabet(), d.apply_diff(be.lie));
        if (t.zero()) continue;
        auto coords = layer_coords.coords(t);
        if (!coords) throw Error("homology: a boundary does not lie in the Lie layer (bug)");
        image.add(std::move(*coords));
    }

    IncrementalSpan acc(basis_d.size());
    for (const Vec& row : image.space().rref_rows) acc.add(row);
    for (const Vec& kv : kernel) {
        if (!acc.add(kv)) continue;
        LieElement rep;
        for (std::size_t i = 0; i < basis_d.size(); ++i)
            if (kv[i] != 0) rep += kv[i] * basis_d[i].lie;
        res.representatives.push_back(std::move(rep));
    }
    res.dim = res.representatives.size();
    return res;
}

/// Span of the images delta(m) over a basis of the word-length >= 2 part of
/// the algebra in degree + 1; the receptacle deciding sphericality.
inline TensorSpan bracket_image_span(const Dgla& d, int degree) {
    if (degree + 1 > d.cap()) throw CapExceededError("bracket_image_span: degree + 1 exceeds cap");
    TensorSpan s;
    if (degree + 1 >= 1)
        for (const BasisElement& be : d.layer(degree + 1)) {
            if (be.wordlength < 2) continue;
            TensorElement t = expand(d.alphabet(), d.apply_diff(be.lie));
            if (!t.zero()) s.add(std::move(t));
        }
    return s;
}

/// Same span presented against the full lexicographic word list of the
/// degree.
inline Subspace bracket_image_of_diff(const Dgla& d, int degree) {
    TensorSpan s = bracket_image_span(d, degree);
    WordIndex idx(words_of_degree(d.alphabet(), degree));
    IncrementalSpan out(idx.size());
    for (const TensorElement* row : s.rows()) out.add(idx.to_vec(*row));
    return std::move(out).take();
}

/// Per-degree dimensions of spherical homology: generators whose boundary
/// already lies in delta of the bracket part, modulo the image of the linear
/// part of delta.
inline std::vector<std::size_t> spherical_homology(const Dgla& d, int max_degree) {
    if (max_degree + 1 > d.cap())
        throw CapExceededError("spherical_homology: max_degree + 1 exceeds cap");
    const Alphabet& alph = d.alphabet();
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int deg = 1; deg <= max_degree; ++deg) {
        std::vector<GenIndex> gens = d.generators_of_degree(deg);
        if (gens.empty()) continue;

        // kernel of (coefficient vector -> residue of boundary mod the
        // bracket-image span)
        TensorSpan receptacle = (deg >= 2) ? bracket_image_span(d, deg - 1) : TensorSpan();
        std::vector<TensorElement> residues;
        residues.reserve(gens.size());
        for (GenIndex g : gens)
            residues.push_back(receptacle.residue(expand(alph, d.diff_of(g))));
        std::vector<const TensorElement*> ptrs;
        for (const TensorElement& t : residues) ptrs.push_back(&t);
        WordIndex idx = WordIndex::from_elements(ptrs);
        std::vector<Vec> rows;
        for (const TensorElement& t : residues) rows.push_back(idx.to_vec(t));
        std::vector<Vec> criterion = left_kernel(rows, idx.size());

        // image of the linear part landing in this degree
        std::vector<Vec> lin_rows;
        for (GenIndex g : d.generators_of_degree(deg + 1)) {
            const LieElement& dg = d.diff_of(g);
            if (dg.zero_form()) continue;
            Vec row(gens.size(), Rat(0));
            bool nonzero = false;
            TensorElement t = expand(alph, dg);
            for (const auto& [w, c] : t.terms())
                if (w.size() == 1) {
                    for (std::size_t i = 0; i < gens.size(); ++i)
                        if (gens[i] == w[0]) {
                            row[i] = c;
                            nonzero = true;
                        }
                }
            if (nonzero) lin_rows.push_back(std::move(row));
        }

        IncrementalSpan lin_span(gens.size());
        IncrementalSpan joint(gens.size());
        for (const Vec& v : lin_rows) {
            lin_span.add(v);
            joint.add(v);
        }
        for (const Vec& v : criterion) joint.add(v);
        // the image of the linear part lies inside the criterion space, so
        // the quotient has dim(K + image) - dim(image)
        dims[static_cast<std::size_t>(deg)] = joint.dim() - lin_span.dim();
    }
    return dims;
}

/// Graded saturation of the ideal generated by homogeneous elements of a
/// free Lie algebra. Closing under brackets with the generators of the
/// ambient alphabet suffices: iterated brackets reduce to such chains by the
/// Jacobi identity.
class IdealSpan {
  public:
    IdealSpan(const Alphabet& alph, const std::vector<LieElement>& gens, int max_degree)
        : alph_(alph), max_degree_(max_degree) {
        spans_.resize(static_cast<std::size_t>(max_degree) + 1);
        reps_.resize(static_cast<std::size_t>(max_degree) + 1);
        std::vector<std::pair<int, LieElement>> queue;
        for (const LieElement& y : gens) {
            auto deg = y.degree();
            if (!deg) throw PreconditionError("IdealSpan: generators must be homogeneous");
            if (*deg > max_degree) continue;
            push(*deg, y, queue);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [deg, el] = queue[head];
            for (GenIndex g = 0; g < alph_.size(); ++g) {
                int nd = deg + alph_[g].degree;
                if (nd > max_degree_) continue;
                push(nd, bracket(LieElement::generator(alph_, g), el), queue);
            }
        }
    }

    std::size_t dim_at(int d) const {
        if (d < 0 || d > max_degree_) throw CapExceededError("IdealSpan: degree outside cap");
        return spans_[static_cast<std::size_t>(d)].dim();
    }
    const TensorSpan& span_at(int d) const {
        if (d < 0 || d > max_degree_) throw CapExceededError("IdealSpan: degree outside cap");
        return spans_[static_cast<std::size_t>(d)];
    }
    const std::vector<LieElement>& reps_at(int d) const {
        return reps_[static_cast<std::size_t>(d)];
    }
    bool contains(const LieElement& e) const {
        auto deg = e.degree();
        if (!deg) throw PreconditionError("IdealSpan: membership needs a homogeneous element");
        if (*deg > max_degree_) throw CapExceededError("IdealSpan: degree outside cap");
        return spans_[static_cast<std::size_t>(*deg)].contains(expand(alph_, e));
    }

  private:
    void push(int deg, LieElement el, std::vector<std::pair<int, LieElement>>& queue) {
        TensorElement t = expand(alph_, el);
        if (t.zero()) return;
        if (!spans_[static_cast<std::size_t>(deg)].add(std::move(t))) return;
        reps_[static_cast<std::size_t>(deg)].push_back(el);
        queue.emplace_back(deg, std::move(el));
    }

    Alphabet alph_;
    int max_degree_;
    std::vector<TensorSpan> spans_;
    std::vector<std::vector<LieElement>> reps_;
};

/// The ideal's slice at one degree against the full lexicographic word list.
inline Subspace ideal_span_at_degree(const Alphabet& alph, const std::vector<LieElement>& gens,
                                     int target_degree) {
    IdealSpan ideal(alph, gens, target_degree);
    WordIndex idx(words_of_degree(alph, target_degree));
    IncrementalSpan out(idx.size());
    for (const TensorElement* row : ideal.span_at(target_degree).rows()) out.add(idx.to_vec(*row));
    return std::move(out).take();
}

}  // namespace qlie
