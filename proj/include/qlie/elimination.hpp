#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/basis.hpp"

namespace qlie {

/// One generator of a working generating set: a labeled homogeneous element
/// of the ambient free Lie algebra with its cached expansion.
struct LabeledElement {
    std::string label;
    LieElement element;
    TensorElement tensor;
    Multidegree mdeg;
    int degree = 0;
    int wordlength = 0;
};

struct EliminationCaps {
    int max_degree = 0;
    int max_wordlength = 0;
};

/// Working state of the generator-splitting algorithm: the current free
/// generating set Z_i (all expansions verified independent), the split-off
/// history, and the truncation caps. States are immutable; each split
/// returns a fresh one.
class EliminationState {
  public:
    EliminationState(Alphabet ambient, EliminationCaps caps)
        : ambient_(std::move(ambient)), caps_(caps) {
        if (caps_.max_degree < 1 || caps_.max_wordlength < 1)
            throw PreconditionError("EliminationState: caps must be positive");
        for (GenIndex g = 0; g < ambient_.size(); ++g)
            current_.push_back(make_labeled(LieElement::generator(ambient_, g)));
        verify_independent();
    }

    const Alphabet& ambient() const { return ambient_; }
    int stage() const { return stage_; }
    const std::vector<LabeledElement>& current_generators() const { return current_; }
    const std::vector<LabeledElement>& split_history() const { return split_history_; }
    EliminationCaps caps() const { return caps_; }
    bool cap_exhausted() const { return cap_exhausted_; }

    const LabeledElement* find(const std::string& label) const {
        for (const LabeledElement& e : current_)
            if (e.label == label) return &e;
        return nullptr;
    }

    /// Deterministic lookup of the current generator with a given
    /// multidegree, when unique.
    const LabeledElement* find_by_multidegree(const Multidegree& m) const {
        const LabeledElement* hit = nullptr;
        for (const LabeledElement& e : current_)
            if (e.mdeg == m) {
                if (hit) return nullptr;
                hit = &e;
            }
        return hit;
    }

    LabeledElement make_labeled(LieElement el) const {
        LabeledElement le;
        le.tensor = expand(ambient_, el);
        auto deg = le.tensor.degree(ambient_);
        auto mdeg = el.multidegree(ambient_.size());
        auto wl = el.wordlength();
        if (!deg || !mdeg || !wl)
            throw PreconditionError("EliminationState: generators must be homogeneous");
        le.label = el.pretty(ambient_);
        le.element = std::move(el);
        le.degree = *deg;
        le.wordlength = *wl;
        le.mdeg = *mdeg;
        return le;
    }

    bool fits(const LabeledElement& e) const {
        return e.degree <= caps_.max_degree && e.wordlength <= caps_.max_wordlength;
    }

    friend EliminationState eliminate_step(const EliminationState& state,
                                           const std::string& pick);

  private:
    EliminationState(const EliminationState& base, int) : EliminationState(base) {}

    void verify_independent() const {
        TensorSpan span;
        for (const LabeledElement& e : current_)
            if (!span.add(e.tensor))
                throw Error("EliminationState: generating set is not independent (bug)");
    }

    Alphabet ambient_;
    EliminationCaps caps_;
    int stage_ = 0;
    std::vector<LabeledElement> current_;
    std::vector<LabeledElement> split_history_;
    bool cap_exhausted_ = false;
};

/// Split one generator x off the current generating set. The remaining
/// complement W always consists of the other current generators. The new
/// working set keeps W and adds:
///   odd deg x:  [x,w] for w in W, and [x,x] -- [x,x] stays available as a
///               later split; the exact-sequence kernel trades it for the
///               higher adjoint powers (see ses_dimension_check);
///   even deg x: ad^j(x)(w) for j >= 1 ([x,x] = 0 in this case).
/// Elements beyond the caps are dropped; if nothing new fits, the returned
/// state carries a cap-exhausted flag.
inline EliminationState eliminate_step(const EliminationState& state, const std::string& pick) {
    const LabeledElement* x = state.find(pick);
    if (!x) throw UnknownGeneratorError("eliminate_step: no current generator labeled " + pick);

    EliminationState next = state;
    next.stage_ += 1;
    next.split_history_.push_back(*x);
    std::vector<LabeledElement> W;
    for (const LabeledElement& e : state.current_generators())
        if (e.label != pick) W.push_back(e);

    std::vector<LabeledElement> fresh;
    const bool odd = x->degree % 2 != 0;
    if (odd) {
        for (const LabeledElement& w : W) {
            LabeledElement cand = state.make_labeled(bracket(x->element, w.element));
            if (!state.fits(cand) || cand.tensor.zero()) continue;
            fresh.push_back(std::move(cand));
        }
        LabeledElement sq = state.make_labeled(bracket(x->element, x->element));
        if (state.fits(sq) && !sq.tensor.zero()) fresh.push_back(std::move(sq));
    } else {
        for (const LabeledElement& w : W) {
            LieElement cur = w.element;
            for (;;) {
                cur = bracket(x->element, cur);
                LabeledElement cand = state.make_labeled(cur);
                if (!state.fits(cand)) break;
                if (cand.tensor.zero()) break;
                fresh.push_back(std::move(cand));
            }
        }
        // keep the layer-by-layer presentation: sort fresh elements by the
        // number of x-brackets applied, then by the complement order
        std::stable_sort(fresh.begin(), fresh.end(),
                         [](const LabeledElement& p, const LabeledElement& q) {
                             return p.wordlength < q.wordlength;
                         });
    }

    next.cap_exhausted_ = fresh.empty();
    next.current_ = std::move(W);
    for (LabeledElement& e : fresh) next.current_.push_back(std::move(e));
    next.verify_independent();
    return next;
}

struct SesRow {
    int degree = 0;
    std::size_t before_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t split_dim = 0;
    bool ok = false;
};

struct EliminationReport {
    std::vector<SesRow> rows;
    bool all_ok = true;
    std::string split_label;
};

/// Per-degree bookkeeping of the exact sequence
///   0 -> kernel -> L(Z_i) -> L(<x>) -> 0.
/// The kernel is free on the adjoint powers ad^j(x)(W); for an odd split x
/// this differs from the working set by trading [x,x] against the powers
/// j >= 2, and L(<x>) contributes {x, [x,x]}. Dimensions are the expansion
/// ranks of free bases over the abstract generating sets; a mismatch is
/// recorded, never silently dropped.
inline EliminationReport ses_dimension_check(const EliminationState& before,
                                             const EliminationState& after,
                                             const std::string& pick) {
    const LabeledElement* x = before.find(pick);
    if (!x) throw UnknownGeneratorError("ses_dimension_check: unknown split label " + pick);
    if (after.stage() != before.stage() + 1)
        throw PreconditionError("ses_dimension_check: states are not one step apart");

    EliminationCaps caps = before.caps();
    int min_deg = before.ambient().min_degree();
    int degree_limit = std::min(caps.max_degree, caps.max_wordlength * min_deg);

    auto abstract_alphabet = [](const std::vector<std::pair<std::string, int>>& gens) {
        std::vector<Generator> gl;
        for (const auto& [name, deg] : gens) gl.push_back(Generator{name, deg});
        return Alphabet(std::move(gl));
    };

    std::vector<std::pair<std::string, int>> before_gens;
    for (const LabeledElement& e : before.current_generators())
        before_gens.emplace_back(e.label, e.degree);

    std::vector<std::pair<std::string, int>> kernel_gens;
    for (const LabeledElement& e : before.current_generators()) {
        if (e.label == pick) continue;
        for (int j = 0;; ++j) {
            int deg = e.degree + j * x->degree;
            if (deg > degree_limit) break;
            kernel_gens.emplace_back("ad^" + std::to_string(j) + "(" + pick + ")(" + e.label + ")",
                                     deg);
        }
    }

    FreeLieBasis lb(abstract_alphabet(before_gens));
    FreeLieBasis lk(abstract_alphabet(kernel_gens));

    const bool odd = x->degree % 2 != 0;
    EliminationReport report;
    report.split_label = pick;
    for (int d = min_deg; d <= degree_limit; ++d) {
        SesRow row;
        row.degree = d;
        row.before_dim = lb.dim_degree(d);
        row.kernel_dim = lk.dim_degree(d);
        row.split_dim = (d == x->degree || (odd && d == 2 * x->degree)) ? 1 : 0;
        row.ok = row.before_dim == row.kernel_dim + row.split_dim;
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

/// One collected doubly-filtered basis element: [ad^i(a)(b), ad^j(a)(b)] up
/// to a nonzero scalar, produced by the splitting schedule.
struct ScheduleBasisElement {
    int ad_i = 0;
    int ad_j = 0;
    int wordlength = 0;
    LieElement element;
};

/// Runs the splitting schedule a, [a,a], b, ad^1(a)(b), ad^2(a)(b), ... and
/// collects the generating-set elements with exactly two occurrences of b,
/// i.e. the pair brackets of adjoint powers. The output is sorted by word
/// length, then by the smaller adjoint index; counts are verified against
/// the closed-form dimension and the expansions are verified independent.
inline std::vector<ScheduleBasisElement> wlb2_schedule_basis(const Generator& a,
                                                             const Generator& b, int max_wl) {
    if (!a.odd() || !b.odd())
        throw PreconditionError("wlb2_schedule_basis: both generator degrees must be odd");
    if (max_wl < 2) throw PreconditionError("wlb2_schedule_basis: max_wl must be >= 2");

    Alphabet alph({a, b});
    const GenIndex ib = 1;
    EliminationCaps caps;
    caps.max_degree = 2 * b.degree + (max_wl - 2) * a.degree;
    caps.max_wordlength = max_wl;

    EliminationState state(alph, caps);
    std::vector<ScheduleBasisElement> collected;

    auto line_index = [&](const LabeledElement& e) -> std::optional<int> {
        // adjoint line i has multidegree a^i b^1
        if (e.mdeg[ib] != 1) return std::nullopt;
        return e.wordlength - 1;
    };

    auto collect_from_split = [&](const EliminationState& prev, const EliminationState& cur,
                                  int split_line) {
        // fresh generators sit after the carried-over complement
        std::size_t carried = prev.current_generators().size() - 1;
        for (std::size_t k = carried; k < cur.current_generators().size(); ++k) {
            const LabeledElement& e = cur.current_generators()[k];
            if (e.mdeg[ib] != 2) continue;
            ScheduleBasisElement sb;
            sb.ad_i = split_line;
            sb.ad_j = e.wordlength - split_line - 2;
            sb.wordlength = e.wordlength;
            sb.element = e.element;
            collected.push_back(std::move(sb));
        }
    };

    // split a, then [a,a]; neither produces anything with two b's
    EliminationState s1 = eliminate_step(state, a.name);
    Multidegree md_aa(alph.size(), 0);
    md_aa[0] = 2;
    const LabeledElement* aa = s1.find_by_multidegree(md_aa);
    if (!aa) throw Error("wlb2_schedule_basis: [a,a] not found after the first split");
    EliminationState s2 = eliminate_step(s1, aa->label);

    // split b: yields [b,b] and [b, ad^j(a)(b)]
    const LabeledElement* bb = s2.find(b.name);
    if (!bb) throw Error("wlb2_schedule_basis: b not found after the second split");
    EliminationState cur = eliminate_step(s2, b.name);
    collect_from_split(s2, cur, 0);

    // split successive adjoint lines; pairs [i,j] with j > i appear when
    // line i goes, the diagonal [i,i] appears as the split's [x,x]
    int top_line = (max_wl - 2) / 2;
    for (int i = 1; i <= top_line; ++i) {
        Multidegree md(alph.size(), 0);
        md[0] = i;
        md[ib] = 1;
        const LabeledElement* line = cur.find_by_multidegree(md);
        if (!line) break;  // caps pruned the line away
        EliminationState nxt = eliminate_step(cur, line->label);
        collect_from_split(cur, nxt, i);
        cur = std::move(nxt);
    }

    std::erase_if(collected, [&](const ScheduleBasisElement& e) { return e.wordlength > max_wl; });
    std::stable_sort(collected.begin(), collected.end(),
                     [](const ScheduleBasisElement& p, const ScheduleBasisElement& q) {
                         if (p.wordlength != q.wordlength) return p.wordlength < q.wordlength;
                         return p.ad_i < q.ad_i;
                     });

    // verify counts and independence before handing the basis out
    std::vector<int> per_wl(static_cast<std::size_t>(max_wl) + 1, 0);
    TensorSpan span;
    for (const ScheduleBasisElement& e : collected) {
        ++per_wl[static_cast<std::size_t>(e.wordlength)];
        if (!span.add(expand(alph, e.element)))
            throw Error("wlb2_schedule_basis: collected elements are not independent (bug)");
    }
    for (int n = 2; n <= max_wl; ++n)
        if (per_wl[static_cast<std::size_t>(n)] != dim_formula_wlb2(n))
            throw Error("wlb2_schedule_basis: layer count differs from the closed form at wl " +
                        std::to_string(n));
    return collected;
}

}  // namespace qlie
