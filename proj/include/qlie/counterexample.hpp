#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlie/dgla.hpp"

namespace qlie {

/// Parameters of the two-generator extension: two odd base degrees, how many
/// even generators to adjoin, the truncation cap, and optionally which odd
/// indices j to use (default 1, 3, ..., 2*count - 1).
struct CounterexampleSpec {
    int deg_a = 3;
    int deg_b = 3;
    int count = 4;
    int max_degree = 30;
    std::vector<int> js;

    std::vector<int> indices() const {
        if (!js.empty()) return js;
        std::vector<int> out;
        for (int k = 0; k < count; ++k) out.push_back(2 * k + 1);
        return out;
    }

    int target_degree(int j) const { return 2 * deg_b + j * deg_a; }
    int generator_degree(int j) const { return target_degree(j) + 1; }
};

/// Deterministic choice of y_j: an element of the doubly-filtered layer
/// (word length j + 2, two occurrences of b) outside the ideal generated by
/// the previously chosen elements. y_1 is pinned to [b,[a,b]]; later picks
/// are complement picks against the layer's basis coordinates.
inline LieElement choose_y(int j, const std::vector<LieElement>& prior, const Generator& a,
                           const Generator& b) {
    if (j < 1 || j % 2 == 0) throw PreconditionError("choose_y: j must be odd and positive");
    if (!a.odd() || !b.odd())
        throw PreconditionError("choose_y: generator degrees must be odd");
    Alphabet ab({a, b});
    const GenIndex ia = 0, ib = 1;
    const int target = 2 * b.degree + j * a.degree;

    if (j == 1) {
        LieElement ea = LieElement::generator(ab, ia);
        LieElement eb = LieElement::generator(ab, ib);
        LieElement y1 = bracket(eb, bracket(ea, eb));
        if (expand(ab, y1).zero()) throw ConstructionContradictionError("choose_y: [b,[a,b]] = 0");
        return y1;
    }

    FreeLieBasis builder(ab);
    std::vector<const BasisElement*> layer = builder.layer_bigraded(j + 2, ib, 2);
    if (layer.empty())
        throw ConstructionContradictionError("choose_y: empty layer at word length " +
                                             std::to_string(j + 2));

    IdealSpan ideal(ab, prior, target);

    // coordinates of the ideal's doubly-filtered slice against the layer basis
    Multidegree slice_mdeg(ab.size(), 0);
    slice_mdeg[ia] = j;
    slice_mdeg[ib] = 2;
    WordIndex idx(words_of_multidegree(ab, slice_mdeg));
    std::vector<Vec> layer_rows;
    for (const BasisElement* be : layer) layer_rows.push_back(idx.to_vec(be->tensor));
    CoordinateSolver solver(layer_rows, idx.size());

    std::vector<Vec> slice_coords;
    for (const LieElement& rep : ideal.reps_at(target)) {
        auto mdeg = rep.multidegree(ab.size());
        if (!mdeg || *mdeg != slice_mdeg) continue;
        auto coords = solver.solve(idx.to_vec(expand(ab, rep)));
        if (!coords)
            throw Error("choose_y: ideal slice escapes the layer span (bug)");
        slice_coords.push_back(std::move(*coords));
    }

    Subspace sub = span(slice_coords, layer.size());
    if (sub.dim() >= layer.size())
        throw ConstructionContradictionError(
            "choose_y: the ideal fills the layer at word length " + std::to_string(j + 2));
    Vec pick = complement_pick(sub, layer.size());
    LieElement y;
    for (std::size_t i = 0; i < layer.size(); ++i)
        if (pick[i] != 0) y += pick[i] * layer[i]->lie;
    if (ideal.contains(y))
        throw ConstructionContradictionError("choose_y: complement pick lies in the ideal (bug)");
    return y;
}

/// The built algebra together with the data needed to verify it.
struct Counterexample {
    CounterexampleSpec spec;
    Alphabet ab;    // the two base generators; a prefix of the full alphabet
    Dgla dgla;      // generators a, b (cycles) and x_j with boundary y_j
    std::vector<int> js;
    std::vector<LieElement> ys;  // expressed over the prefix alphabet
};

/// Builds the minimal free chain Lie algebra extending (L_<a,b>, 0) by even
/// generators x_j with boundaries the chosen y_j.
inline Counterexample build_counterexample(const CounterexampleSpec& spec) {
    if (spec.deg_a < 1 || spec.deg_a % 2 == 0 || spec.deg_b < 1 || spec.deg_b % 2 == 0)
        throw PreconditionError("build_counterexample: generator degrees must be odd");
    if (spec.count < 1 && spec.js.empty())
        throw PreconditionError("build_counterexample: count must be positive");
    std::vector<int> js = spec.indices();
    for (std::size_t k = 0; k < js.size(); ++k) {
        if (js[k] < 1 || js[k] % 2 == 0)
            throw PreconditionError("build_counterexample: indices must be odd");
        if (k > 0 && js[k] <= js[k - 1])
            throw PreconditionError("build_counterexample: indices must increase");
    }
    int needed = spec.generator_degree(js.back());
    if (needed > spec.max_degree)
        throw CapExceededError("build_counterexample: cap " + std::to_string(spec.max_degree) +
                               " too small; generator x" + std::to_string(js.back()) +
                               " needs degree " + std::to_string(needed));

    Generator a{"a", spec.deg_a};
    Generator b{"b", spec.deg_b};
    std::vector<LieElement> ys;
    for (int j : js) ys.push_back(choose_y(j, ys, a, b));

    std::vector<Generator> gens{a, b};
    std::map<std::string, LieElement> diff;
    for (std::size_t k = 0; k < js.size(); ++k) {
        std::string name = "x" + std::to_string(js[k]);
        gens.push_back(Generator{name, spec.generator_degree(js[k])});
        diff[name] = ys[k];  // leaf indices agree: {a, b} is a prefix
    }

    Counterexample ce{spec, Alphabet({a, b}), Dgla(Alphabet(gens), diff, spec.max_degree), js,
                      std::move(ys)};
    return ce;
}

/// dim (L_<a,b> / I(ys))_d for each degree d <= max_degree; the independent
/// oracle against which the full homology is compared.
inline std::vector<std::size_t> quotient_oracle_dims(const Alphabet& ab,
                                                     const std::vector<LieElement>& ys,
                                                     int max_degree) {
    IdealSpan ideal(ab, ys, max_degree);
    FreeLieBasis builder(ab);
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 1; d <= max_degree; ++d)
        dims[static_cast<std::size_t>(d)] = builder.dim_degree(d) - ideal.dim_at(d);
    return dims;
}

struct CoformalityResult {
    bool ok = false;
    bool chain_map_ok = false;          // boundaries project into the ideal
    bool dims_ok = false;               // per-degree dimension equality
    bool surjective_ok = false;         // projected representatives + ideal span everything
    std::vector<std::size_t> homology_dims;
    std::vector<std::size_t> quotient_dims;
};

/// Verifies that sending the cycle generators to their classes and the
/// adjoined generators to zero induces per-degree isomorphisms from the
/// homology of the algebra onto the quotient of the base free Lie algebra by
/// the boundary ideal.
inline CoformalityResult coformality_witness(const Dgla& d, const Alphabet& ab,
                                             const std::vector<LieElement>& ys, int max_degree) {
    if (max_degree + 1 > d.cap())
        throw CapExceededError("coformality_witness: max_degree + 1 exceeds cap");
    const Alphabet& full = d.alphabet();
    if (ab.size() > full.size())
        throw PreconditionError("coformality_witness: base alphabet larger than ambient");
    for (GenIndex g = 0; g < ab.size(); ++g)
        if (!(ab[g] == full[g]))
            throw PreconditionError("coformality_witness: base must be a prefix of the ambient");

    std::vector<bool> keep(full.size(), false);
    for (GenIndex g = 0; g < ab.size(); ++g) keep[g] = true;

    IdealSpan ideal(ab, ys, max_degree);
    FreeLieBasis ab_builder(ab);

    CoformalityResult res;
    res.chain_map_ok = true;
    for (const LieElement& y : ys) {
        auto deg = y.degree();
        if (!deg || *deg > max_degree) continue;
        if (!ideal.contains(y)) res.chain_map_ok = false;
    }
    res.dims_ok = true;
    res.surjective_ok = true;
    res.homology_dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    res.quotient_dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int deg = 1; deg <= max_degree; ++deg) {
        HomologyResult h = homology(d, deg);
        std::size_t qdim = ab_builder.dim_degree(deg) - ideal.dim_at(deg);
        res.homology_dims[static_cast<std::size_t>(deg)] = h.dim;
        res.quotient_dims[static_cast<std::size_t>(deg)] = qdim;
        if (h.dim != qdim) res.dims_ok = false;

        // boundaries must project into the ideal (the induced map is then
        // well defined), and projected representatives must fill the quotient
        if (deg + 1 <= d.cap())
            for (const BasisElement& be : d.layer(deg + 1)) {
                TensorElement proj =
                    expand(full, d.apply_diff(be.lie)).restrict_to(keep);
                if (proj.zero()) continue;
                if (!ideal.span_at(deg).contains(proj)) res.chain_map_ok = false;
            }
        TensorSpan covered;
        for (const TensorElement* row : ideal.span_at(deg).rows()) covered.add(*row);
        for (const LieElement& rep : h.representatives)
            covered.add(expand(full, rep).restrict_to(keep));
        if (covered.dim() != ab_builder.dim_degree(deg)) res.surjective_ok = false;
    }
    res.ok = res.chain_map_ok && res.dims_ok && res.surjective_ok;
    return res;
}

/// Everything the headline verification asserts, per degree and as flags.
struct VerificationReport {
    bool d_squared_zero = false;
    bool minimal = false;
    int connectivity = 0;
    bool connectivity_ok = false;
    std::vector<std::size_t> linear_homology_dims;  // suspends to the space's homology
    std::size_t even_homology_total = 0;            // odd Lie degrees (a and b)
    bool even_homology_ok = false;
    std::size_t odd_homology_generators = 0;        // even Lie degrees (the x_j)
    bool odd_homology_matches_count = false;
    std::vector<std::size_t> spherical_dims;
    std::size_t spherical_total = 0;
    bool spherical_ok = false;
    bool xs_nonspherical_direct = false;
    bool xs_nonspherical_ideal = false;
    std::vector<std::size_t> homology_dims;
    std::vector<std::size_t> quotient_dims;
    bool homology_matches_oracle = false;
    bool coformality_ok = false;

    bool all_ok() const {
        return d_squared_zero && minimal && connectivity_ok && even_homology_ok &&
               odd_homology_matches_count && spherical_ok && xs_nonspherical_direct &&
               xs_nonspherical_ideal && homology_matches_oracle && coformality_ok;
    }
};

inline VerificationReport verify_counterexample(const Counterexample& ce) {
    const Dgla& d = ce.dgla;
    const Alphabet& full = d.alphabet();
    const int check_degree = d.cap() - 1;

    VerificationReport rep;
    rep.d_squared_zero = check_differential(d);
    rep.minimal = is_minimal(d);

    // with zero linear part the homology of the generator space is the
    // generator space itself
    rep.linear_homology_dims.assign(static_cast<std::size_t>(d.cap()) + 1, 0);
    for (const Generator& g : full.generators())
        ++rep.linear_homology_dims[static_cast<std::size_t>(g.degree)];
    if (!rep.minimal) rep.linear_homology_dims.clear();

    rep.even_homology_total = 0;
    rep.odd_homology_generators = 0;
    for (std::size_t deg = 0; deg < rep.linear_homology_dims.size(); ++deg) {
        if (deg % 2 == 1)
            rep.even_homology_total += rep.linear_homology_dims[deg];
        else
            rep.odd_homology_generators += rep.linear_homology_dims[deg];
    }
    rep.even_homology_ok = rep.even_homology_total == 2;
    rep.odd_homology_matches_count = rep.odd_homology_generators == ce.js.size();

    int min_deg = std::min(ce.spec.deg_a, ce.spec.deg_b);
    rep.connectivity = min_deg;
    rep.connectivity_ok = true;
    for (int deg = 1; deg < min_deg; ++deg)
        if (rep.linear_homology_dims[static_cast<std::size_t>(deg)] != 0)
            rep.connectivity_ok = false;

    rep.spherical_dims = spherical_homology(d, check_degree);
    rep.spherical_total = 0;
    rep.spherical_ok = true;
    for (std::size_t deg = 0; deg < rep.spherical_dims.size(); ++deg) {
        rep.spherical_total += rep.spherical_dims[deg];
        bool base = static_cast<int>(deg) == ce.spec.deg_a || static_cast<int>(deg) == ce.spec.deg_b;
        if (!base && rep.spherical_dims[deg] != 0) rep.spherical_ok = false;
    }
    rep.spherical_ok = rep.spherical_ok && rep.spherical_total == 2;

    // each adjoined generator must fail the spherical criterion, by the
    // direct membership test and by ideal reduction
    rep.xs_nonspherical_direct = true;
    rep.xs_nonspherical_ideal = true;
    for (std::size_t k = 0; k < ce.js.size(); ++k) {
        int j = ce.js[k];
        GenIndex xg = full.index_of("x" + std::to_string(j));
        TensorSpan receptacle = bracket_image_span(d, full[xg].degree - 1);
        if (receptacle.contains(expand(full, d.diff_of(xg)))) rep.xs_nonspherical_direct = false;
        std::vector<LieElement> prior(ce.ys.begin(), ce.ys.begin() + static_cast<std::ptrdiff_t>(k));
        IdealSpan prior_ideal(ce.ab, prior, ce.spec.target_degree(j));
        if (prior_ideal.contains(ce.ys[k])) rep.xs_nonspherical_ideal = false;
    }

    CoformalityResult cof = coformality_witness(d, ce.ab, ce.ys, check_degree);
    rep.homology_dims = cof.homology_dims;
    rep.quotient_dims = cof.quotient_dims;
    rep.homology_matches_oracle = cof.dims_ok;
    rep.coformality_ok = cof.ok;
    return rep;
}

}  // namespace qlie
