#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/dgla.hpp"

namespace qlie {

/// Generators of a Sullivan algebra: distinct names, degrees >= 2
/// (simply-connected).
class CdgaGenSet {
  public:
    CdgaGenSet() = default;
    explicit CdgaGenSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].degree < 2)
                throw PreconditionError("CdgaGenSet: generator degree must be >= 2: " +
                                        gens_[i].name);
            if (!by_name_.emplace(gens_[i].name, i).second)
                throw PreconditionError("CdgaGenSet: duplicate generator name: " + gens_[i].name);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t index_of(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw UnknownGeneratorError("unknown generator: " + name);
        return it->second;
    }

  private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> by_name_;
};

/// Monomial of the free graded-commutative algebra: an exponent vector in
/// generator creation order; odd generators carry exponent at most one.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial generator(std::size_t n, std::size_t i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        return Monomial(std::move(e));
    }

    const std::vector<int>& exps() const { return exps_; }
    int exp(std::size_t i) const { return exps_[i]; }
    bool is_one() const {
        for (int e : exps_)
            if (e) return false;
        return true;
    }
    int wordlength() const {
        int n = 0;
        for (int e : exps_) n += e;
        return n;
    }
    int degree(const CdgaGenSet& gens) const {
        int d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * gens[i].degree;
        return d;
    }

    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    std::string pretty(const CdgaGenSet& gens) const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (!exps_[i]) continue;
            if (!s.empty()) s += "*";
            s += gens[i].name;
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

  private:
    std::vector<int> exps_;
};

/// Koszul sign of merging two normal-ordered monomials, or 0 when an odd
/// generator repeats. The sign counts the odd-generator transpositions
/// needed to interleave the two factor sequences.
inline int product_sign(const CdgaGenSet& gens, const Monomial& a, const Monomial& b) {
    int inversions = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!b.exp(j) || gens[j].degree % 2 == 0) continue;
        if (a.exp(j)) return 0;
        for (std::size_t i = j + 1; i < gens.size(); ++i)
            if (a.exp(i) && gens[i].degree % 2 != 0) inversions += a.exp(i);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// Element of the free graded-commutative algebra over a fixed generator
/// set.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial mono(const Monomial& m, Rat c = Rat(1)) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    std::optional<int> degree(const CdgaGenSet& gens) const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int md = m.degree(gens);
            if (!d)
                d = md;
            else if (*d != md)
                return std::nullopt;
        }
        return d;
    }

    std::string pretty(const CdgaGenSet& gens) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string cs = to_string(c);
            if (!s.empty()) s += " + ";
            if (cs == "1" && !m.is_one())
                s += m.pretty(gens);
            else if (m.is_one())
                s += cs;
            else
                s += cs + "*" + m.pretty(gens);
        }
        return s;
    }

  private:
    std::map<Monomial, Rat> terms_;
};

inline Polynomial product(const CdgaGenSet& gens, const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int sign = product_sign(gens, ma, mb);
            if (sign == 0) continue;
            std::vector<int> e(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) e[i] = ma.exp(i) + mb.exp(i);
            r.add_term(Monomial(std::move(e)), sign * ca * cb);
        }
    return r;
}

namespace detail {
inline void enum_monomials(const CdgaGenSet& gens, std::size_t i, int remaining,
                           std::vector<int>& cur, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial(cur));
        return;
    }
    if (i == gens.size()) return;
    int deg = gens[i].degree;
    int max = remaining / deg;
    if (deg % 2 != 0) max = std::min(max, 1);
    for (int e = 0; e <= max; ++e) {
        cur[i] = e;
        enum_monomials(gens, i + 1, remaining - e * deg, cur, out);
    }
    cur[i] = 0;
}
}  // namespace detail

/// All monomials of one degree, in exponent-vector enumeration order.
inline std::vector<Monomial> monomials_of_degree(const CdgaGenSet& gens, int degree) {
    std::vector<Monomial> out;
    std::vector<int> cur(gens.size(), 0);
    if (degree == 0) {
        out.push_back(Monomial(cur));
        return out;
    }
    detail::enum_monomials(gens, 0, degree, cur, out);
    return out;
}

/// Free graded-commutative algebra with a degree +1 derivation differential.
/// Construction validates the degree contract of every assignment and checks
/// d(d(g)) = 0 for every generator with deg(g) + 2 <= cap; beyond that bound
/// a truncated algebra may have incomplete differentials.
class SullivanAlgebra {
  public:
    SullivanAlgebra(CdgaGenSet gens, const std::map<std::string, Polynomial>& diff, int cap)
        : gens_(std::move(gens)), diff_(gens_.size()), cap_(cap) {
        if (cap_ < 2) throw PreconditionError("SullivanAlgebra: cap must be >= 2");
        for (const auto& [name, value] : diff) {
            std::size_t g = gens_.index_of(name);
            if (value.zero()) continue;
            auto vdeg = value.degree(gens_);
            if (!vdeg || *vdeg != gens_[g].degree + 1)
                throw MalformedDifferentialError(
                    "SullivanAlgebra: differential of " + name +
                    " must be homogeneous of degree " + std::to_string(gens_[g].degree + 1));
            diff_[g] = value;
        }
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (gens_[g].degree + 2 > cap_) continue;
            if (!apply_d(diff_[g]).zero())
                throw Error("SullivanAlgebra: d^2 != 0 on generator " + gens_[g].name);
        }
    }

    const CdgaGenSet& generators() const { return gens_; }
    int cap() const { return cap_; }
    const Polynomial& diff_of(std::size_t g) const { return diff_[g]; }

    /// Derivation extension with Koszul signs.
    Polynomial apply_d(const Polynomial& p) const {
        Polynomial out;
        for (const auto& [m, c] : p.terms()) {
            Polynomial dm = apply_d_monomial(m);
            dm *= c;
            out += dm;
        }
        return out;
    }

    std::vector<std::size_t> generators_of_degree(int d) const {
        std::vector<std::size_t> out;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (gens_[g].degree == d) out.push_back(g);
        return out;
    }

  private:
    Polynomial apply_d_monomial(const Monomial& m) const {
        // d(f1 f2 ... fk) = sum_i (-1)^{deg(f1..f_{i-1})} f1.. d(f_i) ..fk
        Polynomial out;
        int prefix_deg = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            int e = m.exp(i);
            if (e == 0) continue;
            if (!diff_[i].zero()) {
                std::vector<int> pre(gens_.size(), 0), post(gens_.size(), 0);
                for (std::size_t k = 0; k < i; ++k) pre[k] = m.exp(k);
                pre[i] = e - 1;  // even generators keep the reduced power up front
                for (std::size_t k = i + 1; k < gens_.size(); ++k) post[k] = m.exp(k);
                Polynomial term = product(gens_, Polynomial::mono(Monomial(std::move(pre))),
                                          diff_[i]);
                term = product(gens_, term, Polynomial::mono(Monomial(std::move(post))));
                term *= Rat(e);
                if (prefix_deg % 2 != 0) term *= Rat(-1);
                out += term;
            }
            prefix_deg += e * gens_[i].degree;
        }
        return out;
    }

    CdgaGenSet gens_;
    std::vector<Polynomial> diff_;
    int cap_;
};

/// Re-runs the generator-level d^2 check.
inline bool check_d_squared(const SullivanAlgebra& s) {
    for (std::size_t g = 0; g < s.generators().size(); ++g) {
        if (s.generators()[g].degree + 2 > s.cap()) continue;
        if (!s.apply_d(s.diff_of(g)).zero()) return false;
    }
    return true;
}

/// Splits one generator's differential by monomial word length; the
/// component at word length 1 is the linear part.
inline std::map<int, Polynomial> word_length_parts(const SullivanAlgebra& s,
                                                   const std::string& gen) {
    std::size_t g = s.generators().index_of(gen);
    std::map<int, Polynomial> parts;
    for (const auto& [m, c] : s.diff_of(g).terms()) parts[m.wordlength()].add_term(m, c);
    return parts;
}

/// Linear-part matrix row of one generator: coefficients on the generators
/// one degree above.
inline std::map<std::string, Rat> d0_row(const SullivanAlgebra& s, std::size_t g) {
    std::map<std::string, Rat> row;
    for (const auto& [m, c] : s.diff_of(g).terms())
        if (m.wordlength() == 1)
            for (std::size_t i = 0; i < s.generators().size(); ++i)
                if (m.exp(i) == 1) row[s.generators()[i].name] = c;
    return row;
}

inline bool is_minimal(const SullivanAlgebra& s) {
    for (std::size_t g = 0; g < s.generators().size(); ++g)
        if (!d0_row(s, g).empty()) return false;
    return true;
}

struct CohomologyResult {
    std::size_t dim = 0;
    std::vector<Polynomial> representatives;
};

namespace detail {
/// Coordinate rows of d over the monomial basis of one degree.
inline std::vector<Vec> d_matrix(const SullivanAlgebra& s, const std::vector<Monomial>& from,
                                 const std::vector<Monomial>& to) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < to.size(); ++i) index.emplace(to[i], i);
    std::vector<Vec> rows;
    rows.reserve(from.size());
    for (const Monomial& m : from) {
        Vec row(to.size(), Rat(0));
        Polynomial dm = s.apply_d(Polynomial::mono(m));
        for (const auto& [t, c] : dm.terms()) {
            auto it = index.find(t);
            if (it == index.end())
                throw Error("d_matrix: image leaves the expected degree (bug)");
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}
}  // namespace detail

/// H^degree(Lambda V, d) with deterministic representatives.
inline CohomologyResult cohomology(const SullivanAlgebra& s, int degree) {
    if (degree + 1 > s.cap()) throw CapExceededError("cohomology: degree + 1 exceeds cap");
    CohomologyResult res;
    std::vector<Monomial> basis = monomials_of_degree(s.generators(), degree);
    if (basis.empty()) return res;
    std::vector<Monomial> above = monomials_of_degree(s.generators(), degree + 1);
    std::vector<Vec> rows = detail::d_matrix(s, basis, above);
    std::vector<Vec> kernel = left_kernel(rows, above.size());

    IncrementalSpan image(basis.size());
    if (degree >= 1) {
        std::vector<Monomial> below = monomials_of_degree(s.generators(), degree - 1);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
        for (const Monomial& m : below) {
            Vec row(basis.size(), Rat(0));
            bool nonzero = false;
            Polynomial dm = s.apply_d(Polynomial::mono(m));
            for (const auto& [t, c] : dm.terms()) {
                auto it = index.find(t);
                if (it == index.end()) throw Error("cohomology: image degree mismatch (bug)");
                row[it->second] = c;
                nonzero = true;
            }
            if (nonzero) image.add(std::move(row));
        }
    }

    IncrementalSpan acc(basis.size());
    for (const Vec& row : image.space().rref_rows) acc.add(row);
    for (const Vec& kv : kernel) {
        if (!acc.add(kv)) continue;
        Polynomial rep;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (kv[i] != 0) rep.add_term(basis[i], kv[i]);
        res.representatives.push_back(std::move(rep));
    }
    res.dim = res.representatives.size();
    return res;
}

/// Per-degree dimensions of H(V, d_0), the homotopy groups of the algebra.
inline std::vector<std::size_t> homotopy_groups(const SullivanAlgebra& s, int max_degree) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    auto rank_d0 = [&](int from_deg) -> std::size_t {
        std::vector<std::size_t> from = s.generators_of_degree(from_deg);
        std::vector<std::size_t> to = s.generators_of_degree(from_deg + 1);
        if (from.empty() || to.empty()) return 0;
        IncrementalSpan span(to.size());
        for (std::size_t g : from) {
            Vec row(to.size(), Rat(0));
            auto r = d0_row(s, g);
            for (std::size_t k = 0; k < to.size(); ++k) {
                auto it = r.find(s.generators()[to[k]].name);
                if (it != r.end()) row[k] = it->second;
            }
            span.add(std::move(row));
        }
        return span.dim();
    };
    for (int deg = 2; deg <= max_degree; ++deg) {
        std::size_t vd = s.generators_of_degree(deg).size();
        if (vd == 0) continue;
        dims[static_cast<std::size_t>(deg)] = vd - rank_d0(deg) - rank_d0(deg - 1);
    }
    return dims;
}

/// Per-degree dimensions of spherical cohomology: generators whose
/// differential lies in the span of d-images of decomposable monomials
/// (a vector-space span, not an ideal), modulo the image of the linear part.
inline std::vector<std::size_t> spherical_cohomology(const SullivanAlgebra& s, int max_degree) {
    if (max_degree > s.cap()) throw CapExceededError("spherical_cohomology: beyond cap");
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int deg = 2; deg <= max_degree; ++deg) {
        std::vector<std::size_t> gens = s.generators_of_degree(deg);
        if (gens.empty()) continue;
        if (deg + 2 > s.cap())
            throw CapExceededError("spherical_cohomology: generator too close to cap");

        std::vector<Monomial> above = monomials_of_degree(s.generators(), deg + 1);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < above.size(); ++i) index.emplace(above[i], i);
        IncrementalSpan receptacle(above.size());
        for (const Monomial& m : monomials_of_degree(s.generators(), deg)) {
            if (m.wordlength() < 2) continue;
            Vec row(above.size(), Rat(0));
            bool nonzero = false;
            Polynomial dm = s.apply_d(Polynomial::mono(m));
            for (const auto& [t, c] : dm.terms()) {
                row[index.at(t)] = c;
                nonzero = true;
            }
            if (nonzero) receptacle.add(std::move(row));
        }

        std::vector<Vec> residues;
        for (std::size_t g : gens) {
            Vec row(above.size(), Rat(0));
            for (const auto& [t, c] : s.diff_of(g).terms()) row[index.at(t)] = c;
            residues.push_back(receptacle.residue(std::move(row)));
        }
        std::vector<Vec> criterion = left_kernel(residues, above.size());

        std::vector<Vec> lin_rows;
        for (std::size_t g : s.generators_of_degree(deg - 1)) {
            auto r = d0_row(s, g);
            if (r.empty()) continue;
            Vec row(gens.size(), Rat(0));
            bool nonzero = false;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                auto it = r.find(s.generators()[gens[k]].name);
                if (it != r.end()) {
                    row[k] = it->second;
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
        dims[static_cast<std::size_t>(deg)] = joint.dim() - lin_span.dim();
    }
    return dims;
}

/// Whether a single generator passes the spherical criterion.
inline bool generator_is_spherical(const SullivanAlgebra& s, const std::string& name) {
    std::size_t g = s.generators().index_of(name);
    int deg = s.generators()[g].degree;
    if (deg + 2 > s.cap()) throw CapExceededError("generator_is_spherical: too close to cap");
    std::vector<Monomial> above = monomials_of_degree(s.generators(), deg + 1);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < above.size(); ++i) index.emplace(above[i], i);
    IncrementalSpan receptacle(above.size());
    for (const Monomial& m : monomials_of_degree(s.generators(), deg)) {
        if (m.wordlength() < 2) continue;
        Vec row(above.size(), Rat(0));
        bool nonzero = false;
        Polynomial dm = s.apply_d(Polynomial::mono(m));
        for (const auto& [t, c] : dm.terms()) {
            row[index.at(t)] = c;
            nonzero = true;
        }
        if (nonzero) receptacle.add(std::move(row));
    }
    Vec dv(above.size(), Rat(0));
    for (const auto& [t, c] : s.diff_of(g).terms()) dv[index.at(t)] = c;
    return receptacle.contains(dv);
}

/// Normal form as used here: minimal, and every spherical generator has an
/// identically zero differential.
inline bool is_normal_form(const SullivanAlgebra& s) {
    if (!is_minimal(s)) return false;
    for (std::size_t g = 0; g < s.generators().size(); ++g) {
        if (s.generators()[g].degree + 2 > s.cap()) continue;
        if (generator_is_spherical(s, s.generators()[g].name) && !s.diff_of(g).zero())
            return false;
    }
    return true;
}

/// The two-parameter family generalizing the dual example: generators a,
/// b = a', n_1, ..., n_count with da = db = 0, d n_1 = a*b, d n_i = a*n_{i-1}.
/// Degrees are forced by the differentials: deg b = deg a - 1 and
/// deg n_i = (i + 1)(deg a - 1).
inline SullivanAlgebra build_dual_example(int deg_a, int count, int cap) {
    if (deg_a < 3 || deg_a % 2 == 0)
        throw PreconditionError("build_dual_example: deg_a must be odd and >= 3");
    if (count < 1) throw PreconditionError("build_dual_example: count must be positive");
    int top = (count + 1) * (deg_a - 1);
    if (top > cap)
        throw CapExceededError("build_dual_example: cap " + std::to_string(cap) +
                               " too small; n" + std::to_string(count) + " needs degree " +
                               std::to_string(top));
    std::vector<Generator> gens{{"a", deg_a}, {"b", deg_a - 1}};
    for (int i = 1; i <= count; ++i)
        gens.push_back(Generator{"n" + std::to_string(i), (i + 1) * (deg_a - 1)});
    CdgaGenSet gs(gens);
    std::map<std::string, Polynomial> diff;
    auto mono_ab = product(gs, Polynomial::mono(Monomial::generator(gs.size(), 0)),
                           Polynomial::mono(Monomial::generator(gs.size(), 1)));
    diff["n1"] = mono_ab;
    for (int i = 2; i <= count; ++i)
        diff["n" + std::to_string(i)] =
            product(gs, Polynomial::mono(Monomial::generator(gs.size(), 0)),
                    Polynomial::mono(Monomial::generator(gs.size(), gs.index_of(
                                                                        "n" + std::to_string(i - 1)))));
    return SullivanAlgebra(std::move(gs), diff, cap);
}

struct CeDual {
    SullivanAlgebra algebra;
    int reliable_through;  // cohomology is exact up to and including this degree
};

/// Chevalley-Eilenberg dualization of a truncated chain Lie algebra: one
/// commutative generator per Lie basis element (degree shifted up by one),
/// differential = transpose of the boundary plus transpose of the bracket.
/// The sign convention is fixed here and validated behaviorally: the result
/// passes its own d^2 check and reproduces the expected cohomology.
inline CeDual ce_dualize(const Dgla& d, int cap) {
    if (cap > d.cap()) throw CapExceededError("ce_dualize: cap exceeds the algebra's cap");
    const Alphabet& alph = d.alphabet();

    struct DualGen {
        const BasisElement* lie;
        int lie_degree;
    };
    std::vector<DualGen> duals;
    std::vector<std::vector<std::size_t>> by_degree(static_cast<std::size_t>(cap) + 1);
    std::vector<Generator> gens;
    for (int n = 1; n <= cap; ++n)
        for (const BasisElement& be : d.layer(n)) {
            by_degree[static_cast<std::size_t>(n)].push_back(duals.size());
            duals.push_back(DualGen{&be, n});
            gens.push_back(Generator{"s" + be.lie.pretty(alph), n + 1});
        }
    CdgaGenSet gs(gens);

    std::vector<Polynomial> dpoly(duals.size());
    std::vector<std::unique_ptr<LayerCoordinates>> coords(static_cast<std::size_t>(cap) + 1);
    auto layer_coords = [&](int n) -> LayerCoordinates& {
        auto& slot = coords[static_cast<std::size_t>(n)];
        if (!slot) slot = std::make_unique<LayerCoordinates>(d, n);
        return *slot;
    };

    // transpose of the boundary: the coefficient of l_g in delta(l_a)
    // contributes to d(v_g) on v_a
    for (std::size_t a = 0; a < duals.size(); ++a) {
        TensorElement da = expand(alph, d.apply_diff(duals[a].lie->lie));
        if (da.zero()) continue;
        int n = duals[a].lie_degree - 1;
        auto c = layer_coords(n).coords(da);
        if (!c) throw Error("ce_dualize: a boundary escapes its layer (bug)");
        for (std::size_t k = 0; k < by_degree[static_cast<std::size_t>(n)].size(); ++k) {
            std::size_t g = by_degree[static_cast<std::size_t>(n)][k];
            if ((*c)[k] == 0) continue;
            dpoly[g].add_term(Monomial::generator(gs.size(), a), (*c)[k]);
        }
    }

    // transpose of the bracket: [l_a, l_b] = sum m^g_{ab} l_g contributes
    // (-1)^{deg l_a} m^g_{ab} v_a v_b to d(v_g), halved on the diagonal.
    // The pair of signs here (none on the boundary transpose, the first
    // factor's degree on the bracket transpose) makes the derivation
    // extension square to zero against the stored boundary; the
    // construction-time check enforces this.
    for (std::size_t a = 0; a < duals.size(); ++a)
        for (std::size_t b = a; b < duals.size(); ++b) {
            int n = duals[a].lie_degree + duals[b].lie_degree;
            if (n > cap) continue;
            TensorElement br =
                tensor_commutator(alph, duals[a].lie->tensor, duals[b].lie->tensor);
            if (br.zero()) continue;
            auto c = layer_coords(n).coords(br);
            if (!c) throw Error("ce_dualize: a bracket escapes its layer (bug)");
            std::vector<int> exps(gs.size(), 0);
            ++exps[a];
            ++exps[b];
            Monomial vavb{std::move(exps)};
            for (std::size_t k = 0; k < by_degree[static_cast<std::size_t>(n)].size(); ++k) {
                std::size_t g = by_degree[static_cast<std::size_t>(n)][k];
                if ((*c)[k] == 0) continue;
                Rat coeff = (*c)[k];
                if (duals[a].lie_degree % 2 != 0) coeff = -coeff;
                if (a == b) coeff /= 2;
                dpoly[g].add_term(vavb, coeff);
            }
        }

    std::map<std::string, Polynomial> diff;
    for (std::size_t g = 0; g < duals.size(); ++g)
        if (!dpoly[g].zero()) diff[gens[g].name] = dpoly[g];
    return CeDual{SullivanAlgebra(std::move(gs), diff, cap + 1), cap};
}

}  // namespace qlie
