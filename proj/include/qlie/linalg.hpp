#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qlie/errors.hpp"
#include "qlie/rational.hpp"

namespace qlie {

/// Coordinate vector against an explicit ordered basis label list.
using Vec = std::vector<Rat>;

inline bool is_zero_vec(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

/// A linear subspace kept in reduced row echelon form: rows are nonzero,
/// pivots are 1, and pivot columns vanish in every other row.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> rref_rows;
    std::vector<std::size_t> pivot_cols;

    std::size_t dim() const { return rref_rows.size(); }
};

/// Growing RREF basis. add() reduces the candidate against the rows kept so
/// far and keeps it exactly when it enlarges the span.
class IncrementalSpan {
  public:
    explicit IncrementalSpan(std::size_t ambient_dim) { sub_.ambient_dim = ambient_dim; }

    /// Reduces v modulo the current span (result has zeros in all pivot columns).
    Vec residue(Vec v) const {
        if (v.size() != sub_.ambient_dim)
            throw DimensionMismatchError("IncrementalSpan: vector has wrong ambient dimension");
        for (std::size_t r = 0; r < sub_.rref_rows.size(); ++r) {
            const Rat& c = v[sub_.pivot_cols[r]];
            if (c == 0) continue;
            Rat f = c;
            const Vec& row = sub_.rref_rows[r];
            for (std::size_t j = sub_.pivot_cols[r]; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(residue(v)); }

    /// Returns true iff the vector was independent (rank grew).
    bool add(Vec v) {
        v = residue(std::move(v));
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) return false;
        Rat inv = v[lead];
        for (Rat& x : v) x /= inv;
        // back-substitute into existing rows, then insert keeping pivots sorted
        for (std::size_t r = 0; r < sub_.rref_rows.size(); ++r) {
            Rat f = sub_.rref_rows[r][lead];
            if (f == 0) continue;
            Vec& row = sub_.rref_rows[r];
            for (std::size_t j = lead; j < row.size(); ++j)
                if (v[j] != 0) row[j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < sub_.pivot_cols.size() && sub_.pivot_cols[pos] < lead) ++pos;
        sub_.rref_rows.insert(sub_.rref_rows.begin() + pos, std::move(v));
        sub_.pivot_cols.insert(sub_.pivot_cols.begin() + pos, lead);
        return true;
    }

    std::size_t dim() const { return sub_.rref_rows.size(); }
    std::size_t ambient_dim() const { return sub_.ambient_dim; }
    const Subspace& space() const { return sub_; }
    Subspace take() && { return std::move(sub_); }

  private:
    Subspace sub_;
};

/// RREF basis of the linear span. All vectors must share one ambient
/// dimension; an explicit ambient is required so the empty span is typed.
inline Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    IncrementalSpan s(ambient_dim);
    for (const Vec& v : vectors) s.add(v);
    return std::move(s).take();
}

inline Subspace span(const std::vector<Vec>& vectors) {
    if (vectors.empty())
        throw DimensionMismatchError("span: ambient dimension required for an empty family");
    return span(vectors, vectors.front().size());
}

/// Reduce v against rows already in reduced row echelon form.
inline Vec residue(const Subspace& s, Vec v) {
    if (v.size() != s.ambient_dim)
        throw DimensionMismatchError("residue: vector has wrong ambient dimension");
    for (std::size_t r = 0; r < s.rref_rows.size(); ++r) {
        const Rat& c = v[s.pivot_cols[r]];
        if (c == 0) continue;
        Rat f = c;
        const Vec& row = s.rref_rows[r];
        for (std::size_t j = s.pivot_cols[r]; j < v.size(); ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return v;
}

/// Exact membership test (no tolerance).
inline bool member(const Subspace& s, const Vec& v) { return is_zero_vec(residue(s, v)); }

inline Vec unit_vec(std::size_t dim, std::size_t i) {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

/// Deterministic complement choice: the first standard basis vector outside
/// the subspace, then the first e_i + e_j in lexicographic (i, j) order. A
/// proper subspace always misses a standard vector, so the pair stage is a
/// guard rather than an expected path.
inline Vec complement_pick(const Subspace& sub, std::size_t ambient_basis_size) {
    if (sub.ambient_dim != ambient_basis_size)
        throw DimensionMismatchError("complement_pick: ambient size mismatch");
    if (sub.dim() >= ambient_basis_size)
        throw NoComplementError("complement_pick: subspace already fills the ambient space");
    for (std::size_t i = 0; i < ambient_basis_size; ++i) {
        Vec e = unit_vec(ambient_basis_size, i);
        if (!member(sub, e)) return e;
    }
    for (std::size_t i = 0; i < ambient_basis_size; ++i)
        for (std::size_t j = i + 1; j < ambient_basis_size; ++j) {
            Vec e = unit_vec(ambient_basis_size, i);
            e[j] = 1;
            if (!member(sub, e)) return e;
        }
    throw NoComplementError("complement_pick: no complement found");
}

/// dim(big) - dim(small), after checking small really sits inside big.
inline std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim != small.ambient_dim)
        throw DimensionMismatchError("quotient_dim: ambient dimensions differ");
    for (const Vec& row : small.rref_rows)
        if (!member(big, row))
            throw NotASubspaceError("quotient_dim: second argument is not contained in the first");
    return big.dim() - small.dim();
}

/// Basis of {c : sum_i c_i rows[i] = 0}, i.e. the left kernel of the matrix
/// whose rows are given. Computed by eliminating [rows | I] and collecting
/// the multiplier parts of the rows that vanished.
inline std::vector<Vec> left_kernel(const std::vector<Vec>& rows, std::size_t ambient_dim) {
    const std::size_t k = rows.size();
    std::vector<Vec> work(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != ambient_dim)
            throw DimensionMismatchError("left_kernel: row has wrong ambient dimension");
        work[i] = rows[i];
        work[i].resize(ambient_dim + k, Rat(0));
        work[i][ambient_dim + i] = 1;
    }
    // forward elimination restricted to the first ambient_dim columns
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ambient_dim && rank < k; ++col) {
        std::size_t piv = rank;
        while (piv < k && work[piv][col] == 0) ++piv;
        if (piv == k) continue;
        std::swap(work[rank], work[piv]);
        Rat inv = work[rank][col];
        for (Rat& x : work[rank]) x /= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == rank) continue;
            Rat f = work[r][col];
            if (f == 0) continue;
            for (std::size_t j = col; j < ambient_dim + k; ++j)
                if (work[rank][j] != 0) work[r][j] -= f * work[rank][j];
        }
        ++rank;
    }
    std::vector<Vec> kernel;
    for (std::size_t r = rank; r < k; ++r)
        kernel.emplace_back(work[r].begin() + static_cast<std::ptrdiff_t>(ambient_dim),
                            work[r].end());
    return kernel;
}

/// Expresses vectors in a fixed independent row family. The family is put in
/// RREF once with multiplier tracking; each solve is a single reduction.
class CoordinateSolver {
  public:
    CoordinateSolver(const std::vector<Vec>& rows, std::size_t ambient_dim)
        : ambient_(ambient_dim), count_(rows.size()) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ambient_dim)
                throw DimensionMismatchError("CoordinateSolver: row has wrong ambient dimension");
            Vec aug = rows[i];
            aug.resize(ambient_dim + count_, Rat(0));
            aug[ambient_dim + i] = 1;
            // reduce against what we have, then normalize and back-substitute
            for (std::size_t r = 0; r < rref_.size(); ++r) {
                Rat f = aug[pivots_[r]];
                if (f == 0) continue;
                for (std::size_t j = 0; j < aug.size(); ++j)
                    if (rref_[r][j] != 0) aug[j] -= f * rref_[r][j];
            }
            std::size_t lead = 0;
            while (lead < ambient_dim && aug[lead] == 0) ++lead;
            if (lead == ambient_dim)
                throw PreconditionError("CoordinateSolver: rows are not independent");
            Rat inv = aug[lead];
            for (Rat& x : aug) x /= inv;
            for (std::size_t r = 0; r < rref_.size(); ++r) {
                Rat f = rref_[r][lead];
                if (f == 0) continue;
                for (std::size_t j = 0; j < aug.size(); ++j)
                    if (aug[j] != 0) rref_[r][j] -= f * aug[j];
            }
            std::size_t pos = 0;
            while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
            rref_.insert(rref_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(aug));
            pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        }
    }

    /// Coordinates c with sum_i c_i row_i = v, when v lies in the span.
    std::optional<Vec> solve(const Vec& v) const {
        if (v.size() != ambient_)
            throw DimensionMismatchError("CoordinateSolver: vector has wrong ambient dimension");
        Vec aug = v;
        aug.resize(ambient_ + count_, Rat(0));
        for (std::size_t r = 0; r < rref_.size(); ++r) {
            Rat f = aug[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < aug.size(); ++j)
                if (rref_[r][j] != 0) aug[j] -= f * rref_[r][j];
        }
        for (std::size_t j = 0; j < ambient_; ++j)
            if (aug[j] != 0) return std::nullopt;
        Vec coords(count_);
        for (std::size_t i = 0; i < count_; ++i) coords[i] = -aug[ambient_ + i];
        return coords;
    }

  private:
    std::size_t ambient_;
    std::size_t count_;
    std::vector<Vec> rref_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qlie
