#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlie/linalg.hpp"

using namespace qlie;

namespace {
Vec rv(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("span of the empty family has dimension zero") {
    Subspace s = span({}, 4);
    CHECK(s.dim() == 0);
    CHECK(s.ambient_dim == 4);
}

TEST_CASE("span of a redundant plane family has dimension two") {
    Subspace s = span({rv({1, 0}), rv({0, 1}), rv({1, 1})});
    CHECK(s.dim() == 2);
}

TEST_CASE("span rejects mixed ambient dimensions") {
    CHECK_THROWS_AS(span({rv({1, 0}), rv({1, 0, 0})}), DimensionMismatchError);
}

TEST_CASE("membership is exact") {
    Subspace zero = span({}, 3);
    CHECK(member(zero, rv({0, 0, 0})));
    Subspace line = span({rv({1, 0})});
    CHECK_FALSE(member(line, rv({0, 1})));
    CHECK(member(line, rv({7, 0})));
    CHECK_THROWS_AS(member(line, rv({1, 0, 0})), DimensionMismatchError);
}

TEST_CASE("every spanning vector lies in its span") {
    std::vector<Vec> family{rv({2, 4, 6}), rv({1, 1, 1}), rv({3, 5, 7})};
    Subspace s = span(family);
    for (const Vec& v : family) CHECK(member(s, v));
}

TEST_CASE("complement picks are deterministic and outside the subspace") {
    SECTION("zero subspace in dimension three picks e0") {
        CHECK(complement_pick(span({}, 3), 3) == rv({1, 0, 0}));
    }
    SECTION("span of e0 in dimension two picks e1") {
        CHECK(complement_pick(span({rv({1, 0})}), 2) == rv({0, 1}));
    }
    SECTION("span of e0 - e1 picks e0, confirmed by the membership oracle") {
        Subspace s = span({rv({1, -1})});
        Vec pick = complement_pick(s, 2);
        CHECK(pick == rv({1, 0}));
        CHECK_FALSE(member(s, pick));
    }
    SECTION("full space has no complement") {
        CHECK_THROWS_AS(complement_pick(span({rv({1, 0}), rv({0, 1})}), 2), NoComplementError);
    }
}

TEST_CASE("quotient dimensions") {
    Subspace big = span({rv({1, 0, 0}), rv({0, 1, 0})});
    SECTION("equal spaces quotient to zero") { CHECK(quotient_dim(big, big) == 0); }
    SECTION("plane by line") {
        CHECK(quotient_dim(big, span({rv({1, 1, 0})})) == 1);
    }
    SECTION("containment failure raises") {
        CHECK_THROWS_AS(quotient_dim(big, span({rv({0, 0, 1})})), NotASubspaceError);
    }
}

TEST_CASE("left kernel of a row family") {
    // rows: r0 = (1,0), r1 = (0,1), r2 = (1,1); kernel spanned by r0+r1-r2
    std::vector<Vec> rows{rv({1, 0}), rv({0, 1}), rv({1, 1})};
    auto ker = left_kernel(rows, 2);
    REQUIRE(ker.size() == 1);
    Vec zero(2, Rat(0));
    Vec combo(2, Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) combo[j] += ker[0][i] * rows[i][j];
    CHECK(combo == zero);
    CHECK_FALSE(is_zero_vec(ker[0]));
}

TEST_CASE("coordinate solver recovers exact coordinates") {
    std::vector<Vec> rows{rv({1, 2, 0}), rv({0, 1, 1})};
    CoordinateSolver solver(rows, 3);
    Vec target{Rat(2), Rat(5), Rat(1)};  // 2*r0 + 1*r1
    auto c = solver.solve(target);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rat(2));
    CHECK((*c)[1] == Rat(1));
    CHECK_FALSE(solver.solve(rv({0, 0, 1})).has_value());
}

TEST_CASE("rref is idempotent and rank is invariant under rescaling") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        std::vector<Vec> m;
        for (std::size_t r = 0; r < rows; ++r) {
            Vec v(cols);
            for (auto& x : v) x = make_rat(static_cast<long>(rng() % 7) - 3,
                                           1 + static_cast<long>(rng() % 3));
            m.push_back(std::move(v));
        }
        Subspace first = span(m, cols);
        Subspace second = span(first.rref_rows, cols);
        CHECK(first.rref_rows == second.rref_rows);
        CHECK(first.pivot_cols == second.pivot_cols);

        // permute and rescale by nonzero rationals: the rank must not move
        std::vector<Vec> scaled = m;
        std::shuffle(scaled.begin(), scaled.end(), rng);
        for (auto& v : scaled) {
            Rat s = make_rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4));
            for (auto& x : v) x *= s;
        }
        CHECK(span(scaled, cols).dim() == first.dim());
    }
}
