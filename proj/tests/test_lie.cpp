#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qlie/lie.hpp"

using namespace qlie;

namespace {
const Alphabet kOdd({Generator{"a", 3}, Generator{"b", 3}});
const Alphabet kEven({Generator{"x", 2}, Generator{"y", 4}});

TensorElement word(const Alphabet&, std::initializer_list<GenIndex> gens, long coeff = 1) {
    TensorElement t;
    t.add_term(Word(gens), Rat(coeff));
    return t;
}
}  // namespace

TEST_CASE("expanding a generator gives the single word with coefficient one") {
    TensorElement t = expand(kOdd, LieElement::generator(kOdd, "a"));
    CHECK(t == word(kOdd, {0}));
}

TEST_CASE("self-bracket of an odd generator doubles the square word") {
    LieElement a = LieElement::generator(kOdd, "a");
    CHECK(expand(kOdd, bracket(a, a)) == word(kOdd, {0, 0}, 2));
}

TEST_CASE("self-bracket of an even generator expands to zero") {
    LieElement x = LieElement::generator(kEven, "x");
    CHECK(expand(kEven, bracket(x, x)).zero());
}

TEST_CASE("triple self-bracket of an odd generator vanishes") {
    // oracle by direct tensor arithmetic: [a,[a,a]] = a(2aa) - (2aa)a with
    // the sign of odd times even, i.e. 2aaa - 2aaa = 0
    LieElement a = LieElement::generator(kOdd, "a");
    TensorElement inner = word(kOdd, {0, 0}, 2);
    TensorElement direct = concat(word(kOdd, {0}), inner) - concat(inner, word(kOdd, {0}));
    CHECK(direct.zero());
    CHECK(expand(kOdd, bracket(a, bracket(a, a))).zero());
}

TEST_CASE("bracket with the zero element is zero") {
    LieElement a = LieElement::generator(kOdd, "a");
    CHECK(bracket(a, LieElement()).zero_form());
    CHECK(expand(kOdd, bracket(a, LieElement())).zero());
}

TEST_CASE("odd-odd bracket expands with a plus sign") {
    LieElement a = LieElement::generator(kOdd, "a");
    LieElement b = LieElement::generator(kOdd, "b");
    CHECK(expand(kOdd, bracket(a, b)) == word(kOdd, {0, 1}) + word(kOdd, {1, 0}));
}

TEST_CASE("span of [a,b] and [b,a] for odd generators is a line") {
    TensorSpan span;
    LieElement a = LieElement::generator(kOdd, "a");
    LieElement b = LieElement::generator(kOdd, "b");
    CHECK(span.add(expand(kOdd, bracket(a, b))));
    CHECK_FALSE(span.add(expand(kOdd, bracket(b, a))));
    CHECK(span.dim() == 1);
}

TEST_CASE("adjoint powers") {
    LieElement a = LieElement::generator(kOdd, "a");
    LieElement b = LieElement::generator(kOdd, "b");
    CHECK(expand(kOdd, ad_power(a, 0, b)) == expand(kOdd, b));
    CHECK(expand(kOdd, ad_power(a, 1, b)) == expand(kOdd, bracket(a, b)));

    // [[a,a],y] = 2 [a,[a,y]] for odd a, irrespective of y
    LieElement y = bracket(a, b);
    TensorElement lhs = expand(kOdd, ad_power(bracket(a, a), 1, y));
    TensorElement rhs = expand(kOdd, ad_power(a, 2, y));
    rhs *= Rat(2);
    CHECK(lhs == rhs);
}

TEST_CASE("expansion is a Lie algebra map onto the tensor commutator") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Alphabet& alph = trial % 2 ? kOdd : kEven;
        LieWord u = testing::random_monomial(alph, 1 + static_cast<int>(rng() % 3), rng);
        LieWord v = testing::random_monomial(alph, 1 + static_cast<int>(rng() % 3), rng);
        LieElement eu = LieElement::single(make_rat(1 + static_cast<long>(rng() % 3)), u);
        LieElement ev = LieElement::single(make_rat(1, 1 + static_cast<long>(rng() % 2)), v);
        CHECK(expand(alph, bracket(eu, ev)) ==
              tensor_commutator(alph, expand(alph, eu), expand(alph, ev)));
    }
}

TEST_CASE("graded antisymmetry on sampled monomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Alphabet& alph = trial % 2 ? kOdd : kEven;
        LieWord u = testing::random_monomial(alph, 1 + static_cast<int>(rng() % 3), rng);
        LieWord v = testing::random_monomial(alph, 1 + static_cast<int>(rng() % 3), rng);
        LieElement eu = LieElement::single(Rat(1), u);
        LieElement ev = LieElement::single(Rat(1), v);
        TensorElement sum = expand(alph, bracket(eu, ev));
        TensorElement vu = expand(alph, bracket(ev, eu));
        if ((u.degree() % 2) && (v.degree() % 2))
            sum -= vu;  // [u,v] = +[v,u] when both degrees are odd
        else
            sum += vu;
        CHECK(sum.zero());
    }
}

TEST_CASE("graded Jacobi identity on sampled monomials") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Alphabet& alph = trial % 2 ? kOdd : kEven;
        LieElement x = LieElement::single(Rat(1), testing::random_monomial(alph, 1 + static_cast<int>(rng() % 2), rng));
        LieElement y = LieElement::single(Rat(1), testing::random_monomial(alph, 1 + static_cast<int>(rng() % 2), rng));
        LieElement z = LieElement::single(Rat(1), testing::random_monomial(alph, 1 + static_cast<int>(rng() % 2), rng));
        int dx = *x.degree(), dy = *y.degree();
        TensorElement lhs = expand(alph, bracket(x, bracket(y, z)));
        TensorElement rhs = expand(alph, bracket(bracket(x, y), z));
        TensorElement mixed = expand(alph, bracket(y, bracket(x, z)));
        if ((dx % 2) && (dy % 2))
            rhs -= mixed;
        else
            rhs += mixed;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("word length is only defined for homogeneous combinations") {
    LieElement a = LieElement::generator(kOdd, "a");
    LieElement mixed = a + bracket(a, LieElement::generator(kOdd, "b"));
    CHECK_FALSE(mixed.wordlength().has_value());
    CHECK(a.wordlength() == 1);
    CHECK(*bracket(a, a).wordlength() == 2);
    CHECK_FALSE(mixed.degree().has_value());
}

TEST_CASE("pretty printing uses the left-normed bracket style") {
    LieElement a = LieElement::generator(kOdd, "a");
    LieElement b = LieElement::generator(kOdd, "b");
    CHECK(ad_power(a, 2, b).pretty(kOdd) == "[a,[a,b]]");
    CHECK(bracket(b, bracket(a, b)).pretty(kOdd) == "[b,[a,b]]");
}
