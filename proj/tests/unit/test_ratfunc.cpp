#include <doctest.h>

#include <random>

#include "msw/ratfunc.hpp"

using namespace msw;

namespace {

MPoly random_qt_poly(std::mt19937& rng, int max_terms, int max_deg,
                     int max_coeff) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> dg(0, max_deg);
    std::uniform_int_distribution<int> cf(-max_coeff, max_coeff);
    MPoly p;
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i)
        p.add_term(Monomial({{var_q(), dg(rng)}, {var_t(), dg(rng)}}),
                   Rat(cf(rng)));
    return p;
}

const MPoly Q = MPoly::variable(var_q());
const MPoly T = MPoly::variable(var_t());
const MPoly ONE = MPoly::constant(1);

}  // namespace

TEST_CASE("ratfunc_reduce examples") {
    // (q^2-1)/(q-1) = q+1
    RatFunc r1 = ratfunc_reduce(Q * Q - ONE, Q - ONE);
    CHECK(r1.is_polynomial());
    CHECK(r1.poly() == Q + ONE);

    // (0)/(t) = 0
    RatFunc r2 = ratfunc_reduce(MPoly(), T);
    CHECK(r2.is_zero());

    // (qt)/(q) = t
    RatFunc r3 = ratfunc_reduce(Q * T, Q);
    CHECK(r3.is_polynomial());
    CHECK(r3.poly() == T);

    CHECK_THROWS_AS(ratfunc_reduce(Q, MPoly()), std::domain_error);
}

TEST_CASE("reduce(ac, bc) = reduce(a, b) on random inputs") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 40) {
        MPoly a = random_qt_poly(rng, 3, 3, 4);
        MPoly b = random_qt_poly(rng, 3, 3, 4);
        MPoly c = random_qt_poly(rng, 3, 2, 4);
        if (b.is_zero() || c.is_zero()) continue;
        ++done;
        CHECK(ratfunc_reduce(a * c, b * c) == ratfunc_reduce(a, b));
    }
}

TEST_CASE("equality is a congruence: a/b = c/d iff ad = bc") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 40) {
        MPoly a = random_qt_poly(rng, 3, 3, 4);
        MPoly b = random_qt_poly(rng, 3, 3, 4);
        MPoly c = random_qt_poly(rng, 3, 3, 4);
        MPoly d = random_qt_poly(rng, 3, 3, 4);
        if (b.is_zero() || d.is_zero()) continue;
        ++done;
        bool eq = RatFunc(a, b) == RatFunc(c, d);
        bool cross = (a * d == b * c);
        CHECK(eq == cross);
    }
}

TEST_CASE("canonical denominator is monic under graded-lex q > t") {
    RatFunc r(ONE, Q.scaled(Rat(2)) - T);  // 1/(2q - t)
    CHECK(r.den().leading_coeff() == Rat(1));
    CHECK(r.den() == Q - T.scaled(Rat(1, 2)));
}

TEST_CASE("field arithmetic") {
    RatFunc q = RatFunc::q(), t = RatFunc::t(), one(1);
    RatFunc r = one / (one - q) + one / (one + q);
    // 2/(1-q^2)
    CHECK(r == RatFunc(MPoly::constant(2), ONE - Q * Q));
    CHECK(q * t / q == t);
    CHECK((q - q).is_zero());
    CHECK((q / q).is_one());
}

TEST_CASE("laurent handling: t -> 1/t") {
    // t^{n} K(q, 1/t) style: (t)/(1) inverted is 1/t -> num 1, den t
    RatFunc t = RatFunc::t();
    RatFunc inv = t.invert_t();
    CHECK(inv == RatFunc(ONE, T));
    RatFunc back = inv.invert_t();
    CHECK(back == t);

    // (1 - t^{-1}) = (t-1)/t
    RatFunc r = RatFunc(1) - inv;
    CHECK(r == RatFunc(T - ONE, T));
}

TEST_CASE("substitutions on rational functions") {
    RatFunc q = RatFunc::q(), one(1);
    RatFunc f = one / (one - q);
    CHECK(f.raised(2) == one / (one - q * q));
    CHECK(f.substitute_zero_q() == one);
    RatFunc g = (one - q * q) / (one - q);
    CHECK(g.eval_one_one() == Rat(2));  // reduces to 1+q first
    CHECK(f.swap_qt() == one / (one - RatFunc::t()));
}
