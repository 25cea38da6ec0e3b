#include <doctest.h>

#include "msw/symfunc.hpp"

using namespace msw;

namespace {

SymFunc schur(const Partition& l) {
    return SymFunc::single(l.size(), SfBasis::S, l);
}

const RatFunc ONE(1);

}  // namespace

TEST_CASE("s_(1) in p basis is p_(1)") {
    SymFunc f = convert_basis(schur(Partition{1}), SfBasis::P);
    REQUIRE(f.coeffs.size() == 1);
    CHECK(f.coeff(Partition{1}) == ONE);
}

TEST_CASE("s_(2) = 1/2 p_(2) + 1/2 p_(1,1)") {
    SymFunc f = convert_basis(schur(Partition{2}), SfBasis::P);
    CHECK(f.coeff(Partition{2}) == RatFunc(Rat(1, 2)));
    CHECK(f.coeff(Partition{1, 1}) == RatFunc(Rat(1, 2)));
}

TEST_CASE("h_n = s_(n)") {
    for (int n = 1; n <= 5; ++n) {
        SymFunc h = SymFunc::single(n, SfBasis::H, Partition{std::vector<int>{n}});
        SymFunc s = convert_basis(h, SfBasis::S);
        REQUIRE(s.coeffs.size() == 1);
        CHECK(s.coeff(Partition{std::vector<int>{n}}) == ONE);
    }
}

TEST_CASE("e_n = s_(1^n)") {
    for (int n = 1; n <= 5; ++n) {
        SymFunc e = SymFunc::single(n, SfBasis::E, Partition{std::vector<int>{n}});
        SymFunc s = convert_basis(e, SfBasis::S);
        REQUIRE(s.coeffs.size() == 1);
        CHECK(s.coeff(Partition{std::vector<int>(n, 1)}) == ONE);
    }
}

TEST_CASE("round trips are identities up to degree 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc s = schur(l);
            for (SfBasis b : {SfBasis::P, SfBasis::M, SfBasis::E, SfBasis::H}) {
                SymFunc back = convert_basis(convert_basis(s, b), SfBasis::S);
                CHECK(back == s);
            }
        }
    }
}

TEST_CASE("plethysm: p_2[X/(1-q)] = p_2/(1-q^2)") {
    SymFunc p2 = SymFunc::single(2, SfBasis::P, Partition{2});
    SymFunc r = plethystic_eval(p2, Alphabet::X_over_one_minus_q());
    SymFunc rp = convert_basis(r, SfBasis::P);
    MPoly one = MPoly::constant(1), q = MPoly::variable(var_q());
    CHECK(rp.coeff(Partition{2}) == RatFunc(one, one - q * q));
    CHECK(rp.coeff(Partition{1, 1}).is_zero());
}

TEST_CASE("plethysm by X is the identity") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc s = schur(l);
            CHECK(plethystic_eval(s, Alphabet::X()) == s);
        }
}

TEST_CASE("s_1[X(1-q)] = (1-q) s_1") {
    SymFunc r = plethystic_eval(schur(Partition{1}),
                                Alphabet::X_times_one_minus_q());
    CHECK(r.coeff(Partition{1}) ==
          RatFunc(MPoly::constant(1) - MPoly::variable(var_q())));
}

TEST_CASE("plethystic_eval is a ring homomorphism on products") {
    Alphabet a = Alphabet::X_over_one_minus_q();
    for (auto [l1, l2] : std::vector<std::pair<Partition, Partition>>{
             {Partition{1}, Partition{1}},
             {Partition{2}, Partition{1}},
             {Partition{2, 1}, Partition{2}}}) {
        SymFunc f = schur(l1), g = schur(l2);
        SymFunc lhs = plethystic_eval(convert_basis(symfunc_mul(f, g), SfBasis::S), a);
        SymFunc rhs = convert_basis(
            symfunc_mul(plethystic_eval(f, a), plethystic_eval(g, a)),
            SfBasis::S);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inverse alphabet undoes X/(1-q) for all Schur, n <= 6") {
    Alphabet fwd = Alphabet::X_over_one_minus_q();
    Alphabet bwd = Alphabet::X_times_one_minus_q();
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc s = schur(l);
            CHECK(plethystic_eval(plethystic_eval(s, fwd), bwd) == s);
        }
}

TEST_CASE("principal value at one") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            RatFunc v = principal_value_at_one(schur(l));
            if (l.length() <= 1) CHECK(v.is_one());
            else CHECK(v.is_zero());
        }
    // products of p_k[1]
    SymFunc p21 = SymFunc::single(3, SfBasis::P, Partition{2, 1});
    CHECK(principal_value_at_one(p21).is_one());
}
