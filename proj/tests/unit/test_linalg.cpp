#include <doctest.h>

#include <random>

#include "msw/linalg.hpp"
#include "oracle.hpp"

using namespace msw;

namespace {

std::vector<std::vector<Rat>> to_rows(const Matrix<Rat>& m) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

bool in_span(const std::vector<std::vector<Rat>>& span,
             const std::vector<Rat>& v) {
    // v in rowspace(span)  <=>  rank unchanged after appending v
    auto a = oracle::rref(span);
    auto b = span;
    b.push_back(v);
    return oracle::rref(b).rank == a.rank;
}

bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b) {
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("kernel_basis trivial examples") {
    Matrix<Rat> id = Matrix<Rat>::identity(2);
    CHECK(kernel_basis(id).empty());

    Matrix<Rat> m(1, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    // spans (1,-1)
    CHECK(k[0][0] * Rat(-1) == k[0][1]);
    CHECK(!(k[0][0] == Rat(0)));
}

TEST_CASE("kernel of empty matrix is the full standard basis") {
    Matrix<Rat> m(0, 3);
    auto k = kernel_basis(m);
    CHECK(k.size() == 3);
}

TEST_CASE("rank-3 random 3x4 matrix has one kernel vector") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-4, 4);
    for (;;) {
        Matrix<Rat> m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rat(d(rng));
        if (rank_of(m) != 3) continue;
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        auto mv = m.apply(k[0]);
        for (const auto& x : mv) CHECK(x == Rat(0));
        // agrees with the naive Gaussian oracle
        auto ok = oracle::kernel(to_rows(m), 4);
        REQUIRE(ok.size() == 1);
        CHECK(same_span({k[0]}, {ok[0]}));
        break;
    }
}

TEST_CASE("solve_linear examples") {
    Matrix<RatFunc> id = Matrix<RatFunc>::identity(2);
    std::vector<RatFunc> b{RatFunc::q(), RatFunc::t()};
    auto s = solve_linear(id, b);
    REQUIRE(s.consistent());
    CHECK(s.status == LinearSolution<RatFunc>::Status::Unique);
    CHECK(s.solution[0] == RatFunc::q());
    CHECK(s.solution[1] == RatFunc::t());

    Matrix<Rat> m(2, 2);
    m.at(0, 0) = Rat(1); m.at(0, 1) = Rat(1);
    m.at(1, 0) = Rat(2); m.at(1, 1) = Rat(2);
    auto bad = solve_linear(m, {Rat(1), Rat(3)});
    CHECK(!bad.consistent());

    auto good = solve_linear(m, {Rat(1), Rat(2)});
    REQUIRE(good.consistent());
    CHECK(good.status == LinearSolution<Rat>::Status::Underdetermined);
    CHECK(good.kernel_dim == 1);
    CHECK(good.solution[0] + good.solution[1] == Rat(1));
}

TEST_CASE("random 4x4 invertible rational solve matches oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-5, 5);
    int done = 0;
    while (done < 25) {
        Matrix<Rat> m(4, 4);
        std::vector<Rat> b(4);
        for (std::size_t i = 0; i < 4; ++i) {
            b[i] = Rat(d(rng));
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rat(d(rng));
        }
        if (rank_of(m) != 4) continue;
        ++done;
        auto s = solve_linear(m, b);
        REQUIRE(s.status == LinearSolution<Rat>::Status::Unique);
        auto o = oracle::solve(to_rows(m), b);
        REQUIRE(o.has_value());
        for (std::size_t j = 0; j < 4; ++j) CHECK(s.solution[j] == (*o)[j]);
    }
}

TEST_CASE("oracle equivalence on >=100 random small matrices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t r = dim(rng), c = dim(rng);
        Matrix<Rat> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));

        auto rows = to_rows(m);
        auto naive = oracle::rref(rows);
        CHECK(rank_of(m) == naive.rank);

        auto k = kernel_basis(m);
        auto nk = oracle::kernel(rows, c);
        REQUIRE(k.size() == nk.size());
        if (!k.empty()) CHECK(same_span(k, nk));

        std::vector<Rat> b(r);
        for (auto& x : b) x = Rat(d(rng));
        auto s = solve_linear(m, b);
        auto o = oracle::solve(rows, b);
        CHECK(s.consistent() == o.has_value());
        if (s.consistent()) {
            auto mv = m.apply(s.solution);
            for (std::size_t i = 0; i < r; ++i) CHECK(mv[i] == b[i]);
        }
    }
}

TEST_CASE("bareiss over Z[q,t] matches naive elimination over Q(q,t)") {
    // random small matrices with monomial entries
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> d(-2, 2);
    std::uniform_int_distribution<int> e(0, 2);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t r = 1 + iter % 4, c = 1 + (iter / 2) % 4;
        Matrix<RatFunc> m(r, c);
        std::vector<std::vector<RatFunc>> rows(r, std::vector<RatFunc>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                MPoly p(Rat(d(rng)),
                        Monomial({{var_q(), e(rng)}, {var_t(), e(rng)}}));
                m.at(i, j) = RatFunc(p);
                rows[i][j] = m.at(i, j);
            }
        auto naive = oracle::rref(rows);
        CHECK(rank_of(m) == naive.rank);

        // reduced row spaces coincide: every naive RREF row is killed by the
        // kernel functionals of the bareiss row space and vice versa
        auto k = kernel_basis(m);
        CHECK(k.size() == c - static_cast<std::size_t>(naive.rank));
        for (const auto& v : k) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x.is_zero());
            for (const auto& row : naive.mat) {
                RatFunc dot;
                for (std::size_t j = 0; j < c; ++j) dot += row[j] * v[j];
                CHECK(dot.is_zero());
            }
        }
    }
}
