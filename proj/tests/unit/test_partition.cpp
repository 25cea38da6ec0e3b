#include <doctest.h>

#include <set>

#include "msw/characters.hpp"
#include "msw/partition.hpp"

using namespace msw;

namespace {

// brute-force partition count, independent of the library enumeration
long count_partitions(int n, int maxpart) {
    if (n == 0) return 1;
    long c = 0;
    for (int k = std::min(n, maxpart); k >= 1; --k)
        c += count_partitions(n - k, k);
    return c;
}

// brute-force standard Young tableaux count by recursive filling
long syt_brute(const Partition& shape) {
    std::vector<int> filled(shape.length(), 0);
    auto rec = [&](auto&& self, int placed) -> long {
        if (placed == shape.size()) return 1;
        long total = 0;
        for (int r = 0; r < shape.length(); ++r) {
            if (filled[r] >= shape.parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            total += self(self, placed + 1);
            --filled[r];
        }
        return total;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("enumerate_partitions") {
    auto p2 = enumerate_partitions(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Partition{2});
    CHECK(p2[1] == Partition{1, 1});

    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(6).size() ==
          static_cast<std::size_t>(count_partitions(6, 6)));
    CHECK(enumerate_partitions(6).size() == 11);

    // each partition exactly once
    auto p8 = enumerate_partitions(8);
    std::set<Partition> uniq(p8.begin(), p8.end());
    CHECK(uniq.size() == p8.size());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{5}) == Partition({1, 1, 1, 1, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enumerate_partitions(n))
            CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{3}, Partition{2, 1}));
    CHECK(!dominates(Partition{2, 2}, Partition{3, 1}));
    // (3,3) and (4,1,1) are incomparable
    CHECK(!dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK(!dominates(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_THROWS(dominates(Partition{2}, Partition{3}));
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition{3}) == 0);
    CHECK(n_stat(Partition{2, 1}) == 1);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    // equals the sum of row indices over the diagram
    for (const auto& mu : enumerate_partitions(6)) {
        int s = 0;
        for (const Cell& c : diagram_cells(mu)) s += c.row;
        CHECK(s == n_stat(mu));
    }
}

TEST_CASE("arm and leg") {
    CHECK(arm_leg(Partition{1}, {0, 0}) == std::pair<int, int>{0, 0});
    CHECK(arm_leg(Partition{2}, {0, 0}) == std::pair<int, int>{1, 0});
    CHECK(arm_leg(Partition{2, 2}, {0, 0}) == std::pair<int, int>{1, 1});
    CHECK_THROWS(arm_leg(Partition{2}, {1, 0}));
}

TEST_CASE("syt counts") {
    CHECK(syt_count(Partition{2, 1}) == 2);
    CHECK(syt_count(Partition{7}) == 1);
    CHECK(syt_count(Partition{3, 2}) == syt_brute(Partition{3, 2}));
    CHECK(syt_count(Partition{3, 2}) == 5);

    // sum of squares is n!
    for (int n = 1; n <= 8; ++n) {
        mpz_class s = 0;
        for (const auto& l : enumerate_partitions(n))
            s += syt_count_z(l) * syt_count_z(l);
        CHECK(s == factorial_z(n));
    }
}

TEST_CASE("character values: trivial, sign, and a hook") {
    for (int n = 1; n <= 6; ++n) {
        Partition triv{std::vector<int>{n}};
        std::vector<int> ones(n, 1);
        Partition sign_part{ones};
        for (const auto& tau : enumerate_partitions(n)) {
            CHECK(character_value(triv, tau) == 1);
            long expected_sign =
                ((n - tau.length()) % 2 == 0) ? 1 : -1;
            CHECK(character_value(sign_part, tau) == expected_sign);
        }
    }
    CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS(character_value(Partition{2, 1}, Partition{2}));
}

TEST_CASE("character degree equals syt count") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> ones(n, 1);
        CycleType id{ones};
        for (const auto& l : enumerate_partitions(n))
            CHECK(character_value(l, id) == syt_count(l));
    }
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = enumerate_partitions(n);
        mpz_class nfact = factorial_z(n);
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a; b < parts.size(); ++b) {
                mpz_class s = 0;
                for (const auto& tau : parts) {
                    mpz_class cls = nfact / z_tau(tau);
                    s += cls * character_value(parts[a], tau) *
                         character_value(parts[b], tau);
                }
                CHECK(s == (a == b ? nfact : mpz_class(0)));
            }
    }
}

TEST_CASE("z_tau sums to n! over classes") {
    for (int n = 1; n <= 7; ++n) {
        mpz_class nfact = factorial_z(n);
        mpz_class s = 0;
        for (const auto& tau : enumerate_partitions(n)) s += nfact / z_tau(tau);
        CHECK(s == nfact);
    }
}
