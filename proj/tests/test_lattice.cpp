#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dplct/lattice.hpp"

using namespace dplct;

TEST_CASE("intersection form") {
    auto K6 = DivisorClass::canonical(6);
    CHECK(intersect(K6, K6) == 3);

    auto E7 = DivisorClass::exceptional(7, 7);
    auto Z = DivisorClass::canonical(7).negated() - E7;  // -K - E_7
    CHECK(intersect(E7, Z) == 2);
    CHECK(intersect(E7, E7) == -1);
    CHECK(intersect(Z, Z) == -1);

    auto l12 = DivisorClass::line_class(6) - DivisorClass::exceptional(6, 1) -
               DivisorClass::exceptional(6, 2);
    auto l34 = DivisorClass::line_class(6) - DivisorClass::exceptional(6, 3) -
               DivisorClass::exceptional(6, 4);
    CHECK(intersect(l12, l34) == 1);

    CHECK_THROWS_AS(intersect(K6, DivisorClass::canonical(5)), math_error);
}

TEST_CASE("line counts for n = 0..8") {
    const long expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int n = 0; n <= 8; ++n) {
        auto lines = minus_one_classes(Lattice(n));
        CHECK(static_cast<long>(lines.size()) == expected[n]);
        auto K = DivisorClass::canonical(n);
        for (const auto& D : lines) {
            CHECK(intersect(D, D) == -1);
            CHECK(intersect(D, K) == -1);
            // genus identity
            CHECK(intersect(D, D + K) == -2);
        }
    }
}

TEST_CASE("Weyl permutation symmetry of the line set") {
    std::mt19937 rng(31337u);
    auto lines = minus_one_classes(Lattice(6));
    std::vector<DivisorClass> base = lines;
    std::sort(base.begin(), base.end());
    for (int it = 0; it < 10; ++it) {
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<DivisorClass> mapped;
        for (const auto& D : lines) {
            std::vector<long> c(7);
            c[0] = D.coords[0];
            for (int i = 1; i <= 6; ++i)
                c[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)])] =
                    D.coords[static_cast<std::size_t>(i)];
            mapped.push_back(DivisorClass::from_coords(std::move(c)));
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == base);
    }
}

TEST_CASE("root classes") {
    CHECK(minus_two_classes(Lattice(1)).empty());

    auto r2 = minus_two_classes(Lattice(2));
    CHECK(r2.size() == 2);  // +-(E_1 - E_2)
    CHECK(normalize_up_to_sign(r2).size() == 1);

    auto r6 = minus_two_classes(Lattice(6));
    CHECK(r6.size() == 72);
    CHECK(normalize_up_to_sign(r6).size() == 36);
    auto K = DivisorClass::canonical(6);
    for (const auto& D : r6) {
        CHECK(intersect(D, D) == -2);
        CHECK(intersect(D, K) == 0);
    }
}

TEST_CASE("bilinearity and symmetry of the pairing") {
    std::mt19937 rng(4242u);
    std::uniform_int_distribution<long> v(-3, 3);
    for (int it = 0; it < 100; ++it) {
        std::vector<long> a(7), b(7), c(7);
        for (int i = 0; i < 7; ++i) {
            a[static_cast<std::size_t>(i)] = v(rng);
            b[static_cast<std::size_t>(i)] = v(rng);
            c[static_cast<std::size_t>(i)] = v(rng);
        }
        auto A = DivisorClass::from_coords(a), B = DivisorClass::from_coords(b),
             C = DivisorClass::from_coords(c);
        CHECK(intersect(A, B) == intersect(B, A));
        CHECK(intersect(A + B, C) == intersect(A, C) + intersect(B, C));
    }
}
