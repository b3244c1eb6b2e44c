#include "lh4/core.hpp"

#include "doctest.h"

using namespace lh4;

TEST_SUITE_BEGIN("core");

TEST_CASE("gcd_star") {
    CHECK(gcd_star({0, 0, 0}) == PositiveOrInfinite::infinite());
    CHECK(gcd_star({4, 6}) == PositiveOrInfinite::finite(2));
    CHECK(gcd_star({-3, 0}) == PositiveOrInfinite::finite(3));
    CHECK(gcd_star({0}).is_infinite());
    CHECK_THROWS_AS(gcd_star(std::initializer_list<Int>{}), std::invalid_argument);
}

TEST_CASE("gcd_sub") {
    CHECK(gcd_sub({0, 0}) == 0);
    CHECK(gcd_sub({8, 12, 18}) == 2);
    CHECK(gcd_sub({5}) == 5);
    CHECK(gcd_sub({-7, 14}) == 7);
    CHECK_THROWS_AS(gcd_sub(std::initializer_list<Int>{}), std::invalid_argument);
}

TEST_CASE("gcd_star and gcd_sub agree") {
    // infinite <=> 0, otherwise both give the same positive value
    std::vector<std::vector<Int>> samples = {
        {0, 0, 0}, {4, 6}, {-3, 0}, {1}, {-5, -10, 15}, {0, 0, 7}};
    for (const auto& xs : samples) {
        auto star = gcd_star(xs);
        Int sub = gcd_sub(xs);
        if (star.is_infinite()) {
            CHECK(sub == 0);
        } else {
            CHECK(star.value() == sub);
            CHECK(sub > 0);
        }
    }
}

TEST_CASE("reduce_residue") {
    CHECK(reduce_residue(7, 3) == Residue{1, 3});
    CHECK(reduce_residue(-2, 5) == Residue{3, 5});
    CHECK(reduce_residue(9, 0) == Residue{9, 0});
    CHECK_THROWS_AS(reduce_residue(1, -2), std::invalid_argument);

    SUBCASE("idempotent") {
        for (int v = -20; v <= 20; ++v) {
            for (int m : {0, 1, 2, 3, 7}) {
                Residue once = reduce_residue(v, m);
                CHECK(reduce_residue(once.value, once.modulus) == once);
            }
        }
    }
}

TEST_CASE("residue equality needs equal modulus") {
    CHECK(Residue{1, 3} != Residue{1, 6});
    CHECK(Residue{0, 0} != Residue{0, 1});
}

TEST_CASE("floor_div and mod_floor") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(mod_floor(-7, 3) == 2);
    CHECK(mod_floor(7, 3) == 1);
    for (int a = -12; a <= 12; ++a) {
        for (int b : {-5, -2, 2, 5}) {
            CHECK(Int(b) * floor_div(a, b) + mod_floor(a, b) == a);
            Int r = mod_floor(a, b);
            if (b > 0) CHECK((r >= 0 && r < b));
        }
    }
}

TEST_CASE("ext_gcd certificate") {
    for (int a = -15; a <= 15; ++a) {
        for (int b = -15; b <= 15; ++b) {
            Int x, y;
            Int g = ext_gcd(a, b, x, y);
            CHECK(g == abs(gcd(Int(a), Int(b))));
            CHECK(x * a + y * b == g);
        }
    }
}

TEST_CASE("exactness survives huge operands") {
    Int big("123456789012345678901234567890");
    CHECK(gcd_sub({big * 6, big * 10}) == big * 2);
    Residue r = reduce_residue(big * big + 1, big);
    CHECK(r.value == 1);
}

TEST_SUITE_END();
