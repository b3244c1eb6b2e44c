#include "lh4/decide.hpp"

#include "lh4/oracle.hpp"

#include "doctest.h"

using namespace lh4;

namespace {

const std::array<Int, 6> kExampleC = {1, 2, 2, 4, 2, 2};
const std::array<Int, 6> kHughesC = {-1, -4, -4, -1, -1, -1};

ClasperForm example_l1() { return {kExampleC, {0, 0, 0, 0}, {0, 0}}; }
ClasperForm example_l2() { return {kExampleC, {-2, 0, 2, 1}, {1, 1}}; }
ClasperForm example_l3() { return {kExampleC, {-2, 0, 2, 1}, {2, 0}}; }

ClasperForm random_form(Rng& rng, int c_bound = 5, int f_bound = 10, int t_bound = 10) {
    ClasperForm link;
    for (auto& x : link.c) x = rng.pick_int(c_bound);
    for (auto& x : link.f) x = rng.pick_int(f_bound);
    for (auto& x : link.t) x = rng.pick_int(t_bound);
    return link;
}

MoveWord random_word(Rng& rng, int max_len, int exp_bound = 3) {
    MoveWord w;
    int len = static_cast<int>(rng.pick(0, max_len));
    for (int k = 0; k < len; ++k)
        w.push_back({kGeneratorOrder[static_cast<size_t>(rng.pick(0, 7))], rng.pick_nonzero(exp_bound)});
    return w;
}

bool in_span(const StabilizerBasis& basis, const Int& x, const Int& y) {
    return lattice_reduce(std::vector<Int>{x, y}, basis.all_columns()).in_lattice;
}

}  // namespace

TEST_SUITE_BEGIN("decide");

TEST_CASE("build_move_matrix") {
    SUBCASE("worked-example entries") {
        IntMatrix a = build_move_matrix(kExampleC);
        const int expected[4][8] = {
            {0, 0, 0, 2, 2, -2, -1, 0},
            {0, 2, 0, 0, -4, 0, 2, -2},
            {2, -2, -4, 0, 0, 0, 0, 2},
            {-1, 0, 2, -2, 0, 2, 0, 0},
        };
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 8; ++c) CHECK(a.at(r, c) == expected[r][c]);
    }
    SUBCASE("zero c gives the zero matrix") {
        IntMatrix a = build_move_matrix({0, 0, 0, 0, 0, 0});
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 8; ++c) CHECK(a.at(r, c) == 0);
    }
    SUBCASE("columns equal the generator deltas") {
        Rng rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            std::array<Int, 6> c;
            for (auto& x : c) x = rng.pick_int(9);
            IntMatrix a = build_move_matrix(c);
            for (int col = 0; col < 8; ++col) {
                GeneratorDelta d = generator_delta(c, kGeneratorOrder[static_cast<size_t>(col)]);
                for (int row = 0; row < 4; ++row) CHECK(a.at(row, col) == d.f_delta[static_cast<size_t>(row)]);
            }
        }
    }
}

TEST_CASE("step2_word") {
    SUBCASE("reaches the worked-example f") {
        auto w = step2_word(example_l1(), example_l2());
        REQUIRE(w.has_value());
        ClasperForm moved = apply_word(example_l1(), *w);
        CHECK(moved.f == example_l2().f);
        // the two-move solution from the worked example is also valid
        MoveWord paper = {{Generator::Psi21, 1}, {Generator::Psi23, 1}};
        CHECK(apply_word(example_l1(), paper).f == example_l2().f);
    }
    SUBCASE("identical tuples need no moves") {
        Rng rng(32);
        ClasperForm link = random_form(rng);
        auto w = step2_word(link, link);
        REQUIRE(w.has_value());
        CHECK(w->empty());
    }
    SUBCASE("the f-gap of the standard inequivalent pair is unreachable") {
        ClasperForm h1{kHughesC, {1, 4, 4, 16}, {0, 0}};
        ClasperForm h2{kHughesC, {1, 8, 4, 16}, {0, 0}};
        CHECK(!step2_word(h1, h2).has_value());
    }
    SUBCASE("c mismatch is a usage error") {
        ClasperForm a = example_l1();
        ClasperForm b = a;
        b.c[0] += 1;
        CHECK_THROWS_AS(step2_word(a, b), std::invalid_argument);
    }
}

TEST_CASE("kernel_words") {
    SUBCASE("worked example has rank-5 kernel containing the printed vector") {
        auto words = kernel_words(kExampleC);
        CHECK(words.size() == 5);
        auto basis = kernel_lattice_basis(build_move_matrix(kExampleC));
        std::vector<Int> printed = {-2, -2, 0, 1, 0, 0, 2, 0};
        CHECK(lattice_reduce(printed, basis).in_lattice);
    }
    SUBCASE("zero c yields the eight single-generator words") {
        auto words = kernel_words({0, 0, 0, 0, 0, 0});
        REQUIRE(words.size() == 8);
        for (const auto& w : words) {
            CHECK(w.size() == 1);
            CHECK(abs(w[0].power) == 1);
        }
    }
    SUBCASE("every kernel word fixes the f-part") {
        Rng rng(33);
        for (int trial = 0; trial < 50; ++trial) {
            ClasperForm link = random_form(rng);
            for (const auto& w : kernel_words(link.c)) {
                ClasperForm moved = apply_word(link, w);
                CHECK(moved.f == link.f);
            }
        }
    }
}

TEST_CASE("word_t_effect") {
    const std::array<Int, 4> f = {-2, 0, 2, 1};
    SUBCASE("the printed stabilizer generator, applied first-factor-first") {
        MoveWord psi_bar_1 = word_from_exponents(std::vector<Int>{-2, -2, 0, 1, 0, 0, 2, 0});
        auto [t1, t2] = word_t_effect(kExampleC, f, psi_bar_1);
        CHECK(t1 == 6);
        CHECK(t2 == 0);
        // congruent to the printed effect (0,4) modulo the commutator
        // lattice, which contains (2,0) and (0,1) at this c
        CHECK((t1 - 0) % 2 == 0);
    }
    SUBCASE("empty word") {
        auto [t1, t2] = word_t_effect(kExampleC, f, {});
        CHECK(t1 == 0);
        CHECK(t2 == 0);
    }
    SUBCASE("psi12 psi21^2 is congruent to zero") {
        MoveWord w = word_from_exponents(std::vector<Int>{2, 0, 1, 0, 0, 0, 0, 0});
        auto [t1, t2] = word_t_effect(kExampleC, f, w);
        CHECK(t1 == -4);
        CHECK(t2 == 0);
        StabilizerBasis basis = stabilizer_t_basis(kExampleC, f);
        std::vector<std::vector<Int>> comm_cols;
        for (const auto& [a, b] : basis.commutator_columns) comm_cols.push_back({a, b});
        CHECK(lattice_reduce(std::vector<Int>{t1, t2}, comm_cols).in_lattice);
    }
    SUBCASE("f-fixing words scale linearly") {
        Rng rng(34);
        for (int trial = 0; trial < 50; ++trial) {
            ClasperForm link = random_form(rng);
            auto words = kernel_words(link.c);
            if (words.empty()) continue;
            const MoveWord& w = words[static_cast<size_t>(rng.pick(0, static_cast<int>(words.size()) - 1))];
            auto [u1, u2] = word_t_effect(link.c, link.f, w);
            int k = static_cast<int>(rng.pick(2, 5));
            MoveWord repeated;
            for (int rep = 0; rep < k; ++rep) repeated.insert(repeated.end(), w.begin(), w.end());
            auto [v1, v2] = word_t_effect(link.c, link.f, repeated);
            CHECK(v1 == k * u1);
            CHECK(v2 == k * u2);
        }
    }
}

TEST_CASE("stabilizer_t_basis") {
    SUBCASE("worked example: span is the even-first-coordinate lattice") {
        StabilizerBasis basis = stabilizer_t_basis(kExampleC, {-2, 0, 2, 1});
        const std::array<std::pair<Int, Int>, 6> expected = {{
            {0, 1}, {2, -2}, {2, 0}, {0, 4}, {-2, 2}, {2, 0},
        }};
        CHECK(basis.commutator_columns == expected);
        CHECK(in_span(basis, 2, 0));
        CHECK(in_span(basis, 0, 1));
        CHECK(!in_span(basis, 1, 0));
        CHECK(!in_span(basis, 1, 3));  // the worked example's obstruction
        for (const auto& [x, y] : basis.kernel_columns) CHECK(x % 2 == 0);
    }
    SUBCASE("zero c: kernel columns read the f entries") {
        Rng rng(35);
        for (int trial = 0; trial < 30; ++trial) {
            std::array<Int, 4> f;
            for (auto& x : f) x = rng.pick_int(9);
            StabilizerBasis basis = stabilizer_t_basis({0, 0, 0, 0, 0, 0}, f);
            for (const auto& [a, b] : basis.commutator_columns) {
                CHECK(a == 0);
                CHECK(b == 0);
            }
            Int g = gcd_sub(f);
            // each axis is exactly g*Z
            CHECK(in_span(basis, g, 0));
            CHECK(in_span(basis, 0, g));
            if (g > 1) {
                CHECK(!in_span(basis, 1, 0));
                CHECK(!in_span(basis, 0, 1));
            }
        }
    }
    SUBCASE("the inequivalent-pair c spans everything") {
        StabilizerBasis basis = stabilizer_t_basis(kHughesC, {1, 4, 4, 16});
        CHECK(in_span(basis, 1, 0));
        CHECK(in_span(basis, 0, 1));
    }
    SUBCASE("kernel columns are reproducible by application") {
        Rng rng(36);
        for (int trial = 0; trial < 30; ++trial) {
            ClasperForm link = random_form(rng);
            StabilizerBasis basis = stabilizer_t_basis(link.c, link.f);
            for (size_t i = 0; i < basis.kernel_word_list.size(); ++i) {
                ClasperForm moved = apply_word(link, basis.kernel_word_list[i]);
                CHECK(moved.f == link.f);
                CHECK(moved.t[0] - link.t[0] == basis.kernel_columns[i].first);
                CHECK(moved.t[1] - link.t[1] == basis.kernel_columns[i].second);
            }
        }
    }
}

TEST_CASE("decide_equiv on the worked examples") {
    SUBCASE("t-level obstruction") {
        Verdict v = decide_equiv(example_l1(), example_l2());
        CHECK(!v.equivalent);
        CHECK(v.failure_stage == FailureStage::TUnreachable);
    }
    SUBCASE("equivalent pair with verified certificate") {
        Verdict v = decide_equiv(example_l1(), example_l3());
        REQUIRE(v.equivalent);
        CHECK(verify_certificate(example_l1(), v.certificate, example_l3()));
    }
    SUBCASE("reflexivity with empty certificate") {
        Rng rng(37);
        ClasperForm link = random_form(rng);
        Verdict v = decide_equiv(link, link);
        REQUIRE(v.equivalent);
        CHECK(v.certificate.empty());
    }
    SUBCASE("c mismatch stage") {
        ClasperForm other = example_l1();
        other.c[3] = 7;
        Verdict v = decide_equiv(example_l1(), other);
        CHECK(!v.equivalent);
        CHECK(v.failure_stage == FailureStage::CMismatch);
    }
    SUBCASE("f stage for the standard inequivalent pair") {
        ClasperForm h1{kHughesC, {1, 4, 4, 16}, {0, 0}};
        ClasperForm h2{kHughesC, {1, 8, 4, 16}, {0, 0}};
        Verdict v = decide_equiv(h1, h2);
        CHECK(!v.equivalent);
        CHECK(v.failure_stage == FailureStage::FUnreachable);
    }
}

TEST_CASE("decide_equiv completeness and soundness on random orbits") {
    Rng rng(38);
    for (int trial = 0; trial < 400; ++trial) {
        ClasperForm link = random_form(rng);
        MoveWord w = random_word(rng, 12);
        ClasperForm moved = apply_word(link, w);
        Verdict v = decide_equiv(link, moved);
        REQUIRE(v.equivalent);
        CHECK(verify_certificate(link, v.certificate, moved));
        // symmetry
        Verdict back = decide_equiv(moved, link);
        REQUIRE(back.equivalent);
        CHECK(verify_certificate(moved, back.certificate, link));
    }
}

TEST_CASE("canonical_form") {
    SUBCASE("zero tuple") {
        CanonicalForm cf = canonical_form(ClasperForm{});
        CHECK(cf == CanonicalForm{});
    }
    SUBCASE("worked-example pair separates") {
        CHECK(canonical_form(example_l1()) != canonical_form(example_l2()));
        CHECK(canonical_form(example_l1()) == canonical_form(example_l3()));
    }
    SUBCASE("constant on orbits, separating off-orbit samples") {
        Rng rng(39);
        for (int trial = 0; trial < 200; ++trial) {
            ClasperForm link = random_form(rng);
            MoveWord w = random_word(rng, 10);
            CHECK(canonical_form(link) == canonical_form(apply_word(link, w)));
        }
        for (int trial = 0; trial < 200; ++trial) {
            ClasperForm a = random_form(rng);
            ClasperForm b = random_form(rng);
            b.c = a.c;
            bool same_canon = canonical_form(a) == canonical_form(b);
            bool equivalent = decide_equiv(a, b).equivalent;
            CHECK(same_canon == equivalent);
        }
    }
}

TEST_SUITE_END();
