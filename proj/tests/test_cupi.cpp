/**
 * \file test_cupi.cpp
 *
 * Unit tests for good pairs, wedge spans, the comultiplication ∇, cup-i
 * products and Steenrod squares on small hand-checked objects.
 */
#include <doctest.h>

#include <random>

#include "cupsq/cupi.hpp"
#include "objects.hpp"

using namespace cupsq;
using cupsq::testing::moore_z2;
using cupsq::testing::permutation_parity;
using cupsq::testing::two_step;

TEST_CASE("sq1 on the mod-2 moore object is nontrivial") {
    AssoObject x = moore_z2();
    GradedChainComplex cx = moore_complex(x);
    CupCalculator calc(x);

    // ∇₋₂(x) = y ⊗ y: the only non-decreasing sequence is (0,0) and exactly
    // one of the two maximal chains of (a,b) is positive.
    CHECK(calc.nabla(-2, 0, 0) == TensorElt{{-1, 0, -1, 0}});
    CHECK(enumerate_positive_chains(x, 0, {0}, {0}, 0, 1).size() +
              enumerate_positive_chains(x, 0, {0}, {0}, 1, 0).size() ==
          1);
    CHECK(enumerate_positive_chains(x, 0, {0}, {0}, 0, 0).empty());

    CHECK(calc.cup_i({1}, -1, {1}, -1, -2) == F2Vec{1});
    CHECK(steenrod_square_rep(calc, cx, -1, {1}, 1) == F2Vec{1});
    // sq¹ agrees with the Bockstein.
    CHECK(bockstein(cx, -1, {1}) == F2Vec{1});
}

TEST_CASE("wedge spans on the moore object") {
    AssoObject x = moore_z2();
    Span w = wedge_span(x, 0, {0}, {0});
    CHECK(w.size() == 1);
    CHECK(w.arrows[0] == std::pair<int, int>{0, 0});
    Span d = wedge_on_diagonal(x, 0, {0}, {0});
    CHECK(d.size() == 1);
    CHECK(d.src->size() == 1);
}

TEST_CASE("join of two moore objects carries a nontrivial sq2") {
    AssoObject j = join(moore_z2(), moore_z2());
    REQUIRE(j.validate().ok());
    GradedChainComplex cx = moore_complex(j);
    CupCalculator calc(j);

    const Seq U{0, 1};

    // The documented chain classifications for the double face, with arrows
    // aa'=0, ab'=1, ba'=2, bb'=3.
    CHECK(classify_pair(j, 1, U, U, 3, 1, {{}, {0}}) == PairClass::positive);
    CHECK(classify_pair(j, 1, U, U, 3, 1, {{1}, {0}}) == PairClass::positive);
    CHECK(classify_pair(j, 1, U, U, 2, 1, {{}, {0}}) == PairClass::positive);
    CHECK(classify_pair(j, 1, U, U, 2, 1, {{}, {1}}) == PairClass::negative);
    CHECK(classify_pair(j, 1, U, U, 0, 0, {{}, {0}}) == PairClass::parallel);
    CHECK(classify_pair(j, 1, U, U, 1, 0, {{0}, {}}) == PairClass::parallel);
    CHECK(classify_pair(j, 1, U, U, 3, 0, {{1}, {}}) == PairClass::not_good);

    // Eleven positive maximal chains in total; none above the diagonal.
    size_t total = 0;
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            size_t c = enumerate_positive_chains(j, 1, U, U, s, t).size();
            if (s <= t) CHECK(c == 0);
            total += c;
        }
    CHECK(total == 11);

    CHECK(calc.nabla(-3, 1, 0) == TensorElt{{-1, 0, -1, 0}});
    CHECK(steenrod_square_rep(calc, cx, -1, {1}, 2) == F2Vec{1});
}

TEST_CASE("iterated joins realise sq3") {
    AssoObject j = join(join(moore_z2(), moore_z2()), moore_z2());
    REQUIRE(j.validate().ok());
    GradedChainComplex cx = moore_complex(j);
    cx.check();
    CupCalculator calc(j);
    CHECK(steenrod_square_rep(calc, cx, -1, {1}, 3) == F2Vec{1});
    // sq² of the bottom class is also nontrivial here (three smash factors).
    CohomologyBasis h1 = cohomology(cx, 1);
    CHECK_FALSE(is_zero(h1.reduce(steenrod_square_rep(calc, cx, -1, {1}, 2))));
}

TEST_CASE("sq2 of a two-step object is the commutator sign") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        // Random spans with composite size at most 6.
        int k = 1 + static_cast<int>(rng() % 3);
        auto rnd_targets = [&](int len) {
            std::vector<int> v(len);
            for (int& t : v) t = static_cast<int>(rng() % k);
            return v;
        };
        std::vector<int> d00 = rnd_targets(1 + rng() % 4);
        std::sort(d00.begin(), d00.end());
        // Choose the top spans so that both composites have equal size ≤ 6.
        std::vector<int> d10, d11;
        auto comp_size = [&](const std::vector<int>& top) {
            size_t n = 0;
            for (int t : top) n += std::count(d00.begin(), d00.end(), t);
            return n;
        };
        for (int guard = 0; guard < 1000; ++guard) {
            d10 = rnd_targets(1 + rng() % 3);
            d11 = rnd_targets(1 + rng() % 3);
            size_t a = comp_size(d10);
            if (a >= 1 && a <= 6 && a == comp_size(d11)) break;
        }
        size_t n = comp_size(d10);
        REQUIRE(n == comp_size(d11));
        std::vector<int> commut(n);
        for (size_t i = 0; i < n; ++i) commut[i] = static_cast<int>(i);
        std::shuffle(commut.begin(), commut.end(), rng);

        AssoObject x = two_step(k, d10, d11, d00, commut);
        REQUIRE(x.validate().ok());
        CupCalculator calc(x);
        TensorElt expect;
        if (permutation_parity(commut) == 1) expect.insert({-1, 0, -1, 0});
        CHECK(calc.nabla(-3, 1, 0) == expect);
    }
}

TEST_CASE("cup-i rejects mismatched cochains and non-cocycles") {
    AssoObject x = moore_z2();
    GradedChainComplex cx = moore_complex(x);
    CupCalculator calc(x);
    CHECK_THROWS_AS(calc.cup_i({1, 0}, -1, {1}, -1, -2), domain_error);
    // In the object a ← b₁ ⇉ c the cochain a* has δ(a*) = b₁* ≠ 0.
    AssoObject y = two_step(1, {0}, {0}, {0}, {0});
    GradedChainComplex cy = moore_complex(y);
    CupCalculator cc(y);
    CHECK_THROWS_AS(steenrod_square_rep(cc, cy, -1, {1}, 1), domain_error);
}
