/**
 * \file test_khovanov.cpp
 *
 * Unit tests for the Khovanov layer: PD parsing and sign derivation,
 * resolutions, edge spans, square bijections (including the ladybug rule),
 * the associated semi-simplicial objects, Kh dimension tables against the
 * brute-force Frobenius oracle, and Steenrod squares on the two worked link
 * fixtures (a disjoint union of two trefoils at q = 14 and a 4-crossing
 * unknot diagram at q = 1).
 */
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "cupsq/cupi.hpp"
#include "cupsq/khovanov.hpp"
#include "cupsq/verify.hpp"

using namespace cupsq;

namespace {

const char* kRightTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kLeftTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kHopfPlus = "X[2,3,1,4] X[3,2,4,1]";
const char* kHopfMinus = "X[4,1,3,2] X[2,3,1,4]";
const char* kKinkPlus = "X[1,1,2,2]";
const char* kKinkMinus = "X[2,1,1,2]";
const char* kTwoTrefoils =
    "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] "
    "X[7,11,8,10] X[9,7,10,12] X[11,9,12,8]";
// 4-crossing unknot diagram whose Burnside cube exercises the ladybug
// matching in four squares.
const char* kLadybugUnknot = "X[5,8,6,1] X[7,3,8,2] X[4,2,5,1] X[6,3,7,4]";

using Table = std::map<std::pair<int, int>, int>;

Table unknot_table() { return {{{0, -1}, 1}, {{0, 1}, 1}}; }

Table right_trefoil_table() {
    return {{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
}

std::string ids(const AssoObject& obj, int n, const F2Vec& v) {
    std::string out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i]) {
            if (!out.empty()) out += " ";
            out += obj.level(n)->element(i);
        }
    return out;
}

}  // namespace

TEST_CASE("parse_pd derives crossing signs from the arc numbering") {
    PDCode tre = parse_pd(kRightTrefoil);
    CHECK(tre.size() == 3);
    CHECK(tre.n_minus() == 0);
    CHECK(tre.n_plus() == 3);

    PDCode mirror = parse_pd(kLeftTrefoil);
    CHECK(mirror.n_minus() == 3);

    CHECK(parse_pd(kKinkPlus).signs == std::vector<int>{1});
    CHECK(parse_pd(kKinkMinus).signs == std::vector<int>{-1});
    CHECK(parse_pd(kHopfPlus).n_minus() == 0);
    CHECK(parse_pd(kHopfMinus).n_minus() == 2);
    CHECK(parse_pd(kTwoTrefoils).n_minus() == 0);
    CHECK(parse_pd(kLadybugUnknot).signs == std::vector<int>{-1, 1, 1, -1});
}

TEST_CASE("parse_pd accepts PD-JSON with and without explicit signs") {
    PDCode a = parse_pd(R"({"crossings":[[1,1,2,2]],"signs":[1]})");
    CHECK(a.signs == std::vector<int>{1});
    PDCode b = parse_pd(R"({"crossings":[[2,1,1,2]]})");
    CHECK(b.signs == std::vector<int>{-1});
}

TEST_CASE("parse_pd rejects malformed diagrams") {
    // arc multiplicity violations
    CHECK_THROWS_AS(parse_pd("X[1,2,2,3]"), domain_error);
    CHECK_THROWS_AS(parse_pd("X[1,1,1,2]"), domain_error);
    // malformed tuples / garbage
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), domain_error);
    CHECK_THROWS_AS(parse_pd("Y[1,1,2,2]"), domain_error);
    CHECK_THROWS_AS(parse_pd("X[1,1,2,"), domain_error);
    CHECK_THROWS_AS(parse_pd(""), domain_error);
    CHECK_THROWS_AS(parse_pd("{\"crossings\":[[1,1,2,2]],\"signs\":[1,1]}"), domain_error);
    CHECK_THROWS_AS(parse_pd("{\"crossings\":[[1,1,2,2]],\"signs\":[2]}"), domain_error);
    // a component whose arcs are not numbered consecutively
    CHECK_THROWS_AS(parse_pd("X[4,2,1,3] X[2,4,3,1]"), domain_error);
    // parse errors carry a location
    try {
        parse_pd("X[1,1,2,2] X[3,3,4");
        CHECK(false);
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("pd") != std::string::npos);
    }
}

TEST_CASE("resolve produces the expected circle counts") {
    PDCode tre = parse_pd(kRightTrefoil);
    std::string counts;
    for (int mask = 0; mask < 8; ++mask)
        counts += static_cast<char>('0' + resolve(tre, mask).circles.size());
    // all-0 is the Seifert smoothing (2 circles), all-1 has 3 circles
    CHECK(counts == "21121223");

    PDCode kink = parse_pd(kKinkPlus);
    CHECK(resolve(kink, 0).circles.size() + resolve(kink, 1).circles.size() == 3);

    PDCode un = parse_pd(kLadybugUnknot);
    CHECK(resolve(un, 0).circles.size() == 1);
    CHECK(resolve(un, 15).circles.size() == 1);
    for (int mask : {1, 2, 4, 8, 7, 11, 13, 14})
        CHECK(resolve(un, mask).circles.size() == 2);
    std::map<int, size_t> weight2 = {{3, 3}, {5, 1}, {6, 1}, {9, 3}, {10, 1}, {12, 3}};
    for (auto [mask, c] : weight2) CHECK(resolve(un, mask).circles.size() == c);
}

TEST_CASE("resolve circles partition the arcs") {
    for (const char* text : {kRightTrefoil, kHopfPlus, kLadybugUnknot}) {
        PDCode pd = parse_pd(text);
        for (int mask = 0; mask < (1 << pd.size()); ++mask) {
            Resolution r = resolve(pd, mask);
            CHECK(static_cast<int>(r.circle_of_arc.size()) == 2 * pd.size());
            std::set<int> seen;
            for (const Circle& c : r.circles) {
                CHECK(c.min_arc == *std::min_element(c.arcs.begin(), c.arcs.end()));
                CHECK(c.arcs.size() == c.passages.size());
                for (int a : c.arcs) CHECK(seen.insert(a).second);
            }
            CHECK(static_cast<int>(seen.size()) == 2 * pd.size());
        }
    }
}

TEST_CASE("kh generators carry the quantum grading formula") {
    PDCode tre = parse_pd(kRightTrefoil);
    SetPtr top = kh_generators(tre, 7, 7);
    REQUIRE(top->size() == 3);
    CHECK(top->element(0) == "g7:-++");
    CHECK(top->element(1) == "g7:+-+");
    CHECK(top->element(2) == "g7:++-");
    CHECK(kh_generators(tre, 7, 9)->size() == 1);   // all-plus
    CHECK(kh_generators(tre, 7, 3)->size() == 1);   // all-minus
    CHECK(kh_generators(tre, 7, 11)->size() == 0);  // out of range
    CHECK(kh_generators(tre, 0, 5)->size() == 1);   // 2 circles, all-plus
    CHECK(kh_generators(tre, 0, 3)->size() == 2);   // 2 circles, one x-
}

TEST_CASE("edge spans are the merge/split transposes") {
    PDCode tre = parse_pd(kRightTrefoil);
    // split saddle 011 -> 111 at q=7: the generator whose x- sits on the
    // untouched circle has no arrow (a comultiplication never produces two
    // x+ offspring); the other two top generators map to the all-plus one.
    Span e = edge_span(tre, 7, 3, 7);
    CHECK(e.src->size() == 3);
    CHECK(e.tgt->size() == 1);
    REQUIRE(e.size() == 2);
    std::set<std::string> sources;
    for (auto& [x, y] : e.arrows) {
        sources.insert(e.src->element(x));
        CHECK(e.tgt->element(y) == "g3:++");
    }
    CHECK(sources == std::set<std::string>{"g7:+-+", "g7:++-"});

    // the paper's two-arrow non-free span: removing any crossing of the
    // ladybug unknot from the full resolution gives x -> {y, y'}
    PDCode un = parse_pd(kLadybugUnknot);
    Span d0 = edge_span(un, 15, 1, 1);
    REQUIRE(d0.size() == 2);
    CHECK(d0.arrows[0].first == d0.arrows[1].first);
    CHECK(is_free(d0) == false);

    // on the two-trefoil diagram at q=14 every edge from the top vertex is
    // free ("a function of sets")
    PDCode two = parse_pd(kTwoTrefoils);
    for (int a = 1; a <= 6; ++a) CHECK(is_free(edge_span(two, 63, a, 14)));
}

TEST_CASE("square bijections balance fibres and validate") {
    for (const char* text : {kRightTrefoil, kHopfPlus, kLadybugUnknot}) {
        PDCode pd = parse_pd(text);
        for (int q : quantum_gradings(pd))
            for (int mask = 0; mask < (1 << pd.size()); ++mask)
                for (int a = 1; a <= pd.size(); ++a) {
                    if (!(mask & (1 << (a - 1)))) continue;
                    for (int b = a + 1; b <= pd.size(); ++b) {
                        if (!(mask & (1 << (b - 1)))) continue;
                        Span left = compose(edge_span(pd, mask & ~(1 << (a - 1)), b, q),
                                            edge_span(pd, mask, a, q));
                        Span right = compose(edge_span(pd, mask & ~(1 << (b - 1)), a, q),
                                             edge_span(pd, mask, b, q));
                        FibBijection m = square_bijection(pd, mask, a, b, q);
                        check_fib_bijection(left, right, m);
                    }
                }
    }
}

TEST_CASE("two-trefoil squares at q=14 have forced matchings") {
    PDCode pd = parse_pd(kTwoTrefoils);
    for (int mask = 0; mask < 64; ++mask)
        for (int a = 1; a <= 6; ++a) {
            if (!(mask & (1 << (a - 1)))) continue;
            for (int b = a + 1; b <= 6; ++b) {
                if (!(mask & (1 << (b - 1)))) continue;
                Span left = compose(edge_span(pd, mask & ~(1 << (a - 1)), b, 14),
                                    edge_span(pd, mask, a, 14));
                // all fibres of size <= 1: no two arrows share (source,target)
                std::set<std::pair<int, int>> pairs;
                for (auto& arr : left.arrows) CHECK(pairs.insert(arr).second);
            }
        }
}

TEST_CASE("the associated objects validate and have integral d^2 = 0") {
    for (const char* text : {kKinkPlus, kHopfPlus, kRightTrefoil, kLadybugUnknot}) {
        PDCode pd = parse_pd(text);
        for (int q : quantum_gradings(pd)) {
            AssoObject obj = build_asso(pd, q);
            CHECK(obj.validate().ok());
            moore_complex(obj).check();
        }
    }
}

TEST_CASE("a non-planar rotation system is rejected, not mismatched") {
    // the frozen unknot code with two arc labels swapped in the first tuple:
    // still a combinatorial PD, but no longer planar, and one square has an
    // ambiguous fibre outside the ladybug configuration
    PDCode pd = parse_pd(R"({"crossings":[[6,8,5,1],[7,3,8,2],[4,2,5,1],[6,3,7,4]],
                             "signs":[-1,1,1,-1]})");
    auto run = [&] {
        for (int q : quantum_gradings(pd)) build_asso(pd, q);
    };
    CHECK_THROWS_AS(run(), integrity_error);
}

TEST_CASE("empty quantum grading gives the empty object") {
    PDCode tre = parse_pd(kRightTrefoil);
    AssoObject obj = build_asso(tre, 99);
    for (auto& [n, level] : obj.levels) CHECK(level->size() == 0);
    CHECK(obj.validate().ok());
}

TEST_CASE("kh tables match the brute-force Frobenius oracle") {
    for (const char* text :
         {kKinkPlus, kKinkMinus, kHopfPlus, kHopfMinus, kRightTrefoil, kLeftTrefoil}) {
        PDCode pd = parse_pd(text);
        CHECK(kh_table(pd) == kh_table_bruteforce(pd));
    }
}

TEST_CASE("unknot, Hopf link and trefoil tables") {
    CHECK(kh_table(parse_pd(kKinkPlus)) == unknot_table());
    CHECK(kh_table(parse_pd(kKinkMinus)) == unknot_table());
    CHECK(kh_table(parse_pd(kRightTrefoil)) == right_trefoil_table());

    Table left;
    for (auto& [key, d] : right_trefoil_table()) left[{-key.first, -key.second}] = d;
    CHECK(kh_table(parse_pd(kLeftTrefoil)) == left);

    Table hopf = {{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}};
    CHECK(kh_table(parse_pd(kHopfPlus)) == hopf);
    Table hopf_m = {{{-2, -6}, 1}, {{-2, -4}, 1}, {{0, -2}, 1}, {{0, 0}, 1}};
    CHECK(kh_table(parse_pd(kHopfMinus)) == hopf_m);
}

TEST_CASE("unknot squares vanish") {
    for (const char* text : {kKinkPlus, kKinkMinus}) {
        PDCode pd = parse_pd(text);
        for (int q : {-1, 1})
            for (int i : {1, 2}) {
                auto sq = kh_sq(pd, q, i);
                for (auto& [h, m] : sq)
                    for (auto v : m.a) CHECK(v == 0);
            }
    }
}

TEST_CASE("kh tables are invariant under crossing reordering") {
    PDCode tre = parse_pd(kRightTrefoil);
    Table expect = kh_table(tre);
    std::vector<int> perm = {0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
        PDCode p;
        for (int i : perm) {
            p.crossings.push_back(tre.crossings[i]);
            p.signs.push_back(tre.signs[i]);
        }
        CHECK(kh_table(p) == expect);
    }

    PDCode un = parse_pd(kLadybugUnknot);
    PDCode rev;
    for (int i = 3; i >= 0; --i) {
        rev.crossings.push_back(un.crossings[i]);
        rev.signs.push_back(un.signs[i]);
    }
    CHECK(kh_table(rev) == unknot_table());
    auto sq = kh_sq(rev, 1, 2);
    for (auto& [h, m] : sq)
        for (auto v : m.a) CHECK(v == 0);
}

TEST_CASE("kh tables are invariant under Reidemeister-I kinks") {
    // right trefoil with a positive kink inserted in arc 6 (arcs 6,7,8)
    PDCode plus = parse_pd("X[1,5,2,4] X[3,1,4,8] X[5,3,6,2] X[6,8,7,7]");
    CHECK(plus.n_minus() == 0);
    CHECK(plus.n_plus() == 4);
    CHECK(kh_table(plus) == right_trefoil_table());
    CHECK(kh_table_bruteforce(plus) == right_trefoil_table());

    // and with a negative kink in the same arc
    PDCode minus = parse_pd("X[1,5,2,4] X[3,1,4,8] X[5,3,6,2] X[7,6,8,7]");
    CHECK(minus.n_minus() == 1);
    CHECK(kh_table(minus) == right_trefoil_table());
}

// ---------------------------------------------------------------------------
// Two disjoint right trefoils, quantum grading 14.
// ---------------------------------------------------------------------------

TEST_CASE("two trefoils at q=14: dimensions and cohomology") {
    PDCode pd = parse_pd(kTwoTrefoils);
    AssoObject obj = build_asso(pd, 14);
    GradedChainComplex moore = moore_complex(obj);
    // cochain dims 2,15,30,15 at h = 3,4,5,6 (h = n+1 here since n_-=0)
    CHECK(moore.dim(2) == 2);
    CHECK(moore.dim(3) == 15);
    CHECK(moore.dim(4) == 30);
    CHECK(moore.dim(5) == 15);

    CHECK(cohomology(moore, 2).rank() == 0);
    CHECK(cohomology(moore, 3).rank() == 1);
    CHECK(cohomology(moore, 4).rank() == 4);
    CHECK(cohomology(moore, 5).rank() == 1);

    Table t = kh_table(pd);
    CHECK(t.count({3, 14}) == 0);
    CHECK(t[{4, 14}] == 1);
    CHECK(t[{5, 14}] == 4);
    CHECK(t[{6, 14}] == 1);
    CHECK(t == kh_table_bruteforce(pd));
}

TEST_CASE("two trefoils at q=14: the second square is nonzero") {
    PDCode pd = parse_pd(kTwoTrefoils);
    AssoObject obj = build_asso(pd, 14);
    GradedChainComplex moore = moore_complex(obj);

    // Kh^{14,4} has rank one; its generating cocycle is the sum of the nine
    // all-plus duals at the (2,2)-weight vertices
    CohomologyBasis h3(moore, 3);
    REQUIRE(h3.rank() == 1);
    CHECK(ids(obj, 3, h3.representatives()[0]) ==
          "g27:++++ g29:++++ g30:++++ g43:++++ g45:++++ g46:++++ "
          "g51:++++ g53:++++ g54:++++");

    // sq^2 of that class is represented by a single dual generator that
    // enhances one circle of each trefoil with x-, and it generates Kh^{14,6}
    CupCalculator calc(obj);
    F2Vec rep = steenrod_square_rep(calc, moore, 3, h3.representatives()[0], 2);
    CHECK(ids(obj, 5, rep) == "g63:+-++-+");
    CohomologyBasis h5(moore, 5);
    REQUIRE(h5.rank() == 1);
    CHECK(h5.reduce(rep) == F2Vec{1});

    auto sq2 = kh_sq(pd, 14, 2);
    REQUIRE(sq2.count(4) == 1);
    CHECK(sq2[4].rows == 1);
    CHECK(sq2[4].cols == 1);
    CHECK(sq2[4].at(0, 0) == 1);
}

// ---------------------------------------------------------------------------
// The 4-crossing unknot diagram, quantum grading 1 (the ladybug fixture).
// ---------------------------------------------------------------------------

namespace {

/// For each arrow of the derived face span ∂³_{V1∪V2}, the level-2 element
/// that the coherence bijection μ(3, V1, V2) routes it through.
std::vector<std::string> mu_route(const AssoObject& obj, const Seq& V1, const Seq& V2) {
    Seq U = V1;
    U.insert(U.end(), V2.begin(), V2.end());
    std::sort(U.begin(), U.end());
    FibBijection m = obj.mu(3, V1, V2);
    Span inner = obj.face_span(3, V1);
    Span comp = compose(obj.face_span(3 - static_cast<int>(V1.size()), psi(V1, V2)), inner);
    std::vector<std::string> out;
    for (int t = 0; t < obj.face(3, U).span.size(); ++t) {
        int middle = inner.arrows[comp.parents[m.matching[t]].first].second;
        out.push_back(obj.level(2)->element(middle));
    }
    return out;
}

std::string delta_of(const AssoObject& obj, const GradedChainComplex& moore,
                     const std::string& id) {
    F2Mat cob = moore.coboundary_f2(1);
    int z = obj.level(1)->index(id);
    std::string out;
    for (int y = 0; y < cob.rows; ++y)
        if (cob.at(y, z)) {
            if (!out.empty()) out += " ";
            out += obj.level(2)->element(y);
        }
    return out;
}

}  // namespace

TEST_CASE("ladybug unknot at q=1: dimensions, table and coboundaries") {
    PDCode pd = parse_pd(kLadybugUnknot);
    CHECK(kh_table(pd) == unknot_table());
    CHECK(kh_table(pd) == kh_table_bruteforce(pd));

    AssoObject obj = build_asso(pd, 1);
    CHECK(obj.validate().ok());
    GradedChainComplex moore = moore_complex(obj);
    CHECK(moore.dim(0) == 4);
    CHECK(moore.dim(1) == 12);
    CHECK(moore.dim(2) == 8);
    CHECK(moore.dim(3) == 1);
    // Kh^{q=1} is F2 at h = 0 only (h = n - 1 here since n_- = 2)
    CHECK(cohomology(moore, 0).rank() == 0);
    CHECK(cohomology(moore, 1).rank() == 1);
    CHECK(cohomology(moore, 2).rank() == 0);
    CHECK(cohomology(moore, 3).rank() == 0);

    // all sixteen coboundary relations of the degree-1 duals
    CHECK(delta_of(obj, moore, "g3:-++") == "g7:-+ g11:-+");
    CHECK(delta_of(obj, moore, "g3:+-+") == "g7:-+ g11:+-");
    CHECK(delta_of(obj, moore, "g3:++-") == "g7:+- g11:+-");
    CHECK(delta_of(obj, moore, "g5:+") == "g7:-+ g7:+- g13:-+ g13:+-");
    CHECK(delta_of(obj, moore, "g6:+") == "g7:-+ g7:+- g14:-+ g14:+-");
    CHECK(delta_of(obj, moore, "g9:-++") == "g11:-+ g13:-+");
    CHECK(delta_of(obj, moore, "g9:+-+") == "g11:+- g13:-+");
    CHECK(delta_of(obj, moore, "g9:++-") == "g11:+- g13:+-");
    CHECK(delta_of(obj, moore, "g10:+") == "g11:-+ g11:+- g14:-+ g14:+-");
    CHECK(delta_of(obj, moore, "g12:-++") == "g13:-+ g14:-+");
    CHECK(delta_of(obj, moore, "g12:+-+") == "g13:-+ g14:+-");
    CHECK(delta_of(obj, moore, "g12:++-") == "g13:+- g14:+-");
}

TEST_CASE("ladybug unknot: the coherence bijections route as tabulated") {
    PDCode pd = parse_pd(kLadybugUnknot);
    AssoObject obj = build_asso(pd, 1);

    using V = std::vector<std::string>;
    // the four ladybug squares: both routings of the one-circle fibre
    CHECK(mu_route(obj, {0}, {3}) == V{"g14:-+", "g14:+-"});
    CHECK(mu_route(obj, {3}, {0}) == V{"g7:+-", "g7:-+"});
    CHECK(mu_route(obj, {1}, {3}) == V{"g13:-+", "g13:+-"});
    CHECK(mu_route(obj, {3}, {1}) == V{"g7:+-", "g7:-+"});
    // two forced squares for contrast
    CHECK(mu_route(obj, {0}, {1}) == V{"g14:-+", "g14:+-", "g14:+-"});
    CHECK(mu_route(obj, {1}, {0}) == V{"g13:-+", "g13:-+", "g13:+-"});
}

TEST_CASE("ladybug unknot: sq^2 of the tabulated cocycle is zero") {
    PDCode pd = parse_pd(kLadybugUnknot);
    AssoObject obj = build_asso(pd, 1);
    GradedChainComplex moore = moore_complex(obj);

    F2Vec alpha(moore.dim(1), 0);
    for (const char* id : {"g12:-++", "g12:++-", "g6:+", "g5:+"})
        alpha[obj.level(1)->index(id)] = 1;

    CupCalculator calc(obj);
    F2Vec sq2 = steenrod_square_rep(calc, moore, 1, alpha, 2);
    CHECK(std::count(sq2.begin(), sq2.end(), 1) == 0);  // literally zero
    F2Vec sq1 = steenrod_square_rep(calc, moore, 1, alpha, 1);
    CHECK(cohomology(moore, 2).reduce(sq1) == F2Vec{});

    auto table = kh_sq(pd, 1, 2);
    for (auto& [h, m] : table)
        for (auto v : m.a) CHECK(v == 0);
}

TEST_CASE("ladybug unknot: wedge spans under explicit span orders") {
    // with the two-arrow spans d^3_0 and d^3_3 re-ranked (second arrow
    // first), the five diagonal wedges produce exactly these arrow lists
    PDCode pd = parse_pd(kLadybugUnknot);
    AssoObject obj = build_asso(pd, 1);
    obj.order_overrides[{3, Seq{0}}] = {1, 0};
    obj.order_overrides[{3, Seq{3}}] = {1, 0};

    auto targets = [&](const Seq& U, const Seq& V) {
        Span w = wedge_on_diagonal(obj, 3, U, V);
        std::vector<std::string> out;
        for (auto& arr : w.arrows) out.push_back(w.tgt->element(arr.second));
        return out;
    };
    using V = std::vector<std::string>;
    CHECK(targets({0, 1}, {0, 1}) == V{"(g12:+-+,g12:-++)", "(g12:++-,g12:-++)",
                                       "(g12:++-,g12:+-+)", "(g12:++-,g12:+-+)"});
    CHECK(targets({0, 3}, {0, 3}) == V{"(g6:+,g6:+)"});
    CHECK(targets({1, 3}, {1, 3}) == V{"(g5:+,g5:+)", "(g5:+,g5:+)"});
    CHECK(targets({0, 1}, {0, 3}) == V{"(g12:-++,g6:+)"});
    CHECK(targets({0, 1}, {1, 3}) == V{"(g12:++-,g5:+)"});
}

TEST_CASE("kh squares are invariant under order shuffles") {
    PDCode pd = parse_pd(kLadybugUnknot);
    AssoObject base = build_asso(pd, 1);
    GradedChainComplex moore = moore_complex(base);
    F2Vec alpha(moore.dim(1), 0);
    for (const char* id : {"g12:-++", "g12:++-", "g6:+", "g5:+"})
        alpha[base.level(1)->index(id)] = 1;

    for (uint64_t seed = 1; seed <= 10; ++seed) {
        AssoObject shuffled = shuffle_orders(base, seed);
        CupCalculator calc(shuffled);
        F2Vec sq2 = steenrod_square_rep(calc, moore, 1, alpha, 2);
        CHECK(cohomology(moore, 3).reduce(sq2) == F2Vec{});
    }

    PDCode two = parse_pd(kTwoTrefoils);
    AssoObject obj2 = build_asso(two, 14);
    GradedChainComplex moore2 = moore_complex(obj2);
    CohomologyBasis h3(moore2, 3);
    CohomologyBasis h5(moore2, 5);
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        AssoObject shuffled = shuffle_orders(obj2, seed);
        CupCalculator calc(shuffled);
        F2Vec rep = steenrod_square_rep(calc, moore2, 3, h3.representatives()[0], 2);
        CHECK(h5.reduce(rep) == F2Vec{1});
    }
}

TEST_CASE("quantum_gradings enumerates exactly the populated gradings") {
    for (const char* text : {kKinkPlus, kRightTrefoil, kHopfMinus}) {
        PDCode pd = parse_pd(text);
        std::vector<int> qs = quantum_gradings(pd);
        CHECK(std::is_sorted(qs.begin(), qs.end()));
        std::set<int> populated;
        for (int mask = 0; mask < (1 << pd.size()); ++mask) {
            int c = static_cast<int>(resolve(pd, mask).circles.size());
            for (int minus = 0; minus <= c; ++minus)
                populated.insert((c - 2 * minus) + __builtin_popcount(mask) + pd.n_plus() -
                                 2 * pd.n_minus());
        }
        CHECK(std::set<int>(qs.begin(), qs.end()) == populated);
        for (auto& [key, d] : kh_table(pd)) CHECK(populated.count(key.second) == 1);
    }
}
