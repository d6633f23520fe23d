/**
 * \file acceptance.cpp
 *
 * End-to-end acceptance checks, one per shipped claim.  Each criterion
 * prints exactly one PASS/FAIL line (with its wall-clock time); the binary
 * exits nonzero if any criterion fails or exceeds its time budget.
 */
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cupsq/cupi.hpp"
#include "cupsq/io.hpp"
#include "cupsq/khovanov.hpp"
#include "cupsq/verify.hpp"

using namespace cupsq;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

AssoObject load(const std::string& name) { return asso_from_json(read_file(fixture(name))); }

struct Criterion {
    int number;
    std::string title;
    double budget_ms;
    std::function<bool(std::string&)> body;
};

/// The matrix of sq^i : H^n -> H^{n+i} in the cohomology coordinate bases.
F2Mat sq_matrix(const AssoObject& obj, const GradedChainComplex& cx, int n, int i) {
    CohomologyBasis src = cohomology(cx, n);
    CohomologyBasis tgt = cohomology(cx, n + i);
    CupCalculator calc(obj);
    F2Mat m(src.rank(), tgt.rank());
    for (int r = 0; r < src.rank(); ++r) {
        F2Vec coords = tgt.reduce(steenrod_square_rep(calc, cx, n, src.representatives()[r], i));
        for (int c = 0; c < tgt.rank(); ++c) m.at(r, c) = coords[c];
    }
    return m;
}

/// For each arrow of the derived span removing V1 then V2, the middle
/// element the coherence bijection routes it through.
std::vector<std::string> mu_route(const AssoObject& obj, const Seq& V1, const Seq& V2) {
    Seq U = V1;
    U.insert(U.end(), V2.begin(), V2.end());
    std::sort(U.begin(), U.end());
    FibBijection m = obj.mu(3, V1, V2);
    Span inner = obj.face_span(3, V1);
    Span comp = compose(obj.face_span(3 - static_cast<int>(V1.size()), psi(V1, V2)), inner);
    std::vector<std::string> out;
    for (int t = 0; t < obj.face(3, U).span.size(); ++t)
        out.push_back(obj.level(2)->element(inner.arrows[comp.parents[m.matching[t]].first].second));
    return out;
}

bool identity_pass(const std::string& name, int count, std::string& why, int max_level = 3,
                   int max_set = 4) {
    GeneratorSpec spec;
    spec.max_level = max_level;
    spec.max_set = max_set;
    CheckReport report = check_identity(name, spec, count);
    if (!report.pass) why = report.name + ": " + report.witness;
    return report.pass;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "first square on the mod-2 Moore object is the bottom-to-top map", 1.0,
                        [](std::string& why) {
                            AssoObject x = load("rp2.json");
                            GradedChainComplex cx = moore_complex(x);
                            CupCalculator calc(x);
                            F2Vec rep = steenrod_square_rep(calc, cx, -1, {1}, 1);
                            if (rep != F2Vec{1}) { why = "sq1 representative is not x*"; return false; }
                            if (cohomology(cx, 0).reduce(rep) != F2Vec{1}) {
                                why = "sq1 class is not [x*]";
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back({2, "join of two Moore objects: 11 positive chains and nontrivial sq2",
                        10.0, [](std::string& why) {
                            AssoObject j = load("join_moore.json");
                            GradedChainComplex cx = moore_complex(j);
                            size_t total = 0;
                            for (int s = 0; s < 4; ++s)
                                for (int t = 0; t < 4; ++t)
                                    total +=
                                        enumerate_positive_chains(j, 1, {0, 1}, {0, 1}, s, t).size();
                            if (total != 11) {
                                why = "positive chain total " + std::to_string(total);
                                return false;
                            }
                            CupCalculator calc(j);
                            F2Vec rep = steenrod_square_rep(calc, cx, -1, {1}, 2);
                            if (rep != F2Vec{1} || cohomology(cx, 1).reduce(rep) != F2Vec{1}) {
                                why = "sq2 of the bottom class is not the top class";
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back({3, "iterated joins carry nontrivial sq3 and sq4", 1000.0,
                        [](std::string& why) {
                            AssoObject m = load("rp2.json");
                            AssoObject j3 = load("triple_join.json");
                            GradedChainComplex c3 = moore_complex(j3);
                            CupCalculator calc3(j3);
                            if (is_zero(cohomology(c3, 2).reduce(
                                    steenrod_square_rep(calc3, c3, -1, {1}, 3)))) {
                                why = "sq3 vanishes on the triple join";
                                return false;
                            }
                            AssoObject j4 = join(j3, m);
                            GradedChainComplex c4 = moore_complex(j4);
                            CupCalculator calc4(j4);
                            if (is_zero(cohomology(c4, 3).reduce(
                                    steenrod_square_rep(calc4, c4, -1, {1}, 4)))) {
                                why = "sq4 vanishes on the quadruple join";
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back({4, "two-step comultiplication coefficient equals the permutation-sign law",
                        1000.0,
                        [](std::string& why) { return identity_pass("sign-law", 200, why); }});

    criteria.push_back(
        {5, "two disjoint trefoils at q=14: ranks and a nonzero second square", 30000.0,
         [](std::string& why) {
             PDCode pd = parse_pd(read_file(fixture("two_trefoils.json")));
             AssoObject obj = build_asso(pd, 14);
             GradedChainComplex cx = moore_complex(obj);
             std::vector<int> dims = {cx.dim(2), cx.dim(3), cx.dim(4), cx.dim(5)};
             if (dims != std::vector<int>{2, 15, 30, 15}) { why = "cochain dims"; return false; }
             std::vector<int> ranks;
             for (int n = 2; n <= 5; ++n) ranks.push_back(cohomology(cx, n).rank());
             if (ranks != std::vector<int>{0, 1, 4, 1}) { why = "Kh ranks"; return false; }
             CohomologyBasis h3 = cohomology(cx, 3);
             CupCalculator calc(obj);
             F2Vec rep = steenrod_square_rep(calc, cx, 3, h3.representatives()[0], 2);
             int idx = obj.level(5)->index("g63:+-++-+");
             for (int i = 0; i < static_cast<int>(rep.size()); ++i)
                 if (rep[i] != (i == idx ? 1 : 0)) {
                     why = "sq2 representative is not the two-minus dual";
                     return false;
                 }
             if (cohomology(cx, 5).reduce(rep) != F2Vec{1}) {
                 why = "sq2 class vanishes in Kh^{14,6}";
                 return false;
             }
             auto sq2 = kh_sq(pd, 14, 2);
             if (sq2[4].rows != 1 || sq2[4].cols != 1 || sq2[4].at(0, 0) != 1) {
                 why = "kh_sq matrix at h=4 is not (1)";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {6, "4-crossing unknot at q=1: ranks, ladybug routings and a vanishing square", 5000.0,
         [](std::string& why) {
             PDCode pd = parse_pd(read_file(fixture("unknot4.json")));
             AssoObject obj = build_asso(pd, 1);
             GradedChainComplex cx = moore_complex(obj);
             std::vector<int> dims = {cx.dim(0), cx.dim(1), cx.dim(2), cx.dim(3)};
             if (dims != std::vector<int>{4, 12, 8, 1}) { why = "cochain dims"; return false; }
             for (int n = 0; n <= 3; ++n)
                 if (cohomology(cx, n).rank() != (n == 1 ? 1 : 0)) {
                     why = "cohomology is not F2 in the middle degree";
                     return false;
                 }
             using V = std::vector<std::string>;
             if (mu_route(obj, {0}, {3}) != V{"g14:-+", "g14:+-"} ||
                 mu_route(obj, {3}, {0}) != V{"g7:+-", "g7:-+"} ||
                 mu_route(obj, {1}, {3}) != V{"g13:-+", "g13:+-"} ||
                 mu_route(obj, {3}, {1}) != V{"g7:+-", "g7:-+"}) {
                 why = "a ladybug routing differs from the tabulated one";
                 return false;
             }
             F2Vec alpha(cx.dim(1), 0);
             for (const char* id : {"g12:-++", "g12:++-", "g6:+", "g5:+"})
                 alpha[obj.level(1)->index(id)] = 1;
             CupCalculator calc(obj);
             if (!is_zero(steenrod_square_rep(calc, cx, 1, alpha, 2))) {
                 why = "sq2 representative of the tabulated cocycle is nonzero";
                 return false;
             }
             return true;
         }});

    criteria.push_back({7, "comultiplication identity on 50 random objects", 60000.0,
                        [](std::string& why) { return identity_pass("comult", 50, why, 4, 5); }});

    criteria.push_back({8, "cup-i equals the classical product on 20 semi-simplicial sets",
                        60000.0,
                        [](std::string& why) { return identity_pass("oracle", 20, why); }});

    criteria.push_back(
        {9, "order shuffles leave every square matrix unchanged (10 per fixture)", 60000.0,
         [](std::string& why) {
             std::vector<std::pair<std::string, AssoObject>> objects;
             for (const char* name :
                  {"rp2.json", "join_moore.json", "triple_join.json", "two_step.json"})
                 objects.push_back({name, load(name)});
             objects.push_back(
                 {"unknot4 q=1", build_asso(parse_pd(read_file(fixture("unknot4.json"))), 1)});
             objects.push_back(
                 {"two_trefoils q=14",
                  build_asso(parse_pd(read_file(fixture("two_trefoils.json"))), 14)});
             for (auto& [name, obj] : objects) {
                 GradedChainComplex cx = moore_complex(obj);
                 int top = cx.min_deg + static_cast<int>(cx.dims.size()) - 1;
                 for (int n = cx.min_deg; n <= top; ++n)
                     for (int i = 1; i <= 3 && n + i <= top; ++i) {
                         F2Mat base = sq_matrix(obj, cx, n, i);
                         for (uint64_t seed = 1; seed <= 10; ++seed) {
                             AssoObject shuffled = shuffle_orders(obj, seed);
                             if (sq_matrix(shuffled, moore_complex(shuffled), n, i) != base) {
                                 why = name + ": sq^" + std::to_string(i) + " at degree " +
                                       std::to_string(n) + " changed under seed " +
                                       std::to_string(seed);
                                 return false;
                             }
                         }
                     }
             }
             return true;
         }});

    criteria.push_back({10, "suspension exchanges cup-i factors and commutes with squares",
                        60000.0,
                        [](std::string& why) { return identity_pass("suspension", 30, why); }});

    criteria.push_back(
        {11, "first square equals the Bockstein (30 random objects and all fixtures)", 60000.0,
         [](std::string& why) {
             if (!identity_pass("bockstein", 30, why)) return false;
             std::vector<std::pair<std::string, AssoObject>> objects;
             for (const char* name :
                  {"rp2.json", "join_moore.json", "triple_join.json", "two_step.json"})
                 objects.push_back({name, load(name)});
             objects.push_back(
                 {"unknot4 q=1", build_asso(parse_pd(read_file(fixture("unknot4.json"))), 1)});
             objects.push_back(
                 {"two_trefoils q=14",
                  build_asso(parse_pd(read_file(fixture("two_trefoils.json"))), 14)});
             for (auto& [name, obj] : objects) {
                 GradedChainComplex cx = moore_complex(obj);
                 CupCalculator calc(obj);
                 int top = cx.min_deg + static_cast<int>(cx.dims.size()) - 1;
                 for (int n = cx.min_deg; n < top; ++n) {
                     CohomologyBasis src = cohomology(cx, n);
                     CohomologyBasis tgt = cohomology(cx, n + 1);
                     for (const F2Vec& rep : src.representatives()) {
                         F2Vec via_sq = tgt.reduce(steenrod_square_rep(calc, cx, n, rep, 1));
                         F2Vec via_bk = tgt.reduce(bockstein(cx, n, rep));
                         if (via_sq != via_bk) {
                             why = name + ": sq1 != Bockstein at degree " + std::to_string(n);
                             return false;
                         }
                     }
                 }
             }
             return true;
         }});

    criteria.push_back({12, "Cartan formula on joins of random objects", 60000.0,
                        [](std::string& why) { return identity_pass("cartan", 20, why); }});

    criteria.push_back({13, "cup-i is natural for free order-preserving inclusions", 60000.0,
                        [](std::string& why) { return identity_pass("naturality", 30, why); }});

    criteria.push_back(
        {14, "Khovanov tables match the Frobenius brute force; reorder and kink invariance",
         60000.0, [](std::string& why) {
             auto table_of = [](const std::string& text) {
                 PDCode pd = parse_pd(text);
                 auto t = kh_table(pd);
                 if (t != kh_table_bruteforce(pd))
                     throw std::runtime_error("table disagrees with the brute-force oracle");
                 return t;
             };
             try {
                 auto unknot = table_of("X[1,1,2,2]");
                 if (table_of("X[2,1,1,2]") != unknot) { why = "kink tables differ"; return false; }
                 table_of("X[2,3,1,4] X[3,2,4,1]");
                 table_of("X[4,1,3,2] X[2,3,1,4]");
                 auto trefoil = table_of("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
                 if (table_of("X[3,1,4,6] X[5,3,6,2] X[1,5,2,4]") != trefoil) {
                     why = "crossing reorder changed the trefoil table";
                     return false;
                 }
                 if (table_of(read_file(fixture("trefoil_r1.json"))) != trefoil) {
                     why = "a Reidemeister-I kink changed the trefoil table";
                     return false;
                 }
             } catch (const std::exception& e) {
                 why = e.what();
                 return false;
             }
             return true;
         }});

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (ok && ms > criterion.budget_ms) {
            ok = false;
            why = "over time budget";
        }
        std::printf("%s criterion %2d: %s (%.2f ms, budget %.0f ms)%s%s\n",
                    ok ? "PASS" : "FAIL", criterion.number, criterion.title.c_str(), ms,
                    criterion.budget_ms, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
