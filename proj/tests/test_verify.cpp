/**
 * \file test_verify.cpp
 *
 * Unit tests for the random generators and the identity harness.
 */
#include <doctest.h>

#include "cupsq/verify.hpp"

using namespace cupsq;

TEST_CASE("random objects are valid and seed-deterministic") {
    GeneratorSpec spec;
    spec.max_level = 2;
    spec.max_set = 3;
    spec.max_arrows = 3;
    for (uint64_t seed = 0; seed < 8; ++seed) {
        spec.seed = seed;
        AssoObject a = random_asso(spec);
        CHECK(a.validate().ok());
        CHECK(a.top_level() == 2);
        AssoObject b = random_asso(spec);
        CHECK(a.levels.size() == b.levels.size());
        for (auto& [n, set] : a.levels) CHECK(set->elements() == b.level(n)->elements());
        for (auto& [key, span] : a.elem_faces) CHECK(span.arrows == b.elem_faces.at(key).arrows);
        for (auto& [key, m] : a.commutators)
            CHECK(m.matching == b.commutators.at(key).matching);
    }

    spec.max_level = -1;
    CHECK(random_asso(spec).levels.empty());
}

TEST_CASE("random semi-simplicial sets are source-bijective") {
    GeneratorSpec spec;
    spec.max_level = 3;
    spec.max_set = 4;
    for (uint64_t seed = 0; seed < 8; ++seed) {
        spec.seed = seed;
        AssoObject s = random_semi_simplicial_set(spec);
        CHECK(s.validate().ok());
        for (auto& [key, span] : s.elem_faces) {
            CHECK(is_free(span));
            CHECK(span.size() == span.src->size());
        }
        // Suspension preserves source-bijectivity away from face 0.
        AssoObject sus = suspend(s);
        CHECK(sus.validate().ok());
    }
}

TEST_CASE("order shuffles keep the data valid") {
    GeneratorSpec spec;
    spec.max_level = 2;
    spec.seed = 5;
    AssoObject a = random_asso(spec);
    AssoObject b = shuffle_orders(a, 17);
    CHECK(b.validate().ok());
    // Same underlying spans, possibly different effective ranks.
    for (auto& [key, span] : a.elem_faces) CHECK(span.arrows == b.elem_faces.at(key).arrows);
}

TEST_CASE("identity harness passes on its suites") {
    GeneratorSpec spec;
    spec.max_level = 2;
    spec.max_set = 3;
    spec.max_arrows = 3;
    spec.seed = 42;
    for (const char* name :
         {"comult", "suspension", "order-shuffle", "naturality", "bockstein", "oracle"}) {
        CheckReport r = check_identity(name, spec, 3);
        INFO(r.witness);
        CHECK(r.pass);
    }
    CheckReport cartan = check_identity("cartan", spec, 2);
    INFO(cartan.witness);
    CHECK(cartan.pass);
    CheckReport sign = check_identity("sign-law", spec, 25);
    INFO(sign.witness);
    CHECK(sign.pass);
    CHECK_THROWS_AS(check_identity("no-such-identity", spec, 1), domain_error);
}
