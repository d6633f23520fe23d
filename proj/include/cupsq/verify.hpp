/**
 * \file verify.hpp
 *
 * Random-instance generators and the property harness: random valid objects
 * are produced as Λ of products of primitive cubes (which guarantees 3-face
 * coherence by construction), random semi-simplicial sets come from random
 * simplicial complexes, and the named identity checks tie the cup-i layer to
 * its structural identities.
 */
#pragma once

#include <cstdint>
#include <string>

#include "cupsq/cupi.hpp"
#include "cupsq/simplicial.hpp"

namespace cupsq {

struct GeneratorSpec {
    int max_level = 3;   ///< largest allowed top level of the object
    int max_set = 4;     ///< largest primitive vertex-set size
    int max_arrows = 4;  ///< largest primitive span size
    uint64_t seed = 0;
};

/// The external product of two cubes: dimensions add, vertices are product
/// sets, edges act on one factor, squares are factor squares or the
/// interchange.
CubeBurnside cube_product(const CubeBurnside& g, const CubeBurnside& h);

/// A random valid ordered object, deterministic in the seed: Λ of a product
/// of random 1-cubes and fibre-balanced twisted 2-cubes.
AssoObject random_asso(const GeneratorSpec& spec);

/// A random object all of whose spans are source-bijective: the augmented
/// face structure of a random simplicial complex.
AssoObject random_semi_simplicial_set(const GeneratorSpec& spec);

/// Installs random order overrides on derived spans (data-only copy).
AssoObject shuffle_orders(const AssoObject& obj, uint64_t seed);

/// Fills in every commutator whose composite fibres all have size ≤ 1 (the
/// matching is then forced).  Throws integrity_error on an ambiguous fibre.
void forced_commutators(AssoObject& obj);

struct CheckReport {
    std::string name;
    bool pass = true;
    std::string witness;  ///< empty when passing; minimal failure context
};

/// Runs one named identity over `count` seeded random instances.  Names:
/// comult, suspension, order-shuffle, naturality, cartan, bockstein,
/// sign-law, oracle.  Throws domain_error on an unknown name.
CheckReport check_identity(const std::string& name, const GeneratorSpec& spec, int count);

}  // namespace cupsq
