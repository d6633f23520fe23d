/**
 * \file io.hpp
 *
 * Canonical JSON serialisation of the two on-disk formats.
 *
 * ASSO-JSON describes an ordered augmented semi-simplicial object:
 *   { "levels": { "<n>": ["id", ...], ... },
 *     "faces": { "<n>:<i>": [[src_idx, tgt_idx], ...], ... },
 *     "commutators": { "<n>:<i>,<j>": [perm ...], ... },
 *     "order_overrides": { "<n>:<u1>,<u2>,...": [perm ...], ... } }
 *
 * PD-JSON describes a link diagram:
 *   { "crossings": [[a,b,c,d], ...], "signs": [±1, ...] }
 *
 * Serialisation is canonical (sorted keys, two-space indent, trailing
 * newline), so serialise(deserialise(text)) is byte-identical for canonical
 * inputs.  Deserialisation throws domain_error with a location on malformed
 * input.
 */
#pragma once

#include <string>

#include "cupsq/khovanov.hpp"
#include "cupsq/simplicial.hpp"

namespace cupsq {

std::string asso_to_json(const AssoObject& obj);
AssoObject asso_from_json(const std::string& text);

std::string pd_to_json(const PDCode& pd);

/// Whole-file read; throws domain_error when the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cupsq
