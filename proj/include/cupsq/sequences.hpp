/**
 * \file sequences.hpp
 *
 * Combinatorics of face-index sequences: the maps ψ/γ/η/ξ that reindex faces
 * under composition, the sets P_q(n) of strictly increasing sequences and
 * 𝒫_q(n) of non-decreasing sequences with values repeated at most twice, and
 * the signed split U = U⁻ ∪ U⁺ driven by the index function.
 */
#pragma once

#include <vector>

#include "cupsq/burnside.hpp"

namespace cupsq {

/// A face-index sequence.  Strictly increasing for P_q(n); non-decreasing
/// with each value appearing at most twice for 𝒫_q(n).
using Seq = std::vector<int>;

/// ψ_V(U): positions of U inside the complement of V (U and V disjoint).
Seq psi(const Seq& V, const Seq& U);
/// γ_V(U): the U-indexed elements of the complement of V, i.e. the inverse
/// of ψ_V.
Seq gamma(const Seq& V, const Seq& U);
/// η_V(U) = ψ_V(U∖V) for V ⊆ U.
Seq eta(const Seq& V, const Seq& U);
/// ξ_V(U) = γ_V(U) ∪ V.
Seq xi(const Seq& V, const Seq& U);

int psi_one(const Seq& V, int u);

/// Set operations on increasing sequences.
Seq seq_union(const Seq& a, const Seq& b);
Seq seq_minus(const Seq& a, const Seq& b);
Seq seq_intersect(const Seq& a, const Seq& b);
bool seq_subset(const Seq& a, const Seq& b);

/// Is `u` a valid element of P_q(n) (strictly increasing, values in [0,n])?
bool is_increasing_in_range(const Seq& u, int n);
/// Is `u` a valid element of 𝒫_q(n)?
bool is_script_p(const Seq& u, int n);

/// All of P_q(n).
std::vector<Seq> all_p(int q, int n);
/// All of 𝒫_q(n).
std::vector<Seq> all_script_p(int q, int n);

/// The split of U ∈ 𝒫_q(n) into repeated/non-repeated parts and the signed
/// subsequences U⁻ (odd index) and U⁺ (even index); every repeated value
/// belongs to both.
struct SignedParts {
    Seq dot;      ///< values appearing once
    Seq ddot;     ///< values appearing twice
    Seq u_minus;  ///< odd-index part
    Seq u_plus;   ///< even-index part
};

SignedParts signed_parts(const Seq& U, int n);

}  // namespace cupsq
