/**
 * \file cupi.hpp
 *
 * The combinatorial core of the stable cup-i products: good pairs of subsets
 * witnessing (dis)agreement of two face-span elements, maximal chains of good
 * pairs, the wedge spans they index, the comultiplication ∇ assembled from
 * the signed split U = U⁻ ∪ U⁺, the dual cup-i products and Steenrod squares,
 * and an independent classical oracle for semi-simplicial sets.
 */
#pragma once

#include <array>
#include <set>

#include "cupsq/homology.hpp"
#include "cupsq/simplicial.hpp"

namespace cupsq {

enum class PairClass { not_good, parallel, positive, negative };

/// A pair of disjoint subsets (W∥, W∘) of U∩V.
struct GoodPair {
    Seq w_par;
    Seq w_circ;
    bool operator==(const GoodPair&) const = default;
};

/// A maximal chain (W∥₁,W∘₁) ≺ … ≺ (W∥_r,W∘_r): each step adds one element
/// to W∘ and removes it from W∥ if present; the last pair is (∅, U∩V).
using MaxChain = std::vector<GoodPair>;

/// Classifies (W∥, W∘) for the arrows s ∈ ∂ⁿ_U, t ∈ ∂ⁿ_V (canonical
/// indices).  Good requires λ_{W∥}(s) = λ_{W∥}(t) and λ_{W∥,W∘}(s) ≠
/// λ_{W∥,W∘}(t); the positive/negative comparison uses the effective span
/// order and flips direction with the parity of n+|U|+|V|.
PairClass classify_pair(const AssoObject& obj, int n, const Seq& U, const Seq& V, int s, int t,
                        const GoodPair& pair);

/// All maximal chains of (s,t)-positive pairs, by depth-first search with
/// prefix pruning.  U∩V = ∅ yields one empty chain.
std::vector<MaxChain> enumerate_positive_chains(const AssoObject& obj, int n, const Seq& U,
                                                const Seq& V, int s, int t);

/// ∂_U ∧ ∂_V: one arrow per (s, t, positive chain), from X_n×X_n to
/// X_{n-|U|}×X_{n-|V|}; arrows ordered by (s, t, chain discovery order).
Span wedge_span(const AssoObject& obj, int n, const Seq& U, const Seq& V);
/// The composition with the diagonal: only s, t with a common source,
/// which becomes the arrow source in X_n.
Span wedge_on_diagonal(const AssoObject& obj, int n, const Seq& U, const Seq& V);

/// An F2 element of C⊗C: the set of basis pairs ((n₁,i₁),(n₂,i₂)) with
/// coefficient 1.
using TensorKey = std::array<int, 4>;
using TensorElt = std::set<TensorKey>;

/// Caches ∇ values and λ tables for one object.  All cup-i computations on
/// an object should share one calculator.
class CupCalculator {
  public:
    explicit CupCalculator(const AssoObject& obj) : obj_(&obj) {}

    const AssoObject& object() const { return *obj_; }

    /// ∇_k applied to the x-th generator of C_n: the mod-2 sum over
    /// U ∈ 𝒫_{n-k}(n) of the diagonal wedge ∂_{U⁻} ∧ ∂_{U⁺}.
    const TensorElt& nabla(int k, int n, int x);

    /// (α ⌣ᵢ β) for α of degree p and β of degree q, a cochain of degree
    /// p+q-i (empty levels give zero-length vectors).  α evaluates on the
    /// ∂_{U⁺} wedge factor and β on the ∂_{U⁻} factor, the orientation under
    /// which ⌣₀ is the classical front-face/back-face product.
    F2Vec cup_i(const F2Vec& alpha, int p, const F2Vec& beta, int q, int i);

  private:
    const AssoObject* obj_;
    std::map<std::pair<int, int>, std::vector<TensorElt>> nabla_cache_;
    // (n, U, W∥) -> per-arrow λ_{W∥} index; (n, U, W∥, W∘) -> per-arrow
    // effective rank of λ_{W∥,W∘}.
    std::map<std::tuple<int, Seq, Seq>, std::vector<int>> l1_cache_;
    std::map<std::tuple<int, Seq, Seq, Seq>, std::vector<int>> l2_cache_;

    const std::vector<int>& l1(int n, const Seq& U, const Seq& w_par);
    const std::vector<int>& l2(int n, const Seq& U, const Seq& w_par, const Seq& w_circ);
    bool positive(int n, const Seq& U, const Seq& V, int s, int t, int parity, const Seq& w_par,
                  const Seq& w_circ);
    long long count_positive(int n, const Seq& U, const Seq& V, int s, int t);
};

/// Convenience wrappers recomputing from scratch.
F2Vec cup_i(const AssoObject& obj, const F2Vec& alpha, int p, const F2Vec& beta, int q, int i);

/// 𝔰𝔮ⁱ representative: α ⌣_{n-i} α for a degree-n cocycle α.  Throws
/// domain_error if α is not a cocycle and integrity_error if the result
/// fails to be one.
F2Vec steenrod_square_rep(CupCalculator& calc, const GradedChainComplex& cx, int n,
                          const F2Vec& cocycle, int i);

/// Classical cup-i on a semi-simplicial set (every span source-bijective),
/// evaluated by iterating elementary face functions over the strictly
/// increasing sequences only — an independent oracle code path.
F2Vec classical_cup_i(const AssoObject& sset, const F2Vec& alpha, int p, const F2Vec& beta, int q,
                      int i);

/// The Alexander–Whitney front/back-face formula for ⌣₀ on a
/// semi-simplicial set.
F2Vec aw_cup0(const AssoObject& sset, const F2Vec& alpha, int p, const F2Vec& beta, int q);

}  // namespace cupsq
