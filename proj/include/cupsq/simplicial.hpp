/**
 * \file simplicial.hpp
 *
 * Ordered augmented semi-simplicial objects in the Burnside category.  The
 * stored data are the levels X_n, the elementary face spans ∂ⁿ_i and the
 * square commutator bijections between ∂^{n-1}_{j-1}∘∂ⁿ_i and ∂^{n-1}_i∘∂ⁿ_j.
 * Everything else is derived: the generalised face span ∂ⁿ_U is the canonical
 * composite peeling the smallest face index first, the coherence bijections
 * μⁿ_{V₁,V₂} are obtained by rewriting that peel order with one stored
 * commutator per adjacent transposition, and λ-projections follow.  Optional
 * order overrides re-rank the arrows of any derived span without changing
 * its canonical internal indexing.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cupsq/burnside.hpp"
#include "cupsq/homology.hpp"
#include "cupsq/sequences.hpp"

namespace cupsq {

/// An element of a derived face span, identified by its level, the face set
/// and the list of elementary arrow indices along the canonical composite
/// (first-applied arrow first).
struct PathElement {
    int n = 0;
    Seq U;
    std::vector<int> arrows;
};

/// Derived data of one generalised face span ∂ⁿ_U.
struct FaceData {
    Span span;                            ///< canonical arrow order
    std::vector<std::vector<int>> paths;  ///< per arrow, elementary indices
    std::map<std::vector<int>, int> index_of_path;
    std::vector<int> rank;                ///< effective (override-aware) rank per arrow
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class AssoObject {
  public:
    AssoObject() = default;
    /// Copies carry only the defining data, not derived caches, so that a
    /// copy may be given different order overrides before first use.
    AssoObject(const AssoObject& o)
        : levels(o.levels),
          elem_faces(o.elem_faces),
          commutators(o.commutators),
          order_overrides(o.order_overrides) {}
    AssoObject& operator=(const AssoObject& o);
    AssoObject(AssoObject&&) = default;
    AssoObject& operator=(AssoObject&&) = default;

    /// Level sets X_n, n ≥ -1; a missing entry means the empty set.
    std::map<int, SetPtr> levels;
    /// Elementary face spans (n, i) ↦ ∂ⁿ_i : X_n → X_{n-1}, 0 ≤ i ≤ n.
    std::map<std::pair<int, int>, Span> elem_faces;
    /// (n, i, j) with i < j ≤ n ↦ fibrewise bijection from
    /// compose(∂^{n-1}_{j-1}, ∂ⁿ_i) to compose(∂^{n-1}_i, ∂ⁿ_j).
    /// May be omitted when both composites are empty.
    std::map<std::tuple<int, int, int>, FibBijection> commutators;
    /// (n, U) ↦ permutation: effective order position p holds the canonical
    /// arrow perm[p] of the derived span ∂ⁿ_U.
    std::map<std::pair<int, Seq>, std::vector<int>> order_overrides;

    /// Largest n with a (possibly empty) declared level; -2 when empty.
    int top_level() const;
    /// The level set (a shared empty set when undeclared).
    SetPtr level(int n) const;
    /// ∂ⁿ_i, an empty span with the right endpoints when undeclared.
    const Span& elem_face(int n, int i) const;
    /// Derived generalised face data for U ∈ P_q(n); cached.
    const FaceData& face(int n, const Seq& U) const;
    Span face_span(int n, const Seq& U) const { return face(n, U).span; }

    /// Rewrites the canonical peel paths of ∂ⁿ_U to peel the elements of U
    /// in the order given by `target_order` (a permutation of U), applying
    /// one stored commutator per adjacent transposition.
    std::vector<std::vector<int>> reorder_paths(int n, const Seq& U,
                                                const std::vector<int>& target_order) const;

    /// μⁿ_{V₁,V₂}: matching from face_span(n, V₁∪V₂) to
    /// compose(face_span(n−|V₁|, ψ_{V₁}(V₂)), face_span(n, V₁)).
    FibBijection mu(int n, const Seq& V1, const Seq& V2) const;

    /// λ-projections of an arrow s (canonical index in ∂ⁿ_U):
    /// lambda1 lands in ∂ⁿ_{V₁}, lambda2 in ∂^{n−|V₁|}_{ψ_{V₁}(V₂)}.
    int lambda1(int n, const Seq& U, const Seq& V1, int s) const;
    int lambda2(int n, const Seq& U, const Seq& V1, const Seq& V2, int s) const;

    /// Effective rank of an arrow of ∂ⁿ_U under order overrides.
    int rank(int n, const Seq& U, int arrow) const { return face(n, U).rank[arrow]; }

    ValidationReport validate() const;

    /// The two composites around a 2-face together with the stored
    /// commutator matching in both directions; cached.  Internal helper for
    /// path rewriting, exposed for the join construction.
    struct PairComposite {
        Span left;   // compose(∂^{m-1}_{j-1}, ∂^m_i)
        Span right;  // compose(∂^{m-1}_i, ∂^m_j)
        std::map<std::pair<int, int>, int> left_index;   // parents -> index
        std::map<std::pair<int, int>, int> right_index;
        std::vector<int> forward;  // left index -> right index
        std::vector<int> backward;
    };
    const PairComposite& pair_composite(int m, int i, int j) const;

  private:
    mutable std::map<std::pair<int, Seq>, FaceData> face_cache_;
    mutable std::map<int, SetPtr> empty_levels_;
    mutable std::map<std::pair<int, int>, Span> empty_faces_;
    mutable std::map<std::tuple<int, int, int>, PairComposite> pair_cache_;
};

/// ΣX: level n holds X_{n-1}; faces ∂̄ⁿ_i = ∂^{n-1}_{i-1} for i > 0 and the
/// empty span for i = 0; orders inherited.
AssoObject suspend(const AssoObject& x);

/// The join X*Y: (X*Y)_n = ⨿_{n₁+n₂=n−1} X_{n₁}×Y_{n₂}, components in
/// ascending n₁; span orders are lexicographic in (n₁, first factor, second
/// factor), installed as order overrides over the canonical composite order.
AssoObject join(const AssoObject& x, const AssoObject& y);

/// Element identifier used by join levels.
std::string join_id(const std::string& x, const std::string& y);

/// A c-dimensional cube in the Burnside category: vertex sets F(A) indexed
/// by bitmask, edge spans F(A) → F(A∖a), and square bijections between the
/// two edge composites around each 2-face, stored for a < b as a matching
/// from compose(edge(A∖a, b), edge(A, a)) to compose(edge(A∖b, a), edge(A, b)).
struct CubeBurnside {
    int dim = 0;
    std::vector<SetPtr> vertex;                       ///< size 2^dim, by mask
    std::map<std::pair<int, int>, Span> edges;        ///< (mask A, a ∈ A ⊂ {1..dim})
    std::map<std::tuple<int, int, int>, FibBijection> squares;  ///< (A, a, b), a < b
};

/// Λ(F): level k is the coproduct of F(A) over |A| = k+1 (masks ascending);
/// faces come from edge spans, commutators from square bijections.
AssoObject lambda_from_cube(const CubeBurnside& f);

/// The chain complex with d = Σ (−1)ⁱ abelianise(∂ⁿ_i) over ℤ, degrees
/// −1..top_level().  Throws structural_error if d∘d ≠ 0.
GradedChainComplex moore_complex(const AssoObject& x);

/// A map of objects, given by its per-level spans.
struct AssoMap {
    const AssoObject* src = nullptr;
    const AssoObject* tgt = nullptr;
    std::map<int, Span> level_spans;  ///< f_n : X_n → Y_n
};

/// True when every level span is free and for every (n, U) the two composite
/// spans f_{n−q}∘∂ⁿ_U and ∂̄ⁿ_U∘f_n have matching restriction-set sizes, so
/// the unique order-preserving fibrewise bijection exists.
bool is_order_preserving_free(const AssoMap& f);

/// Pullback of a degree-n F2 cochain on the target along a free map.
F2Vec free_map_pushpull(const AssoMap& f, int n, const F2Vec& cochain);

}  // namespace cupsq
