/**
 * \file khovanov.hpp
 *
 * From an oriented link diagram (PD code with ordered, signed crossings) to
 * the Khovanov cube in the Burnside category, one quantum grading at a time:
 * resolutions and their circles, edge spans (transposes of the Frobenius
 * merge/split maps), square bijections including the ladybug matching, the
 * associated semi-simplicial object, Kh dimension tables and Steenrod
 * squares with the n₋ grading shift.  A brute-force F2 computation built
 * directly from the Frobenius algebra serves as an independent oracle.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cupsq/cupi.hpp"
#include "cupsq/simplicial.hpp"

namespace cupsq {

/// A planar diagram code: per crossing the four arc labels counterclockwise
/// from the incoming under-strand, plus the crossing sign.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;  ///< ±1 per crossing

    int size() const { return static_cast<int>(crossings.size()); }
    int n_minus() const;
    int n_plus() const;
};

/// Parses either PD-JSON ({"crossings": [[a,b,c,d],…], "signs": [±1,…]}) or
/// the textual form "X[a,b,c,d] X[e,f,g,h] …" (signs derived from the arc
/// numbering).  Throws domain_error with a location on malformed input.
PDCode parse_pd(const std::string& text);

/// One passage of a resolution circle through a smoothed crossing.
struct Passage {
    int crossing;  ///< 0-based crossing index
    int slot_in;   ///< PD slot by which the traversal enters
    int slot_out;  ///< PD slot by which it leaves
};

/// One circle of a complete resolution: the passages in traversal order and
/// the arc labels between them (arc[i] is traversed after passage[i]).
struct Circle {
    std::vector<Passage> passages;
    std::vector<int> arcs;
    int min_arc = 0;  ///< smallest arc label; circles are ordered by it
};

/// The complete smoothing of a diagram: 1-smoothing at the crossings in
/// `mask` (bit c set = crossing c+1), 0-smoothing elsewhere.
struct Resolution {
    int mask = 0;
    std::vector<Circle> circles;      ///< ordered by min_arc
    std::map<int, int> circle_of_arc; ///< arc label -> circle index
};

Resolution resolve(const PDCode& pd, int mask);

/// The generators of quantum grading q at the vertex `mask`: each generator
/// labels every circle with x₊ or x₋ and q = (#x₊−#x₋) + |mask| + n₊ − 2n₋.
/// Identifiers are "g<mask>:<labels>", labels over circles in circle order;
/// generators are ordered by the x₋ indicator read as a binary number with
/// the first circle as the lowest bit.
SetPtr kh_generators(const PDCode& pd, int mask, int q);

/// The edge span F(A)|_q → F(A∖a)|_q for a ∈ A: the transpose of the
/// Frobenius merge m (x₊x₊↦x₊, x₊x₋↦x₋, x₋x₊↦x₋, x₋x₋↦0) or comultiplication
/// Δ (x₊↦x₊x₋+x₋x₊, x₋↦x₋x₋), according to whether the saddle from A∖a to A
/// merges or splits; arrows ordered by source generator, then target.
Span edge_span(const PDCode& pd, int mask, int a, int q);

/// The fibrewise bijection from compose(edge(A∖a, b), edge(A, a)) to
/// compose(edge(A∖b, a), edge(A, b)) for a < b ∈ A.  Fibres of size one are
/// matched uniquely; fibres of size two occur exactly in the ladybug
/// configuration (one circle, two interleaved surgery arcs) and are matched
/// by the right-pair rule computed from the arc positions on the split
/// circle.  Any other ambiguous fibre throws integrity_error.
FibBijection square_bijection(const PDCode& pd, int mask, int a, int b, int q);

/// The cube of the diagram restricted to quantum grading q.
CubeBurnside kh_cube(const PDCode& pd, int q);

/// Λ of the Khovanov cube at quantum grading q: level n holds the vertices
/// with n+1 one-smoothings; the dual F2 Moore complex is the Khovanov
/// cochain complex in cohomological degree h = n + 1 − n₋.
AssoObject build_asso(const PDCode& pd, int q);

/// The quantum gradings with at least one generator, ascending.
std::vector<int> quantum_gradings(const PDCode& pd);

/// dim Kh^{h,q}(D; F2) for all (h, q) with a nonzero entry.
std::map<std::pair<int, int>, int> kh_table(const PDCode& pd);

/// The same table computed directly from the Frobenius algebra, with no
/// Burnside-category layer: an independent oracle.
std::map<std::pair<int, int>, int> kh_table_bruteforce(const PDCode& pd);

/// 𝔰𝔮ⁱ on Kh^{h,q} for every h, as matrices between cohomology coordinate
/// bases: result[h] has one row per basis class of Kh^{h,q}; row j holds the
/// coordinates of 𝔰𝔮ⁱ of the jth class in the basis of Kh^{h+i,q}.
/// Computed as [α ⌣_{n−i} α] with n = h − 1 + n₋.
std::map<int, F2Mat> kh_sq(const PDCode& pd, int q, int i);

}  // namespace cupsq
