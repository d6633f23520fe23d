/**
 * \file cube.cpp
 *
 * From a cube in the Burnside category to a semi-simplicial object: level k
 * is the coproduct of the vertex sets of cardinality k+1, faces come from
 * edge spans, commutators from square bijections.
 */
#include "cupsq/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cupsq {

namespace {

std::vector<int> bits_of(int mask) {
    std::vector<int> out;
    for (int b = 1; mask; ++b, mask >>= 1)
        if (mask & 1) out.push_back(b);
    return out;
}

}  // namespace

AssoObject lambda_from_cube(const CubeBurnside& f) {
    const int total = 1 << f.dim;
    if (static_cast<int>(f.vertex.size()) != total)
        throw structural_error("cube: vertex table has wrong size");

    // Levels: masks of popcount k+1 in ascending mask order, concatenated.
    std::vector<std::vector<int>> masks_at(f.dim + 1);
    for (int mask = 0; mask < total; ++mask) masks_at[std::popcount(static_cast<unsigned>(mask))].push_back(mask);
    std::map<int, int> offset;  // mask -> offset within its level
    AssoObject obj;
    {
        std::set<std::string> seen;
        for (int k = -1; k < f.dim; ++k) {
            std::vector<std::string> elems;
            for (int mask : masks_at[k + 1]) {
                offset[mask] = static_cast<int>(elems.size());
                for (const auto& id : f.vertex[mask]->elements()) {
                    if (!seen.insert(id).second)
                        throw structural_error("cube: element id '" + id + "' is not unique");
                    elems.push_back(id);
                }
            }
            obj.levels[k] = make_set("L" + std::to_string(k), std::move(elems));
        }
    }

    auto edge_of = [&f](int mask, int a) -> Span {
        auto it = f.edges.find({mask, a});
        if (it != f.edges.end()) return it->second;
        Span empty;
        empty.src = f.vertex[mask];
        empty.tgt = f.vertex[mask & ~(1 << (a - 1))];
        return empty;
    };

    // Elementary faces: ∂ᵏ_i on the component of mask A removes the
    // (i+1)-th smallest element of A.
    for (int k = 0; k < f.dim; ++k) {
        for (int i = 0; i <= k; ++i) {
            Span span;
            span.src = obj.levels[k];
            span.tgt = obj.levels[k - 1];
            for (int mask : masks_at[k + 1]) {
                int a = bits_of(mask)[i];
                Span e = edge_of(mask, a);
                int sub = mask & ~(1 << (a - 1));
                for (auto [s, t] : e.arrows)
                    span.arrows.emplace_back(offset[mask] + s, offset[sub] + t);
            }
            obj.elem_faces[{k, i}] = std::move(span);
        }
    }

    // Commutators: the square bijections, block-diagonal over components.
    for (int k = 1; k < f.dim; ++k) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                FibBijection m;
                int off_left = 0, off_right = 0;
                bool any = false;
                for (int mask : masks_at[k + 1]) {
                    auto bits = bits_of(mask);
                    int a = bits[i], b = bits[j];
                    Span l = compose(edge_of(mask & ~(1 << (a - 1)), b), edge_of(mask, a));
                    Span r = compose(edge_of(mask & ~(1 << (b - 1)), a), edge_of(mask, b));
                    if (l.size() == 0 && r.size() == 0) continue;
                    any = true;
                    auto sq = f.squares.find({mask, a, b});
                    if (sq == f.squares.end())
                        throw structural_error("cube: missing square bijection");
                    check_fib_bijection(l, r, sq->second);
                    m.matching.resize(off_left + l.size());
                    for (int t = 0; t < l.size(); ++t)
                        m.matching[off_left + t] = off_right + sq->second.matching[t];
                    off_left += l.size();
                    off_right += r.size();
                }
                if (any) obj.commutators[{k, i, j}] = std::move(m);
            }
    }
    return obj;
}

}  // namespace cupsq
