/**
 * \file join.cpp
 *
 * The join of two ordered semi-simplicial objects: level n is the coproduct
 * over n₁+n₂ = n−1 of X_{n₁}×Y_{n₂}.  Face indices i ≤ n₁ act on the first
 * factor, the rest on the second.  All spans are ordered lexicographically by
 * (n₁, first factor, second factor); since the canonical composite order of
 * the result differs in general, the construction installs order overrides.
 */
#include "cupsq/simplicial.hpp"

#include <algorithm>
#include <tuple>

namespace cupsq {

std::string join_id(const std::string& x, const std::string& y) { return "(" + x + "*" + y + ")"; }

namespace {

/// Which factor one arrow of a join elementary face moves, and where.
struct JoinMeta {
    int n1;        ///< first-factor level of the source component
    bool moved_x;  ///< true: factor = arrow of an X face, other = Y element
    int factor;    ///< arrow index within the factor's elementary span
    int other;     ///< element index in the untouched factor
};

std::vector<int> positions_of(const FaceData& fd) {
    std::vector<int> pos(fd.rank.size());
    for (size_t a = 0; a < fd.rank.size(); ++a) pos[fd.rank[a]] = static_cast<int>(a);
    return pos;
}

}  // namespace

AssoObject join(const AssoObject& x, const AssoObject& y) {
    AssoObject j;
    const int na = x.top_level();
    const int nb = y.top_level();
    const int ntop = na + nb + 1;

    // Component offsets: level n, first-factor level n1 -> offset.
    std::map<std::pair<int, int>, int> off;
    for (int n = -1; n <= ntop; ++n) {
        std::vector<std::string> elems;
        for (int n1 = -1; n1 <= n; ++n1) {
            int n2 = n - 1 - n1;
            if (n2 < -1 || x.level(n1)->size() == 0 || y.level(n2)->size() == 0) continue;
            off[{n, n1}] = static_cast<int>(elems.size());
            for (const auto& ex : x.level(n1)->elements())
                for (const auto& ey : y.level(n2)->elements()) elems.push_back(join_id(ex, ey));
        }
        if (!elems.empty()) j.levels[n] = make_set("J" + std::to_string(n), std::move(elems));
    }

    // Elementary faces with per-arrow provenance.
    std::map<std::pair<int, int>, std::vector<JoinMeta>> metas;
    for (int n = 0; n <= ntop; ++n) {
        for (int i = 0; i <= n; ++i) {
            Span span;
            span.src = j.level(n);
            span.tgt = j.level(n - 1);
            std::vector<JoinMeta> mv;
            for (int n1 = -1; n1 <= n; ++n1) {
                int n2 = n - 1 - n1;
                if (!off.count({n, n1})) continue;
                int ys = y.level(n2)->size();
                if (i <= n1) {
                    const FaceData& fx = x.face(n1, {i});
                    if (fx.span.size() == 0) continue;
                    int yt = ys;  // second factor untouched
                    for (int p : positions_of(fx)) {
                        auto [sx, tx] = fx.span.arrows[p];
                        for (int iy = 0; iy < ys; ++iy) {
                            span.arrows.emplace_back(off.at({n, n1}) + sx * ys + iy,
                                                     off.at({n - 1, n1 - 1}) + tx * yt + iy);
                            mv.push_back({n1, true, p, iy});
                        }
                    }
                } else {
                    const FaceData& fy = y.face(n2, {i - n1 - 1});
                    if (fy.span.size() == 0) continue;
                    int yt = y.level(n2 - 1)->size();
                    for (int ix = 0; ix < x.level(n1)->size(); ++ix) {
                        for (int p : positions_of(fy)) {
                            auto [sy, ty] = fy.span.arrows[p];
                            span.arrows.emplace_back(off.at({n, n1}) + ix * ys + sy,
                                                     off.at({n - 1, n1}) + ix * yt + ty);
                            mv.push_back({n1, false, p, ix});
                        }
                    }
                }
            }
            j.elem_faces[{n, i}] = std::move(span);
            metas[{n, i}] = std::move(mv);
        }
    }

    // Commutators: factor-wise commutators when both peels hit one factor,
    // the strict swap when they hit different factors.
    for (int n = 1; n <= ntop; ++n) {
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k <= n; ++k) {
                Span left = compose(j.elem_face(n - 1, k - 1), j.elem_face(n, i));
                Span right = compose(j.elem_face(n - 1, i), j.elem_face(n, k));
                if (left.size() == 0 && right.size() == 0) continue;

                std::map<std::tuple<int, bool, int, int, bool, int, int>, int> right_at;
                for (int r = 0; r < right.size(); ++r) {
                    auto [fb, gb] = right.parents[r];
                    const JoinMeta& mf = metas.at({n, k})[fb];
                    const JoinMeta& mg = metas.at({n - 1, i})[gb];
                    right_at.emplace(std::make_tuple(mf.n1, mf.moved_x, mf.factor, mf.other,
                                                     mg.moved_x, mg.factor, mg.other),
                                     r);
                }

                FibBijection m;
                m.matching.resize(left.size());
                for (int l = 0; l < left.size(); ++l) {
                    auto [fa, ga] = left.parents[l];
                    const JoinMeta& mf = metas.at({n, i})[fa];
                    const JoinMeta& mg = metas.at({n - 1, k - 1})[ga];
                    int n1 = mf.n1;
                    int n2 = n - 1 - n1;
                    std::tuple<int, bool, int, int, bool, int, int> key;
                    if (k <= n1) {
                        // Both peels act on X: use X's commutator.
                        const auto& pc = x.pair_composite(n1, i, k);
                        int kx = pc.left_index.at({mf.factor, mg.factor});
                        auto [b1, b2] = pc.right.parents[pc.forward[kx]];
                        key = {n1, true, b1, mf.other, true, b2, mf.other};
                    } else if (i > n1) {
                        const auto& pc = y.pair_composite(n2, i - n1 - 1, k - n1 - 1);
                        int ky = pc.left_index.at({mf.factor, mg.factor});
                        auto [c1, c2] = pc.right.parents[pc.forward[ky]];
                        key = {n1, false, c1, mf.other, false, c2, mf.other};
                    } else {
                        // Mixed: the X arrow and the Y arrow strictly commute.
                        int a = mf.factor;                              // arrow of ∂X^{n1}_i
                        int b = mg.factor;                              // arrow of ∂Y^{n2}_{k-n1-1}
                        int sx = x.face(n1, {i}).span.arrows[a].first;  // source in X_{n1}
                        int ty = y.face(n2, {k - n1 - 1}).span.arrows[b].second;
                        key = {n1, false, b, sx, true, a, ty};
                    }
                    m.matching[l] = right_at.at(key);
                }
                j.commutators[{n, i, k}] = std::move(m);
            }
    }

    // Order overrides: rank every derived span by (n1, X part, Y part).
    for (int n = 1; n <= ntop; ++n) {
        for (int q = 2; q <= n + 1; ++q) {
            for (const Seq& u : all_p(q, n)) {
                const FaceData& fd = j.face(n, u);
                if (fd.span.size() <= 1) continue;
                std::vector<std::tuple<int, int, int>> key(fd.span.size());
                for (int a = 0; a < fd.span.size(); ++a) {
                    int m = n, n1 = -2;
                    Seq peeled;
                    std::vector<int> xpath, ypath;
                    int xother = -1, yother = -1;
                    for (size_t r = 0; r < u.size(); ++r) {
                        int fi = psi_one(peeled, u[r]);
                        const JoinMeta& mm = metas.at({m, fi})[fd.paths[a][r]];
                        if (r == 0) n1 = mm.n1;
                        if (mm.moved_x) {
                            xpath.push_back(mm.factor);
                            yother = mm.other;
                        } else {
                            ypath.push_back(mm.factor);
                            xother = mm.other;
                        }
                        peeled = seq_union(peeled, {u[r]});
                        --m;
                    }
                    Seq u1, w2;
                    for (int v : u) (v <= n1 ? u1 : w2).push_back(v);
                    for (int& v : w2) v -= n1 + 1;
                    int rkx, rky;
                    if (u1.empty()) {
                        rkx = xother;
                    } else {
                        const FaceData& fx = x.face(n1, u1);
                        rkx = fx.rank[fx.index_of_path.at(xpath)];
                    }
                    int n2 = n - 1 - n1;
                    if (w2.empty()) {
                        rky = yother;
                    } else {
                        const FaceData& fy = y.face(n2, w2);
                        rky = fy.rank[fy.index_of_path.at(ypath)];
                    }
                    key[a] = {n1, rkx, rky};
                }
                std::vector<int> perm(fd.span.size());
                for (int a = 0; a < fd.span.size(); ++a) perm[a] = a;
                std::stable_sort(perm.begin(), perm.end(),
                                 [&key](int a, int b) { return key[a] < key[b]; });
                bool identity = true;
                for (int p = 0; p < static_cast<int>(perm.size()) && identity; ++p)
                    identity = (perm[p] == p);
                if (!identity) j.order_overrides[{n, u}] = std::move(perm);
            }
        }
    }
    // Return a cache-free copy: the override pass above queried j's derived
    // spans, whose cached ranks predate the overrides just installed.
    return AssoObject(j);
}

}  // namespace cupsq
