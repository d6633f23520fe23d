/**
 * \file simplicial.cpp
 */
#include "cupsq/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cupsq {

namespace {

std::string seq_to_string(const Seq& u) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
    os << ")";
    return os.str();
}

/// positions -> arrow, from the effective ranks (arrow -> position).
std::vector<int> order_of(const FaceData& fd) {
    std::vector<int> pos(fd.rank.size());
    for (size_t a = 0; a < fd.rank.size(); ++a) pos[fd.rank[a]] = static_cast<int>(a);
    return pos;
}

}  // namespace

AssoObject& AssoObject::operator=(const AssoObject& o) {
    if (this == &o) return *this;
    levels = o.levels;
    elem_faces = o.elem_faces;
    commutators = o.commutators;
    order_overrides = o.order_overrides;
    face_cache_.clear();
    empty_levels_.clear();
    empty_faces_.clear();
    pair_cache_.clear();
    return *this;
}

int AssoObject::top_level() const {
    int top = -2;
    for (const auto& [n, set] : levels) top = std::max(top, n);
    return top;
}

SetPtr AssoObject::level(int n) const {
    auto it = levels.find(n);
    if (it != levels.end()) return it->second;
    auto& cached = empty_levels_[n];
    if (!cached) cached = make_set("X" + std::to_string(n), {});
    return cached;
}

const Span& AssoObject::elem_face(int n, int i) const {
    if (i < 0 || i > n) throw domain_error("elem_face: index out of range");
    auto it = elem_faces.find({n, i});
    if (it != elem_faces.end()) return it->second;
    auto [jt, fresh] = empty_faces_.try_emplace({n, i});
    if (fresh) {
        jt->second.src = level(n);
        jt->second.tgt = level(n - 1);
    }
    return jt->second;
}

const FaceData& AssoObject::face(int n, const Seq& U) const {
    auto it = face_cache_.find({n, U});
    if (it != face_cache_.end()) return it->second;
    if (!is_increasing_in_range(U, n)) throw domain_error("face: invalid sequence " + seq_to_string(U));

    FaceData fd;
    if (U.empty()) {
        fd.span = identity_span(level(n));
        fd.paths.assign(fd.span.size(), {});
    } else {
        Seq peeled;
        int m = n;
        for (int u : U) {
            int i = psi_one(peeled, u);
            const Span& e = elem_face(m, i);
            if (peeled.empty()) {
                fd.span = e;
                fd.paths.clear();
                for (int a = 0; a < e.size(); ++a) fd.paths.push_back({a});
            } else {
                Span next = compose(e, fd.span);
                std::vector<std::vector<int>> paths;
                paths.reserve(next.size());
                for (auto [pa, pb] : next.parents) {
                    auto p = fd.paths[pa];
                    p.push_back(pb);
                    paths.push_back(std::move(p));
                }
                fd.span = std::move(next);
                fd.paths = std::move(paths);
            }
            peeled = seq_union(peeled, {u});
            --m;
        }
        for (int a = 0; a < fd.span.size(); ++a) fd.index_of_path.emplace(fd.paths[a], a);
    }

    fd.rank.resize(fd.span.size());
    auto ov = order_overrides.find({n, U});
    if (ov != order_overrides.end()) {
        const auto& perm = ov->second;
        if (static_cast<int>(perm.size()) != fd.span.size())
            throw structural_error("order override for " + seq_to_string(U) + " has wrong size");
        std::vector<uint8_t> seen(perm.size(), 0);
        for (size_t p = 0; p < perm.size(); ++p) {
            int a = perm[p];
            if (a < 0 || a >= fd.span.size() || seen[a])
                throw structural_error("order override for " + seq_to_string(U) + " is not a permutation");
            seen[a] = 1;
            fd.rank[a] = static_cast<int>(p);
        }
    } else {
        for (int a = 0; a < fd.span.size(); ++a) fd.rank[a] = a;
    }

    return face_cache_.emplace(std::make_pair(n, U), std::move(fd)).first->second;
}

const AssoObject::PairComposite& AssoObject::pair_composite(int m, int i, int j) const {
    auto it = pair_cache_.find({m, i, j});
    if (it != pair_cache_.end()) return it->second;
    if (!(0 <= i && i < j && j <= m)) throw domain_error("pair_composite: bad indices");

    PairComposite pc;
    pc.left = compose(elem_face(m - 1, j - 1), elem_face(m, i));
    pc.right = compose(elem_face(m - 1, i), elem_face(m, j));
    for (int k = 0; k < pc.left.size(); ++k) pc.left_index.emplace(pc.left.parents[k], k);
    for (int k = 0; k < pc.right.size(); ++k) pc.right_index.emplace(pc.right.parents[k], k);

    auto c = commutators.find({m, i, j});
    if (c == commutators.end()) {
        if (pc.left.size() != 0 || pc.right.size() != 0)
            throw structural_error("missing commutator (" + std::to_string(m) + "," + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
    } else {
        check_fib_bijection(pc.left, pc.right, c->second);
        pc.forward = c->second.matching;
        pc.backward.resize(pc.forward.size());
        for (size_t k = 0; k < pc.forward.size(); ++k) pc.backward[pc.forward[k]] = static_cast<int>(k);
    }
    return pair_cache_.emplace(std::make_tuple(m, i, j), std::move(pc)).first->second;
}

namespace {

/// One adjacent transposition of the peel order at position p.
void swap_positions(const AssoObject& obj, int n, std::vector<int>& order,
                    std::vector<std::vector<int>>& paths, int p) {
    int u = order[p], v = order[p + 1];
    Seq peeled(order.begin(), order.begin() + p);
    std::sort(peeled.begin(), peeled.end());
    int m = n - p;
    int i = psi_one(peeled, std::min(u, v));
    int j = psi_one(peeled, std::max(u, v));
    const auto& pc = obj.pair_composite(m, i, j);
    for (auto& path : paths) {
        std::pair<int, int> key{path[p], path[p + 1]};
        if (u < v) {
            int k = pc.left_index.at(key);
            auto [a, b] = pc.right.parents[pc.forward[k]];
            path[p] = a;
            path[p + 1] = b;
        } else {
            int k = pc.right_index.at(key);
            auto [a, b] = pc.left.parents[pc.backward[k]];
            path[p] = a;
            path[p + 1] = b;
        }
    }
    std::swap(order[p], order[p + 1]);
}

}  // namespace

std::vector<std::vector<int>> AssoObject::reorder_paths(int n, const Seq& U,
                                                        const std::vector<int>& target_order) const {
    {
        auto check = target_order;
        std::sort(check.begin(), check.end());
        if (Seq(check.begin(), check.end()) != U)
            throw domain_error("reorder_paths: target is not a permutation of U");
    }
    const FaceData& fd = face(n, U);
    auto paths = fd.paths;
    std::vector<int> order(U.begin(), U.end());
    for (size_t t = 0; t < target_order.size(); ++t) {
        size_t cur = t;
        while (order[cur] != target_order[t]) ++cur;
        for (; cur > t; --cur) swap_positions(*this, n, order, paths, static_cast<int>(cur) - 1);
    }
    return paths;
}

FibBijection AssoObject::mu(int n, const Seq& V1, const Seq& V2) const {
    if (!seq_intersect(V1, V2).empty()) throw domain_error("mu: sequences not disjoint");
    Seq U = seq_union(V1, V2);
    const FaceData& fdU = face(n, U);
    if (V1.empty() || V2.empty()) {
        FibBijection id;
        id.matching.resize(fdU.span.size());
        for (int a = 0; a < fdU.span.size(); ++a) id.matching[a] = a;
        return id;
    }
    int q1 = static_cast<int>(V1.size());
    std::vector<int> target(V1.begin(), V1.end());
    target.insert(target.end(), V2.begin(), V2.end());
    auto paths = reorder_paths(n, U, target);

    const FaceData& fdA = face(n, V1);
    const FaceData& fdB = face(n - q1, psi(V1, V2));
    Span comp = compose(fdB.span, fdA.span);
    std::map<std::pair<int, int>, int> comp_index;
    for (int k = 0; k < comp.size(); ++k) comp_index.emplace(comp.parents[k], k);

    FibBijection out;
    out.matching.resize(paths.size());
    for (size_t a = 0; a < paths.size(); ++a) {
        std::vector<int> prefix(paths[a].begin(), paths[a].begin() + q1);
        std::vector<int> suffix(paths[a].begin() + q1, paths[a].end());
        out.matching[a] = comp_index.at({fdA.index_of_path.at(prefix), fdB.index_of_path.at(suffix)});
    }
    return out;
}

int AssoObject::lambda1(int n, const Seq& U, const Seq& V1, int s) const {
    if (!seq_subset(V1, U)) throw domain_error("lambda1: V1 not a subset of U");
    const FaceData& fdU = face(n, U);
    if (s < 0 || s >= fdU.span.size()) throw domain_error("lambda1: arrow index out of range");
    if (V1.empty()) return fdU.span.arrows[s].first;  // identity span: index = element
    if (V1 == U) return s;
    Seq rest = seq_minus(U, V1);
    std::vector<int> target(V1.begin(), V1.end());
    target.insert(target.end(), rest.begin(), rest.end());
    auto paths = reorder_paths(n, U, target);
    std::vector<int> prefix(paths[s].begin(), paths[s].begin() + V1.size());
    return face(n, V1).index_of_path.at(prefix);
}

int AssoObject::lambda2(int n, const Seq& U, const Seq& V1, const Seq& V2, int s) const {
    if (!seq_subset(V1, U) || !seq_subset(V2, seq_minus(U, V1)))
        throw domain_error("lambda2: subset violation");
    int q1 = static_cast<int>(V1.size());
    if (V2.empty()) {
        // Middle factor is the identity span on X_{n-q1}: the projection is
        // the target of the ∂ⁿ_{V1} component.
        int a = lambda1(n, U, V1, s);
        if (V1.empty()) return face(n, U).span.arrows[s].first;
        return face(n, V1).span.arrows[a].second;
    }
    Seq rest = seq_minus(seq_minus(U, V1), V2);
    std::vector<int> target(V1.begin(), V1.end());
    target.insert(target.end(), V2.begin(), V2.end());
    target.insert(target.end(), rest.begin(), rest.end());
    auto paths = reorder_paths(n, U, target);
    std::vector<int> middle(paths[s].begin() + q1, paths[s].begin() + q1 + V2.size());
    return face(n - q1, psi(V1, V2)).index_of_path.at(middle);
}

ValidationReport AssoObject::validate() const {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    for (const auto& [n, set] : levels)
        if (n < -1) fail("level below -1: " + std::to_string(n));

    for (const auto& [key, span] : elem_faces) {
        auto [n, i] = key;
        std::string where = "face (" + std::to_string(n) + "," + std::to_string(i) + ")";
        if (i < 0 || i > n) {
            fail(where + ": index out of range");
            continue;
        }
        if (span.src->elements() != level(n)->elements() ||
            span.tgt->elements() != level(n - 1)->elements())
            fail(where + ": endpoints do not match levels");
        try {
            abelianise_z(span);
        } catch (const std::exception& e) {
            fail(where + ": " + e.what());
        }
    }
    if (!rep.ok()) return rep;  // deeper checks assume well-formed spans

    int top = top_level();
    // Commutators: validity and presence wherever composites are non-empty.
    for (const auto& [key, m] : commutators) {
        auto [n, i, j] = key;
        std::string where = "commutator (" + std::to_string(n) + "," + std::to_string(i) + "," +
                            std::to_string(j) + ")";
        if (!(0 <= i && i < j && j <= n)) {
            fail(where + ": bad indices");
            continue;
        }
        Span left = compose(elem_face(n - 1, j - 1), elem_face(n, i));
        Span right = compose(elem_face(n - 1, i), elem_face(n, j));
        try {
            check_fib_bijection(left, right, m);
        } catch (const std::exception& e) {
            fail(where + ": " + e.what());
        }
    }
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (commutators.count({n, i, j})) continue;
                Span left = compose(elem_face(n - 1, j - 1), elem_face(n, i));
                Span right = compose(elem_face(n - 1, i), elem_face(n, j));
                if (left.size() != 0 || right.size() != 0)
                    fail("missing commutator (" + std::to_string(n) + "," + std::to_string(i) + "," +
                         std::to_string(j) + ")");
            }
    if (!rep.ok()) return rep;

    // Order overrides must be valid permutations (checked by face()).
    for (const auto& [key, perm] : order_overrides) {
        try {
            face(key.first, key.second);
        } catch (const std::exception& e) {
            fail(std::string("order override: ") + e.what());
        }
    }

    // 3-face coherence: rewriting the peel order (i,j,k) to (k,j,i) along the
    // two distinct transposition routes must produce identical paths.
    for (int n = 2; n <= top; ++n) {
        for (int i = 0; i + 2 <= n; ++i)
            for (int j = i + 1; j + 1 <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    Seq U{i, j, k};
                    try {
                        const FaceData& fd = face(n, U);
                        if (fd.span.size() == 0) continue;
                        auto a = fd.paths;
                        auto b = fd.paths;
                        std::vector<int> oa(U.begin(), U.end()), ob(U.begin(), U.end());
                        swap_positions(*this, n, oa, a, 1);
                        swap_positions(*this, n, oa, a, 0);
                        swap_positions(*this, n, oa, a, 1);
                        swap_positions(*this, n, ob, b, 0);
                        swap_positions(*this, n, ob, b, 1);
                        swap_positions(*this, n, ob, b, 0);
                        if (a != b)
                            fail("3-face coherence fails at (" + std::to_string(n) + "," +
                                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                 ")");
                    } catch (const std::exception& e) {
                        fail("3-face check (" + std::to_string(n) + "," + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + "): " + e.what());
                    }
                }
    }
    return rep;
}

AssoObject suspend(const AssoObject& x) {
    AssoObject s;
    for (const auto& [n, set] : x.levels) s.levels[n + 1] = set;
    for (const auto& [key, span] : x.elem_faces) s.elem_faces[{key.first + 1, key.second + 1}] = span;
    for (const auto& [key, m] : x.commutators) {
        auto [n, i, j] = key;
        s.commutators[{n + 1, i + 1, j + 1}] = m;
    }
    for (const auto& [key, perm] : x.order_overrides) {
        Seq shifted = key.second;
        for (int& v : shifted) ++v;
        s.order_overrides[{key.first + 1, shifted}] = perm;
    }
    return s;
}

GradedChainComplex moore_complex(const AssoObject& x) {
    GradedChainComplex c;
    c.min_deg = -1;
    int top = std::max(x.top_level(), -1);
    for (int n = -1; n <= top; ++n) c.dims.push_back(x.level(n)->size());
    for (int n = -1; n <= top; ++n) {
        if (n == -1) {
            c.diff.emplace_back(0, c.dims[0]);
            continue;
        }
        ZMat d(x.level(n - 1)->size(), x.level(n)->size());
        for (int i = 0; i <= n; ++i) d = add(d, abelianise_z(x.elem_face(n, i)), (i % 2 == 0) ? 1 : -1);
        c.diff.push_back(std::move(d));
    }
    c.check();
    return c;
}

bool is_order_preserving_free(const AssoMap& f) {
    if (!f.src || !f.tgt) throw domain_error("map without endpoints");
    int top = std::max(f.src->top_level(), f.tgt->top_level());
    auto level_span = [&](int n) -> Span {
        auto it = f.level_spans.find(n);
        if (it != f.level_spans.end()) return it->second;
        Span empty;
        empty.src = f.src->level(n);
        empty.tgt = f.tgt->level(n);
        return empty;
    };
    for (int n = -1; n <= top; ++n)
        if (!is_free(level_span(n))) return false;
    for (int n = -1; n <= top; ++n) {
        for (int q = 1; q <= n + 1; ++q) {
            for (const Seq& U : all_p(q, n)) {
                Span a = compose(level_span(n - q), f.src->face(n, U).span);
                Span b = compose(f.tgt->face(n, U).span, level_span(n));
                if (!is_equivalent(a, b)) return false;
            }
        }
    }
    return true;
}

F2Vec free_map_pushpull(const AssoMap& f, int n, const F2Vec& cochain) {
    auto it = f.level_spans.find(n);
    Span fn;
    if (it != f.level_spans.end()) {
        fn = it->second;
    } else {
        fn.src = f.src->level(n);
        fn.tgt = f.tgt->level(n);
    }
    if (!is_free(fn)) throw domain_error("pullback along a non-free span");
    if (static_cast<int>(cochain.size()) != fn.tgt->size())
        throw domain_error("pullback: cochain has wrong length");
    F2Vec out(fn.src->size(), 0);
    for (auto [s, t] : fn.arrows) out[s] ^= cochain[t];
    return out;
}

}  // namespace cupsq
