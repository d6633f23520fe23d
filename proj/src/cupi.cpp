/**
 * \file cupi.cpp
 *
 * Good pairs, maximal chains, wedge spans, the comultiplication ∇ and the
 * cup-i products / Steenrod squares built from them, plus the classical
 * front/back-face oracle on semi-simplicial sets.
 */
#include "cupsq/cupi.hpp"

#include <algorithm>

namespace cupsq {

namespace {

void check_pair_shape(const Seq& U, const Seq& V, const GoodPair& pair) {
    Seq inter = seq_intersect(U, V);
    if (!seq_subset(pair.w_par, inter) || !seq_subset(pair.w_circ, inter))
        throw domain_error("good pair: W∥ and W∘ must be subsets of U∩V");
    if (!seq_intersect(pair.w_par, pair.w_circ).empty())
        throw domain_error("good pair: W∥ and W∘ must be disjoint");
}

}  // namespace

PairClass classify_pair(const AssoObject& obj, int n, const Seq& U, const Seq& V, int s, int t,
                        const GoodPair& pair) {
    check_pair_shape(U, V, pair);
    if (obj.lambda1(n, U, pair.w_par, s) != obj.lambda1(n, V, pair.w_par, t))
        return PairClass::not_good;
    int m = n - static_cast<int>(pair.w_par.size());
    Seq circ = psi(pair.w_par, pair.w_circ);
    int ra = obj.rank(m, circ, obj.lambda2(n, U, pair.w_par, pair.w_circ, s));
    int rb = obj.rank(m, circ, obj.lambda2(n, V, pair.w_par, pair.w_circ, t));
    if (ra == rb) return PairClass::parallel;
    int parity = (n + static_cast<int>(U.size()) + static_cast<int>(V.size())) % 2;
    return ((parity == 0) == (ra < rb)) ? PairClass::positive : PairClass::negative;
}

std::vector<MaxChain> enumerate_positive_chains(const AssoObject& obj, int n, const Seq& U,
                                                const Seq& V, int s, int t) {
    Seq inter = seq_intersect(U, V);
    const int r = static_cast<int>(inter.size());
    std::vector<MaxChain> out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    MaxChain cur;
    auto rec = [&](auto&& self, const GoodPair& last) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int w : inter) {
            if (seq_subset({w}, last.w_circ)) continue;
            GoodPair next{seq_minus(last.w_par, {w}), seq_union(last.w_circ, {w})};
            if (classify_pair(obj, n, U, V, s, t, next) != PairClass::positive) continue;
            cur.push_back(next);
            self(self, next);
            cur.pop_back();
        }
    };
    // First pairs: (W∥₁, {w₁}) for every w₁ ∈ U∩V and W∥₁ ⊆ U∩V∖{w₁}.
    for (int w1 : inter) {
        Seq others = seq_minus(inter, {w1});
        const int k = static_cast<int>(others.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            GoodPair first{{}, {w1}};
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b)) first.w_par.push_back(others[b]);
            if (classify_pair(obj, n, U, V, s, t, first) != PairClass::positive) continue;
            cur.push_back(first);
            rec(rec, first);
            cur.pop_back();
        }
    }
    return out;
}

namespace {

Span wedge_impl(const AssoObject& obj, int n, const Seq& U, const Seq& V, bool diagonal) {
    const FaceData& fu = obj.face(n, U);
    const FaceData& fv = obj.face(n, V);
    const SetPtr xn = obj.level(n);
    Span w;
    w.src = diagonal ? xn : product_set(xn, xn);
    w.tgt = product_set(obj.level(n - static_cast<int>(U.size())),
                        obj.level(n - static_cast<int>(V.size())));
    const int vt = obj.level(n - static_cast<int>(V.size()))->size();
    // Arrows of the two faces in effective order.
    std::vector<int> us(fu.span.size()), vs(fv.span.size());
    for (int a = 0; a < fu.span.size(); ++a) us[fu.rank[a]] = a;
    for (int a = 0; a < fv.span.size(); ++a) vs[fv.rank[a]] = a;
    for (int s : us)
        for (int t : vs) {
            auto [su, tu] = fu.span.arrows[s];
            auto [sv, tv] = fv.span.arrows[t];
            if (diagonal && su != sv) continue;
            int source = diagonal ? su : su * xn->size() + sv;
            int target = tu * vt + tv;
            size_t chains = enumerate_positive_chains(obj, n, U, V, s, t).size();
            for (size_t c = 0; c < chains; ++c) w.arrows.emplace_back(source, target);
        }
    return w;
}

}  // namespace

Span wedge_span(const AssoObject& obj, int n, const Seq& U, const Seq& V) {
    return wedge_impl(obj, n, U, V, false);
}

Span wedge_on_diagonal(const AssoObject& obj, int n, const Seq& U, const Seq& V) {
    return wedge_impl(obj, n, U, V, true);
}

const std::vector<int>& CupCalculator::l1(int n, const Seq& U, const Seq& w_par) {
    auto key = std::make_tuple(n, U, w_par);
    auto it = l1_cache_.find(key);
    if (it != l1_cache_.end()) return it->second;
    const FaceData& fd = obj_->face(n, U);
    std::vector<int> vals(fd.span.size());
    for (int s = 0; s < fd.span.size(); ++s) vals[s] = obj_->lambda1(n, U, w_par, s);
    return l1_cache_.emplace(std::move(key), std::move(vals)).first->second;
}

const std::vector<int>& CupCalculator::l2(int n, const Seq& U, const Seq& w_par,
                                          const Seq& w_circ) {
    auto key = std::make_tuple(n, U, w_par, w_circ);
    auto it = l2_cache_.find(key);
    if (it != l2_cache_.end()) return it->second;
    const FaceData& fd = obj_->face(n, U);
    int m = n - static_cast<int>(w_par.size());
    Seq circ = psi(w_par, w_circ);
    std::vector<int> vals(fd.span.size());
    for (int s = 0; s < fd.span.size(); ++s)
        vals[s] = obj_->rank(m, circ, obj_->lambda2(n, U, w_par, w_circ, s));
    return l2_cache_.emplace(std::move(key), std::move(vals)).first->second;
}

bool CupCalculator::positive(int n, const Seq& U, const Seq& V, int s, int t, int parity,
                             const Seq& w_par, const Seq& w_circ) {
    const auto& a1 = l1(n, U, w_par);
    const auto& b1 = l1(n, V, w_par);
    if (a1[s] != b1[t]) return false;
    const auto& a2 = l2(n, U, w_par, w_circ);
    const auto& b2 = l2(n, V, w_par, w_circ);
    if (a2[s] == b2[t]) return false;
    return (parity == 0) == (a2[s] < b2[t]);
}

long long CupCalculator::count_positive(int n, const Seq& U, const Seq& V, int s, int t) {
    Seq inter = seq_intersect(U, V);
    const int r = static_cast<int>(inter.size());
    if (r == 0) return 1;
    const int parity = (n + static_cast<int>(U.size()) + static_cast<int>(V.size())) % 2;
    auto rec = [&](auto&& self, const Seq& w_par, const Seq& w_circ) -> long long {
        if (static_cast<int>(w_circ.size()) == r) return 1;
        long long total = 0;
        for (int w : inter) {
            if (seq_subset({w}, w_circ)) continue;
            Seq np = seq_minus(w_par, {w});
            Seq nc = seq_union(w_circ, {w});
            if (positive(n, U, V, s, t, parity, np, nc)) total += self(self, np, nc);
        }
        return total;
    };
    long long total = 0;
    for (int w1 : inter) {
        Seq others = seq_minus(inter, {w1});
        const int k = static_cast<int>(others.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            Seq w_par;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b)) w_par.push_back(others[b]);
            Seq w_circ{w1};
            if (positive(n, U, V, s, t, parity, w_par, w_circ))
                total += rec(rec, w_par, w_circ);
        }
    }
    return total;
}

const TensorElt& CupCalculator::nabla(int k, int n, int x) {
    auto key = std::make_pair(k, n);
    auto it = nabla_cache_.find(key);
    if (it == nabla_cache_.end()) {
        const int sz = obj_->level(n)->size();
        std::vector<TensorElt> out(sz);
        for (const Seq& U : all_script_p(n - k, n)) {
            SignedParts sp = signed_parts(U, n);
            const FaceData& fu = obj_->face(n, sp.u_minus);
            const FaceData& fv = obj_->face(n, sp.u_plus);
            const int n1 = n - static_cast<int>(sp.u_minus.size());
            const int n2 = n - static_cast<int>(sp.u_plus.size());
            // Group arrows by source so only diagonal (s,t) pairs are tried.
            std::vector<std::vector<int>> by_src_u(sz), by_src_v(sz);
            for (int a = 0; a < fu.span.size(); ++a) by_src_u[fu.span.arrows[a].first].push_back(a);
            for (int a = 0; a < fv.span.size(); ++a) by_src_v[fv.span.arrows[a].first].push_back(a);
            for (int src = 0; src < sz; ++src)
                for (int s : by_src_u[src])
                    for (int t : by_src_v[src]) {
                        if (count_positive(n, sp.u_minus, sp.u_plus, s, t) % 2 == 0) continue;
                        TensorKey tk{n1, fu.span.arrows[s].second, n2, fv.span.arrows[t].second};
                        auto [pos, inserted] = out[src].insert(tk);
                        if (!inserted) out[src].erase(pos);
                    }
        }
        it = nabla_cache_.emplace(std::move(key), std::move(out)).first;
    }
    return it->second.at(x);
}

F2Vec CupCalculator::cup_i(const F2Vec& alpha, int p, const F2Vec& beta, int q, int i) {
    if (static_cast<int>(alpha.size()) != obj_->level(p)->size() ||
        static_cast<int>(beta.size()) != obj_->level(q)->size())
        throw domain_error("cup_i: cochain length does not match its level");
    const int n = p + q - i;
    if (n < -1) return {};
    const int sz = obj_->level(n)->size();
    F2Vec out(sz, 0);
    // α pairs with the ∂_{U⁺} factor and β with the ∂_{U⁻} factor; this is
    // the orientation that makes ⌣₀ the literal front/back-face product.
    for (int x = 0; x < sz; ++x)
        for (const TensorKey& tk : nabla(i, n, x))
            if (tk[0] == q && tk[2] == p) out[x] ^= alpha[tk[3]] & beta[tk[1]];
    return out;
}

F2Vec cup_i(const AssoObject& obj, const F2Vec& alpha, int p, const F2Vec& beta, int q, int i) {
    CupCalculator calc(obj);
    return calc.cup_i(alpha, p, beta, q, i);
}

F2Vec steenrod_square_rep(CupCalculator& calc, const GradedChainComplex& cx, int n,
                          const F2Vec& cocycle, int i) {
    const AssoObject& obj = calc.object();
    if (static_cast<int>(cocycle.size()) != obj.level(n)->size())
        throw domain_error("steenrod_square_rep: cochain length does not match its level");
    if (!is_zero(mul(cx.coboundary_f2(n), cocycle)))
        throw domain_error("steenrod_square_rep: input is not a cocycle");
    F2Vec rep = calc.cup_i(cocycle, n, cocycle, n, n - i);
    if (!is_zero(mul(cx.coboundary_f2(n + i), rep)))
        throw integrity_error("steenrod_square_rep: result is not a cocycle");
    return rep;
}

namespace {

/// Elementary face function tables of a semi-simplicial set; throws
/// domain_error if any span fails to be the graph of a function.
std::map<std::pair<int, int>, std::vector<int>> face_functions(const AssoObject& s) {
    std::map<std::pair<int, int>, std::vector<int>> fn;
    for (int n = 0; n <= s.top_level(); ++n) {
        const int sz = s.level(n)->size();
        for (int i = 0; i <= n; ++i) {
            const Span& sp = s.elem_face(n, i);
            std::vector<int> f(sz, -1);
            for (auto [src, tgt] : sp.arrows) {
                if (f[src] != -1)
                    throw domain_error("classical oracle: span is not single-valued");
                f[src] = tgt;
            }
            for (int x = 0; x < sz; ++x)
                if (f[x] == -1) throw domain_error("classical oracle: span is not total");
            fn[{n, i}] = std::move(f);
        }
    }
    return fn;
}

/// d_U as a function, applying the largest face index first (so lower
/// indices need no re-indexing).
int apply_faces(const std::map<std::pair<int, int>, std::vector<int>>& fn, int n, const Seq& U,
                int x) {
    for (auto it = U.rbegin(); it != U.rend(); ++it) {
        x = fn.at({n, *it})[x];
        --n;
    }
    return x;
}

}  // namespace

F2Vec classical_cup_i(const AssoObject& sset, const F2Vec& alpha, int p, const F2Vec& beta, int q,
                      int i) {
    if (static_cast<int>(alpha.size()) != sset.level(p)->size() ||
        static_cast<int>(beta.size()) != sset.level(q)->size())
        throw domain_error("classical_cup_i: cochain length does not match its level");
    auto fn = face_functions(sset);
    const int n = p + q - i;
    if (n < -1) return {};
    const int sz = sset.level(n)->size();
    F2Vec out(sz, 0);
    for (const Seq& U : all_p(n - i, n)) {
        SignedParts sp = signed_parts(U, n);
        if (static_cast<int>(sp.u_minus.size()) != n - q) continue;
        for (int x = 0; x < sz; ++x)
            out[x] ^= alpha[apply_faces(fn, n, sp.u_plus, x)] &
                      beta[apply_faces(fn, n, sp.u_minus, x)];
    }
    return out;
}

F2Vec aw_cup0(const AssoObject& sset, const F2Vec& alpha, int p, const F2Vec& beta, int q) {
    if (static_cast<int>(alpha.size()) != sset.level(p)->size() ||
        static_cast<int>(beta.size()) != sset.level(q)->size())
        throw domain_error("aw_cup0: cochain length does not match its level");
    auto fn = face_functions(sset);
    const int n = p + q;
    Seq front, back;
    for (int j = p + 1; j <= n; ++j) front.push_back(j);
    for (int j = 0; j < p; ++j) back.push_back(j);
    const int sz = sset.level(n)->size();
    F2Vec out(sz, 0);
    for (int x = 0; x < sz; ++x)
        out[x] = alpha[apply_faces(fn, n, front, x)] & beta[apply_faces(fn, n, back, x)];
    return out;
}

}  // namespace cupsq
