/**
 * \file sequences.cpp
 */
#include "cupsq/sequences.hpp"

#include <algorithm>

namespace cupsq {

static int count_less(const Seq& v, int u) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), u) - v.begin());
}

int psi_one(const Seq& V, int u) { return u - count_less(V, u); }

Seq psi(const Seq& V, const Seq& U) {
    Seq out;
    out.reserve(U.size());
    for (int u : U) {
        if (std::binary_search(V.begin(), V.end(), u))
            throw domain_error("psi: sequences not disjoint");
        out.push_back(psi_one(V, u));
    }
    return out;
}

Seq gamma(const Seq& V, const Seq& U) {
    // γ_V(u) is the u-th element (0-based) of the complement of V.
    Seq out;
    out.reserve(U.size());
    for (int u : U) {
        int w = u;  // complement position u lies at offset u plus the
                    // number of elements of V below the answer; iterate to
                    // the fixpoint (V is short, this terminates fast).
        for (;;) {
            int w2 = u + static_cast<int>(std::upper_bound(V.begin(), V.end(), w) - V.begin());
            if (w2 == w) break;
            w = w2;
        }
        out.push_back(w);
    }
    return out;
}

Seq eta(const Seq& V, const Seq& U) {
    if (!seq_subset(V, U)) throw domain_error("eta: V not a subset of U");
    return psi(V, seq_minus(U, V));
}

Seq xi(const Seq& V, const Seq& U) { return seq_union(gamma(V, U), V); }

Seq seq_union(const Seq& a, const Seq& b) {
    Seq out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Seq seq_minus(const Seq& a, const Seq& b) {
    Seq out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Seq seq_intersect(const Seq& a, const Seq& b) {
    Seq out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool seq_subset(const Seq& a, const Seq& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_increasing_in_range(const Seq& u, int n) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > n) return false;
        if (i > 0 && u[i] <= u[i - 1]) return false;
    }
    return true;
}

bool is_script_p(const Seq& u, int n) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > n) return false;
        if (i > 0 && u[i] < u[i - 1]) return false;
        if (i > 1 && u[i] == u[i - 2]) return false;
    }
    return true;
}

static void gen_rec(int q, int n, int min, int max_rep, Seq& cur, std::vector<Seq>& out) {
    if (static_cast<int>(cur.size()) == q) {
        out.push_back(cur);
        return;
    }
    for (int v = min; v <= n; ++v) {
        int reps = max_rep;
        // max_rep==1: strictly increasing; max_rep==2: allow one repeat.
        for (int r = 1; r <= reps && static_cast<int>(cur.size()) < q; ++r) {
            cur.insert(cur.end(), r, v);
            if (static_cast<int>(cur.size()) <= q) gen_rec(q, n, v + 1, max_rep, cur, out);
            cur.resize(cur.size() - r);
        }
    }
}

std::vector<Seq> all_p(int q, int n) {
    std::vector<Seq> out;
    if (q == 0) {
        out.push_back({});
        return out;
    }
    if (q < 0 || n < 0) return out;
    Seq cur;
    gen_rec(q, n, 0, 1, cur, out);
    return out;
}

std::vector<Seq> all_script_p(int q, int n) {
    std::vector<Seq> out;
    if (q == 0) {
        out.push_back({});
        return out;
    }
    if (q < 0 || n < 0) return out;
    Seq cur;
    gen_rec(q, n, 0, 2, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SignedParts signed_parts(const Seq& U, int n) {
    if (!is_script_p(U, n)) throw domain_error("signed_parts: not a valid sequence");
    SignedParts sp;
    const int q = static_cast<int>(U.size());
    // Deduplicated sequence Ū and multiplicities.
    Seq bar;
    for (int i = 0; i < q; ++i)
        if (bar.empty() || bar.back() != U[i]) bar.push_back(U[i]);
    auto push_signed = [&](int value, int ind) {
        if (ind % 2 == 0)
            sp.u_plus.push_back(value);
        else
            sp.u_minus.push_back(value);
    };
    for (int i = 0; i < q;) {
        int v = U[i];
        bool repeated = (i + 1 < q && U[i + 1] == v);
        if (repeated) {
            sp.ddot.push_back(v);
            // Positions i+1, i+2 (1-based) in U give the index pair.
            push_signed(v, v + (i + 1));
            push_signed(v, v + (i + 2));
            i += 2;
        } else {
            sp.dot.push_back(v);
            // Index computed in Ū: value plus 1-based position there.
            int pos = count_less(bar, v) + 1;
            push_signed(v, v + pos);
            i += 1;
        }
    }
    std::sort(sp.u_minus.begin(), sp.u_minus.end());
    std::sort(sp.u_plus.begin(), sp.u_plus.end());
    return sp;
}

}  // namespace cupsq
