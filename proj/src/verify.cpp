/**
 * \file verify.cpp
 *
 * Random generators (cube products, simplicial complexes) and the named
 * identity checks.
 */
#include "cupsq/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cupsq/homology.hpp"

namespace cupsq {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int below(int n) { return static_cast<int>(eng() % static_cast<uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
};

std::map<std::pair<int, int>, int> index_by_parents(const Span& s) {
    std::map<std::pair<int, int>, int> m;
    for (int i = 0; i < s.size(); ++i) m[s.parents[i]] = i;
    return m;
}

Span empty_edge(const CubeBurnside& f, int mask, int a) {
    Span e;
    e.src = f.vertex[mask];
    e.tgt = f.vertex[mask & ~(1 << (a - 1))];
    return e;
}

Span edge_or_empty(const CubeBurnside& f, int mask, int a) {
    auto it = f.edges.find({mask, a});
    return it != f.edges.end() ? it->second : empty_edge(f, mask, a);
}

}  // namespace

CubeBurnside cube_product(const CubeBurnside& g, const CubeBurnside& h) {
    CubeBurnside p;
    p.dim = g.dim + h.dim;
    const int gmaskall = (1 << g.dim) - 1;
    auto gm = [&](int mask) { return mask & gmaskall; };
    auto hm = [&](int mask) { return mask >> g.dim; };
    p.vertex.resize(size_t(1) << p.dim);
    for (int mask = 0; mask < (1 << p.dim); ++mask)
        p.vertex[mask] = product_set(g.vertex[gm(mask)], h.vertex[hm(mask)]);

    // Edges: the moving factor's arrows major when it is G, minor when H, so
    // that arrow indices decompose as (g part)·(h size) + (h part).
    for (int mask = 0; mask < (1 << p.dim); ++mask) {
        for (int a = 1; a <= p.dim; ++a) {
            if (!(mask & (1 << (a - 1)))) continue;
            Span e;
            e.src = p.vertex[mask];
            e.tgt = p.vertex[mask & ~(1 << (a - 1))];
            if (a <= g.dim) {
                auto it = g.edges.find({gm(mask), a});
                if (it == g.edges.end()) continue;
                const int hs = h.vertex[hm(mask)]->size();
                for (auto [s, t] : it->second.arrows)
                    for (int y = 0; y < hs; ++y) e.arrows.emplace_back(s * hs + y, t * hs + y);
            } else {
                auto it = h.edges.find({hm(mask), a - g.dim});
                if (it == h.edges.end()) continue;
                const int hs = h.vertex[hm(mask)]->size();
                const int ht = h.vertex[hm(mask) & ~(1 << (a - g.dim - 1))]->size();
                for (int x = 0; x < g.vertex[gm(mask)]->size(); ++x)
                    for (auto [s, t] : it->second.arrows)
                        e.arrows.emplace_back(x * hs + s, x * ht + t);
            }
            p.edges[{mask, a}] = std::move(e);
        }
    }

    // Squares.
    for (int mask = 0; mask < (1 << p.dim); ++mask) {
        for (int a = 1; a <= p.dim; ++a) {
            if (!(mask & (1 << (a - 1)))) continue;
            for (int b = a + 1; b <= p.dim; ++b) {
                if (!(mask & (1 << (b - 1)))) continue;
                Span left = compose(edge_or_empty(p, mask & ~(1 << (a - 1)), b),
                                    edge_or_empty(p, mask, a));
                Span right = compose(edge_or_empty(p, mask & ~(1 << (b - 1)), a),
                                     edge_or_empty(p, mask, b));
                if (left.size() == 0 && right.size() == 0) continue;
                auto pr = index_by_parents(right);
                FibBijection m;
                m.matching.resize(left.size());
                if (b <= g.dim) {
                    // Both axes in G: apply G's square on the G part.
                    const int hs = h.vertex[hm(mask)]->size();
                    Span gl = compose(edge_or_empty(g, gm(mask) & ~(1 << (a - 1)), b),
                                      edge_or_empty(g, gm(mask), a));
                    Span gr = compose(edge_or_empty(g, gm(mask) & ~(1 << (b - 1)), a),
                                      edge_or_empty(g, gm(mask), b));
                    auto gli = index_by_parents(gl);
                    const FibBijection& gsq = g.squares.at({gm(mask), a, b});
                    for (int l = 0; l < left.size(); ++l) {
                        auto [pf, pg] = left.parents[l];
                        int ga = pf / hs, y = pf % hs, gb = pg / hs;
                        auto [gb2, ga2] = gr.parents[gsq.matching[gli.at({ga, gb})]];
                        m.matching[l] = pr.at({gb2 * hs + y, ga2 * hs + y});
                    }
                } else if (a > g.dim) {
                    // Both axes in H: apply H's square on the H part.
                    const int ha = a - g.dim, hb = b - g.dim;
                    const int hmm = hm(mask);
                    Span hl = compose(edge_or_empty(h, hmm & ~(1 << (ha - 1)), hb),
                                      edge_or_empty(h, hmm, ha));
                    Span hr = compose(edge_or_empty(h, hmm & ~(1 << (hb - 1)), ha),
                                      edge_or_empty(h, hmm, hb));
                    auto hli = index_by_parents(hl);
                    const FibBijection& hsq = h.squares.at({hmm, ha, hb});
                    const int na = static_cast<int>(edge_or_empty(h, hmm, ha).size());
                    const int nb = static_cast<int>(edge_or_empty(h, hmm, hb).size());
                    const int nab = static_cast<int>(edge_or_empty(h, hmm & ~(1 << (ha - 1)), hb).size());
                    const int nba = static_cast<int>(edge_or_empty(h, hmm & ~(1 << (hb - 1)), ha).size());
                    for (int l = 0; l < left.size(); ++l) {
                        auto [pf, pg] = left.parents[l];
                        int x = pf / na, i1 = pf % na, i2 = pg % nab;
                        auto [j1, j2] = hr.parents[hsq.matching[hli.at({i1, i2})]];
                        m.matching[l] = pr.at({x * nb + j1, x * nba + j2});
                    }
                } else {
                    // Interchange: axis a moves G, axis b moves H.
                    const Span& ge = g.edges.at({gm(mask), a});
                    const Span& he = h.edges.at({hm(mask), b - g.dim});
                    const int hs = h.vertex[hm(mask)]->size();
                    const int hsb = h.vertex[hm(mask) & ~(1 << (b - g.dim - 1))]->size();
                    const int nh = he.size();
                    for (int l = 0; l < left.size(); ++l) {
                        auto [pf, pg] = left.parents[l];
                        int ga = pf / hs, hb2 = pg % nh;
                        int xs = ge.arrows[ga].first;
                        int yt = he.arrows[hb2].second;
                        m.matching[l] = pr.at({xs * nh + hb2, ga * hsb + yt});
                    }
                }
                p.squares[{mask, a, b}] = std::move(m);
            }
        }
    }
    return p;
}

namespace {

int cube_counter_hint(Rng& rng) { return rng.below(1 << 20); }

CubeBurnside random_one_cube(Rng& rng, const GeneratorSpec& spec, int id) {
    CubeBurnside c;
    c.dim = 1;
    auto mk = [&](int mask, int sz) {
        std::vector<std::string> e;
        for (int k = 0; k < sz; ++k)
            e.push_back("c" + std::to_string(id) + "m" + std::to_string(mask) + "e" +
                        std::to_string(k));
        return make_set("V" + std::to_string(id) + "_" + std::to_string(mask), std::move(e));
    };
    int cap = std::max(1, std::min(spec.max_set, 3));
    c.vertex = {mk(0, rng.between(1, cap)), mk(1, rng.between(1, cap))};
    Span e;
    e.src = c.vertex[1];
    e.tgt = c.vertex[0];
    int n = rng.below(std::max(1, spec.max_arrows) + 1);
    for (int k = 0; k < n; ++k)
        e.arrows.emplace_back(rng.below(c.vertex[1]->size()), rng.below(c.vertex[0]->size()));
    c.edges[{1, 1}] = std::move(e);
    return c;
}

/// A 2-cube whose two routes have identical composite arrows, matched by a
/// random permutation within each fibre.
CubeBurnside random_two_cube(Rng& rng, const GeneratorSpec& spec, int id) {
    CubeBurnside c;
    c.dim = 2;
    auto mk = [&](int mask, int sz) {
        std::vector<std::string> e;
        for (int k = 0; k < sz; ++k)
            e.push_back("c" + std::to_string(id) + "m" + std::to_string(mask) + "e" +
                        std::to_string(k));
        return make_set("V" + std::to_string(id) + "_" + std::to_string(mask), std::move(e));
    };
    int cap = std::max(1, std::min(spec.max_set, 3));
    c.vertex.resize(4);
    c.vertex[0] = mk(0, rng.between(1, cap));
    c.vertex[2] = mk(2, rng.between(1, cap));
    c.vertex[3] = mk(3, rng.between(1, cap));

    Span e1;   // edge (3,1): remove axis 1
    Span e2p;  // edge (2,2)
    Span l;
    // Keep the composite small so that products of primitives stay tractable.
    for (int attempt = 0; attempt < 32; ++attempt) {
        e1 = Span{};
        e1.src = c.vertex[3];
        e1.tgt = c.vertex[2];
        int n1 = rng.between(1, std::max(1, std::min(spec.max_arrows, 3)));
        for (int k = 0; k < n1; ++k)
            e1.arrows.emplace_back(rng.below(c.vertex[3]->size()), rng.below(c.vertex[2]->size()));
        e2p = Span{};
        e2p.src = c.vertex[2];
        e2p.tgt = c.vertex[0];
        int n2 = rng.between(1, std::max(1, std::min(spec.max_arrows, 3)));
        for (int k = 0; k < n2; ++k)
            e2p.arrows.emplace_back(rng.below(c.vertex[2]->size()), rng.below(c.vertex[0]->size()));
        l = compose(e2p, e1);
        if (l.size() <= std::max(2, spec.max_arrows)) break;
    }

    if (l.size() == 0) {
        c.vertex[1] = mk(1, 1);
        c.edges[{3, 1}] = std::move(e1);
        c.edges[{2, 2}] = std::move(e2p);
        return c;  // no square needed: the other route is empty too
    }
    c.vertex[1] = mk(1, l.size());
    Span e2;  // edge (3,2): route every composite arrow through its own middle
    e2.src = c.vertex[3];
    e2.tgt = c.vertex[1];
    Span e1p;  // edge (1,1)
    e1p.src = c.vertex[1];
    e1p.tgt = c.vertex[0];
    for (int j = 0; j < l.size(); ++j) {
        e2.arrows.emplace_back(l.arrows[j].first, j);
        e1p.arrows.emplace_back(j, l.arrows[j].second);
    }
    Span r = compose(e1p, e2);

    // Match fibrewise with a random permutation per fibre.
    std::map<std::pair<int, int>, std::vector<int>> lf, rf;
    for (int i = 0; i < l.size(); ++i) lf[l.arrows[i]].push_back(i);
    for (int i = 0; i < r.size(); ++i) rf[r.arrows[i]].push_back(i);
    FibBijection m;
    m.matching.resize(l.size());
    for (auto& [key, ls] : lf) {
        auto rs = rf.at(key);
        std::shuffle(rs.begin(), rs.end(), rng.eng);
        for (size_t k = 0; k < ls.size(); ++k) m.matching[ls[k]] = rs[k];
    }
    c.edges[{3, 1}] = std::move(e1);
    c.edges[{2, 2}] = std::move(e2p);
    c.edges[{3, 2}] = std::move(e2);
    c.edges[{1, 1}] = std::move(e1p);
    c.squares[{3, 1, 2}] = std::move(m);
    return c;
}

}  // namespace

AssoObject random_asso(const GeneratorSpec& spec) {
    if (spec.max_level < -1) throw domain_error("random_asso: max_level < -1");
    if (spec.max_level == -1) return AssoObject{};
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0xb492b66fbe98f273ULL);
    const int dim = spec.max_level + 1;
    CubeBurnside cube;
    int built = 0;
    int id = cube_counter_hint(rng);
    while (built < dim) {
        int step = (dim - built >= 2 && rng.below(2) == 0) ? 2 : 1;
        CubeBurnside part = step == 2 ? random_two_cube(rng, spec, id) : random_one_cube(rng, spec, id);
        ++id;
        cube = built == 0 ? std::move(part) : cube_product(cube, part);
        built += step;
    }
    AssoObject obj = lambda_from_cube(cube);
    auto rep = obj.validate();
    if (!rep.ok()) throw integrity_error("random_asso produced an invalid object: " + rep.violations.front());
    return obj;
}

void forced_commutators(AssoObject& obj) {
    obj.commutators.clear();
    const int top = obj.top_level();
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Span left = compose(obj.elem_face(n - 1, j - 1), obj.elem_face(n, i));
                Span right = compose(obj.elem_face(n - 1, i), obj.elem_face(n, j));
                if (left.size() == 0 && right.size() == 0) continue;
                std::map<std::pair<int, int>, std::vector<int>> rf;
                for (int r = 0; r < right.size(); ++r) rf[right.arrows[r]].push_back(r);
                FibBijection m;
                m.matching.resize(left.size());
                std::map<std::pair<int, int>, int> used;
                for (int l = 0; l < left.size(); ++l) {
                    auto it = rf.find(left.arrows[l]);
                    int& u = used[left.arrows[l]];
                    if (it == rf.end() || u >= static_cast<int>(it->second.size()))
                        throw integrity_error("forced_commutators: unbalanced fibre");
                    if (it->second.size() > 1)
                        throw integrity_error("forced_commutators: ambiguous fibre");
                    m.matching[l] = it->second[u++];
                }
                obj.commutators[{n, i, j}] = std::move(m);
            }
}

AssoObject random_semi_simplicial_set(const GeneratorSpec& spec) {
    if (spec.max_level < -1) throw domain_error("random_semi_simplicial_set: max_level < -1");
    AssoObject obj;
    obj.levels[-1] = make_set("S-1", {"<>"});
    if (spec.max_level == -1) return obj;
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0x1d8e4e27c47d124fULL);

    const int nv = rng.between(2, std::max(2, spec.max_set + 2));
    std::set<std::vector<int>> simplices;
    for (int v = 0; v < nv; ++v) simplices.insert({v});
    const int nmax = rng.between(1, 4);
    for (int t = 0; t < nmax; ++t) {
        int d = rng.between(1, std::min(spec.max_level, nv - 1));
        std::vector<int> verts(nv);
        for (int v = 0; v < nv; ++v) verts[v] = v;
        std::shuffle(verts.begin(), verts.end(), rng.eng);
        std::vector<int> s(verts.begin(), verts.begin() + d + 1);
        std::sort(s.begin(), s.end());
        // Close downward.
        for (int mask = 1; mask < (1 << (d + 1)); ++mask) {
            std::vector<int> face;
            for (int b = 0; b <= d; ++b)
                if (mask & (1 << b)) face.push_back(s[b]);
            simplices.insert(face);
        }
    }

    std::map<int, std::vector<std::vector<int>>> by_dim;
    for (const auto& s : simplices) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
    std::map<std::vector<int>, int> index_of;
    auto name = [](const std::vector<int>& s) {
        std::string out = "<";
        for (size_t k = 0; k < s.size(); ++k)
            out += (k ? "," : "") + std::to_string(s[k]);
        return out + ">";
    };
    for (auto& [d, list] : by_dim) {
        std::vector<std::string> ids;
        for (size_t k = 0; k < list.size(); ++k) {
            index_of[list[k]] = static_cast<int>(k);
            ids.push_back(name(list[k]));
        }
        obj.levels[d] = make_set("S" + std::to_string(d), std::move(ids));
    }
    // Faces: delete the i-th vertex; the (-1)-level face sends vertices to
    // the empty simplex.
    for (auto& [d, list] : by_dim) {
        for (int i = 0; i <= d; ++i) {
            Span f;
            f.src = obj.levels.at(d);
            f.tgt = obj.level(d - 1);
            for (const auto& s : list) {
                if (d == 0) {
                    f.arrows.emplace_back(index_of.at(s), 0);
                } else {
                    std::vector<int> face = s;
                    face.erase(face.begin() + i);
                    f.arrows.emplace_back(index_of.at(s), index_of.at(face));
                }
            }
            obj.elem_faces[{d, i}] = std::move(f);
        }
    }
    forced_commutators(obj);
    auto rep = obj.validate();
    if (!rep.ok())
        throw integrity_error("random_semi_simplicial_set invalid: " + rep.violations.front());
    return obj;
}

AssoObject shuffle_orders(const AssoObject& obj, uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    std::map<std::pair<int, Seq>, std::vector<int>> overrides = obj.order_overrides;
    const int top = obj.top_level();
    for (int n = 1; n <= top; ++n)
        for (int q = 2; q <= n + 1; ++q)
            for (const Seq& u : all_p(q, n)) {
                int sz = obj.face(n, u).span.size();
                if (sz < 2 || rng.below(2) == 0) continue;
                std::vector<int> perm(sz);
                for (int k = 0; k < sz; ++k) perm[k] = k;
                std::shuffle(perm.begin(), perm.end(), rng.eng);
                overrides[{n, u}] = std::move(perm);
            }
    AssoObject out(obj);
    out.order_overrides = std::move(overrides);
    return out;
}

namespace {

void toggle(TensorElt& e, const TensorKey& k) {
    auto [it, fresh] = e.insert(k);
    if (!fresh) e.erase(it);
}

F2Vec random_cochain(Rng& rng, int len) {
    F2Vec v(len, 0);
    for (auto& b : v) b = static_cast<uint8_t>(rng.below(2));
    return v;
}

/// All per-degree mod-2 boundary matrices of a complex.
std::map<int, F2Mat> f2_boundaries(const GradedChainComplex& cx) {
    std::map<int, F2Mat> out;
    for (int d = cx.min_deg; d < cx.min_deg + static_cast<int>(cx.dims.size()); ++d)
        out[d] = mod2(cx.boundary(d));
    return out;
}

/// 𝔰𝔮ⁱ as a matrix between given cohomology bases.
F2Mat sq_matrix(CupCalculator& calc, const GradedChainComplex& cx, const CohomologyBasis& src,
                const CohomologyBasis& dst, int i) {
    F2Mat m(dst.rank(), src.rank());
    for (int c = 0; c < src.rank(); ++c) {
        F2Vec rep = steenrod_square_rep(calc, cx, src.degree(), src.representatives()[c], i);
        F2Vec coords = dst.reduce(rep);
        for (int r = 0; r < dst.rank(); ++r) m.at(r, c) = coords[r];
    }
    return m;
}

std::string describe(const std::string& name, uint64_t seed, int trial, const std::string& what) {
    std::ostringstream os;
    os << name << ": trial " << trial << " (seed " << seed << "): " << what;
    return os.str();
}

bool check_comult_object(const AssoObject& obj, std::string& witness) {
    GradedChainComplex cx = moore_complex(obj);
    auto bnd = f2_boundaries(cx);
    CupCalculator calc(obj);
    const int top = obj.top_level();
    for (int n = -1; n <= top; ++n) {
        const int sz = obj.level(n)->size();
        if (sz == 0) continue;
        for (int k = -(top + 3); k <= top + 1; ++k) {
            for (int x = 0; x < sz; ++x) {
                TensorElt lhs;
                // ∇_k of d(x).
                if (bnd.count(n)) {
                    const F2Mat& d = bnd.at(n);
                    for (int y = 0; y < d.rows; ++y)
                        if (d.at(y, x))
                            for (const TensorKey& t : calc.nabla(k, n - 1, y)) toggle(lhs, t);
                }
                TensorElt rhs;
                // Tensor differential of ∇_k(x).
                for (const TensorKey& t : calc.nabla(k, n, x)) {
                    auto [p, y, q, z] = t;
                    if (bnd.count(p)) {
                        const F2Mat& d = bnd.at(p);
                        for (int y2 = 0; y2 < d.rows; ++y2)
                            if (d.at(y2, y)) toggle(rhs, {p - 1, y2, q, z});
                    }
                    if (bnd.count(q)) {
                        const F2Mat& d = bnd.at(q);
                        for (int z2 = 0; z2 < d.rows; ++z2)
                            if (d.at(z2, z)) toggle(rhs, {p, y, q - 1, z2});
                    }
                }
                // (1 + T)∇_{k-1}(x).
                for (const TensorKey& t : calc.nabla(k - 1, n, x)) {
                    auto [p, y, q, z] = t;
                    toggle(rhs, {p, y, q, z});
                    toggle(rhs, {q, z, p, y});
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "comultiplication identity fails at level " << n << ", k = " << k
                       << ", generator " << obj.level(n)->element(x);
                    witness = os.str();
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_suspension_object(const AssoObject& x, Rng& rng, std::string& witness) {
    AssoObject s = suspend(x);
    CupCalculator cx_calc(x), cs_calc(s);
    GradedChainComplex cxx = moore_complex(x);
    GradedChainComplex cxs = moore_complex(s);
    const int top = x.top_level();
    // Cochain-level identity Σ(α⌣ᵢβ) = Σβ ⌣_{i+1} Σα.
    for (int p = -1; p <= top; ++p)
        for (int q = -1; q <= top; ++q) {
            if (x.level(p)->size() == 0 || x.level(q)->size() == 0) continue;
            F2Vec alpha = random_cochain(rng, x.level(p)->size());
            F2Vec beta = random_cochain(rng, x.level(q)->size());
            for (int n = -1; n <= top; ++n) {
                int i = p + q - n;
                F2Vec lhs = cx_calc.cup_i(alpha, p, beta, q, i);
                F2Vec rhs = cs_calc.cup_i(beta, q + 1, alpha, p + 1, i + 1);
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "suspension cochain identity fails at p=" << p << " q=" << q
                       << " i=" << i;
                    witness = os.str();
                    return false;
                }
            }
        }
    // Class level: 𝔰𝔮ⁱ commutes with suspension.
    for (int n = -1; n <= top; ++n) {
        CohomologyBasis hn = cohomology(cxx, n);
        for (int c = 0; c < hn.rank(); ++c) {
            const F2Vec& alpha = hn.representatives()[c];
            for (int i = -(top + 2); i <= top + 1; ++i) {
                if (n + i < -1 || n + i > top) continue;
                F2Vec sq_x = steenrod_square_rep(cx_calc, cxx, n, alpha, i);
                F2Vec sq_s = steenrod_square_rep(cs_calc, cxs, n + 1, alpha, i);
                CohomologyBasis target = cohomology(cxs, n + 1 + i);
                if (target.reduce(sq_x) != target.reduce(sq_s)) {
                    std::ostringstream os;
                    os << "suspension does not commute with sq^" << i << " at degree " << n;
                    witness = os.str();
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_shuffle_object(const AssoObject& x, int shuffles, uint64_t seed, std::string& witness) {
    GradedChainComplex cx = moore_complex(x);
    const int top = x.top_level();
    std::map<int, CohomologyBasis> bases;
    for (int n = -1; n <= top; ++n) bases.emplace(n, cohomology(cx, n));
    CupCalculator base_calc(x);
    std::map<std::pair<int, int>, F2Mat> reference;
    for (int n = -1; n <= top; ++n)
        for (int i = -(top + 2); i <= top + 1; ++i) {
            if (n + i < -1 || n + i > top) continue;
            reference[{n, i}] = sq_matrix(base_calc, cx, bases.at(n), bases.at(n + i), i);
        }
    for (int s = 1; s <= shuffles; ++s) {
        AssoObject shuffled = shuffle_orders(x, seed + s);
        CupCalculator calc(shuffled);
        for (auto& [key, ref] : reference) {
            auto [n, i] = key;
            F2Mat got = sq_matrix(calc, cx, bases.at(n), bases.at(n + i), i);
            if (!(got == ref)) {
                std::ostringstream os;
                os << "sq^" << i << " on H^" << n << " changed under order shuffle " << s;
                witness = os.str();
                return false;
            }
        }
    }
    return true;
}

bool check_naturality_object(const AssoObject& y, Rng& rng, std::string& witness) {
    // A down-closed random subobject of a semi-simplicial set.
    const int top = y.top_level();
    std::map<int, std::vector<int>> keep;  // level -> kept element indices
    std::map<std::pair<int, int>, int> new_index;
    // Decide top-level elements at random, then close downward over faces.
    std::set<std::pair<int, int>> in;
    in.insert({-1, 0});
    for (int n = top; n >= 0; --n) {
        for (int e = 0; e < y.level(n)->size(); ++e)
            if (in.count({n, e}) == 0 && rng.below(2) == 0) in.insert({n, e});
        for (auto [lvl, e] : std::set<std::pair<int, int>>(in)) {
            if (lvl != n) continue;
            for (int i = 0; i <= n; ++i)
                for (auto [s, t] : y.elem_face(n, i).arrows)
                    if (s == e) in.insert({n - 1, t});
        }
    }
    AssoObject x;
    for (int n = -1; n <= top; ++n) {
        std::vector<std::string> ids;
        for (int e = 0; e < y.level(n)->size(); ++e)
            if (in.count({n, e})) {
                new_index[{n, e}] = static_cast<int>(ids.size());
                keep[n].push_back(e);
                ids.push_back(y.level(n)->element(e));
            }
        if (!ids.empty()) x.levels[n] = make_set("K" + std::to_string(n), std::move(ids));
    }
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i) {
            Span f;
            f.src = x.level(n);
            f.tgt = x.level(n - 1);
            for (auto [s, t] : y.elem_face(n, i).arrows)
                if (in.count({n, s})) f.arrows.emplace_back(new_index.at({n, s}), new_index.at({n - 1, t}));
            if (f.src->size() || f.tgt->size()) x.elem_faces[{n, i}] = std::move(f);
        }
    forced_commutators(x);
    if (!x.validate().ok()) {
        witness = "naturality: subobject failed validation";
        return false;
    }

    AssoMap f;
    f.src = &x;
    f.tgt = &y;
    for (int n = -1; n <= top; ++n) {
        Span s;
        s.src = x.level(n);
        s.tgt = y.level(n);
        for (int e : keep[n]) s.arrows.emplace_back(new_index.at({n, e}), e);
        f.level_spans[n] = std::move(s);
    }
    if (!is_order_preserving_free(f)) {
        witness = "naturality: inclusion not recognised as order-preserving free";
        return false;
    }

    CupCalculator cy(y), cxc(x);
    for (int p = -1; p <= top; ++p)
        for (int q = -1; q <= top; ++q) {
            if (y.level(p)->size() == 0 || y.level(q)->size() == 0) continue;
            F2Vec alpha = random_cochain(rng, y.level(p)->size());
            F2Vec beta = random_cochain(rng, y.level(q)->size());
            for (int n = -1; n <= top; ++n) {
                int i = p + q - n;
                if (x.level(n)->size() == 0) continue;
                F2Vec lhs = free_map_pushpull(f, n, cy.cup_i(alpha, p, beta, q, i));
                F2Vec rhs = cxc.cup_i(free_map_pushpull(f, p, alpha), p,
                                      free_map_pushpull(f, q, beta), q, i);
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "naturality fails at p=" << p << " q=" << q << " i=" << i;
                    witness = os.str();
                    return false;
                }
            }
        }
    return true;
}

/// The cochain α⊗β on a join, supported on the (|α| , |β|) component.
F2Vec join_tensor_cochain(const AssoObject& x, const AssoObject& y, const AssoObject& j,
                          const F2Vec& alpha, int p, const F2Vec& beta, int q) {
    int n = p + q + 1;
    F2Vec out(j.level(n)->size(), 0);
    for (int a = 0; a < x.level(p)->size(); ++a)
        for (int b = 0; b < y.level(q)->size(); ++b) {
            if (!(alpha[a] & beta[b])) continue;
            int idx = j.level(n)->index(join_id(x.level(p)->element(a), y.level(q)->element(b)));
            out[idx] = 1;
        }
    return out;
}

bool check_cartan_object(const AssoObject& x, const AssoObject& y, std::string& witness) {
    AssoObject j = join(x, y);
    GradedChainComplex cj = moore_complex(j);
    GradedChainComplex cxx = moore_complex(x);
    GradedChainComplex cyy = moore_complex(y);
    CupCalculator calc_j(j), calc_x(x), calc_y(y);
    const int tx = x.top_level(), ty = y.top_level(), tj = j.top_level();
    for (int p = -1; p <= tx; ++p) {
        if (x.level(p)->size() == 0) continue;
        CohomologyBasis hx = cohomology(cxx, p);
        for (int q = -1; q <= ty; ++q) {
            if (y.level(q)->size() == 0) continue;
            CohomologyBasis hy = cohomology(cyy, q);
            for (int ca = 0; ca < hx.rank(); ++ca)
                for (int cb = 0; cb < hy.rank(); ++cb) {
                    const F2Vec& alpha = hx.representatives()[ca];
                    const F2Vec& beta = hy.representatives()[cb];
                    int n = p + q + 1;
                    F2Vec ab = join_tensor_cochain(x, y, j, alpha, p, beta, q);
                    for (int i = -(tj + 2); i <= tj + 1; ++i) {
                        if (n + i < -1 || n + i > tj) continue;
                        F2Vec lhs = steenrod_square_rep(calc_j, cj, n, ab, i);
                        // Σⱼ sqʲα ⊗ sq^{i−j}β.
                        F2Vec rhs(j.level(n + i)->size(), 0);
                        for (int jj = -(tx + 2); jj <= tx + 1; ++jj) {
                            int pp = p + jj, qq = q + i - jj;
                            if (pp < -1 || pp > tx || qq < -1 || qq > ty) continue;
                            if (x.level(pp)->size() == 0 || y.level(qq)->size() == 0) continue;
                            F2Vec sa = steenrod_square_rep(calc_x, cxx, p, alpha, jj);
                            F2Vec sb = steenrod_square_rep(calc_y, cyy, q, beta, i - jj);
                            rhs = add(rhs, join_tensor_cochain(x, y, j, sa, pp, sb, qq));
                        }
                        CohomologyBasis target = cohomology(cj, n + i);
                        if (target.reduce(lhs) != target.reduce(rhs)) {
                            std::ostringstream os;
                            os << "cartan fails at p=" << p << " q=" << q << " i=" << i;
                            witness = os.str();
                            return false;
                        }
                    }
                }
        }
    }
    return true;
}

bool check_bockstein_object(const AssoObject& x, std::string& witness) {
    GradedChainComplex cx = moore_complex(x);
    CupCalculator calc(x);
    const int top = x.top_level();
    for (int n = -1; n < top; ++n) {
        CohomologyBasis hn = cohomology(cx, n);
        CohomologyBasis hn1 = cohomology(cx, n + 1);
        for (int c = 0; c < hn.rank(); ++c) {
            const F2Vec& alpha = hn.representatives()[c];
            F2Vec sq1 = steenrod_square_rep(calc, cx, n, alpha, 1);
            F2Vec beta = bockstein(cx, n, alpha);
            if (hn1.reduce(sq1) != hn1.reduce(beta)) {
                std::ostringstream os;
                os << "sq^1 != bockstein at degree " << n << ", class " << c;
                witness = os.str();
                return false;
            }
        }
    }
    return true;
}

int permutation_parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

bool check_sign_law_once(Rng& rng, std::string& witness) {
    int k = rng.between(1, 3);
    auto rnd_targets = [&](int len) {
        std::vector<int> v(len);
        for (int& t : v) t = rng.below(k);
        return v;
    };
    std::vector<int> d00 = rnd_targets(rng.between(1, 4));
    std::sort(d00.begin(), d00.end());
    auto comp_size = [&](const std::vector<int>& topv) {
        size_t n = 0;
        for (int t : topv) n += std::count(d00.begin(), d00.end(), t);
        return n;
    };
    std::vector<int> d10, d11;
    size_t n = 0;
    for (int guard = 0; guard < 2000; ++guard) {
        d10 = rnd_targets(rng.between(1, 3));
        d11 = rnd_targets(rng.between(1, 3));
        n = comp_size(d10);
        if (n >= 1 && n <= 6 && n == comp_size(d11)) break;
        n = 0;
    }
    if (n == 0) return true;  // no admissible instance found; skip
    std::vector<int> commut(n);
    for (size_t t = 0; t < n; ++t) commut[t] = static_cast<int>(t);
    std::shuffle(commut.begin(), commut.end(), rng.eng);

    AssoObject x;
    x.levels[-1] = make_set("Xm1", {"a"});
    std::vector<std::string> mids;
    for (int t = 1; t <= k; ++t) mids.push_back("b" + std::to_string(t));
    x.levels[0] = make_set("X0", std::move(mids));
    x.levels[1] = make_set("X1", {"c"});
    Span f0;
    f0.src = x.levels[0];
    f0.tgt = x.levels[-1];
    for (int s : d00) f0.arrows.emplace_back(s, 0);
    x.elem_faces[{0, 0}] = std::move(f0);
    auto topspan = [&x](const std::vector<int>& tgts) {
        Span f;
        f.src = x.levels.at(1);
        f.tgt = x.levels.at(0);
        for (int t : tgts) f.arrows.emplace_back(0, t);
        return f;
    };
    x.elem_faces[{1, 0}] = topspan(d10);
    x.elem_faces[{1, 1}] = topspan(d11);
    x.commutators[{1, 0, 1}] = FibBijection{commut};
    if (!x.validate().ok()) {
        witness = "sign-law: generated object failed validation";
        return false;
    }
    CupCalculator calc(x);
    TensorElt expect;
    if (permutation_parity(commut) == 1) expect.insert({-1, 0, -1, 0});
    if (calc.nabla(-3, 1, 0) != expect) {
        std::ostringstream os;
        os << "sign law fails for N=" << n << " commutator parity " << permutation_parity(commut);
        witness = os.str();
        return false;
    }
    return true;
}

bool check_oracle_object(const AssoObject& s, Rng& rng, std::string& witness) {
    const int top = s.top_level();
    CupCalculator calc(s);
    for (int p = -1; p <= std::min(top, 3); ++p)
        for (int q = -1; q <= std::min(top, 3); ++q) {
            if (s.level(p)->size() == 0 || s.level(q)->size() == 0) continue;
            for (int rep = 0; rep < 3; ++rep) {
                F2Vec alpha = random_cochain(rng, s.level(p)->size());
                F2Vec beta = random_cochain(rng, s.level(q)->size());
                for (int n = -1; n <= top; ++n) {
                    int i = p + q - n;
                    F2Vec ours = calc.cup_i(alpha, p, beta, q, i);
                    F2Vec classical = classical_cup_i(s, alpha, p, beta, q, i);
                    if (ours != classical) {
                        std::ostringstream os;
                        os << "oracle mismatch at p=" << p << " q=" << q << " i=" << i;
                        witness = os.str();
                        return false;
                    }
                    if (i == 0 && p >= 0 && q >= 0 && ours != aw_cup0(s, alpha, p, beta, q)) {
                        std::ostringstream os;
                        os << "cup_0 differs from the front/back-face formula at p=" << p
                           << " q=" << q;
                        witness = os.str();
                        return false;
                    }
                }
            }
        }
    return true;
}

}  // namespace

CheckReport check_identity(const std::string& name, const GeneratorSpec& spec, int count) {
    CheckReport report;
    report.name = name;
    for (int trial = 0; trial < count && report.pass; ++trial) {
        GeneratorSpec s = spec;
        s.seed = spec.seed + static_cast<uint64_t>(trial) * 1000003ULL;
        Rng rng(s.seed ^ 0x5bf03635f0a5b1e5ULL);
        std::string witness;
        bool ok = true;
        if (name == "comult") {
            ok = check_comult_object(random_asso(s), witness);
        } else if (name == "suspension") {
            ok = check_suspension_object(random_asso(s), rng, witness);
        } else if (name == "order-shuffle") {
            ok = check_shuffle_object(random_asso(s), 10, s.seed, witness);
        } else if (name == "naturality") {
            ok = check_naturality_object(random_semi_simplicial_set(s), rng, witness);
        } else if (name == "cartan") {
            GeneratorSpec s2 = s;
            s2.seed = s.seed + 0x51ed2701ULL;
            GeneratorSpec small = s;
            small.max_level = std::min(spec.max_level, 1);
            GeneratorSpec small2 = s2;
            small2.max_level = std::min(spec.max_level, 1);
            ok = check_cartan_object(random_asso(small), random_asso(small2), witness);
        } else if (name == "bockstein") {
            ok = check_bockstein_object(random_asso(s), witness);
        } else if (name == "sign-law") {
            ok = check_sign_law_once(rng, witness);
        } else if (name == "oracle") {
            ok = check_oracle_object(random_semi_simplicial_set(s), rng, witness);
        } else {
            throw domain_error("unknown identity: " + name);
        }
        if (!ok) {
            report.pass = false;
            report.witness = describe(name, s.seed, trial, witness);
        }
    }
    return report;
}

}  // namespace cupsq
