/**
 * \file khovanov.cpp
 *
 * The Khovanov cube in the Burnside category, built per quantum grading from
 * a PD code: resolution circles, merge/split transpose spans, ladybug-aware
 * square bijections, and the Kh/Steenrod front-end.
 */
#include "cupsq/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include <json.hpp>

namespace cupsq {

namespace {

int bit_of(int crossing_1based) { return 1 << (crossing_1based - 1); }

std::string labels_of_id(const std::string& id) {
    auto colon = id.find(':');
    if (colon == std::string::npos) throw integrity_error("generator id without labels: " + id);
    return id.substr(colon + 1);
}

std::vector<int> sorted_arcs(const Circle& c) {
    std::vector<int> a = c.arcs;
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

int PDCode::n_minus() const {
    int n = 0;
    for (int s : signs) n += (s < 0);
    return n;
}

int PDCode::n_plus() const { return size() - n_minus(); }

namespace {

void validate_pd(const PDCode& pd) {
    if (pd.crossings.empty()) throw domain_error("pd: at least one crossing is required");
    if (pd.signs.size() != pd.crossings.size())
        throw domain_error("pd: sign list length differs from crossing count");
    for (int s : pd.signs)
        if (s != 1 && s != -1) throw domain_error("pd: signs must be +1 or -1");
    std::map<int, int> uses;
    for (const auto& x : pd.crossings)
        for (int arc : x) ++uses[arc];
    for (auto [arc, k] : uses)
        if (k != 2)
            throw domain_error("pd: arc " + std::to_string(arc) + " appears " + std::to_string(k) +
                               " times (expected 2)");
}

/// Crossing signs derived from the arc numbering: arcs are numbered
/// consecutively along each oriented component, so every component carries a
/// cyclic successor map on its arc labels.  The under strand realises the
/// transition tuple[0] -> tuple[2]; the over strand takes the remaining free
/// transition between its two arcs, entering at slot 1 (negative crossing)
/// or slot 3 (positive crossing).  A global matching (each transition is
/// used by exactly one passage) settles short components where both over
/// directions look plausible, e.g. single kinks.
void derive_signs(PDCode& pd) {
    std::map<int, int> parent;
    for (const auto& x : pd.crossings)
        for (int arc : x) parent.emplace(arc, arc);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& x : pd.crossings) {
        parent[find(x[0])] = find(x[2]);
        parent[find(x[1])] = find(x[3]);
    }
    std::map<int, std::vector<int>> members;
    for (auto& [a, r] : parent) members[find(a)].push_back(a);
    std::map<int, int> succ;
    for (auto& [r, arcs] : members) {
        std::sort(arcs.begin(), arcs.end());
        for (size_t i = 0; i + 1 < arcs.size(); ++i) {
            if (arcs[i + 1] != arcs[i] + 1)
                throw domain_error("pd: arcs of one component are not numbered consecutively");
            succ[arcs[i]] = arcs[i + 1];
        }
        succ[arcs.back()] = arcs.front();
    }
    std::set<std::pair<int, int>> used;
    for (const auto& x : pd.crossings) {
        if (succ.at(x[0]) != x[2])
            throw domain_error("pd: under strand does not advance the arc numbering");
        used.insert({x[0], x[2]});
    }
    pd.signs.assign(pd.crossings.size(), 0);
    int settled = 0;
    while (settled < pd.size()) {
        bool progress = false;
        for (int k = 0; k < pd.size(); ++k) {
            if (pd.signs[k] != 0) continue;
            int b = pd.crossings[k][1], d = pd.crossings[k][3];
            bool fwd = succ.at(b) == d && !used.count({b, d});  // over runs b -> d
            bool bwd = succ.at(d) == b && !used.count({d, b});  // over runs d -> b
            if (fwd && bwd) continue;  // still ambiguous; decided later
            if (!fwd && !bwd)
                throw domain_error("pd: over strand of crossing " + std::to_string(k + 1) +
                                   " matches no free transition");
            pd.signs[k] = fwd ? -1 : 1;
            used.insert(fwd ? std::make_pair(b, d) : std::make_pair(d, b));
            ++settled;
            progress = true;
        }
        if (!progress) {
            // A component traversed only by over strands: both directions are
            // consistent labelings, so fix one and keep propagating.
            for (int k = 0; k < pd.size(); ++k)
                if (pd.signs[k] == 0) {
                    pd.signs[k] = -1;
                    used.insert({pd.crossings[k][1], pd.crossings[k][3]});
                    ++settled;
                    break;
                }
        }
    }
}

PDCode parse_pd_text(const std::string& text) {
    PDCode pd;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
            text[i] == ';') {
            ++i;
            continue;
        }
        if (text[i] != 'X')
            throw domain_error("pd: expected 'X[' at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '[')
            throw domain_error("pd: expected '[' at offset " + std::to_string(i));
        ++i;
        std::array<int, 4> tup{};
        for (int k = 0; k < 4; ++k) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i)
                throw domain_error("pd: expected an arc label at offset " + std::to_string(start));
            tup[k] = std::stoi(text.substr(start, i - start));
            if (k < 3) {
                if (i >= text.size() || text[i] != ',')
                    throw domain_error("pd: expected ',' at offset " + std::to_string(i));
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ']')
            throw domain_error("pd: expected ']' at offset " + std::to_string(i));
        ++i;
        pd.crossings.push_back(tup);
    }
    return pd;
}

}  // namespace

PDCode parse_pd(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw domain_error("pd: empty input");
    PDCode pd;
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw domain_error(std::string("pd: invalid JSON: ") + e.what());
        }
        if (!j.contains("crossings") || !j["crossings"].is_array())
            throw domain_error("pd: missing \"crossings\" array");
        for (const auto& t : j["crossings"]) {
            if (!t.is_array() || t.size() != 4)
                throw domain_error("pd: each crossing must be a 4-tuple of arc labels");
            pd.crossings.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                                    t[3].get<int>()});
        }
        if (j.contains("signs")) {
            for (const auto& s : j["signs"]) pd.signs.push_back(s.get<int>());
        } else {
            derive_signs(pd);
        }
    } else {
        pd = parse_pd_text(text);
        derive_signs(pd);
    }
    validate_pd(pd);
    return pd;
}

Resolution resolve(const PDCode& pd, int mask) {
    const int c = pd.size();
    // Other end of each arc-end (crossing, slot).
    std::map<int, std::vector<std::pair<int, int>>> ends;
    for (int k = 0; k < c; ++k)
        for (int s = 0; s < 4; ++s) ends[pd.crossings[k][s]].push_back({k, s});

    auto partner = [&](int k, int s) {
        // 0-smoothing joins slots (0,1),(2,3); 1-smoothing joins (0,3),(1,2).
        // (With this convention the all-0 state of a positive diagram is the
        // oriented/Seifert smoothing, matching the derived crossing signs.)
        return (mask >> k) & 1 ? s ^ 3 : s ^ 1;
    };

    Resolution res;
    res.mask = mask;
    std::vector<std::array<bool, 4>> entered(c, {false, false, false, false});
    for (int k0 = 0; k0 < c; ++k0)
        for (int s0 = 0; s0 < 4; ++s0) {
            // Skip darts already consumed, and start each passband from its
            // lower slot only: the opposite direction is the same curve.
            if (entered[k0][s0] || entered[k0][partner(k0, s0)]) continue;
            Circle circle;
            int k = k0, s = s0;
            do {
                entered[k][s] = true;
                int out = partner(k, s);
                circle.passages.push_back({k, s, out});
                int arc = pd.crossings[k][out];
                circle.arcs.push_back(arc);
                const auto& e = ends.at(arc);
                auto next = (e[0] == std::make_pair(k, out)) ? e[1] : e[0];
                k = next.first;
                s = next.second;
            } while (!(k == k0 && s == s0));
            circle.min_arc = *std::min_element(circle.arcs.begin(), circle.arcs.end());
            res.circles.push_back(std::move(circle));
        }
    std::sort(res.circles.begin(), res.circles.end(),
              [](const Circle& a, const Circle& b) { return a.min_arc < b.min_arc; });
    for (int i = 0; i < static_cast<int>(res.circles.size()); ++i)
        for (int arc : res.circles[i].arcs) res.circle_of_arc[arc] = i;
    return res;
}

namespace {

/// Shared per-diagram caches for cube construction.
struct KhContext {
    const PDCode& pd;
    std::map<int, Resolution> res;
    std::map<std::pair<int, int>, SetPtr> gens;  // (mask, q)

    explicit KhContext(const PDCode& p) : pd(p) {}

    const Resolution& resolution(int mask) {
        auto it = res.find(mask);
        if (it == res.end()) it = res.emplace(mask, resolve(pd, mask)).first;
        return it->second;
    }

    SetPtr generators(int mask, int q) {
        auto key = std::make_pair(mask, q);
        auto it = gens.find(key);
        if (it != gens.end()) return it->second;
        const Resolution& r = resolution(mask);
        const int k = static_cast<int>(r.circles.size());
        const int base = std::popcount(static_cast<unsigned>(mask)) + pd.n_plus() -
                         2 * pd.n_minus();
        std::vector<std::string> elems;
        for (int b = 0; b < (1 << k); ++b) {
            int minus = std::popcount(static_cast<unsigned>(b));
            if (k - 2 * minus + base != q) continue;
            std::string labels(k, '+');
            for (int j = 0; j < k; ++j)
                if ((b >> j) & 1) labels[j] = '-';
            elems.push_back("g" + std::to_string(mask) + ":" + labels);
        }
        SetPtr set = make_set("F" + std::to_string(mask) + "q" + std::to_string(q),
                              std::move(elems));
        gens[key] = set;
        return set;
    }

    Span edge(int mask, int a, int q) {
        const int sub = mask & ~bit_of(a);
        const Resolution& ra = resolution(mask);
        const Resolution& rb = resolution(sub);
        Span span;
        span.src = generators(mask, q);
        span.tgt = generators(sub, q);

        // Circle correspondence by arc content; the circles touched by the
        // surgery at crossing a are the ones without a partner.
        std::map<std::vector<int>, int> by_arcs;
        for (int i = 0; i < static_cast<int>(rb.circles.size()); ++i)
            by_arcs[sorted_arcs(rb.circles[i])] = i;
        std::vector<int> a_to_b(ra.circles.size(), -1);  // shared circles
        std::vector<int> a_new, b_new;
        for (int i = 0; i < static_cast<int>(ra.circles.size()); ++i) {
            auto it = by_arcs.find(sorted_arcs(ra.circles[i]));
            if (it != by_arcs.end())
                a_to_b[i] = it->second;
            else
                a_new.push_back(i);
        }
        {
            std::vector<bool> used(rb.circles.size(), false);
            for (int i : a_to_b)
                if (i >= 0) used[i] = true;
            for (int i = 0; i < static_cast<int>(rb.circles.size()); ++i)
                if (!used[i]) b_new.push_back(i);
        }

        const bool split = ra.circles.size() == rb.circles.size() + 1;
        if (!(split ? (a_new.size() == 2 && b_new.size() == 1)
                    : (ra.circles.size() + 1 == rb.circles.size() && a_new.size() == 1 &&
                       b_new.size() == 2)))
            throw integrity_error("edge: surgery changed circles in an unexpected way");

        auto tgt_index = [&](const std::string& labels) -> int {
            const std::string id = "g" + std::to_string(sub) + ":" + labels;
            return span.tgt->contains(id) ? span.tgt->index(id) : -1;
        };

        for (int x = 0; x < span.src->size(); ++x) {
            const std::string xl = labels_of_id(span.src->element(x));
            // Labels of the target's shared circles are forced.
            std::string yl(rb.circles.size(), '?');
            for (int i = 0; i < static_cast<int>(ra.circles.size()); ++i)
                if (a_to_b[i] >= 0) yl[a_to_b[i]] = xl[i];
            std::vector<int> targets;
            if (split) {
                // Transpose of Δ: (+,-) <- +, (-,+) <- +, (-,-) <- -.
                const char l1 = xl[a_new[0]], l2 = xl[a_new[1]];
                if (l1 != l2) {
                    yl[b_new[0]] = '+';
                    targets.push_back(tgt_index(yl));
                } else if (l1 == '-') {
                    yl[b_new[0]] = '-';
                    targets.push_back(tgt_index(yl));
                }
            } else {
                // Transpose of m: (+,+) <- +, (+,-) <- -, (-,+) <- -.
                const char l = xl[a_new[0]];
                if (l == '+') {
                    yl[b_new[0]] = '+';
                    yl[b_new[1]] = '+';
                    targets.push_back(tgt_index(yl));
                } else {
                    yl[b_new[0]] = '+';
                    yl[b_new[1]] = '-';
                    targets.push_back(tgt_index(yl));
                    yl[b_new[0]] = '-';
                    yl[b_new[1]] = '+';
                    targets.push_back(tgt_index(yl));
                }
            }
            std::sort(targets.begin(), targets.end());
            for (int t : targets)
                if (t >= 0) span.arrows.emplace_back(x, t);
        }
        return span;
    }

    /// In-arc of passage `idx` of a circle: the arc traversed just before it.
    int in_arc(const Circle& z, int idx) const {
        const int n = static_cast<int>(z.arcs.size());
        return z.arcs[(idx + n - 1) % n];
    }

    /// Side (false = left, true = right) on which the surgery arc of a
    /// 0-smoothed crossing lies when the stored traversal passes through it.
    static bool surgery_on_right(const Passage& p) {
        if (p.slot_in == 0 && p.slot_out == 1) return true;
        if (p.slot_in == 1 && p.slot_out == 0) return false;
        if (p.slot_in == 2 && p.slot_out == 3) return true;
        if (p.slot_in == 3 && p.slot_out == 2) return false;
        throw integrity_error("ladybug: passage through a 1-smoothed crossing");
    }

    /// The ladybug matching for one size-2 fibre: pairs each label position
    /// on the split circles of the a-route with one on the b-route.
    /// Returns (circle in resolve(w|a)) -> (circle in resolve(w|b)).
    std::map<int, int> ladybug_pairing(int mask, int a, int b) {
        const int w = mask & ~bit_of(a) & ~bit_of(b);
        const Resolution& rw = resolution(w);
        // The single circle carrying both surgery arcs.
        int zi = -1;
        for (int i = 0; i < static_cast<int>(rw.circles.size()); ++i)
            for (const Passage& p : rw.circles[i].passages)
                if (p.crossing == a - 1) zi = (zi == -1 || zi == i) ? i : -2;
        if (zi < 0) throw integrity_error("ladybug: surgery arcs not on a single circle");
        const Circle& z = rw.circles[zi];

        std::vector<int> pos_a, pos_b;
        for (int i = 0; i < static_cast<int>(z.passages.size()); ++i) {
            if (z.passages[i].crossing == a - 1) pos_a.push_back(i);
            if (z.passages[i].crossing == b - 1) pos_b.push_back(i);
        }
        if (pos_a.size() != 2 || pos_b.size() != 2)
            throw integrity_error("ladybug: expected two passages per surgery arc");
        // Interleaving check: exactly one b-passage strictly between the two
        // a-passages along the traversal.
        auto between = [&](int p) { return p > pos_a[0] && p < pos_a[1]; };
        if (between(pos_b[0]) == between(pos_b[1]))
            throw integrity_error("ladybug: surgery arcs do not interleave");

        const bool a_right = surgery_on_right(z.passages[pos_a[0]]);
        const bool b_right = surgery_on_right(z.passages[pos_b[0]]);
        if (a_right != surgery_on_right(z.passages[pos_a[1]]) ||
            b_right != surgery_on_right(z.passages[pos_b[1]]) || a_right == b_right)
            throw integrity_error("ladybug: inconsistent surgery-arc sides");

        // Each surgery-arc endpoint pairs with the next endpoint in the
        // traversal direction in which its own arc leaves the circle to the
        // left.  With the stored direction, "next" when the arc sits on the
        // left, "previous" otherwise; the two formulations agree.
        std::vector<int> relevant = {pos_a[0], pos_a[1], pos_b[0], pos_b[1]};
        std::sort(relevant.begin(), relevant.end());
        std::map<int, int> pairs;  // a-passage position -> b-passage position
        for (int ai : pos_a) {
            int at = static_cast<int>(std::find(relevant.begin(), relevant.end(), ai) -
                                      relevant.begin());
            int partner = a_right ? relevant[(at + 3) % 4] : relevant[(at + 1) % 4];
            pairs[ai] = partner;
        }

        const Resolution& ra = resolution(w | bit_of(a));
        const Resolution& rb = resolution(w | bit_of(b));
        std::map<int, int> phi;
        for (auto [ai, bi] : pairs) {
            int ca = ra.circle_of_arc.at(in_arc(z, bi));  // a-split circle holding b-passage
            int cb = rb.circle_of_arc.at(in_arc(z, ai));  // b-split circle holding a-passage
            phi[ca] = cb;
        }
        if (phi.size() != 2) throw integrity_error("ladybug: degenerate circle pairing");
        return phi;
    }

    FibBijection square(int mask, int a, int b, int q, const Span& left, const Span& right) {
        if (left.size() != right.size())
            throw integrity_error("square: composite sizes differ at mask " +
                                  std::to_string(mask));
        std::map<std::pair<int, int>, std::vector<int>> lf, rf;
        for (int i = 0; i < left.size(); ++i) lf[left.arrows[i]].push_back(i);
        for (int i = 0; i < right.size(); ++i) rf[right.arrows[i]].push_back(i);

        FibBijection m;
        m.matching.assign(left.size(), -1);
        std::map<int, int> phi;  // lazily computed ladybug pairing
        for (auto& [st, ls] : lf) {
            auto it = rf.find(st);
            if (it == rf.end() || it->second.size() != ls.size())
                throw integrity_error("square: fibre cardinalities differ");
            const auto& rs = it->second;
            if (ls.size() == 1) {
                m.matching[ls[0]] = rs[0];
                continue;
            }
            if (ls.size() != 2)
                throw integrity_error("square: fibre of size " + std::to_string(ls.size()) +
                                      " outside the ladybug configuration");
            if (phi.empty()) phi = ladybug_pairing(mask, a, b);
            // Left middles live at mask∖a = w|b (b-split circles), right
            // middles at mask∖b = w|a (a-split circles); match the arrows
            // whose x₋ sits on paired circles.
            SetPtr mid_l = generators(mask & ~bit_of(a), q);
            SetPtr mid_r = generators(mask & ~bit_of(b), q);
            auto minus_on = [&](const std::string& labels, int c1, int c2) -> int {
                const bool m1 = labels[c1] == '-', m2 = labels[c2] == '-';
                if (m1 == m2) throw integrity_error("square: ladybug fibre with equal labels");
                return m1 ? c1 : c2;
            };
            auto phi_it = phi.begin();
            const int ca1 = phi_it->first, cb1 = phi_it->second;
            const int ca2 = std::next(phi_it)->first, cb2 = std::next(phi_it)->second;
            int matched = 0;
            for (int li : ls) {
                // Middle generator of the left route: target of the inner
                // (first-applied) arrow, an element of F(w|b).
                int inner = left.parents[li].first;
                const Span& el = edge_cache.at({mask, a, q});
                const std::string ml = labels_of_id(mid_l->element(el.arrows[inner].second));
                const int dl = minus_on(ml, cb1, cb2);
                const int want_c = (dl == cb1) ? ca1 : ca2;
                for (int ri : rs) {
                    int inner_r = right.parents[ri].first;
                    const Span& er = edge_cache.at({mask, b, q});
                    const std::string mr =
                        labels_of_id(mid_r->element(er.arrows[inner_r].second));
                    if (minus_on(mr, ca1, ca2) == want_c) {
                        m.matching[li] = ri;
                        ++matched;
                        break;
                    }
                }
            }
            if (matched != 2) throw integrity_error("square: ladybug matching failed");
        }
        for (int v : m.matching)
            if (v < 0) throw integrity_error("square: unmatched arrow");
        return m;
    }

    std::map<std::tuple<int, int, int>, Span> edge_cache;  // (mask, a, q)

    const Span& cached_edge(int mask, int a, int q) {
        auto key = std::make_tuple(mask, a, q);
        auto it = edge_cache.find(key);
        if (it == edge_cache.end()) it = edge_cache.emplace(key, edge(mask, a, q)).first;
        return it->second;
    }
};

}  // namespace

SetPtr kh_generators(const PDCode& pd, int mask, int q) {
    KhContext ctx(pd);
    return ctx.generators(mask, q);
}

Span edge_span(const PDCode& pd, int mask, int a, int q) {
    KhContext ctx(pd);
    return ctx.edge(mask, a, q);
}

FibBijection square_bijection(const PDCode& pd, int mask, int a, int b, int q) {
    KhContext ctx(pd);
    Span left = compose(ctx.cached_edge(mask & ~bit_of(a), b, q), ctx.cached_edge(mask, a, q));
    Span right = compose(ctx.cached_edge(mask & ~bit_of(b), a, q), ctx.cached_edge(mask, b, q));
    return ctx.square(mask, a, b, q, left, right);
}

CubeBurnside kh_cube(const PDCode& pd, int q) {
    KhContext ctx(pd);
    CubeBurnside cube;
    cube.dim = pd.size();
    cube.vertex.resize(1 << cube.dim);
    for (int mask = 0; mask < (1 << cube.dim); ++mask) cube.vertex[mask] = ctx.generators(mask, q);
    for (int mask = 0; mask < (1 << cube.dim); ++mask)
        for (int a = 1; a <= cube.dim; ++a) {
            if (!(mask & bit_of(a))) continue;
            const Span& e = ctx.cached_edge(mask, a, q);
            if (e.size() > 0) cube.edges[{mask, a}] = e;
        }
    for (int mask = 0; mask < (1 << cube.dim); ++mask)
        for (int a = 1; a <= cube.dim; ++a) {
            if (!(mask & bit_of(a))) continue;
            for (int b = a + 1; b <= cube.dim; ++b) {
                if (!(mask & bit_of(b))) continue;
                Span left = compose(ctx.cached_edge(mask & ~bit_of(a), b, q),
                                    ctx.cached_edge(mask, a, q));
                Span right = compose(ctx.cached_edge(mask & ~bit_of(b), a, q),
                                     ctx.cached_edge(mask, b, q));
                if (left.size() == 0 && right.size() == 0) continue;
                cube.squares[{mask, a, b}] = ctx.square(mask, a, b, q, left, right);
            }
        }
    return cube;
}

AssoObject build_asso(const PDCode& pd, int q) { return lambda_from_cube(kh_cube(pd, q)); }

std::vector<int> quantum_gradings(const PDCode& pd) {
    std::set<int> qs;
    const int base = pd.n_plus() - 2 * pd.n_minus();
    for (int mask = 0; mask < (1 << pd.size()); ++mask) {
        const int k = static_cast<int>(resolve(pd, mask).circles.size());
        const int v = std::popcount(static_cast<unsigned>(mask));
        for (int j = 0; j <= k; ++j) qs.insert(k - 2 * j + v + base);
    }
    return {qs.begin(), qs.end()};
}

std::map<std::pair<int, int>, int> kh_table(const PDCode& pd) {
    std::map<std::pair<int, int>, int> out;
    for (int q : quantum_gradings(pd)) {
        AssoObject obj = build_asso(pd, q);
        GradedChainComplex moore = moore_complex(obj);
        for (int n = -1; n <= obj.top_level(); ++n) {
            int rank = cohomology(moore, n).rank();
            if (rank > 0) out[{n + 1 - pd.n_minus(), q}] = rank;
        }
    }
    return out;
}

namespace {

int f2_rank(F2Mat m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(pivot, cc), m.at(rank, cc));
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.at(r, c))
                for (int cc = 0; cc < m.cols; ++cc) m.at(r, cc) ^= m.at(rank, cc);
        ++rank;
    }
    return rank;
}

}  // namespace

std::map<std::pair<int, int>, int> kh_table_bruteforce(const PDCode& pd) {
    // Direct Frobenius-algebra computation: basis element = (mask, x₋ set of
    // circles); differential adds one 1-smoothing and applies m or Δ, with
    // all signs irrelevant mod 2.
    const int c = pd.size();
    std::vector<Resolution> res(1 << c);
    for (int mask = 0; mask < (1 << c); ++mask) res[mask] = resolve(pd, mask);

    struct Gen {
        int mask;
        int minus;  // bitmask over circles
    };
    // (weight, q) -> ordered generators with index lookup.
    std::map<std::pair<int, int>, std::vector<Gen>> basis;
    std::map<std::tuple<int, int, int>, int> index;  // (mask, minus) with q implicit
    const int base = pd.n_plus() - 2 * pd.n_minus();
    for (int mask = 0; mask < (1 << c); ++mask) {
        const int k = static_cast<int>(res[mask].circles.size());
        const int v = std::popcount(static_cast<unsigned>(mask));
        for (int b = 0; b < (1 << k); ++b) {
            const int q = k - 2 * std::popcount(static_cast<unsigned>(b)) + v + base;
            auto& vec = basis[{v, q}];
            index[{mask, b, q}] = static_cast<int>(vec.size());
            vec.push_back({mask, b});
        }
    }

    std::map<std::pair<int, int>, int> out;
    std::set<int> qs;
    for (auto& [key, vec] : basis) qs.insert(key.second);
    for (int q : qs) {
        std::vector<F2Mat> d(c + 1);  // d[v]: weight v -> weight v+1
        for (int v = 0; v <= c; ++v) {
            const auto src = basis.find({v, q});
            const auto tgt = basis.find({v + 1, q});
            const int rows = tgt == basis.end() ? 0 : static_cast<int>(tgt->second.size());
            const int cols = src == basis.end() ? 0 : static_cast<int>(src->second.size());
            d[v] = F2Mat(rows, cols);
            if (rows == 0 || cols == 0) continue;
            for (int col = 0; col < cols; ++col) {
                const Gen g = src->second[col];
                for (int a = 1; a <= c; ++a) {
                    if (g.mask & bit_of(a)) continue;
                    const int up = g.mask | bit_of(a);
                    const Resolution& rs = res[g.mask];
                    const Resolution& rt = res[up];
                    // Circle correspondence by arc sets.
                    std::map<std::vector<int>, int> by_arcs;
                    for (int i = 0; i < static_cast<int>(rt.circles.size()); ++i)
                        by_arcs[sorted_arcs(rt.circles[i])] = i;
                    std::vector<int> shared(rs.circles.size(), -1), s_new, t_new;
                    for (int i = 0; i < static_cast<int>(rs.circles.size()); ++i) {
                        auto it = by_arcs.find(sorted_arcs(rs.circles[i]));
                        if (it != by_arcs.end())
                            shared[i] = it->second;
                        else
                            s_new.push_back(i);
                    }
                    std::vector<bool> used(rt.circles.size(), false);
                    for (int i : shared)
                        if (i >= 0) used[i] = true;
                    for (int i = 0; i < static_cast<int>(rt.circles.size()); ++i)
                        if (!used[i]) t_new.push_back(i);

                    auto emit = [&](int tminus) {
                        d[v].at(index.at({up, tminus, q}), col) ^= 1;
                    };
                    int carried = 0;
                    for (int i = 0; i < static_cast<int>(rs.circles.size()); ++i)
                        if (shared[i] >= 0 && ((g.minus >> i) & 1)) carried |= 1 << shared[i];
                    if (s_new.size() == 2) {
                        // Merge m.
                        const bool m1 = (g.minus >> s_new[0]) & 1;
                        const bool m2 = (g.minus >> s_new[1]) & 1;
                        if (m1 && m2) continue;  // x₋x₋ ↦ 0
                        emit(carried | ((m1 || m2) ? (1 << t_new[0]) : 0));
                    } else {
                        // Split Δ.
                        const bool minus = (g.minus >> s_new[0]) & 1;
                        if (minus) {
                            emit(carried | (1 << t_new[0]) | (1 << t_new[1]));
                        } else {
                            emit(carried | (1 << t_new[0]));
                            emit(carried | (1 << t_new[1]));
                        }
                    }
                }
            }
        }
        for (int v = 0; v <= c; ++v) {
            const auto here = basis.find({v, q});
            const int dim = here == basis.end() ? 0 : static_cast<int>(here->second.size());
            if (dim == 0) continue;
            const int rk_out = f2_rank(d[v]);
            const int rk_in = v == 0 ? 0 : f2_rank(d[v - 1]);
            const int h = v - pd.n_minus();
            const int betti = dim - rk_out - rk_in;
            if (betti > 0) out[{h, q}] = betti;
        }
    }
    return out;
}

std::map<int, F2Mat> kh_sq(const PDCode& pd, int q, int i) {
    AssoObject obj = build_asso(pd, q);
    GradedChainComplex moore = moore_complex(obj);
    CupCalculator calc(obj);
    std::map<int, F2Mat> out;
    for (int n = -1; n <= obj.top_level(); ++n) {
        CohomologyBasis src = cohomology(moore, n);
        if (src.rank() == 0) continue;
        CohomologyBasis tgt = cohomology(moore, n + i);
        F2Mat m(src.rank(), tgt.rank());
        for (int j = 0; j < src.rank(); ++j) {
            F2Vec rep = steenrod_square_rep(calc, moore, n, src.representatives()[j], i);
            F2Vec coords = tgt.reduce(rep);
            for (int k = 0; k < tgt.rank(); ++k) m.at(j, k) = coords[k];
        }
        out[n + 1 - pd.n_minus()] = std::move(m);
    }
    return out;
}

}  // namespace cupsq
