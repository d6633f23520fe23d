/**
 * \file burnside.cpp
 *
 * Spans, fibrewise bijections and abelianisation.
 */
#include "cupsq/burnside.hpp"

#include <algorithm>

namespace cupsq {

FiniteSet::FiniteSet(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) {
        auto [it, fresh] = index_.emplace(elements_[i], static_cast<int>(i));
        if (!fresh)
            throw structural_error("duplicate element '" + elements_[i] + "' in set " + name_);
    }
}

int FiniteSet::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw domain_error("element '" + id + "' not in set " + name_);
    return it->second;
}

SetPtr make_set(std::string name, std::vector<std::string> elements) {
    return std::make_shared<const FiniteSet>(std::move(name), std::move(elements));
}

SetPtr product_set(const SetPtr& a, const SetPtr& b) {
    std::vector<std::string> elems;
    elems.reserve(static_cast<size_t>(a->size()) * b->size());
    for (const auto& x : a->elements())
        for (const auto& y : b->elements()) elems.push_back("(" + x + "," + y + ")");
    return make_set(a->name() + "x" + b->name(), std::move(elems));
}

static void check_span(const Span& f) {
    for (auto [s, t] : f.arrows)
        if (s < 0 || s >= f.src->size() || t < 0 || t >= f.tgt->size())
            throw structural_error("span arrow endpoint out of range");
}

Span compose(const Span& g, const Span& f) {
    if (f.tgt.get() != g.src.get() && f.tgt->elements() != g.src->elements())
        throw structural_error("compose: middle sets differ");
    check_span(f);
    check_span(g);
    // Index g's arrows by source element for the fibre product.
    std::vector<std::vector<int>> by_src(g.src->size());
    for (int j = 0; j < g.size(); ++j) by_src[g.arrows[j].first].push_back(j);
    Span out;
    out.src = f.src;
    out.tgt = g.tgt;
    for (int i = 0; i < f.size(); ++i) {
        for (int j : by_src[f.arrows[i].second]) {
            out.arrows.emplace_back(f.arrows[i].first, g.arrows[j].second);
            out.parents.emplace_back(i, j);
        }
    }
    return out;
}

Span sum(const Span& f, const Span& g) {
    if (f.src->elements() != g.src->elements() || f.tgt->elements() != g.tgt->elements())
        throw structural_error("sum: endpoint sets differ");
    Span out;
    out.src = f.src;
    out.tgt = f.tgt;
    out.arrows = f.arrows;
    out.arrows.insert(out.arrows.end(), g.arrows.begin(), g.arrows.end());
    return out;
}

Span product(const Span& f, const Span& g) {
    Span out;
    out.src = product_set(f.src, g.src);
    out.tgt = product_set(f.tgt, g.tgt);
    for (auto [fs, ft] : f.arrows)
        for (auto [gs, gt] : g.arrows)
            out.arrows.emplace_back(fs * g.src->size() + gs, ft * g.tgt->size() + gt);
    return out;
}

Span identity_span(const SetPtr& a) {
    Span out;
    out.src = a;
    out.tgt = a;
    for (int i = 0; i < a->size(); ++i) out.arrows.emplace_back(i, i);
    return out;
}

Span diagonal_span(const SetPtr& a) {
    Span out;
    out.src = a;
    out.tgt = product_set(a, a);
    for (int i = 0; i < a->size(); ++i) out.arrows.emplace_back(i, i * a->size() + i);
    return out;
}

static long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw integrity_error("integer overflow");
    return r;
}

static long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw integrity_error("integer overflow");
    return r;
}

ZMat mul(const ZMat& a, const ZMat& b) {
    if (a.cols != b.rows) throw structural_error("ZMat mul: shape mismatch");
    ZMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = checked_add(c.at(i, j), checked_mul(v, b.at(k, j)));
        }
    return c;
}

ZMat add(const ZMat& a, const ZMat& b, long long bsign) {
    if (a.rows != b.rows || a.cols != b.cols) throw structural_error("ZMat add: shape mismatch");
    ZMat c = a;
    for (size_t i = 0; i < c.a.size(); ++i) c.a[i] = checked_add(c.a[i], checked_mul(bsign, b.a[i]));
    return c;
}

F2Mat mul(const F2Mat& a, const F2Mat& b) {
    if (a.cols != b.rows) throw structural_error("F2Mat mul: shape mismatch");
    F2Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (!a.at(i, k)) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) ^= b.at(k, j);
        }
    return c;
}

F2Mat add(const F2Mat& a, const F2Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw structural_error("F2Mat add: shape mismatch");
    F2Mat c = a;
    for (size_t i = 0; i < c.a.size(); ++i) c.a[i] ^= b.a[i];
    return c;
}

F2Mat mod2(const ZMat& m) {
    F2Mat c(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) c.a[i] = static_cast<uint8_t>(((m.a[i] % 2) + 2) % 2);
    return c;
}

ZMat abelianise_z(const Span& f) {
    check_span(f);
    ZMat m(f.tgt->size(), f.src->size());
    for (auto [s, t] : f.arrows) m.at(t, s) = checked_add(m.at(t, s), 1);
    return m;
}

F2Mat abelianise_f2(const Span& f) { return mod2(abelianise_z(f)); }

bool is_free(const Span& f) {
    std::vector<uint8_t> seen(f.src->size(), 0);
    for (auto [s, t] : f.arrows) {
        if (seen[s]) return false;
        seen[s] = 1;
    }
    return true;
}

bool is_equivalent(const Span& f, const Span& g) {
    if (f.src->elements() != g.src->elements() || f.tgt->elements() != g.tgt->elements())
        throw structural_error("is_equivalent: endpoint sets differ");
    return abelianise_z(f) == abelianise_z(g);
}

bool is_f2_equivalent(const Span& f, const Span& g) {
    if (f.src->elements() != g.src->elements() || f.tgt->elements() != g.tgt->elements())
        throw structural_error("is_f2_equivalent: endpoint sets differ");
    return abelianise_f2(f) == abelianise_f2(g);
}

void check_fib_bijection(const Span& left, const Span& right, const FibBijection& m) {
    if (left.size() != right.size() || static_cast<int>(m.matching.size()) != left.size())
        throw structural_error("fibrewise bijection: size mismatch");
    std::vector<uint8_t> hit(right.size(), 0);
    for (int i = 0; i < left.size(); ++i) {
        int j = m.matching[i];
        if (j < 0 || j >= right.size() || hit[j])
            throw structural_error("fibrewise bijection: not a bijection");
        hit[j] = 1;
        if (left.arrows[i] != right.arrows[j])
            throw structural_error("fibrewise bijection: matched arrows differ on an endpoint");
    }
}

}  // namespace cupsq
