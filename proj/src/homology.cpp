/**
 * \file homology.cpp
 */
#include "cupsq/homology.hpp"

#include <algorithm>

namespace cupsq {

ZMat GradedChainComplex::boundary(int degree) const {
    int k = degree - min_deg;
    if (k >= 1 && k < static_cast<int>(diff.size())) return diff[k];
    return ZMat(dim(degree - 1), dim(degree));
}

F2Mat GradedChainComplex::coboundary_f2(int degree) const {
    ZMat d = boundary(degree + 1);
    F2Mat m(d.cols, d.rows);
    for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c) m.at(c, r) = static_cast<uint8_t>(((d.at(r, c) % 2) + 2) % 2);
    return m;
}

void GradedChainComplex::check() const {
    if (diff.size() != dims.size()) throw structural_error("chain complex: ragged data");
    for (size_t k = 0; k < dims.size(); ++k) {
        if (diff[k].cols != dims[k]) throw structural_error("chain complex: shape mismatch");
        int below = (k == 0) ? 0 : dims[k - 1];
        if (diff[k].rows != below) throw structural_error("chain complex: shape mismatch");
        if (k >= 2) {
            ZMat dd = mul(diff[k - 1], diff[k]);
            for (long long v : dd.a)
                if (v != 0) throw structural_error("chain complex: d∘d ≠ 0");
        }
    }
}

F2Vec mul(const F2Mat& m, const F2Vec& v) {
    if (static_cast<int>(v.size()) != m.cols) throw structural_error("F2 mat-vec shape mismatch");
    F2Vec out(m.rows, 0);
    for (int c = 0; c < m.cols; ++c) {
        if (!v[c]) continue;
        for (int r = 0; r < m.rows; ++r) out[r] ^= m.at(r, c);
    }
    return out;
}

F2Vec add(const F2Vec& a, const F2Vec& b) {
    if (a.size() != b.size()) throw structural_error("F2 vec add shape mismatch");
    F2Vec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] ^= b[i];
    return c;
}

bool is_zero(const F2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

static int pivot_of(const F2Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return static_cast<int>(i);
    return -1;
}

CohomologyBasis::CohomologyBasis(const GradedChainComplex& c, int degree)
    : degree_(degree), dim_(c.dim(degree)), delta_(c.coboundary_f2(degree)) {
    // Seed the echelon with the coboundaries δ(C^{degree-1}), which carry no
    // representative coordinates.
    auto insert = [this](F2Vec v, F2Vec coords) -> bool {
        for (const auto& row : echelon_) {
            if (row.pivot >= 0 && v[row.pivot]) {
                v = add(v, row.vec);
                coords.resize(std::max(coords.size(), row.coords.size()), 0);
                for (size_t i = 0; i < row.coords.size(); ++i) coords[i] ^= row.coords[i];
            }
        }
        int p = pivot_of(v);
        if (p < 0) return false;
        echelon_.push_back({std::move(v), std::move(coords), p});
        return true;
    };

    F2Mat dprev = c.coboundary_f2(degree - 1);
    for (int col = 0; col < dprev.cols; ++col) {
        F2Vec v(dim_, 0);
        for (int r = 0; r < dim_; ++r) v[r] = dprev.at(r, col);
        insert(std::move(v), {});
    }

    // Kernel basis of δ_degree via column elimination on δ.
    F2Mat m = delta_;
    std::vector<F2Vec> cols(dim_, F2Vec(dim_, 0));
    for (int j = 0; j < dim_; ++j) cols[j][j] = 1;  // track column operations
    int row = 0;
    for (int col = 0; col < dim_ && row < m.rows; ++row) {
        int piv = -1;
        for (int j = col; j < dim_; ++j)
            if (m.at(row, j)) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        for (int r = 0; r < m.rows; ++r) std::swap(m.a[static_cast<size_t>(r) * dim_ + piv], m.a[static_cast<size_t>(r) * dim_ + col]);
        std::swap(cols[piv], cols[col]);
        for (int j = 0; j < dim_; ++j) {
            if (j == col || !m.at(row, j)) continue;
            for (int r = 0; r < m.rows; ++r) m.at(r, j) ^= m.at(r, col);
            cols[j] = add(cols[j], cols[col]);
        }
        ++col;
    }
    for (int j = 0; j < dim_; ++j) {
        bool zero = true;
        for (int r = 0; r < m.rows && zero; ++r) zero = !m.at(r, j);
        if (!zero) continue;
        // cols[j] spans the kernel; keep the ones independent mod coboundaries.
        F2Vec coords(reps_.size() + 1, 0);
        coords[reps_.size()] = 1;
        if (insert(cols[j], std::move(coords))) reps_.push_back(cols[j]);
    }
}

F2Vec CohomologyBasis::reduce(const F2Vec& cocycle) const {
    if (static_cast<int>(cocycle.size()) != dim_) throw domain_error("reduce: wrong degree");
    if (!is_zero(mul(delta_, cocycle))) throw domain_error("reduce: input is not a cocycle");
    F2Vec v = cocycle;
    F2Vec coords(reps_.size(), 0);
    for (const auto& row : echelon_) {
        if (row.pivot >= 0 && v[row.pivot]) {
            v = add(v, row.vec);
            for (size_t i = 0; i < row.coords.size(); ++i) coords[i] ^= row.coords[i];
        }
    }
    if (!is_zero(v)) throw integrity_error("reduce: cocycle outside the computed span");
    return coords;
}

CohomologyBasis cohomology(const GradedChainComplex& c, int degree) {
    return CohomologyBasis(c, degree);
}

F2Vec bockstein(const GradedChainComplex& c, int degree, const F2Vec& cocycle) {
    if (static_cast<int>(cocycle.size()) != c.dim(degree)) throw domain_error("bockstein: wrong degree");
    ZMat d = c.boundary(degree + 1);  // C_{degree+1} -> C_degree
    // Integral coboundary of the 0/1 lift: (δᾱ)_j = Σ_i d(i,j)·ᾱ_i.
    F2Vec out(d.cols, 0);
    for (int j = 0; j < d.cols; ++j) {
        long long s = 0;
        for (int i = 0; i < d.rows; ++i)
            if (cocycle[i]) s += d.at(i, j);
        if (s % 2 != 0) throw integrity_error("bockstein: input is not an F2 cocycle");
        out[j] = static_cast<uint8_t>((((s / 2) % 2) + 2) % 2);
    }
    return out;
}

}  // namespace cupsq
