/**
 * \file homology.hpp
 *
 * Exact linear algebra over ℤ and F2: graded chain complexes, cohomology
 * bases with explicit representatives, class reduction, and the Bockstein
 * homomorphism computed via integer lifts.
 */
#pragma once

#include <vector>

#include "cupsq/burnside.hpp"

namespace cupsq {

/// A non-negatively indexed window of a chain complex: degrees
/// min_deg .. min_deg + dims.size() - 1 with integer differentials.
struct GradedChainComplex {
    int min_deg = 0;
    std::vector<int> dims;
    /// diff[k] maps degree (min_deg + k) to degree (min_deg + k - 1);
    /// diff[0] has zero rows.
    std::vector<ZMat> diff;

    int dim(int degree) const {
        int k = degree - min_deg;
        return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[k];
    }
    /// The boundary matrix out of `degree` (zero-shaped when out of range).
    ZMat boundary(int degree) const;
    /// The mod-2 coboundary C^degree -> C^{degree+1} (transpose of the
    /// boundary into degree+1).
    F2Mat coboundary_f2(int degree) const;
    /// Throws structural_error unless d∘d = 0 over ℤ.
    void check() const;
};

using F2Vec = std::vector<uint8_t>;

F2Vec mul(const F2Mat& m, const F2Vec& v);
F2Vec add(const F2Vec& a, const F2Vec& b);
bool is_zero(const F2Vec& v);

/// A basis of H^degree(C; F2) with explicit cocycle representatives and the
/// elimination data needed to express arbitrary cocycles in coordinates.
class CohomologyBasis {
  public:
    CohomologyBasis(const GradedChainComplex& c, int degree);

    int degree() const { return degree_; }
    int rank() const { return static_cast<int>(reps_.size()); }
    const std::vector<F2Vec>& representatives() const { return reps_; }

    /// Coordinates of the class of `cocycle` in this basis; the zero vector
    /// iff the input is a coboundary.  Throws domain_error on non-cocycles.
    F2Vec reduce(const F2Vec& cocycle) const;

  private:
    int degree_;
    int dim_;
    F2Mat delta_;                 // coboundary out of `degree`
    std::vector<F2Vec> reps_;
    // Row-reduced span of (coboundaries | representatives): each generator
    // is stored with its pivot and the rep-coordinates it carries.
    struct EchelonRow {
        F2Vec vec;
        F2Vec coords;  // length rank(): contribution of representatives
        int pivot;
    };
    std::vector<EchelonRow> echelon_;
};

/// Basis of H^degree over F2 via Gaussian elimination.
CohomologyBasis cohomology(const GradedChainComplex& c, int degree);

/// The Bockstein of an F2 cocycle: lift to a 0/1 integer cochain, take the
/// integral coboundary (necessarily divisible by 2), halve and reduce mod 2.  Returns
/// a cocycle one degree higher.  Throws integrity_error if the coboundary of
/// the lift is not even (the input was not an F2 cocycle).
F2Vec bockstein(const GradedChainComplex& c, int degree, const F2Vec& cocycle);

}  // namespace cupsq
