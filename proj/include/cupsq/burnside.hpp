/**
 * \file burnside.hpp
 *
 * Finite ordered spans and fibrewise bijections: the ambient (Burnside)
 * category of the whole library.  A span is a diagram  X <- Q -> Y  whose
 * middle set is represented as an ordered list of arrows (x, y); a fibrewise
 * bijection matches the arrows of two spans with equal endpoints.
 * Abelianisation turns a span into the integer (or mod-2) matrix that counts
 * arrows, which is how spans act on chain complexes.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cupsq {

/// Malformed data: endpoints outside declared sets, set mismatches, etc.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency violation: signals a bug, not a user error.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ordered finite set with distinct string identifiers.
class FiniteSet {
  public:
    FiniteSet(std::string name, std::vector<std::string> elements);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::string& element(int i) const { return elements_.at(i); }
    /// Index of an identifier; throws domain_error if absent.
    int index(const std::string& id) const;
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

  private:
    std::string name_;
    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
};

using SetPtr = std::shared_ptr<const FiniteSet>;

SetPtr make_set(std::string name, std::vector<std::string> elements);
/// The ordered product set: elements "(a,b)" in lexicographic order (A major).
SetPtr product_set(const SetPtr& a, const SetPtr& b);

/// An ordered span between two finite sets.  Arrow order is the span order
/// required by ordered objects; composites record per-arrow provenance.
struct Span {
    SetPtr src;
    SetPtr tgt;
    /// (source element index, target element index), in span order.
    std::vector<std::pair<int, int>> arrows;
    /// For composites: per-arrow (f-arrow index, g-arrow index).  Empty for
    /// spans that were not produced by compose().
    std::vector<std::pair<int, int>> parents;

    int size() const { return static_cast<int>(arrows.size()); }
};

/// A fibrewise bijection between two spans with equal endpoints:
/// matching[i] is the arrow of `right` matched with arrow i of `left`.
struct FibBijection {
    std::vector<int> matching;
};

/// Fibre-product composition g∘f; arrow order is lexicographic with the
/// f-arrow (first-applied) index as major key.  Records parents.
Span compose(const Span& g, const Span& f);
/// Concatenation of arrow lists (f first); spans must share endpoints.
Span sum(const Span& f, const Span& g);
/// Pairwise product span on product sets, lexicographic order (f major).
Span product(const Span& f, const Span& g);
Span identity_span(const SetPtr& a);
/// a ↦ (a, a) in A×A.
Span diagonal_span(const SetPtr& a);

/// Dense integer matrix, rows × cols, row-major.  Entries are arrow counts,
/// so machine integers suffice; arithmetic is overflow-checked.
struct ZMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const ZMat&) const = default;
};

/// Dense F2 matrix; entries 0/1 stored as bytes.
struct F2Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    F2Mat() = default;
    F2Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const F2Mat&) const = default;
};

ZMat mul(const ZMat& a, const ZMat& b);
ZMat add(const ZMat& a, const ZMat& b, long long bsign = 1);
F2Mat mul(const F2Mat& a, const F2Mat& b);
F2Mat add(const F2Mat& a, const F2Mat& b);
F2Mat mod2(const ZMat& m);

/// Matrix with entry (y, x) = number of arrows x -> y.
ZMat abelianise_z(const Span& f);
F2Mat abelianise_f2(const Span& f);

/// A span is free when its source map is injective.
bool is_free(const Span& f);
/// Equal ℤ-abelianisations (same sets required).
bool is_equivalent(const Span& f, const Span& g);
/// Equal F2-abelianisations.
bool is_f2_equivalent(const Span& f, const Span& g);

/// Validates that `m` matches arrows of `left` to arrows of `right`
/// fibrewise (equal source and target elements); throws structural_error.
void check_fib_bijection(const Span& left, const Span& right, const FibBijection& m);

}  // namespace cupsq
