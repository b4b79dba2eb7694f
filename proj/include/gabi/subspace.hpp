// K-subspaces of F in canonical reduced-row-echelon basis form, their
// enumeration, Gaussian binomials, and the two field-of-linearity parameters.

#ifndef GABI_SUBSPACE_HPP
#define GABI_SUBSPACE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gabi/gf.hpp"

namespace gabi {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// Rows are K-index coordinate vectors w.r.t. the tower's fixed K-basis,
// stored in RREF; equality of subspaces is equality of the row matrix.
class Subspace {
 public:
  static Subspace span(const FieldTower& tw, std::span<const Elem> gens);
  // Rows need not be in RREF; they are canonicalized. Dependent rows throw.
  static Subspace from_rows(const FieldTower& tw, int m,
                            std::span<const std::uint32_t> rows_rowmajor);

  const FieldTower& tower() const { return *tw_; }
  int dim() const { return m_; }
  std::uint32_t row(int i, int j) const { return rows_[size_t(i) * tw_->n() + j]; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  // Basis elements of F corresponding to the RREF rows.
  std::vector<Elem> basis_elems() const;
  bool contains(Elem x) const;
  // All q^m elements, in deterministic (coefficient-odometer) order.
  std::vector<Elem> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    return a.rows_ < b.rows_;
  }

 private:
  Subspace(const FieldTower& tw, int m, std::vector<std::uint32_t> rows)
      : tw_(&tw), m_(m), rows_(std::move(rows)) {}
  const FieldTower* tw_;
  int m_;
  std::vector<std::uint32_t> rows_;  // m x n, RREF
};

// All m-dimensional subspaces, deterministic order (pivot pattern, then free
// entries). Throws cap_exceeded if the Gaussian binomial exceeds the cap.
std::vector<Subspace> enumerate_subspaces(const FieldTower& tw, int m,
                                          std::uint64_t cap = kDefaultEnumCap);

unsigned long long gaussian_binomial(int n, int m, std::uint64_t q);

// Largest t (dividing n) with U an E-subspace for E the subfield of order q^t.
int largest_linearity_field(const Subspace& U);
// Smallest t (dividing n) with U contained in the subfield of order q^t.
int smallest_containing_field(const Subspace& U);

Subspace scale(const Subspace& U, Elem c);
Subspace frob_image(const Subspace& U, long long j);

// In-place RREF over K on rows of width n; returns rank. Shared by the
// subspace and rank-metric code paths.
int rref_over_k(const FieldTower& tw, std::vector<std::uint32_t>& rows, int n);

}  // namespace gabi

#endif  // GABI_SUBSPACE_HPP
