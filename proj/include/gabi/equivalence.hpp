// Equivalence of projected Gabidulin codes: the scalar-Frobenius orbit
// criterion, the semilinear brute-force oracle on explicit matrix codes,
// polynomial-form witnesses, and the census table.

#ifndef GABI_EQUIVALENCE_HPP
#define GABI_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gabi/gabidulin.hpp"
#include "gabi/subspace.hpp"

namespace gabi {

struct OrbitClass {
  Subspace representative;  // lexicographically minimal RREF matrix in the orbit
  std::vector<Subspace> members;
  std::uint64_t group_order_used;  // n * (q^n - 1)
};

OrbitClass orbit_of(const Subspace& U);
std::vector<OrbitClass> classify_all(const FieldTower& tw, int m,
                                     std::uint64_t cap = kDefaultEnumCap);

struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Exact >= comparison of an integer with num/den.
bool int_at_least(unsigned long long x, const Rational& r);

// Guaranteed count of pairwise inequivalent projected Gabidulin
// MRD codes: (1/n) * prod_{i=2}^m (q^(n-i+1)-1)/(q^i-1); requires 1 < d <= m <= n.
Rational theorem11_bound(std::uint64_t q, int n, int m, int d);

// Orbit criterion; requires matching (q,n,k,s) and k < m.
bool equivalent_by_theorem(const GabidulinSpec& a, const GabidulinSpec& b);

struct KMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint32_t> a;  // row-major K indices
  static KMatrix identity(int n);
};

struct PolyWitness {
  LinPoly phi2;
  LinPoly phi1;
  int rho = 0;
};

struct EquivalenceWitness {
  KMatrix A;  // m x m, invertible
  KMatrix B;  // n x n, invertible
  int rho = 0;
  bool transpose = false;
  std::optional<PolyWitness> poly_form;
};

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t(1) << 30;

// Exhaustive semilinear-equivalence search: first witness in lexicographic order
// over A, then B, then rho, then the transpose branch (m = n only).
// jobs > 1 splits the A-range across threads; the returned witness is the
// lexicographically first either way.
std::optional<EquivalenceWitness> equivalent_bruteforce(
    const FieldTower& tw, const MatrixCode& C1, const MatrixCode& C2,
    std::uint64_t cap = kDefaultSearchCap, int jobs = 1);

// Checks the three polynomial-form conditions: phi1(W) = U, phi2 bijective
// on F, and the reduced-set equality mod theta_W.
bool verify_witness_poly(const EquivalenceWitness& w, const GabidulinSpec& spec_u,
                         const GabidulinSpec& spec_w);

struct CensusRow {
  std::uint64_t q;
  int n, m, k, d;
  unsigned long long subspaces = 0;
  long long orbits = -1;  // -1: not computed (infeasible cell)
  Rational bound;         // 0/1 when inapplicable
  // "true"/"false" when the orbit-count lower bound applies, "na" otherwise
  std::string bound_satisfied = "na";
  std::string note;
};

std::vector<CensusRow> census(const FieldTower& tw, const std::vector<int>& ms,
                              const std::vector<int>& ks,
                              std::uint64_t cap = kDefaultEnumCap);

}  // namespace gabi

#endif  // GABI_EQUIVALENCE_HPP
