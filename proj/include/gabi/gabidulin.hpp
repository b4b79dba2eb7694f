// Projected Gabidulin codes pi_U(G_{k,s}): construction as polynomial
// residues and explicit matrix codes, MRD verification, and nuclei by
// brute force and by formula.

#ifndef GABI_GABIDULIN_HPP
#define GABI_GABIDULIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gabi/gf.hpp"
#include "gabi/linpoly.hpp"
#include "gabi/subspace.hpp"

namespace gabi {

inline constexpr std::uint64_t kDefaultCodeCap = std::uint64_t(1) << 22;

struct GabidulinSpec {
  const FieldTower* tw;
  int k;
  int s;
  Subspace U;

  GabidulinSpec(const FieldTower& tower, int k_, int s_, Subspace U_);
  int m() const { return U.dim(); }
};

// Explicit rank-metric code: words are m x n matrices over K, entries as
// K indices, row-major, sorted (deterministic set order).
struct MatrixCode {
  std::uint32_t q;
  int m, n;
  bool linear;
  std::vector<std::vector<std::uint32_t>> words;
};

struct Nucleus {
  enum class Kind { middle, right };
  Kind kind;
  // Middle: residues mod theta_U (q-degree < m). Right: residues mod
  // X^(q^n) - X. Sorted by coefficient vectors.
  std::vector<LinPoly> elements;
  int t = 0;  // subfield parameter when produced by the formula, else 0
  int r = 0;
};

// All q^(nk) code polynomials reduced mod theta_U, in coefficient-odometer
// order over (a_0, ..., a_{k-1}).
std::vector<LinPoly> code_polynomials(const GabidulinSpec& spec,
                                      std::uint64_t cap = kDefaultCodeCap);

MatrixCode to_matrix_code(const GabidulinSpec& spec, std::uint64_t cap = kDefaultCodeCap);

int rank_of_word(const FieldTower& tw, const std::vector<std::uint32_t>& word, int n);
// rk(A - B) for two m x n words over K.
int rank_distance(const FieldTower& tw, int n, const std::vector<std::uint32_t>& A,
                  const std::vector<std::uint32_t>& B);
int min_distance(const FieldTower& tw, const MatrixCode& C);
bool is_mrd(const FieldTower& tw, const MatrixCode& C);

Nucleus middle_nucleus_bruteforce(const GabidulinSpec& spec,
                                  std::uint64_t cap = kDefaultCodeCap);
Nucleus right_nucleus_bruteforce(const GabidulinSpec& spec,
                                 std::uint64_t cap = kDefaultCodeCap);

// Closed forms via the subfield parameters of U; requires k < m <= n, and 1 in U for the right
// nucleus.
Nucleus middle_nucleus_formula(const GabidulinSpec& spec);
Nucleus right_nucleus_formula(const GabidulinSpec& spec, std::uint64_t cap = kDefaultCodeCap);
std::pair<Nucleus, Nucleus> nuclei_formula(const GabidulinSpec& spec,
                                           std::uint64_t cap = kDefaultCodeCap);

// The unique linearized polynomial of q-degree < m taking the given values
// on the given K-linearly independent points (Moore-matrix interpolation).
LinPoly interpolate(const FieldTower& tw, const std::vector<Elem>& points,
                    const std::vector<Elem>& values);

}  // namespace gabi

#endif  // GABI_GABIDULIN_HPP
