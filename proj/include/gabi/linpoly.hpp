// K-linearized polynomials sum c_i X^(q^i) with coefficients in F:
// evaluation, composition mod X^(q^n) - X, subspace polynomials and
// reduction modulo them, root counting.

#ifndef GABI_LINPOLY_HPP
#define GABI_LINPOLY_HPP

#include <cstdint>
#include <vector>

#include "gabi/gf.hpp"
#include "gabi/subspace.hpp"

namespace gabi {

struct LinPoly {
  const FieldTower* tw = nullptr;
  std::vector<Elem> c;  // c[i] multiplies X^(q^i); trailing zeros trimmed

  LinPoly() = default;
  explicit LinPoly(const FieldTower& tower) : tw(&tower) {}
  LinPoly(const FieldTower& tower, std::vector<Elem> coeffs);

  bool is_zero() const { return c.empty(); }
  int qdeg() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  Elem coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : 0; }
  void trim();

  static LinPoly zero(const FieldTower& tower) { return LinPoly(tower); }
  static LinPoly identity(const FieldTower& tower) { return monomial(tower, 1, 0); }
  // a * X^(q^i)
  static LinPoly monomial(const FieldTower& tower, Elem a, int i);

  friend bool operator==(const LinPoly& f, const LinPoly& g) {
    return f.tw == g.tw && f.c == g.c;
  }
  friend bool operator<(const LinPoly& f, const LinPoly& g) { return f.c < g.c; }
};

struct SubspacePoly {
  Subspace base;
  LinPoly poly;  // theta_U: monic, q-degree dim U, root set exactly U
};

Elem eval(const LinPoly& f, Elem x);
LinPoly add(const LinPoly& f, const LinPoly& g);
LinPoly sub(const LinPoly& f, const LinPoly& g);
LinPoly scale(Elem a, const LinPoly& f);
// Coefficientwise x -> x^(p^rho); realizes f^rho for rho in Aut(K) extended
// to F by the p-power Frobenius.
LinPoly coeff_aut(const LinPoly& f, int rho);
// Symbolic f(g(X)) reduced mod X^(q^n) - X (exponents wrap mod n).
LinPoly compose(const LinPoly& f, const LinPoly& g);

// theta_U via the recursion theta_{U+<a>} = theta_U^q - theta_U(a)^(q-1) theta_U.
SubspacePoly subspace_poly(const Subspace& U);

// Canonical representative of f + (theta): q-degree < dim U, equal to f on U.
LinPoly reduce_mod(const LinPoly& f, const SubspacePoly& theta);

// Number of roots in F; q^n for the zero polynomial (callers can test
// is_zero() when they need to distinguish).
std::uint64_t count_roots(const LinPoly& f);
bool is_bijection(const LinPoly& f);

}  // namespace gabi

#endif  // GABI_LINPOLY_HPP
