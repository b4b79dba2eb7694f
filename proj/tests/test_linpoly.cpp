#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gabi/linpoly.hpp"
#include "oracles.hpp"

using namespace gabi;

namespace {

// all linearized polynomials over the tower with q-degree < maxdeg
std::vector<LinPoly> all_polys(const FieldTower& tw, int maxdeg) {
  std::vector<LinPoly> out;
  std::vector<Elem> c(size_t(maxdeg), 0);
  while (true) {
    out.push_back(LinPoly(tw, c));
    size_t i = 0;
    while (i < c.size() && ++c[i] == tw.field_size()) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("evaluation: identity, char-2 cancellation, rank-nullity image size") {
  FieldTower t(2, 1, 4);
  LinPoly X = LinPoly::identity(t);
  for (Elem x = 0; x < t.field_size(); ++x) CHECK(eval(X, x) == x);

  LinPoly f(t, {1, 1});  // X + X^q
  CHECK(eval(f, 1) == 0);
  std::set<Elem> image;
  int kernel = 0;
  for (Elem x = 0; x < t.field_size(); ++x) {
    Elem y = eval(f, x);
    image.insert(y);
    if (y == 0) ++kernel;
  }
  CHECK(image.size() == 8);
  CHECK(kernel == 2);  // {0, 1}
}

TEST_CASE("evaluation is K-linear") {
  FieldTower t(2, 2, 2);
  LinPoly f(t, {5, 9});
  for (Elem x = 0; x < t.field_size(); ++x)
    for (Elem y = 0; y < t.field_size(); ++y)
      CHECK(eval(f, t.add(x, y)) == t.add(eval(f, x), eval(f, y)));
  for (std::uint32_t l = 0; l < t.q(); ++l)
    for (Elem x = 0; x < t.field_size(); ++x)
      CHECK(eval(f, t.mul(t.k_elem(l), x)) == t.mul(t.k_elem(l), eval(f, x)));
}

TEST_CASE("composition: identity, monomial rule, exponent wrap") {
  FieldTower t(2, 1, 4);
  LinPoly X = LinPoly::identity(t);
  LinPoly g(t, {3, 0, 7});
  CHECK(compose(X, g) == g);
  CHECK(compose(g, X) == g);

  // (c X^(q^j)) o (a X^(q^i)) = c a^(q^j) X^(q^((i+j) mod n))
  for (Elem c = 1; c < t.field_size(); ++c)
    for (Elem a = 1; a < t.field_size(); ++a)
      for (int j = 0; j < t.n(); ++j)
        for (int i = 0; i < t.n(); ++i) {
          LinPoly lhs = compose(LinPoly::monomial(t, c, j), LinPoly::monomial(t, a, i));
          LinPoly rhs =
              LinPoly::monomial(t, t.mul(c, t.frobenius(a, j)), (i + j) % t.n());
          CHECK(lhs == rhs);
        }

  // q=2, n=4: X^q o X^(q^3) = X
  CHECK(compose(LinPoly::monomial(t, 1, 1), LinPoly::monomial(t, 1, 3)) == X);
}

TEST_CASE("composition agrees with evaluation and is associative") {
  FieldTower t(2, 1, 3);
  auto polys = all_polys(t, 2);
  for (const auto& f : polys)
    for (const auto& g : polys) {
      LinPoly fg = compose(f, g);
      for (Elem x = 0; x < t.field_size(); ++x) CHECK(eval(fg, x) == eval(f, eval(g, x)));
    }
  // associativity on a sample of triples
  for (size_t i = 0; i < polys.size(); i += 7)
    for (size_t j = 0; j < polys.size(); j += 11)
      for (size_t k = 0; k < polys.size(); k += 13)
        CHECK(compose(polys[i], compose(polys[j], polys[k])) ==
              compose(compose(polys[i], polys[j]), polys[k]));
}

TEST_CASE("subspace polynomials: trivial cases") {
  FieldTower t(2, 1, 4);
  Subspace zero = Subspace::span(t, {});
  CHECK(subspace_poly(zero).poly == LinPoly::identity(t));

  Subspace k_line = Subspace::span(t, std::vector<Elem>{1});
  CHECK(subspace_poly(k_line).poly == LinPoly(t, {1, 1}));  // X^2 + X

  // GF(4)-image inside GF(16): root set of X^(q^2) - X = X^4 + X
  Subspace f4 = Subspace::span(t, t.subfield(2));
  CHECK(subspace_poly(f4).poly == LinPoly(t, {1, 0, 1}));
}

TEST_CASE("subspace polynomial recursion equals the literal product") {
  FieldTower t(2, 1, 4);
  for (int m = 0; m <= 4; ++m)
    for (const Subspace& U : enumerate_subspaces(t, m)) {
      auto theta = subspace_poly(U);
      CHECK(oracles::to_dense(theta.poly) == oracles::subspace_poly_product(U));
      // monic of q-degree m; root set is exactly U
      CHECK(theta.poly.qdeg() == m);
      CHECK(theta.poly.coeff(m) == 1);
      for (Elem x = 0; x < t.field_size(); ++x)
        CHECK((eval(theta.poly, x) == 0) == U.contains(x));
    }
  FieldTower t9(3, 1, 2);
  for (const Subspace& U : enumerate_subspaces(t9, 1))
    CHECK(oracles::to_dense(subspace_poly(U).poly) == oracles::subspace_poly_product(U));
}

TEST_CASE("reduction mod theta_U") {
  FieldTower t(2, 1, 4);
  Subspace f4 = Subspace::span(t, t.subfield(2));
  auto theta = subspace_poly(f4);

  CHECK(reduce_mod(theta.poly, theta).is_zero());
  LinPoly low(t, {5, 9});
  CHECK(reduce_mod(low, theta) == low);  // already reduced
  // X^4 = X^(q^2) reduces to X mod X^4 + X
  CHECK(reduce_mod(LinPoly::monomial(t, 1, 2), theta) == LinPoly::identity(t));

  // residue agrees with f on U, reduction is idempotent and K-linear
  auto polys = all_polys(t, 4);
  for (size_t i = 0; i < polys.size(); i += 97) {
    LinPoly r = reduce_mod(polys[i], theta);
    CHECK(r.qdeg() < 2);
    for (Elem u : f4.elements()) CHECK(eval(r, u) == eval(polys[i], u));
    CHECK(reduce_mod(r, theta) == r);
  }
  for (size_t i = 0; i < polys.size(); i += 131)
    for (size_t j = 0; j < polys.size(); j += 151)
      CHECK(reduce_mod(add(polys[i], polys[j]), theta) ==
            add(reduce_mod(polys[i], theta), reduce_mod(polys[j], theta)));
}

TEST_CASE("pi_U is injective on the low-degree representative system") {
  // q=2, n=4, m=2: distinct polynomials of q-degree < 2 have distinct residues
  FieldTower t(2, 1, 4);
  for (const Subspace& U : enumerate_subspaces(t, 2)) {
    auto theta = subspace_poly(U);
    std::set<LinPoly> residues;
    for (const auto& f : all_polys(t, 2)) residues.insert(reduce_mod(f, theta));
    CHECK(residues.size() == 256);
  }
}

TEST_CASE("root counting and bijectivity") {
  FieldTower t(2, 1, 4);
  CHECK(count_roots(LinPoly::identity(t)) == 1);
  CHECK(count_roots(LinPoly(t, {1, 1})) == t.q());  // X^q - X, kernel = K
  CHECK(count_roots(LinPoly::zero(t)) == t.field_size());
  CHECK(LinPoly::zero(t).is_zero());

  CHECK(is_bijection(LinPoly::identity(t)));
  CHECK_FALSE(is_bijection(LinPoly(t, {1, 1})));
  for (Elem c = 1; c < t.field_size(); ++c)
    for (int j = 0; j < t.n(); ++j) CHECK(is_bijection(LinPoly::monomial(t, c, j)));

  // binomials a0 X + a1 X^(q^s), gcd(s,4)=1, have at most 2 roots
  for (int s : {1, 3})
    for (Elem a0 = 0; a0 < 16; ++a0)
      for (Elem a1 = 0; a1 < 16; ++a1) {
        if (a0 == 0 && a1 == 0) continue;
        LinPoly f(t);
        f.c.assign(size_t(s) + 1, 0);
        f.c[0] = a0;
        f.c[size_t(s)] = a1;
        f.trim();
        CHECK(count_roots(f) <= 2);
      }

  // kernel size is always a power of q
  FieldTower t9(3, 1, 2);
  for (const auto& f : all_polys(t9, 2)) {
    if (f.is_zero()) continue;
    auto r = count_roots(f);
    CHECK((r == 1 || r == 3 || r == 9));
  }
}

TEST_CASE("coefficientwise automorphism") {
  FieldTower t(2, 2, 2);
  LinPoly f(t, {5, 9});
  LinPoly g = coeff_aut(f, 1);
  for (size_t i = 0; i < f.c.size(); ++i) CHECK(g.c[i] == t.frobenius_p(f.c[i], 1));
  // the p-Frobenius on F = GF(16) has order 4
  CHECK(coeff_aut(coeff_aut(coeff_aut(g, 1), 1), 1) == f);
}
