#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gabi/gf.hpp"

using namespace gabi;

TEST_CASE("tower parameters and cardinalities") {
  FieldTower t(2, 1, 4);
  CHECK(t.q() == 2);
  CHECK(t.field_size() == 16);
  CHECK(t.ext_degree() == 4);

  FieldTower deg(2, 1, 1);
  CHECK(deg.field_size() == 2);
  CHECK(deg.q() == 2);

  CHECK_THROWS_AS(FieldTower(4, 1, 2), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(FieldTower(2, 1, 30), cap_exceeded);
}

TEST_CASE("modulus is the lex-smallest monic irreducible") {
  // degree 4 over GF(2): X^4+X^3+1 precedes X^4+X+1 in lex order on
  // (c_0, ..., c_3)
  FieldTower t(2, 1, 4);
  CHECK(t.modulus() == std::vector<int>{1, 0, 0, 1, 1});
  // degree 1: X itself
  FieldTower d(2, 1, 1);
  CHECK(d.modulus() == std::vector<int>{0, 1});
}

TEST_CASE("K-image of GF(4) inside GF(16) is closed under arithmetic") {
  FieldTower t(2, 2, 2);
  CHECK(t.q() == 4);
  CHECK(t.field_size() == 16);
  std::set<Elem> K;
  for (Elem x = 0; x < 16; ++x)
    if (t.in_k(x)) K.insert(x);
  CHECK(K.size() == 4);
  for (Elem a : K)
    for (Elem b : K) {
      CHECK(K.count(t.add(a, b)) == 1);
      CHECK(K.count(t.mul(a, b)) == 1);
    }
  // fixed field of x -> x^q is exactly K
  for (Elem x = 0; x < 16; ++x) CHECK((t.frobenius(x, 1) == x) == (K.count(x) == 1));
}

TEST_CASE("field axioms, exhaustively at small scale") {
  FieldTower t(2, 1, 4);
  for (Elem x = 0; x < t.field_size(); ++x) {
    CHECK(t.add(x, x) == 0);  // char 2
    if (x != 0) CHECK(t.mul(x, t.inv(x)) == 1);
    CHECK(t.pow(x, t.field_size()) == x);  // x^(q^n) = x
  }
  CHECK_THROWS_AS(t.inv(0), std::domain_error);
  // associativity + distributivity spot-check over all triples
  FieldTower t3(3, 1, 2);
  for (Elem a = 0; a < t3.field_size(); ++a)
    for (Elem b = 0; b < t3.field_size(); ++b) {
      CHECK(t3.add(a, b) == t3.add(b, a));
      CHECK(t3.mul(a, b) == t3.mul(b, a));
      for (Elem c = 0; c < t3.field_size(); ++c)
        CHECK(t3.mul(a, t3.add(b, c)) == t3.add(t3.mul(a, b), t3.mul(a, c)));
    }
}

TEST_CASE("generator has full multiplicative order") {
  FieldTower t(2, 1, 4);
  Elem g = t.generator();
  // order found by exhaustive computation
  int order = 1;
  Elem x = g;
  while (x != 1) {
    x = t.mul(x, g);
    ++order;
  }
  CHECK(order == 15);
  CHECK(t.mul(g, t.pow(g, 14)) == 1);
}

TEST_CASE("frobenius basics") {
  FieldTower t(2, 1, 4);
  for (Elem a = 0; a < t.field_size(); ++a) {
    CHECK(t.frobenius(a, 0) == a);
    CHECK(t.frobenius(t.frobenius(a, 1), t.n() - 1) == a);
    CHECK(t.frobenius(a, t.n()) == a);
    CHECK(t.frobenius(a, 1) == t.mul(a, a));  // q = 2
  }
  CHECK(t.frobenius(1, 3) == 1);
}

TEST_CASE("frobenius is K-linear and fixes exactly K") {
  FieldTower t(2, 2, 2);
  int fixed = 0;
  for (Elem a = 0; a < t.field_size(); ++a) {
    if (t.frobenius(a, 1) == a) ++fixed;
    for (Elem b = 0; b < t.field_size(); ++b)
      CHECK(t.frobenius(t.add(a, b), 1) == t.add(t.frobenius(a, 1), t.frobenius(b, 1)));
    for (std::uint32_t l = 0; l < t.q(); ++l) {
      Elem lam = t.k_elem(l);
      CHECK(t.frobenius(t.mul(lam, a), 1) == t.mul(lam, t.frobenius(a, 1)));
    }
  }
  CHECK(fixed == 4);
}

TEST_CASE("enumeration and cube-root count in GF(16)") {
  FieldTower t(2, 1, 4);
  int count = 0;
  for (Elem x = 0; x < t.field_size(); ++x)
    if (t.pow(x, 3) == 1) ++count;
  CHECK(count == 3);  // gcd(3, 15) = 3

  FieldTower d(2, 1, 1);
  CHECK(d.field_size() == 2);
}

TEST_CASE("coordinates w.r.t. the fixed K-basis round-trip") {
  FieldTower t(3, 1, 3);
  CHECK(t.k_basis().size() == 3);
  CHECK(t.k_basis()[0] == 1);
  for (Elem a = 0; a < t.field_size(); ++a) {
    auto c = t.coords(a);
    CHECK(t.from_coords(c) == a);
  }
}

TEST_CASE("repr round-trip and FFElem wrapper") {
  FieldTower t(2, 1, 4);
  for (Elem a = 0; a < t.field_size(); ++a) {
    auto r = t.repr(a);
    CHECK(t.from_repr(r) == a);
  }
  FFElem x(t, 3), y(t, 7);
  CHECK((x * y).index() == t.mul(3, 7));
  FieldTower other(2, 1, 3);
  FFElem z(other, 1);
  CHECK_THROWS_AS((void)(x + z), std::invalid_argument);
}

TEST_CASE("subfields of GF(2^4)") {
  FieldTower t(2, 1, 4);
  auto f2 = t.subfield(1);
  CHECK(f2 == std::vector<Elem>{0, 1});
  auto f4 = t.subfield(2);
  CHECK(f4.size() == 4);
  for (Elem x : f4) CHECK(t.frobenius(x, 2) == x);
  CHECK(t.subfield(4).size() == 16);
  CHECK_THROWS_AS(t.subfield(3), std::invalid_argument);
}

TEST_CASE("Aut(K) action for q = 4") {
  FieldTower t(2, 2, 2);
  for (std::uint32_t a = 0; a < t.q(); ++a) {
    CHECK(t.k_aut(a, 0) == a);
    // p-Frobenius squared is the identity on GF(4)
    CHECK(t.k_aut(t.k_aut(a, 1), 1) == a);
  }
}
