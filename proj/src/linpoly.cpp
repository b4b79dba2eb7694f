#include "gabi/linpoly.hpp"

#include <stdexcept>

namespace gabi {
namespace {

void check_same_tower(const LinPoly& f, const LinPoly& g) {
  if (f.tw == nullptr || g.tw == nullptr || f.tw != g.tw)
    throw std::invalid_argument("LinPoly: tower mismatch");
}

}  // namespace

LinPoly::LinPoly(const FieldTower& tower, std::vector<Elem> coeffs)
    : tw(&tower), c(std::move(coeffs)) {
  trim();
}

void LinPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

LinPoly LinPoly::monomial(const FieldTower& tower, Elem a, int i) {
  if (i < 0) throw std::invalid_argument("LinPoly::monomial: negative q-degree");
  LinPoly f(tower);
  if (a != 0) {
    f.c.assign(size_t(i) + 1, 0);
    f.c[i] = a;
  }
  return f;
}

Elem eval(const LinPoly& f, Elem x) {
  if (f.tw == nullptr) throw std::invalid_argument("eval: uninitialized LinPoly");
  const FieldTower& tw = *f.tw;
  Elem acc = 0;
  Elem xq = x;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] != 0) acc = tw.add(acc, tw.mul(f.c[i], xq));
    xq = tw.frobenius(xq, 1);
  }
  return acc;
}

LinPoly add(const LinPoly& f, const LinPoly& g) {
  check_same_tower(f, g);
  const FieldTower& tw = *f.tw;
  LinPoly r(tw);
  r.c.resize(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = tw.add(f.coeff(int(i)), g.coeff(int(i)));
  r.trim();
  return r;
}

LinPoly sub(const LinPoly& f, const LinPoly& g) {
  check_same_tower(f, g);
  const FieldTower& tw = *f.tw;
  LinPoly r(tw);
  r.c.resize(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = tw.sub(f.coeff(int(i)), g.coeff(int(i)));
  r.trim();
  return r;
}

LinPoly scale(Elem a, const LinPoly& f) {
  if (f.tw == nullptr) throw std::invalid_argument("scale: uninitialized LinPoly");
  const FieldTower& tw = *f.tw;
  LinPoly r(tw);
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = tw.mul(a, f.c[i]);
  r.trim();
  return r;
}

LinPoly coeff_aut(const LinPoly& f, int rho) {
  if (f.tw == nullptr) throw std::invalid_argument("coeff_aut: uninitialized LinPoly");
  const FieldTower& tw = *f.tw;
  LinPoly r(tw);
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = tw.frobenius_p(f.c[i], rho);
  return r;
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
  check_same_tower(f, g);
  const FieldTower& tw = *f.tw;
  int n = tw.n();
  LinPoly r(tw);
  r.c.assign(size_t(n), 0);
  // (a X^(q^j)) o (b X^(q^i)) = a b^(q^j) X^(q^(i+j mod n))
  for (size_t j = 0; j < f.c.size(); ++j) {
    if (f.c[j] == 0) continue;
    for (size_t i = 0; i < g.c.size(); ++i) {
      if (g.c[i] == 0) continue;
      size_t k = (i + j) % size_t(n);
      r.c[k] = tw.add(r.c[k], tw.mul(f.c[j], tw.frobenius(g.c[i], long(j))));
    }
  }
  r.trim();
  return r;
}

SubspacePoly subspace_poly(const Subspace& U) {
  const FieldTower& tw = U.tower();
  LinPoly theta = LinPoly::identity(tw);  // theta_{0} = X
  for (Elem a : U.basis_elems()) {
    Elem ta = eval(theta, a);
    // theta_{V + <a>} = theta_V^q - theta_V(a)^(q-1) * theta_V
    Elem factor = tw.pow(ta, tw.q() - 1);
    LinPoly next(tw);
    next.c.assign(theta.c.size() + 1, 0);
    for (size_t i = 0; i < theta.c.size(); ++i)
      next.c[i + 1] = tw.pow(theta.c[i], tw.q());
    for (size_t i = 0; i < theta.c.size(); ++i)
      next.c[i] = tw.sub(next.c[i], tw.mul(factor, theta.c[i]));
    next.trim();
    theta = std::move(next);
  }
  return SubspacePoly{U, std::move(theta)};
}

LinPoly reduce_mod(const LinPoly& f, const SubspacePoly& theta) {
  if (f.tw == nullptr || f.tw != theta.poly.tw)
    throw std::invalid_argument("reduce_mod: tower mismatch");
  const FieldTower& tw = *f.tw;
  const LinPoly& th = theta.poly;
  int m = th.qdeg();
  LinPoly r = f;
  while (r.qdeg() >= m) {
    int j = r.qdeg() - m;
    Elem a = r.c.back();
    // subtract (a X^(q^j)) o theta, whose leading term is a X^(q^(m+j))
    for (int i = 0; i <= m; ++i)
      r.c[size_t(i + j)] = tw.sub(r.c[size_t(i + j)], tw.mul(a, tw.frobenius(th.c[size_t(i)], j)));
    r.trim();
  }
  return r;
}

std::uint64_t count_roots(const LinPoly& f) {
  if (f.tw == nullptr) throw std::invalid_argument("count_roots: uninitialized LinPoly");
  const FieldTower& tw = *f.tw;
  if (f.is_zero()) return tw.field_size();
  std::uint64_t cnt = 0;
  for (Elem x = 0; x < tw.field_size(); ++x)
    if (eval(f, x) == 0) ++cnt;
  return cnt;
}

bool is_bijection(const LinPoly& f) {
  return !f.is_zero() && count_roots(f) == 1;
}

}  // namespace gabi
