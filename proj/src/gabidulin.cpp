#include "gabi/gabidulin.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gabi {
namespace {

std::uint64_t checked_pow(std::uint64_t b, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > cap / b) throw cap_exceeded("parameter size exceeds cap");
    r *= b;
  }
  return r;
}

// K-basis polynomials of G_{k,s}: beta * X^(q^(si)) for beta in the fixed
// K-basis of F, i < k. Spans G_{k,s} over K.
std::vector<LinPoly> code_k_basis(const GabidulinSpec& spec) {
  const FieldTower& tw = *spec.tw;
  std::vector<LinPoly> out;
  out.reserve(size_t(tw.n()) * spec.k);
  for (int i = 0; i < spec.k; ++i) {
    int expn = int((std::int64_t(spec.s) * i) % tw.n());
    for (Elem beta : tw.k_basis()) out.push_back(LinPoly::monomial(tw, beta, expn));
  }
  return out;
}

using ValueTuple = std::vector<Elem>;  // (f(alpha_1), ..., f(alpha_m))

// All q^(nk) value tuples of the code on U's basis, as a sorted set.
std::set<ValueTuple> code_tuple_set(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  int m = spec.m(), k = spec.k;
  checked_pow(tw.field_size(), k, cap);
  auto basis = spec.U.basis_elems();
  // pts[i][j] = alpha_j ^ (q^(si))
  std::vector<std::vector<Elem>> pts(k, std::vector<Elem>(m));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) pts[i][j] = tw.frobenius(basis[j], std::int64_t(spec.s) * i);
  std::set<ValueTuple> out;
  std::vector<Elem> a(k, 0);
  while (true) {
    ValueTuple v(m, 0);
    for (int i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < m; ++j) v[j] = tw.add(v[j], tw.mul(a[i], pts[i][j]));
    }
    out.insert(std::move(v));
    int i = 0;
    while (i < k && ++a[i] == tw.field_size()) a[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace

GabidulinSpec::GabidulinSpec(const FieldTower& tower, int k_, int s_, Subspace U_)
    : tw(&tower), k(k_), s(s_), U(std::move(U_)) {
  if (&U.tower() != tw) throw std::invalid_argument("GabidulinSpec: subspace tower mismatch");
  if (k < 1 || k > tower.n()) throw std::invalid_argument("GabidulinSpec: need 1 <= k <= n");
  if (s < 1) throw std::invalid_argument("GabidulinSpec: need s >= 1");
  if (std::gcd(s, tower.n()) != 1) throw std::invalid_argument("GabidulinSpec: need gcd(s,n)=1");
  if (k > U.dim()) throw std::invalid_argument("GabidulinSpec: need k <= dim U");
}

std::vector<LinPoly> code_polynomials(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  int k = spec.k, n = tw.n();
  checked_pow(tw.field_size(), k, cap);
  SubspacePoly theta = subspace_poly(spec.U);
  std::vector<LinPoly> out;
  std::vector<Elem> a(k, 0);
  while (true) {
    LinPoly f(tw);
    f.c.assign(size_t(n), 0);
    for (int i = 0; i < k; ++i) f.c[size_t((std::int64_t(spec.s) * i) % n)] = a[i];
    f.trim();
    out.push_back(reduce_mod(f, theta));
    int i = 0;
    while (i < k && ++a[i] == tw.field_size()) a[i++] = 0;
    if (i == k) break;
  }
  return out;
}

MatrixCode to_matrix_code(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  int m = spec.m(), n = tw.n(), k = spec.k;
  checked_pow(tw.field_size(), k, cap);
  auto basis = spec.U.basis_elems();
  std::vector<std::vector<Elem>> pts(k, std::vector<Elem>(m));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) pts[i][j] = tw.frobenius(basis[j], std::int64_t(spec.s) * i);
  std::set<std::vector<std::uint32_t>> words;
  std::vector<Elem> a(k, 0);
  while (true) {
    std::vector<std::uint32_t> w(size_t(m) * n);
    for (int j = 0; j < m; ++j) {
      Elem v = 0;
      for (int i = 0; i < k; ++i)
        if (a[i] != 0) v = tw.add(v, tw.mul(a[i], pts[i][j]));
      auto c = tw.coords(v);
      std::copy(c.begin(), c.end(), w.begin() + size_t(j) * n);
    }
    words.insert(std::move(w));
    int i = 0;
    while (i < k && ++a[i] == tw.field_size()) a[i++] = 0;
    if (i == k) break;
  }
  MatrixCode code;
  code.q = tw.q();
  code.m = m;
  code.n = n;
  code.linear = true;
  code.words.assign(words.begin(), words.end());
  return code;
}

int rank_of_word(const FieldTower& tw, const std::vector<std::uint32_t>& word, int n) {
  std::vector<std::uint32_t> rows = word;
  return rref_over_k(tw, rows, n);
}

int rank_distance(const FieldTower& tw, int n, const std::vector<std::uint32_t>& A,
                  const std::vector<std::uint32_t>& B) {
  if (A.size() != B.size()) throw std::invalid_argument("rank_distance: shape mismatch");
  std::vector<std::uint32_t> diff(A.size());
  for (size_t i = 0; i < A.size(); ++i) diff[i] = tw.k_add(A[i], tw.k_neg(B[i]));
  return rank_of_word(tw, diff, n);
}

int min_distance(const FieldTower& tw, const MatrixCode& C) {
  if (C.words.size() < 2) throw std::invalid_argument("min_distance: need at least 2 words");
  int best = C.m + 1;
  if (C.linear) {
    std::vector<std::uint32_t> zero(size_t(C.m) * C.n, 0);
    for (const auto& w : C.words) {
      if (w == zero) continue;
      best = std::min(best, rank_of_word(tw, w, C.n));
    }
  } else {
    for (size_t i = 0; i < C.words.size(); ++i)
      for (size_t j = i + 1; j < C.words.size(); ++j)
        best = std::min(best, rank_distance(tw, C.n, C.words[i], C.words[j]));
  }
  return best;
}

bool is_mrd(const FieldTower& tw, const MatrixCode& C) {
  int d = min_distance(tw, C);
  unsigned __int128 bound = 1;
  for (int i = 0; i < C.n * (C.m - d + 1); ++i) bound *= C.q;
  return (unsigned __int128)C.words.size() == bound;
}

LinPoly interpolate(const FieldTower& tw, const std::vector<Elem>& points,
                    const std::vector<Elem>& values) {
  int m = int(points.size());
  if (int(values.size()) != m) throw std::invalid_argument("interpolate: size mismatch");
  // Moore system: sum_j c_j * points[i]^(q^j) = values[i]
  std::vector<Elem> aug(size_t(m) * (m + 1));
  for (int i = 0; i < m; ++i) {
    Elem xq = points[i];
    for (int j = 0; j < m; ++j) {
      aug[size_t(i) * (m + 1) + j] = xq;
      xq = tw.frobenius(xq, 1);
    }
    aug[size_t(i) * (m + 1) + m] = values[i];
  }
  int w = m + 1;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (aug[size_t(r) * w + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("interpolate: points are K-dependent");
    for (int j = 0; j < w; ++j) std::swap(aug[size_t(piv) * w + j], aug[size_t(col) * w + j]);
    Elem li = tw.inv(aug[size_t(col) * w + col]);
    for (int j = 0; j < w; ++j) aug[size_t(col) * w + j] = tw.mul(aug[size_t(col) * w + j], li);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      Elem f = aug[size_t(r) * w + col];
      if (f == 0) continue;
      for (int j = 0; j < w; ++j)
        aug[size_t(r) * w + j] = tw.sub(aug[size_t(r) * w + j], tw.mul(f, aug[size_t(col) * w + j]));
    }
  }
  LinPoly out(tw);
  out.c.resize(size_t(m));
  for (int j = 0; j < m; ++j) out.c[size_t(j)] = aug[size_t(j) * w + m];
  out.trim();
  return out;
}

Nucleus middle_nucleus_bruteforce(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  int m = spec.m();
  checked_pow(tw.q(), m * m, cap);
  auto basis = spec.U.basis_elems();
  auto tuples = code_tuple_set(spec, cap);
  auto fs = code_k_basis(spec);
  Nucleus nuc;
  nuc.kind = Nucleus::Kind::middle;
  // psi as an m x m matrix over K w.r.t. U's basis: psi(alpha_i) = sum_j M[i][j] alpha_j
  std::vector<std::uint32_t> M(size_t(m) * m, 0);
  while (true) {
    std::vector<Elem> images(m);
    for (int i = 0; i < m; ++i) {
      Elem v = 0;
      for (int j = 0; j < m; ++j)
        if (M[size_t(i) * m + j] != 0)
          v = tw.add(v, tw.mul(tw.k_elem(M[size_t(i) * m + j]), basis[j]));
      images[i] = v;
    }
    bool ok = true;
    for (const LinPoly& f : fs) {
      ValueTuple v(m);
      for (int i = 0; i < m; ++i) v[i] = eval(f, images[i]);
      if (!tuples.count(v)) {
        ok = false;
        break;
      }
    }
    if (ok) nuc.elements.push_back(interpolate(tw, basis, images));
    size_t t = 0;
    while (t < M.size() && ++M[t] == tw.q()) M[t++] = 0;
    if (t == M.size()) break;
  }
  std::sort(nuc.elements.begin(), nuc.elements.end());
  return nuc;
}

Nucleus right_nucleus_bruteforce(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  int m = spec.m(), n = tw.n();
  checked_pow(tw.field_size(), n, cap);  // q^(n^2) candidates
  auto basis = spec.U.basis_elems();
  auto tuples = code_tuple_set(spec, cap);
  auto fs = code_k_basis(spec);
  // yfrob[l][i][j] = (f_l(alpha_i))^(q^j)
  std::vector<std::vector<std::vector<Elem>>> yfrob(fs.size());
  for (size_t l = 0; l < fs.size(); ++l) {
    yfrob[l].assign(size_t(m), std::vector<Elem>(size_t(n)));
    for (int i = 0; i < m; ++i) {
      Elem y = eval(fs[l], basis[i]);
      for (int j = 0; j < n; ++j) {
        yfrob[l][size_t(i)][size_t(j)] = y;
        y = tw.frobenius(y, 1);
      }
    }
  }
  Nucleus nuc;
  nuc.kind = Nucleus::Kind::right;
  std::vector<Elem> c(size_t(n), 0);
  while (true) {
    bool ok = true;
    for (size_t l = 0; l < fs.size() && ok; ++l) {
      ValueTuple v(m);
      for (int i = 0; i < m; ++i) {
        Elem acc = 0;
        for (int j = 0; j < n; ++j)
          if (c[size_t(j)] != 0) acc = tw.add(acc, tw.mul(c[size_t(j)], yfrob[l][size_t(i)][size_t(j)]));
        v[i] = acc;
      }
      if (!tuples.count(v)) ok = false;
    }
    if (ok) {
      LinPoly phi(tw);
      phi.c = c;
      phi.trim();
      nuc.elements.push_back(std::move(phi));
    }
    size_t t = 0;
    while (t < c.size() && ++c[t] == tw.field_size()) c[t++] = 0;
    if (t == c.size()) break;
  }
  std::sort(nuc.elements.begin(), nuc.elements.end());
  return nuc;
}

Nucleus middle_nucleus_formula(const GabidulinSpec& spec) {
  const FieldTower& tw = *spec.tw;
  if (spec.k >= spec.m()) throw std::invalid_argument("middle_nucleus_formula: requires k < m");
  Nucleus nuc;
  nuc.kind = Nucleus::Kind::middle;
  nuc.t = largest_linearity_field(spec.U);
  nuc.r = tw.n() / nuc.t;
  for (Elem c : tw.subfield(nuc.t)) nuc.elements.push_back(LinPoly::monomial(tw, c, 0));
  std::sort(nuc.elements.begin(), nuc.elements.end());
  return nuc;
}

Nucleus right_nucleus_formula(const GabidulinSpec& spec, std::uint64_t cap) {
  const FieldTower& tw = *spec.tw;
  if (spec.k >= spec.m()) throw std::invalid_argument("right_nucleus_formula: requires k < m");
  if (!spec.U.contains(tw.one()))
    throw std::invalid_argument("right_nucleus_formula: requires 1 in U");
  Nucleus nuc;
  nuc.kind = Nucleus::Kind::right;
  nuc.t = smallest_containing_field(spec.U);
  nuc.r = tw.n() / nuc.t;
  checked_pow(tw.field_size(), nuc.r, cap);
  std::vector<Elem> c(size_t(nuc.r), 0);
  while (true) {
    LinPoly phi(tw);
    phi.c.assign(size_t(tw.n()), 0);
    for (int i = 0; i < nuc.r; ++i) phi.c[size_t(i) * nuc.t] = c[size_t(i)];
    phi.trim();
    nuc.elements.push_back(std::move(phi));
    size_t t = 0;
    while (t < c.size() && ++c[t] == tw.field_size()) c[t++] = 0;
    if (t == c.size()) break;
  }
  std::sort(nuc.elements.begin(), nuc.elements.end());
  return nuc;
}

std::pair<Nucleus, Nucleus> nuclei_formula(const GabidulinSpec& spec, std::uint64_t cap) {
  return {middle_nucleus_formula(spec), right_nucleus_formula(spec, cap)};
}

}  // namespace gabi
