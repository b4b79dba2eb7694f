#include "gabi/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace gabi {
namespace {

std::uint64_t pow_u64_capped(std::uint64_t b, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (b != 0 && r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

// All invertible r x r matrices over K, in lex order of the row-major entry
// vector.
std::vector<KMatrix> enumerate_gl(const FieldTower& tw, int r) {
  std::vector<KMatrix> out;
  std::uint32_t q = tw.q();
  std::vector<std::uint32_t> a(size_t(r) * r, 0);
  while (true) {
    std::vector<std::uint32_t> copy = a;
    if (rref_over_k(tw, copy, r) == r) {
      KMatrix M;
      M.rows = M.cols = r;
      M.a = a;
      out.push_back(std::move(M));
    }
    // odometer with the *last* entry fastest, so increasing step order is
    // lex order on the row-major vector
    int t = r * r - 1;
    while (t >= 0 && ++a[size_t(t)] == q) a[size_t(t--)] = 0;
    if (t < 0) break;
  }
  return out;
}

using Word = std::vector<std::uint32_t>;

Word mat_mul(const FieldTower& tw, const Word& A, int ar, int ac, const Word& B, int bc) {
  Word out(size_t(ar) * bc, 0);
  for (int i = 0; i < ar; ++i)
    for (int l = 0; l < ac; ++l) {
      std::uint32_t v = A[size_t(i) * ac + l];
      if (v == 0) continue;
      for (int j = 0; j < bc; ++j) {
        std::uint32_t b = B[size_t(l) * bc + j];
        if (b != 0)
          out[size_t(i) * bc + j] = tw.k_add(out[size_t(i) * bc + j], tw.k_mul(v, b));
      }
    }
  return out;
}

Word transpose_word(const Word& w, int m, int n) {
  Word out(w.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out[size_t(j) * m + i] = w[size_t(i) * n + j];
  return out;
}

Word apply_aut(const FieldTower& tw, const Word& w, int rho) {
  if (rho == 0) return w;
  Word out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = tw.k_aut(w[i], rho);
  return out;
}

// K-basis words of a linear code (RREF of word vectors), or all words for a
// nonlinear one. Mapping a basis into the target suffices for linear codes
// since the semilinear equivalence maps are additive bijections.
std::vector<Word> probe_words(const FieldTower& tw, const MatrixCode& C) {
  if (!C.linear) return C.words;
  std::vector<std::uint32_t> flat;
  int w = C.m * C.n;
  for (const auto& word : C.words) flat.insert(flat.end(), word.begin(), word.end());
  int rank = rref_over_k(tw, flat, w);
  std::vector<Word> basis(rank);
  for (int i = 0; i < rank; ++i)
    basis[size_t(i)] = Word(flat.begin() + size_t(i) * w, flat.begin() + size_t(i + 1) * w);
  return basis;
}

std::vector<int> rank_distribution(const FieldTower& tw, const MatrixCode& C) {
  std::vector<int> dist(size_t(std::min(C.m, C.n)) + 1, 0);
  for (const auto& w : C.words) ++dist[size_t(rank_of_word(tw, w, C.n))];
  return dist;
}

// |{M in K^(m x m) : M * C subset of C}|, the matrix-side middle nucleus
// order, a cheap equivalence invariant used for pruning.
std::uint64_t matrix_middle_order(const FieldTower& tw, const MatrixCode& C,
                                  const std::vector<Word>& basis) {
  std::uint64_t count = 0;
  std::uint32_t q = tw.q();
  std::vector<std::uint32_t> M(size_t(C.m) * C.m, 0);
  while (true) {
    bool ok = true;
    for (const Word& w : basis) {
      Word y = mat_mul(tw, M, C.m, C.m, w, C.n);
      if (!std::binary_search(C.words.begin(), C.words.end(), y)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    size_t t = 0;
    while (t < M.size() && ++M[t] == q) M[t++] = 0;
    if (t == M.size()) break;
  }
  return count;
}

struct SearchHit {
  size_t ai, bi;
  int rho;
  bool transpose;
  bool operator<(const SearchHit& o) const {
    return std::tie(ai, bi, rho, transpose) < std::tie(o.ai, o.bi, o.rho, o.transpose);
  }
};

}  // namespace

KMatrix KMatrix::identity(int n) {
  KMatrix M;
  M.rows = M.cols = n;
  M.a.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) M.a[size_t(i) * n + i] = 1;
  return M;
}

OrbitClass orbit_of(const Subspace& U) {
  const FieldTower& tw = U.tower();
  std::set<Subspace> members;
  for (int j = 0; j < tw.n(); ++j) {
    Subspace V = frob_image(U, j);
    for (Elem c = 1; c < tw.field_size(); ++c) members.insert(scale(V, c));
  }
  OrbitClass oc{*members.begin(), {members.begin(), members.end()},
                std::uint64_t(tw.n()) * (tw.field_size() - 1)};
  return oc;
}

std::vector<OrbitClass> classify_all(const FieldTower& tw, int m, std::uint64_t cap) {
  auto all = enumerate_subspaces(tw, m, cap);
  std::set<Subspace> visited;
  std::vector<OrbitClass> out;
  for (const Subspace& U : all) {
    if (visited.count(U)) continue;
    OrbitClass oc = orbit_of(U);
    visited.insert(oc.members.begin(), oc.members.end());
    out.push_back(std::move(oc));
  }
  return out;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool int_at_least(unsigned long long x, const Rational& r) {
  if (r.num <= 0) return true;
  return (unsigned __int128)x * (unsigned long long)r.den >= (unsigned long long)r.num;
}

Rational theorem11_bound(std::uint64_t q, int n, int m, int d) {
  if (d <= 1 || d > m || m > n) throw std::invalid_argument("theorem11_bound: need 1 < d <= m <= n");
  long long num = 1, den = n;
  auto qp = [q](int k) {
    long long r = 1;
    while (k--) r *= (long long)q;
    return r;
  };
  for (int i = 2; i <= m; ++i) {
    num *= qp(n - i + 1) - 1;
    den *= qp(i) - 1;
  }
  return Rational(num, den);
}

bool equivalent_by_theorem(const GabidulinSpec& a, const GabidulinSpec& b) {
  if (a.tw != b.tw) throw std::invalid_argument("equivalent_by_theorem: tower mismatch");
  if (a.k != b.k || a.s != b.s)
    throw std::invalid_argument("equivalent_by_theorem: (k,s) mismatch, theorem inapplicable");
  if (a.m() != b.m()) throw std::invalid_argument("equivalent_by_theorem: dim mismatch");
  if (a.k >= a.m())
    throw std::invalid_argument("equivalent_by_theorem: requires k < m");
  return orbit_of(a.U).representative == orbit_of(b.U).representative;
}

std::optional<EquivalenceWitness> equivalent_bruteforce(const FieldTower& tw,
                                                        const MatrixCode& C1,
                                                        const MatrixCode& C2,
                                                        std::uint64_t cap, int jobs) {
  if (C1.m != C2.m || C1.n != C2.n || C1.q != C2.q)
    throw std::invalid_argument("equivalent_bruteforce: shape mismatch");
  if (C1.words.size() != C2.words.size()) return std::nullopt;
  int m = C1.m, n = C1.n;
  std::uint64_t ca = pow_u64_capped(tw.q(), m * m, cap);
  std::uint64_t cb = pow_u64_capped(tw.q(), n * n, cap);
  if (ca > cap || cb > cap || ca > cap / cb ||
      ca * cb > cap / std::uint64_t(tw.e()))
    throw cap_exceeded("equivalent_bruteforce: search space exceeds cap");

  // invariant prefilters: necessary conditions for equivalence
  if (rank_distribution(tw, C1) != rank_distribution(tw, C2)) return std::nullopt;
  auto basis1 = probe_words(tw, C1);
  auto basis2 = probe_words(tw, C2);
  if (C1.linear && C2.linear && basis1.size() != basis2.size()) return std::nullopt;
  if (C1.linear && C2.linear && m != n &&
      matrix_middle_order(tw, C1, basis1) != matrix_middle_order(tw, C2, basis2))
    return std::nullopt;

  auto As = enumerate_gl(tw, m);
  auto Bs = enumerate_gl(tw, n);
  int aut_count = tw.e();
  bool try_transpose = (m == n);

  auto try_one = [&](size_t ai, size_t bi, int rho, bool transpose) {
    for (const Word& w0 : basis1) {
      Word w = transpose ? transpose_word(w0, m, n) : w0;
      w = apply_aut(tw, w, rho);
      Word y = mat_mul(tw, As[ai].a, m, m, mat_mul(tw, w, m, n, Bs[bi].a, n), n);
      if (!std::binary_search(C2.words.begin(), C2.words.end(), y)) return false;
    }
    return true;
  };

  std::optional<SearchHit> found;
  if (jobs <= 1) {
    for (size_t ai = 0; ai < As.size() && !found; ++ai)
      for (size_t bi = 0; bi < Bs.size() && !found; ++bi)
        for (int rho = 0; rho < aut_count && !found; ++rho)
          for (int tr = 0; tr <= (try_transpose ? 1 : 0) && !found; ++tr)
            if (try_one(ai, bi, rho, tr != 0)) found = SearchHit{ai, bi, rho, tr != 0};
  } else {
    std::atomic<size_t> best_ai{As.size()};
    std::vector<std::optional<SearchHit>> hits(static_cast<size_t>(jobs));
    std::vector<std::thread> pool;
    size_t chunk = (As.size() + size_t(jobs) - 1) / size_t(jobs);
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        size_t lo = size_t(t) * chunk, hi = std::min(As.size(), lo + chunk);
        for (size_t ai = lo; ai < hi; ++ai) {
          if (ai > best_ai.load(std::memory_order_relaxed)) return;
          for (size_t bi = 0; bi < Bs.size(); ++bi)
            for (int rho = 0; rho < aut_count; ++rho)
              for (int tr = 0; tr <= (try_transpose ? 1 : 0); ++tr)
                if (try_one(ai, bi, rho, tr != 0)) {
                  hits[size_t(t)] = SearchHit{ai, bi, rho, tr != 0};
                  size_t cur = best_ai.load();
                  while (ai < cur && !best_ai.compare_exchange_weak(cur, ai)) {
                  }
                  return;
                }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& h : hits)
      if (h && (!found || *h < *found)) found = h;
  }
  if (!found) return std::nullopt;
  EquivalenceWitness w;
  w.A = As[found->ai];
  w.B = Bs[found->bi];
  w.rho = found->rho;
  w.transpose = found->transpose;
  return w;
}

bool verify_witness_poly(const EquivalenceWitness& w, const GabidulinSpec& spec_u,
                         const GabidulinSpec& spec_w) {
  if (!w.poly_form) throw std::invalid_argument("verify_witness_poly: poly_form missing");
  const FieldTower& tw = *spec_u.tw;
  if (spec_w.tw != spec_u.tw) throw std::invalid_argument("verify_witness_poly: tower mismatch");
  const LinPoly& phi1 = w.poly_form->phi1;
  const LinPoly& phi2 = w.poly_form->phi2;
  int rho = w.poly_form->rho;

  // (a) phi1(W) = U
  auto wbasis = spec_w.U.basis_elems();
  std::vector<Elem> images(wbasis.size());
  for (size_t i = 0; i < wbasis.size(); ++i) images[i] = eval(phi1, wbasis[i]);
  if (!(Subspace::span(tw, images) == spec_u.U)) return false;

  // (b) phi2(F) = F
  if (!is_bijection(phi2)) return false;

  // (c) {pi_W(phi2 o f^rho o phi1) : f in C1} = {pi_W(g) : g in C2},
  // compared as value tuples on W's basis.
  int mw = spec_w.m();
  int n = tw.n();
  std::vector<Elem> x(mw);
  for (int i = 0; i < mw; ++i) x[size_t(i)] = eval(phi1, wbasis[size_t(i)]);
  // xfrob[jj][i] = x_i ^ (q^(s1*jj))
  std::vector<std::vector<Elem>> xfrob(size_t(spec_u.k), std::vector<Elem>(size_t(mw)));
  for (int jj = 0; jj < spec_u.k; ++jj)
    for (int i = 0; i < mw; ++i)
      xfrob[size_t(jj)][size_t(i)] = tw.frobenius(x[size_t(i)], std::int64_t(spec_u.s) * jj);
  std::set<std::vector<Elem>> lhs;
  std::vector<Elem> a(size_t(spec_u.k), 0);
  while (true) {
    std::vector<Elem> v(size_t(mw), 0);
    for (int i = 0; i < mw; ++i) {
      Elem acc = 0;
      for (int jj = 0; jj < spec_u.k; ++jj)
        if (a[size_t(jj)] != 0)
          acc = tw.add(acc, tw.mul(tw.frobenius_p(a[size_t(jj)], rho), xfrob[size_t(jj)][size_t(i)]));
      v[size_t(i)] = eval(phi2, acc);
    }
    lhs.insert(std::move(v));
    size_t t = 0;
    while (t < a.size() && ++a[t] == tw.field_size()) a[t++] = 0;
    if (t == a.size()) break;
  }
  // rhs: value tuples of C2 = G_{k2,s2} on W's basis
  std::set<std::vector<Elem>> rhs;
  std::vector<std::vector<Elem>> pts(size_t(spec_w.k), std::vector<Elem>(size_t(mw)));
  for (int jj = 0; jj < spec_w.k; ++jj)
    for (int i = 0; i < mw; ++i)
      pts[size_t(jj)][size_t(i)] = tw.frobenius(wbasis[size_t(i)], std::int64_t(spec_w.s) * jj);
  std::vector<Elem> b(size_t(spec_w.k), 0);
  while (true) {
    std::vector<Elem> v(size_t(mw), 0);
    for (int jj = 0; jj < spec_w.k; ++jj)
      if (b[size_t(jj)] != 0)
        for (int i = 0; i < mw; ++i)
          v[size_t(i)] = tw.add(v[size_t(i)], tw.mul(b[size_t(jj)], pts[size_t(jj)][size_t(i)]));
    rhs.insert(std::move(v));
    size_t t = 0;
    while (t < b.size() && ++b[t] == tw.field_size()) b[t++] = 0;
    if (t == b.size()) break;
  }
  (void)n;
  return lhs == rhs;
}

std::vector<CensusRow> census(const FieldTower& tw, const std::vector<int>& ms,
                              const std::vector<int>& ks, std::uint64_t cap) {
  std::vector<CensusRow> rows;
  for (int m : ms) {
    if (m < 1 || m > tw.n()) continue;
    unsigned long long nsub = gaussian_binomial(tw.n(), m, tw.q());
    long long orbits = -1;
    std::string note;
    if (nsub <= cap) {
      orbits = (long long)classify_all(tw, m, cap).size();
    } else {
      note = "enumeration infeasible; bound-only row";
    }
    for (int k : ks) {
      if (k < 1 || k > m) continue;
      CensusRow row;
      row.q = tw.q();
      row.n = tw.n();
      row.m = m;
      row.k = k;
      row.d = m - k + 1;
      row.subspaces = nsub;
      row.orbits = orbits;
      row.note = note;
      if (k < m && row.d > 1) {
        row.bound = theorem11_bound(tw.q(), tw.n(), m, row.d);
        if (orbits >= 0)
          row.bound_satisfied = int_at_least((unsigned long long)orbits, row.bound) ? "true" : "false";
        else
          row.bound_satisfied = "na";
      } else {
        row.bound = Rational(0, 1);
        row.bound_satisfied = "na";
        row.note = row.note.empty() ? "d=1: lower bound inapplicable (k=m)" : row.note;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace gabi
