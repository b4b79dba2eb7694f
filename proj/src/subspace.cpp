#include "gabi/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace gabi {

int rref_over_k(const FieldTower& tw, std::vector<std::uint32_t>& rows, int n) {
  int m = n == 0 ? 0 : int(rows.size()) / n;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (rows[size_t(r) * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < n; ++j) std::swap(rows[size_t(piv) * n + j], rows[size_t(rank) * n + j]);
    std::uint32_t li = tw.k_inv(rows[size_t(rank) * n + col]);
    for (int j = 0; j < n; ++j)
      rows[size_t(rank) * n + j] = tw.k_mul(rows[size_t(rank) * n + j], li);
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      std::uint32_t f = rows[size_t(r) * n + col];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j)
        rows[size_t(r) * n + j] = tw.k_add(
            rows[size_t(r) * n + j], tw.k_neg(tw.k_mul(f, rows[size_t(rank) * n + j])));
    }
    ++rank;
  }
  rows.resize(size_t(rank) * n);
  return rank;
}

Subspace Subspace::span(const FieldTower& tw, std::span<const Elem> gens) {
  int n = tw.n();
  std::vector<std::uint32_t> rows;
  rows.reserve(gens.size() * size_t(n));
  for (Elem g : gens) {
    auto c = tw.coords(g);
    rows.insert(rows.end(), c.begin(), c.end());
  }
  int rank = rref_over_k(tw, rows, n);
  return Subspace(tw, rank, std::move(rows));
}

Subspace Subspace::from_rows(const FieldTower& tw, int m,
                             std::span<const std::uint32_t> rows_rowmajor) {
  int n = tw.n();
  if (int(rows_rowmajor.size()) != m * n)
    throw std::invalid_argument("Subspace::from_rows: wrong shape");
  std::vector<std::uint32_t> rows(rows_rowmajor.begin(), rows_rowmajor.end());
  for (auto v : rows)
    if (v >= tw.q()) throw std::invalid_argument("Subspace::from_rows: entry out of range");
  int rank = rref_over_k(tw, rows, n);
  if (rank != m) throw std::invalid_argument("Subspace::from_rows: rows are K-dependent");
  return Subspace(tw, rank, std::move(rows));
}

std::vector<Elem> Subspace::basis_elems() const {
  std::vector<Elem> out(m_);
  int n = tw_->n();
  for (int i = 0; i < m_; ++i)
    out[i] = tw_->from_coords(std::span<const std::uint32_t>(rows_.data() + size_t(i) * n, n));
  return out;
}

bool Subspace::contains(Elem x) const {
  int n = tw_->n();
  auto c = tw_->coords(x);
  // reduce against RREF rows
  for (int i = 0; i < m_; ++i) {
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (rows_[size_t(i) * n + j] != 0) {
        piv = j;
        break;
      }
    std::uint32_t f = c[piv];
    if (f == 0) continue;
    for (int j = 0; j < n; ++j)
      c[j] = tw_->k_add(c[j], tw_->k_neg(tw_->k_mul(f, rows_[size_t(i) * n + j])));
  }
  return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v == 0; });
}

std::vector<Elem> Subspace::elements() const {
  auto basis = basis_elems();
  std::vector<Elem> out;
  out.reserve(size_t(1) << m_);  // lower bound; exact for q=2
  std::vector<std::uint32_t> coef(m_, 0);
  std::uint32_t q = tw_->q();
  while (true) {
    Elem x = 0;
    for (int i = 0; i < m_; ++i)
      if (coef[i]) x = tw_->add(x, tw_->mul(tw_->k_elem(coef[i]), basis[i]));
    out.push_back(x);
    int i = 0;
    while (i < m_ && ++coef[i] == q) coef[i++] = 0;
    if (i == m_) break;
  }
  return out;
}

unsigned long long gaussian_binomial(int n, int m, std::uint64_t q) {
  if (m < 0 || m > n) throw std::invalid_argument("gaussian_binomial: need 0 <= m <= n");
  // [n m]_q = prod_{i=1}^m (q^(n-i+1)-1)/(q^i-1), computed as an exact
  // running product over unsigned __int128.
  unsigned __int128 num = 1, den = 1;
  auto qp = [q](int k) {
    unsigned __int128 r = 1;
    while (k--) r *= q;
    return r;
  };
  unsigned __int128 result = 1;
  for (int i = 1; i <= m; ++i) {
    num = qp(n - i + 1) - 1;
    den = qp(i) - 1;
    result = result * num;
    if (result % den != 0) throw std::logic_error("gaussian_binomial: non-integral partial product");
    result /= den;
  }
  if (result > (unsigned __int128)~0ULL)
    throw std::overflow_error("gaussian_binomial: overflow");
  return (unsigned long long)result;
}

std::vector<Subspace> enumerate_subspaces(const FieldTower& tw, int m, std::uint64_t cap) {
  int n = tw.n();
  if (m < 0 || m > n) throw std::invalid_argument("enumerate_subspaces: need 0 <= m <= n");
  if (gaussian_binomial(n, m, tw.q()) > cap)
    throw cap_exceeded("enumerate_subspaces: count exceeds cap");
  std::vector<Subspace> out;
  std::uint32_t q = tw.q();
  // Iterate pivot column sets in lex order, then free entries odometer-style.
  std::vector<int> piv(m);
  for (int i = 0; i < m; ++i) piv[i] = i;
  auto next_comb = [&]() {
    int i = m - 1;
    while (i >= 0 && piv[i] == n - m + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };
  if (m == 0) {
    out.push_back(Subspace::from_rows(tw, 0, {}));
    return out;
  }
  do {
    // free positions: (i, j) with j > piv[i], j not a pivot column
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < m; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(i, j);
    std::vector<std::uint32_t> vals(free_pos.size(), 0);
    while (true) {
      std::vector<std::uint32_t> rows(size_t(m) * n, 0);
      for (int i = 0; i < m; ++i) rows[size_t(i) * n + piv[i]] = 1;
      for (size_t t = 0; t < free_pos.size(); ++t)
        rows[size_t(free_pos[t].first) * n + free_pos[t].second] = vals[t];
      out.push_back(Subspace::from_rows(tw, m, rows));
      size_t t = 0;
      while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
      if (t == vals.size()) break;
    }
  } while (next_comb());
  return out;
}

int largest_linearity_field(const Subspace& U) {
  if (U.dim() < 1) throw std::invalid_argument("largest_linearity_field: dim U >= 1 required");
  const FieldTower& tw = U.tower();
  int n = tw.n();
  auto basis = U.basis_elems();
  for (int t = n; t >= 1; --t) {
    if (n % t != 0 || U.dim() % t != 0) continue;
    bool closed = true;
    for (Elem c : tw.subfield(t)) {
      for (Elem b : basis)
        if (!U.contains(tw.mul(c, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) return t;
  }
  return 1;
}

int smallest_containing_field(const Subspace& U) {
  if (U.dim() < 1) throw std::invalid_argument("smallest_containing_field: dim U >= 1 required");
  const FieldTower& tw = U.tower();
  int n = tw.n();
  auto basis = U.basis_elems();
  for (int t = 1; t <= n; ++t) {
    if (n % t != 0 || U.dim() > t) continue;
    bool contained = true;
    // E of order q^t is the fixed field of x -> x^(q^t); t = n fixes everything.
    for (Elem b : basis)
      if (tw.frobenius(b, t) != b) {
        contained = false;
        break;
      }
    if (contained) return t;
  }
  return n;
}

Subspace scale(const Subspace& U, Elem c) {
  if (c == 0) throw std::invalid_argument("scale: c must be nonzero");
  const FieldTower& tw = U.tower();
  auto basis = U.basis_elems();
  for (auto& b : basis) b = tw.mul(c, b);
  return Subspace::span(tw, basis);
}

Subspace frob_image(const Subspace& U, long long j) {
  const FieldTower& tw = U.tower();
  auto basis = U.basis_elems();
  for (auto& b : basis) b = tw.frobenius(b, j);
  return Subspace::span(tw, basis);
}

}  // namespace gabi
