#include "gabi/gf.hpp"

#include <algorithm>
#include <cassert>

namespace gabi {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense GF(p)[x] helpers used only during tower construction.
using Poly = std::vector<int>;  // low degree first, no trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  // f monic
  while (a.size() >= f.size()) {
    int c = a.back();
    size_t shift = a.size() - f.size();
    if (c != 0)
      for (size_t i = 0; i < f.size(); ++i)
        a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
    a.pop_back();
    trim(a);
    if (a.size() < f.size()) break;
  }
  trim(a);
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  // extended Euclid on integers mod p
  auto inv_mod = [p](int x) {
    int t = 0, newt = 1, rr = p, newr = ((x % p) + p) % p;
    while (newr != 0) {
      int qq = rr / newr;
      int tmp = t - qq * newt;
      t = newt;
      newt = tmp;
      tmp = rr - qq * newr;
      rr = newr;
      newr = tmp;
    }
    return ((t % p) + p) % p;
  };
  while (!b.empty()) {
    // make b monic so poly_mod applies
    Poly bm = b;
    int lead = bm.back();
    if (lead != 1) {
      int li = inv_mod(lead);
      for (auto& c : bm) c = c * li % p;
    }
    Poly r = poly_mod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t u64_pow(std::uint64_t b, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  // f monic of degree d: irreducible iff x^(p^d) == x (mod f) and
  // gcd(x^(p^(d/l)) - x, f) == 1 for each prime l | d.
  int d = int(f.size()) - 1;
  Poly x{0, 1};
  Poly xp = poly_powmod(x, u64_pow(p, d), f, p);
  if (xp != poly_mod(x, f, p)) return false;
  int m = d;
  for (int l = 2; l * l <= m; ++l) {
    if (m % l) continue;
    while (m % l == 0) m /= l;
    Poly t = poly_powmod(x, u64_pow(p, d / l), f, p);
    // t - x
    Poly diff = t;
    diff.resize(std::max(diff.size(), size_t(2)), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (int(g.size()) - 1 != 0) return false;
  }
  if (m > 1) {
    Poly t = poly_powmod(x, u64_pow(p, d / m), f, p);
    Poly diff = t;
    diff.resize(std::max(diff.size(), size_t(2)), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (int(g.size()) - 1 != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      fs.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) fs.push_back(x);
  return fs;
}

}  // namespace

FieldTower::FieldTower(int p, int e, int n, std::uint64_t size_cap) {
  if (!is_prime(p)) throw std::invalid_argument("FieldTower: p must be prime");
  if (e < 1 || n < 1) throw std::invalid_argument("FieldTower: e, n must be >= 1");
  p_ = p;
  e_ = e;
  n_ = n;
  d_ = e * n;
  std::uint64_t sz = 1;
  for (int i = 0; i < d_; ++i) {
    if (sz > size_cap / std::uint64_t(p)) throw cap_exceeded("FieldTower: p^(e*n) exceeds size cap");
    sz *= std::uint64_t(p);
  }
  if (sz > size_cap) throw cap_exceeded("FieldTower: p^(e*n) exceeds size cap");
  size_ = sz;
  order_ = sz - 1;
  std::uint64_t qv = 1;
  for (int i = 0; i < e; ++i) qv *= std::uint64_t(p);
  q_ = std::uint32_t(qv);

  // Lexicographically smallest monic irreducible modulus of degree d_.
  {
    Poly f(d_ + 1, 0);
    f[d_] = 1;
    std::uint64_t count = size_;  // p^d coefficient patterns for c_0..c_{d-1}
    bool found = false;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      // c_0 is the most significant digit of code, so increasing code is
      // lex order on (c_0, c_1, ..., c_{d-1})
      for (int i = d_ - 1; i >= 0; --i) {
        f[i] = int(c % p);
        c /= p;
      }
      if (is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("FieldTower: no irreducible modulus found");
  }

  // Bootstrap multiplication on digit vectors.
  auto decomp = [this](Elem a) {
    Poly v(d_);
    for (int i = 0; i < d_; ++i) {
      v[i] = int(a % std::uint32_t(p_));
      a /= std::uint32_t(p_);
    }
    trim(v);
    return v;
  };
  auto recomp = [this](const Poly& v) {
    Elem a = 0;
    for (int i = int(v.size()) - 1; i >= 0; --i) a = a * std::uint32_t(p_) + std::uint32_t(v[i]);
    return a;
  };
  auto raw_mul = [&](Elem a, Elem b) {
    return recomp(poly_mod(poly_mul(decomp(a), decomp(b), p_), modulus_, p_));
  };
  auto raw_pow = [&](Elem a, std::uint64_t k) {
    Elem r = 1, base = a;
    while (k) {
      if (k & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      k >>= 1;
    }
    return r;
  };

  // Smallest-index generator of F*.
  if (order_ == 1) {
    gen_ = 1;
  } else {
    auto fs = prime_factors(order_);
    for (Elem a = 2; a < size_; ++a) {
      bool ok = true;
      for (auto l : fs)
        if (raw_pow(a, order_ / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = a;
        break;
      }
    }
    if (gen_ == 0) throw std::logic_error("FieldTower: no generator found");
  }

  exp_.resize(order_);
  log_.assign(size_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order_; ++i) {
    exp_[i] = cur;
    log_[cur] = std::uint32_t(i);
    cur = raw_mul(cur, gen_);
  }
  if (cur != 1) throw std::logic_error("FieldTower: generator order mismatch");

  // K = fixed field of x -> x^q, i.e. {0} plus the subgroup of order q-1.
  k_of_.assign(size_, -1);
  k_elems_.clear();
  k_elems_.push_back(0);
  if (order_ > 0 && q_ > 1) {
    std::uint64_t step = order_ / (q_ - 1);
    for (std::uint32_t j = 0; j < q_ - 1; ++j) k_elems_.push_back(exp_[std::uint64_t(j) * step]);
  }
  std::sort(k_elems_.begin(), k_elems_.end());
  for (std::uint32_t i = 0; i < k_elems_.size(); ++i) k_of_[k_elems_[i]] = std::int32_t(i);

  // Greedy K-basis of F in index order, with a full coordinate table.
  kbits_ = 1;
  while ((std::uint32_t(1) << kbits_) < q_) ++kbits_;
  packed_coords_.assign(size_, ~std::uint64_t(0));
  packed_coords_[0] = 0;
  basis_.clear();
  std::vector<Elem> span_elems{0};
  for (Elem a = 1; a < size_ && int(basis_.size()) < n_; ++a) {
    if (packed_coords_[a] != ~std::uint64_t(0)) continue;
    int bi = int(basis_.size());
    basis_.push_back(a);
    std::vector<Elem> added;
    added.reserve(span_elems.size() * (q_ - 1));
    for (Elem x : span_elems) {
      std::uint64_t cx = packed_coords_[x];
      for (std::uint32_t c = 1; c < q_; ++c) {
        Elem y = add(x, mul(k_elems_[c], a));
        packed_coords_[y] = cx | (std::uint64_t(c) << (bi * kbits_));
        added.push_back(y);
      }
    }
    span_elems.insert(span_elems.end(), added.begin(), added.end());
  }
  if (int(basis_.size()) != n_) throw std::logic_error("FieldTower: K-basis construction failed");
}

Elem FieldTower::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, mult = 1;
  std::uint32_t pp = std::uint32_t(p_);
  while (a || b) {
    std::uint32_t da = a % pp, db = b % pp;
    r += ((da + db) % pp) * mult;
    a /= pp;
    b /= pp;
    mult *= pp;
  }
  return r;
}

Elem FieldTower::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0, mult = 1;
  std::uint32_t pp = std::uint32_t(p_);
  while (a) {
    std::uint32_t da = a % pp;
    r += (da ? pp - da : 0) * mult;
    a /= pp;
    mult *= pp;
  }
  return r;
}

Elem FieldTower::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FieldTower::inv(0)");
  return exp_[(order_ - log_[a]) % order_];
}

Elem FieldTower::pow(Elem a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  if (order_ == 0) return 1;
  std::uint64_t ex = (std::uint64_t(log_[a]) * (k % order_)) % order_;
  return exp_[ex];
}

Elem FieldTower::frobenius(Elem a, long long i) const {
  long long im = ((i % n_) + n_) % n_;
  if (a == 0 || im == 0) return a;
  // q^im mod order_
  std::uint64_t ex = 1;
  for (long long j = 0; j < im; ++j) ex = (ex * q_) % order_;
  return pow(a, ex);
}

Elem FieldTower::frobenius_p(Elem a, long long r) const {
  long long rm = ((r % d_) + d_) % d_;
  if (a == 0 || rm == 0) return a;
  std::uint64_t ex = 1;
  for (long long j = 0; j < rm; ++j) ex = (ex * std::uint64_t(p_)) % order_;
  return pow(a, ex);
}

std::vector<int> FieldTower::repr(Elem a) const {
  std::vector<int> v(d_);
  for (int i = 0; i < d_; ++i) {
    v[i] = int(a % std::uint32_t(p_));
    a /= std::uint32_t(p_);
  }
  return v;
}

Elem FieldTower::from_repr(std::span<const int> digits) const {
  if (int(digits.size()) != d_) throw std::invalid_argument("from_repr: wrong length");
  Elem a = 0;
  for (int i = d_ - 1; i >= 0; --i) {
    if (digits[i] < 0 || digits[i] >= p_) throw std::invalid_argument("from_repr: digit out of range");
    a = a * std::uint32_t(p_) + std::uint32_t(digits[i]);
  }
  return a;
}

std::uint32_t FieldTower::k_index(Elem a) const {
  if (a >= size_ || k_of_[a] < 0) throw std::domain_error("k_index: element not in K");
  return std::uint32_t(k_of_[a]);
}

std::vector<Elem> FieldTower::subfield(int t) const {
  if (t < 1 || n_ % t != 0) throw std::invalid_argument("subfield: t must divide n");
  std::uint64_t sub_order = 1;
  for (int i = 0; i < t; ++i) sub_order *= q_;
  --sub_order;
  std::vector<Elem> out{0};
  if (order_ > 0 && sub_order > 0) {
    std::uint64_t step = order_ / sub_order;
    for (std::uint64_t j = 0; j < sub_order; ++j) out.push_back(exp_[j * step]);
  } else if (sub_order == 0) {
    out.push_back(1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> FieldTower::coords(Elem a) const {
  if (a >= size_) throw std::invalid_argument("coords: element out of range");
  std::uint64_t pc = packed_coords_[a];
  std::vector<std::uint32_t> c(n_);
  std::uint64_t mask = (std::uint64_t(1) << kbits_) - 1;
  for (int i = 0; i < n_; ++i) c[i] = std::uint32_t((pc >> (i * kbits_)) & mask);
  return c;
}

Elem FieldTower::from_coords(std::span<const std::uint32_t> c) const {
  if (int(c.size()) != n_) throw std::invalid_argument("from_coords: wrong length");
  Elem a = 0;
  for (int i = 0; i < n_; ++i) {
    if (c[i] >= q_) throw std::invalid_argument("from_coords: K index out of range");
    a = add(a, mul(k_elems_[c[i]], basis_[i]));
  }
  return a;
}

}  // namespace gabi
