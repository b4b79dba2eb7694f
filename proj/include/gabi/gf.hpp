// Finite field tower GF(p) < K = GF(q) < F = GF(q^n), q = p^e.
//
// Elements of F are indices 0..p^(e*n)-1; the base-p digits of an index are
// the coefficients of the element in GF(p)[x]/(modulus), low degree first.
// All arithmetic lives on the tower object; FFElem is a checked wrapper for
// code that prefers operator syntax.

#ifndef GABI_GF_HPP
#define GABI_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gabi {

using Elem = std::uint32_t;

class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t(1) << 20;

class FieldTower {
 public:
  // Chooses the lexicographically smallest monic irreducible modulus of
  // degree e*n over GF(p); the coefficient list (low degree first) is the
  // comparison key.
  FieldTower(int p, int e, int n, std::uint64_t size_cap = kDefaultFieldCap);

  int p() const { return p_; }
  int e() const { return e_; }
  int n() const { return n_; }
  int ext_degree() const { return d_; }              // e*n = [F:GF(p)]
  std::uint32_t q() const { return q_; }             // |K|
  std::uint64_t field_size() const { return size_; } // |F| = q^n
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= order_) s -= order_;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  // a^(q^i); i is taken mod n.
  Elem frobenius(Elem a, long long i) const;
  // a^(p^r), the p-power Frobenius; used for Aut(K) actions.
  Elem frobenius_p(Elem a, long long r) const;

  // GF(p)-coefficient vector of length e*n, low degree first.
  std::vector<int> repr(Elem a) const;
  Elem from_repr(std::span<const int> digits) const;

  // --- the subfield K of order q, and K-indexed arithmetic -----------------
  // K indices are positions in the field-index-sorted list of K-image
  // elements; index 0 is 0 and index 1 is 1.
  bool in_k(Elem a) const { return k_of_[a] >= 0; }
  Elem k_elem(std::uint32_t kidx) const { return k_elems_.at(kidx); }
  std::uint32_t k_index(Elem a) const;
  std::uint32_t k_add(std::uint32_t a, std::uint32_t b) const {
    return k_of_u(add(k_elems_[a], k_elems_[b]));
  }
  std::uint32_t k_mul(std::uint32_t a, std::uint32_t b) const {
    return k_of_u(mul(k_elems_[a], k_elems_[b]));
  }
  std::uint32_t k_neg(std::uint32_t a) const { return k_of_u(neg(k_elems_[a])); }
  std::uint32_t k_inv(std::uint32_t a) const { return k_of_u(inv(k_elems_[a])); }
  // rho-th power of the p-Frobenius restricted to K (Aut(K) has order e).
  std::uint32_t k_aut(std::uint32_t a, int rho) const {
    return k_of_u(frobenius_p(k_elems_[a], rho));
  }

  // Sorted element list of the intermediate field of order q^t; requires t | n.
  std::vector<Elem> subfield(int t) const;

  // --- fixed K-basis of F and coordinates ----------------------------------
  const std::vector<Elem>& k_basis() const { return basis_; }
  // K-index coordinates w.r.t. k_basis(), length n.
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

 private:
  std::uint32_t k_of_u(Elem a) const { return std::uint32_t(k_of_[a]); }

  int p_, e_, n_, d_;
  std::uint32_t q_;
  std::uint64_t size_, order_;  // order_ = |F*|
  std::vector<int> modulus_;
  Elem gen_ = 0;
  std::vector<Elem> exp_;            // size order_
  std::vector<std::uint32_t> log_;   // size size_
  std::vector<Elem> k_elems_;        // size q, sorted
  std::vector<std::int32_t> k_of_;   // size size_, -1 outside K
  std::vector<Elem> basis_;          // K-basis of F, basis_[0] == 1
  std::vector<std::uint64_t> packed_coords_;  // size size_
  int kbits_ = 0;
};

// Checked element wrapper.
class FFElem {
 public:
  FFElem() : tw_(nullptr), v_(0) {}
  FFElem(const FieldTower& tw, Elem v) : tw_(&tw), v_(v) {
    if (v >= tw.field_size()) throw std::invalid_argument("FFElem: index out of range");
  }
  Elem index() const { return v_; }
  const FieldTower& tower() const { return *tw_; }
  std::vector<int> repr() const { return tw_->repr(v_); }

  friend FFElem operator+(FFElem a, FFElem b) { return a.bin(b, &FieldTower::add); }
  friend FFElem operator-(FFElem a, FFElem b) { return a.bin(b, &FieldTower::sub); }
  friend FFElem operator*(FFElem a, FFElem b) { return a.bin(b, &FieldTower::mul); }
  FFElem operator-() const { return FFElem(*tw_, tw_->neg(v_)); }
  FFElem inverse() const { return FFElem(*tw_, tw_->inv(v_)); }
  FFElem frobenius(long long i) const { return FFElem(*tw_, tw_->frobenius(v_, i)); }
  friend bool operator==(FFElem a, FFElem b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(FFElem a, FFElem b) { return !(a == b); }

 private:
  void check(const FFElem& o) const {
    if (tw_ != o.tw_) throw std::invalid_argument("FFElem: tower mismatch");
  }
  FFElem bin(FFElem o, Elem (FieldTower::*op)(Elem, Elem) const) const {
    check(o);
    return FFElem(*tw_, (tw_->*op)(v_, o.v_));
  }
  const FieldTower* tw_;
  Elem v_;
};

}  // namespace gabi

#endif  // GABI_GF_HPP
