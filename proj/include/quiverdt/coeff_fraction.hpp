#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "quiverdt/vpolynomial.hpp"

namespace quiverdt {

// Multiset of denominator factors; the entry r stands for one factor
// (L^r - 1) = (v^{2r} - 1). Kept sorted ascending as the canonical form.
class DenominatorMultiset {
public:
  DenominatorMultiset() = default;
  explicit DenominatorMultiset(std::vector<long long> factors) : factors_(std::move(factors)) {
    for (long long r : factors_)
      if (r < 1) throw std::invalid_argument("denominator factor exponents must be >= 1");
    std::sort(factors_.begin(), factors_.end());
  }

  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  const std::vector<long long>& factors() const { return factors_; }

  long long sum() const { return std::accumulate(factors_.begin(), factors_.end(), 0LL); }

  void push(long long r) {
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), r), r);
  }

  // Remove one copy of r; precondition: present.
  void remove_one(long long r) {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), r);
    factors_.erase(it);
  }

  // ∏ (v^{2r} - 1) expanded.
  VPolynomial expand() const {
    VPolynomial p = VPolynomial::one();
    for (long long r : factors_) p *= VPolynomial::l_power(r) - VPolynomial::one();
    return p;
  }

  DenominatorMultiset adams(long long n) const {
    DenominatorMultiset d;
    d.factors_.reserve(factors_.size());
    for (long long r : factors_) d.factors_.push_back(checked_mul(r, n));
    return d;
  }

  // Per-factor maximum of the two multisets (the least common denominator).
  static DenominatorMultiset union_max(const DenominatorMultiset& a, const DenominatorMultiset& b) {
    DenominatorMultiset u;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (a.factors_[i] == b.factors_[j]) {
        u.factors_.push_back(a.factors_[i]);
        ++i, ++j;
      } else if (a.factors_[i] < b.factors_[j]) {
        u.factors_.push_back(a.factors_[i++]);
      } else {
        u.factors_.push_back(b.factors_[j++]);
      }
    }
    u.factors_.insert(u.factors_.end(), a.factors_.begin() + i, a.factors_.end());
    u.factors_.insert(u.factors_.end(), b.factors_.begin() + j, b.factors_.end());
    return u;
  }

  // Multiset concatenation (the denominator of a product).
  static DenominatorMultiset merged(const DenominatorMultiset& a, const DenominatorMultiset& b) {
    DenominatorMultiset m;
    m.factors_.resize(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               m.factors_.begin());
    return m;
  }

  // Multiset difference; precondition: sub ⊆ this.
  DenominatorMultiset difference(const DenominatorMultiset& sub) const {
    DenominatorMultiset d = *this;
    for (long long r : sub.factors_) d.remove_one(r);
    return d;
  }

  friend bool operator==(const DenominatorMultiset& a, const DenominatorMultiset& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const DenominatorMultiset& a, const DenominatorMultiset& b) {
    return !(a == b);
  }

private:
  std::vector<long long> factors_;
};

// Element of the localization Z[v^{±1}, (L^r - 1)^{-1} : r >= 1]. The stored
// form is canonical: the numerator is never divisible by (v^{2r} - 1) for a
// factor r still present in the denominator, and a zero numerator clears the
// denominator. Values are immutable after construction.
class CoeffFraction {
public:
  CoeffFraction() = default;
  CoeffFraction(VPolynomial num, DenominatorMultiset den = {})
      : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }
  explicit CoeffFraction(BigInt constant) : num_(std::move(constant)) {}
  explicit CoeffFraction(long long constant) : num_(BigInt(constant)) {}

  static CoeffFraction one() { return CoeffFraction(BigInt(1)); }
  static CoeffFraction zero() { return CoeffFraction(); }

  const VPolynomial& numerator() const { return num_; }
  const DenominatorMultiset& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_.empty(); }

  // The Laurent polynomial this fraction reduces to; requires is_integral().
  const VPolynomial& to_polynomial() const {
    if (!den_.empty()) throw NonIntegralInput("fraction is not a Laurent polynomial");
    return num_;
  }

  friend CoeffFraction operator+(const CoeffFraction& a, const CoeffFraction& b) {
    DenominatorMultiset common = DenominatorMultiset::union_max(a.den_, b.den_);
    VPolynomial na = a.num_ * common.difference(a.den_).expand();
    VPolynomial nb = b.num_ * common.difference(b.den_).expand();
    return CoeffFraction(na + nb, std::move(common));
  }

  friend CoeffFraction operator-(const CoeffFraction& a, const CoeffFraction& b) { return a + (-b); }

  CoeffFraction operator-() const {
    CoeffFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend CoeffFraction operator*(const CoeffFraction& a, const CoeffFraction& b) {
    return CoeffFraction(a.num_ * b.num_, DenominatorMultiset::merged(a.den_, b.den_));
  }

  friend CoeffFraction operator*(const CoeffFraction& a, const VPolynomial& p) {
    return CoeffFraction(a.num_ * p, a.den_);
  }

  CoeffFraction scaled(const BigInt& c) const { return CoeffFraction(num_.scaled(c), den_); }

  CoeffFraction& operator+=(const CoeffFraction& b) { return *this = *this + b; }
  CoeffFraction& operator*=(const CoeffFraction& b) { return *this = *this * b; }

  // Exact equality in the localized ring, decided by cross multiplication.
  friend bool operator==(const CoeffFraction& a, const CoeffFraction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_.expand() == b.num_ * a.den_.expand();
  }
  friend bool operator!=(const CoeffFraction& a, const CoeffFraction& b) { return !(a == b); }

  // Twisted Adams operation; acts by v ↦ (-1)^{n-1} v^n on the numerator and
  // takes each factor (L^r - 1) to (L^{nr} - 1).
  CoeffFraction adams(long long n) const {
    if (n < 1) throw std::invalid_argument("adams operation requires n >= 1");
    return CoeffFraction(num_.adams(n), den_.adams(n));
  }

  // Bar involution v ↦ v^{-1}. Each 1/(L^r - 1) transforms into
  // -L^r/(L^r - 1), so the denominator multiset is kept and the numerator
  // picks up (-1)^{#factors} v^{2 Σ r}.
  CoeffFraction bar() const {
    VPolynomial n = num_.bar().times_v_power(checked_mul(2, den_.sum()));
    if (den_.size() % 2 != 0) n = -n;
    return CoeffFraction(std::move(n), den_);
  }

  // Multiplicative inverse when this fraction is a unit of the localized
  // ring with monomial numerator ±v^k (the case needed for series inversion).
  std::optional<CoeffFraction> inverse_if_monomial_unit() const {
    if (num_.term_count() != 1) return std::nullopt;
    const auto& [exp, c] = *num_.terms().begin();
    if (c != 1 && c != -1) return std::nullopt;
    VPolynomial n = den_.expand().times_v_power(-exp);
    if (c == -1) n = -n;
    return CoeffFraction(std::move(n));
  }

private:
  // Greedy canonical reduction: strip denominator factors that divide the
  // numerator exactly, until none does.
  void reduce() {
    if (num_.is_zero()) {
      den_ = DenominatorMultiset();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      long long prev = 0;
      for (long long r : den_.factors()) {
        if (r == prev) continue;  // same polynomial factor, already failed
        prev = r;
        auto q = poly_exact_div(num_, VPolynomial::l_power(r) - VPolynomial::one());
        if (q) {
          num_ = std::move(*q);
          den_.remove_one(r);
          changed = true;
          break;
        }
      }
    }
  }

  VPolynomial num_;
  DenominatorMultiset den_;
};

}  // namespace quiverdt
