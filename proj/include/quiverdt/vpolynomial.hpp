#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiverdt/bigint.hpp"
#include "quiverdt/errors.hpp"

namespace quiverdt {

// Exponent of the formal variable v = L^{1/2}. Even exponents are integer
// powers of the Lefschetz class L. Overflow is a hard error, never wraparound.
using VExp = std::int64_t;

inline VExp checked_add(VExp a, VExp b) {
  VExp r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("exponent overflow in addition");
  return r;
}

inline VExp checked_mul(VExp a, VExp b) {
  VExp r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow("exponent overflow in multiplication");
  return r;
}

// Laurent polynomial in v with arbitrary-precision integer coefficients,
// an element of Z[v^{±1}]. Stored sparsely; no stored coefficient is zero,
// and the zero polynomial is the empty term map. All arithmetic is exact.
class VPolynomial {
public:
  using TermMap = std::map<VExp, BigInt>;

  VPolynomial() = default;
  explicit VPolynomial(BigInt constant) {
    if (constant != 0) terms_[0] = std::move(constant);
  }
  explicit VPolynomial(long long constant) : VPolynomial(BigInt(constant)) {}

  static VPolynomial monomial(BigInt coeff, VExp exp) {
    VPolynomial p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
  }
  static VPolynomial v_power(VExp k) { return monomial(BigInt(1), k); }
  // L^k = v^{2k}
  static VPolynomial l_power(VExp k) { return monomial(BigInt(1), checked_mul(2, k)); }
  static VPolynomial one() { return VPolynomial(BigInt(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigInt coeff(VExp exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Lowest/highest exponent with nonzero coefficient; nullopt for zero.
  std::optional<VExp> min_exp() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<VExp> max_exp() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  VPolynomial& operator+=(const VPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  VPolynomial& operator-=(const VPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend VPolynomial operator+(VPolynomial a, const VPolynomial& b) { return a += b; }
  friend VPolynomial operator-(VPolynomial a, const VPolynomial& b) { return a -= b; }

  VPolynomial operator-() const {
    VPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend VPolynomial operator*(const VPolynomial& a, const VPolynomial& b) {
    VPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), ca * cb);
    return r;
  }
  VPolynomial& operator*=(const VPolynomial& other) { return *this = *this * other; }

  VPolynomial scaled(const BigInt& c) const {
    VPolynomial r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  VPolynomial times_v_power(VExp k) const {
    VPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[checked_add(e, k)] = c;
    return r;
  }

  friend bool operator==(const VPolynomial& a, const VPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const VPolynomial& a, const VPolynomial& b) { return !(a == b); }

  // Twisted Adams operation: v ↦ (-1)^{n-1} v^n, so that -v is a line
  // element. On a term c v^k this gives (-1)^{(n-1)k} c v^{nk}.
  VPolynomial adams(long long n) const {
    if (n < 1) throw std::invalid_argument("adams operation requires n >= 1");
    VPolynomial r;
    const bool twist = (n - 1) % 2 != 0;
    for (const auto& [e, c] : terms_) {
      const bool negate = twist && (e % 2 != 0);
      r.terms_[checked_mul(e, n)] = negate ? -c : c;
    }
    return r;
  }

  // Bar involution v ↦ v^{-1}.
  VPolynomial bar() const {
    VPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[checked_mul(e, -1)] = c;
    return r;
  }

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
      g = big_gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  // Exact scalar division; precondition: s divides every coefficient.
  VPolynomial divided_by_content(const BigInt& s) const {
    VPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c / s;
    return r;
  }

  bool is_palindromic() const {
    for (const auto& [e, c] : terms_)
      if (coeff(-e) != c) return false;
    return true;
  }

  bool all_coeffs_positive() const {
    for (const auto& [e, c] : terms_)
      if (c <= 0) return false;
    return true;
  }

private:
  void add_term(VExp e, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// Exact division of Laurent polynomials: the s with p = q*s, or nullopt when
// no Laurent polynomial quotient exists.
inline std::optional<VPolynomial> poly_exact_div(const VPolynomial& p, const VPolynomial& q) {
  if (q.is_zero()) throw DivisionByZero("poly_exact_div: division by the zero polynomial");
  if (p.is_zero()) return VPolynomial();

  // Shift both so the divisor becomes an ordinary polynomial with nonzero
  // constant term; the shift difference is restored at the end.
  const VExp p_shift = *p.min_exp();
  const VExp q_shift = *q.min_exp();
  VPolynomial rem = p.times_v_power(-p_shift);
  const VPolynomial div = q.times_v_power(-q_shift);
  const VExp div_deg = *div.max_exp();
  const BigInt lead = div.coeff(div_deg);

  VPolynomial quot;
  while (!rem.is_zero()) {
    const VExp k = *rem.max_exp() - div_deg;
    if (k < 0) return std::nullopt;
    const BigInt c = rem.coeff(*rem.max_exp());
    if (c % lead != 0) return std::nullopt;
    const VPolynomial t = VPolynomial::monomial(c / lead, k);
    quot += t;
    rem -= t * div;
  }
  return quot.times_v_power(checked_add(p_shift, -q_shift));
}

// Gaussian binomial [N choose k]_L as a polynomial in L = v^2, computed with
// the Pascal recurrence [i choose j] = [i-1 choose j] + L^{i-j} [i-1 choose j-1].
inline VPolynomial gauss_binomial(long long N, long long k) {
  if (N < 0 || k < 0 || k > N) throw std::invalid_argument("gauss_binomial requires 0 <= k <= N");
  k = std::min(k, N - k);
  std::vector<VPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = VPolynomial::one();
  for (long long i = 1; i <= N; ++i) {
    for (long long j = std::min(i, k); j >= 1; --j) {
      if (j == i) {
        row[static_cast<std::size_t>(j)] = VPolynomial::one();
      } else {
        row[static_cast<std::size_t>(j)] +=
            row[static_cast<std::size_t>(j - 1)].times_v_power(checked_mul(2, i - j));
      }
    }
  }
  return row[static_cast<std::size_t>(k)];
}

// Class of the general linear group: [GL(n)] = L^{n(n-1)/2} ∏_{r=1}^n (L^r - 1).
inline VPolynomial class_gl(long long n) {
  if (n < 0) throw std::invalid_argument("class_gl requires n >= 0");
  VPolynomial r = VPolynomial::v_power(n * (n - 1));
  for (long long k = 1; k <= n; ++k)
    r *= VPolynomial::l_power(k) - VPolynomial::one();
  return r;
}

}  // namespace quiverdt
