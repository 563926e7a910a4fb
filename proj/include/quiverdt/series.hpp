#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiverdt/coeff_fraction.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/rational_coeff.hpp"

namespace quiverdt {

// Truncated multivariate power series in one variable t_i per vertex; a
// coefficient index d is retained iff d <= box componentwise. Coefficients
// are stored sparsely and never zero.
template <class Coeff>
class MultiSeries {
public:
  explicit MultiSeries(DimVector box) : box_(std::move(box)) {}

  static MultiSeries unit(const DimVector& box) {
    MultiSeries s(box);
    s.set_coeff(DimVector::zeros(box.size()), Coeff(CoeffFraction::one()));
    return s;
  }

  const DimVector& box() const { return box_; }
  const std::map<DimVector, Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(const DimVector& d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Coeff() : it->second;
  }

  void set_coeff(const DimVector& d, Coeff c) {
    if (!d.leq(box_)) throw std::invalid_argument("series index outside the truncation box");
    if (c.is_zero())
      coeffs_.erase(d);
    else
      coeffs_.insert_or_assign(d, std::move(c));
  }

  void add_to(const DimVector& d, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_box(b);
    MultiSeries r = a;
    for (const auto& [d, c] : b.coeffs_) r.add_to(d, c);
    return r;
  }

  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    a.check_box(b);
    MultiSeries r = a;
    for (const auto& [d, c] : b.coeffs_) {
      Coeff neg = c;
      neg = Coeff() - neg;
      r.add_to(d, neg);
    }
    return r;
  }

  // Truncated convolution over the stored supports.
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_box(b);
    MultiSeries r(a.box_);
    for (const auto& [da, ca] : a.coeffs_) {
      for (const auto& [db, cb] : b.coeffs_) {
        const DimVector d = da + db;
        if (d.leq(a.box_)) r.add_to(d, ca * cb);
      }
    }
    return r;
  }

  MultiSeries& operator+=(const MultiSeries& b) { return *this = *this + b; }
  MultiSeries& operator-=(const MultiSeries& b) { return *this = *this - b; }
  MultiSeries& operator*=(const MultiSeries& b) { return *this = *this * b; }

  MultiSeries scalar_mul(const Coeff& c) const {
    MultiSeries r(box_);
    for (const auto& [d, x] : coeffs_) r.add_to(d, x * c);
    return r;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.box_ == b.box_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

  template <class F>
  auto map_coeffs(F f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    MultiSeries<Out> r(box_);
    for (const auto& [d, c] : coeffs_) r.set_coeff(d, f(c));
    return r;
  }

private:
  void check_box(const MultiSeries& other) const {
    if (box_ != other.box_) throw TruncationMismatch("series truncation boxes differ");
  }

  DimVector box_;
  std::map<DimVector, Coeff> coeffs_;
};

using FractionSeries = MultiSeries<CoeffFraction>;
using RationalSeries = MultiSeries<RationalCoeff>;

// Adams operation on series: coefficient at d moves to n*d (dropped outside
// the box) and is transformed by the coefficient-level Adams operation.
template <class Coeff>
MultiSeries<Coeff> series_adams(const MultiSeries<Coeff>& a, long long n) {
  if (n < 1) throw std::invalid_argument("series adams operation requires n >= 1");
  MultiSeries<Coeff> r(a.box());
  for (const auto& [d, c] : a.coefficients()) {
    const DimVector nd = d.scaled(n);
    if (nd.leq(a.box())) r.set_coeff(nd, c.adams(n));
  }
  return r;
}

// Multiplicative inverse up to the box; the constant coefficient must be a
// unit (in practice ±v^k times invertible denominator factors).
inline FractionSeries series_invert(const FractionSeries& a) {
  const DimVector zero = DimVector::zeros(a.box().size());
  const auto inv0 = a.coeff(zero).inverse_if_monomial_unit();
  if (!inv0) throw NonUnitConstantTerm("series constant term is not a unit");
  FractionSeries b(a.box());
  b.set_coeff(zero, *inv0);
  for (const DimVector& d : box_lattice_graded(a.box())) {
    if (d.is_zero()) continue;
    CoeffFraction s;
    for (const auto& [e, ae] : a.coefficients()) {
      if (e.is_zero() || !e.leq(d)) continue;
      const CoeffFraction be = b.coeff(d - e);
      if (!be.is_zero()) s += ae * be;
    }
    if (!s.is_zero()) b.set_coeff(d, -(*inv0 * s));
  }
  return b;
}

inline long long moebius(long long n) {
  long long mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

namespace detail {

// exp of a series with zero constant term, over rational intermediates.
inline RationalSeries series_exp(const RationalSeries& s) {
  RationalSeries r = RationalSeries::unit(s.box());
  RationalSeries term = RationalSeries::unit(s.box());
  const long long max_degree = s.box().sum();
  for (long long k = 1; k <= max_degree; ++k) {
    term = (term * s).map_coeffs(
        [&](const RationalCoeff& c) { return c.scaled_rational(BigInt(1), BigInt(k)); });
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

// log of a series with constant term 1, over rational intermediates.
inline RationalSeries series_log(const RationalSeries& g) {
  RationalSeries x = g - RationalSeries::unit(g.box());
  RationalSeries r(g.box());
  RationalSeries power = RationalSeries::unit(g.box());
  const long long max_degree = g.box().sum();
  for (long long k = 1; k <= max_degree; ++k) {
    power *= x;
    if (power.is_zero()) break;
    const BigInt sign = (k % 2 == 0) ? BigInt(-1) : BigInt(1);
    r += power.map_coeffs(
        [&](const RationalCoeff& c) { return c.scaled_rational(sign, BigInt(k)); });
  }
  return r;
}

inline RationalSeries lift(const FractionSeries& f) {
  return f.map_coeffs([](const CoeffFraction& c) { return RationalCoeff(c); });
}

inline FractionSeries lower(const RationalSeries& f) {
  return f.map_coeffs([](const RationalCoeff& c) { return c.to_fraction(); });
}

}  // namespace detail

// Plethystic exponential Sym(f) = exp(Σ_{n>=1} ψ_n(f)/n). Requires f_0 = 0;
// the sum over n is finite because ψ_n shifts supports out of the box. The
// 1/n denominators cancel in the result; a surviving one raises
// NonIntegralResult and indicates a convention bug, not an input error.
inline FractionSeries pleth_exp(const FractionSeries& f) {
  const DimVector zero = DimVector::zeros(f.box().size());
  if (!f.coeff(zero).is_zero())
    throw NonzeroConstantTerm("plethystic exponential requires zero constant term");
  const RationalSeries lifted = detail::lift(f);
  RationalSeries s(f.box());
  const long long max_degree = f.box().sum();
  for (long long n = 1; n <= max_degree || n == 1; ++n) {
    RationalSeries an = series_adams(lifted, n);
    if (an.is_zero()) {
      if (n > 1) break;
      continue;
    }
    s += an.map_coeffs(
        [&](const RationalCoeff& c) { return c.scaled_rational(BigInt(1), BigInt(n)); });
  }
  return detail::lower(detail::series_exp(s));
}

// Plethystic logarithm, the inverse of Sym: requires g_0 = 1 and computes
// Σ_{n>=1} (μ(n)/n) ψ_n(log g) with the Möbius function μ.
inline FractionSeries pleth_log(const FractionSeries& g) {
  const DimVector zero = DimVector::zeros(g.box().size());
  if (g.coeff(zero) != CoeffFraction::one())
    throw ConstantTermNotOne("plethystic logarithm requires constant term 1");
  const RationalSeries t = detail::series_log(detail::lift(g));
  RationalSeries r(g.box());
  const long long max_degree = g.box().sum();
  for (long long n = 1; n <= max_degree || n == 1; ++n) {
    RationalSeries an = series_adams(t, n);
    if (an.is_zero()) {
      if (n > 1) break;
      continue;
    }
    const long long mu = moebius(n);
    if (mu == 0) continue;
    r += an.map_coeffs(
        [&](const RationalCoeff& c) { return c.scaled_rational(BigInt(mu), BigInt(n)); });
  }
  return detail::lower(r);
}

// Keep only the coefficients whose index is zero or has the given slope.
template <class Coeff>
MultiSeries<Coeff> restrict_to_slope(const MultiSeries<Coeff>& a, const Stability& theta,
                                     const Rational& mu) {
  MultiSeries<Coeff> r(a.box());
  for (const auto& [d, c] : a.coefficients())
    if (d.is_zero() || slope(theta, d) == mu) r.set_coeff(d, c);
  return r;
}

}  // namespace quiverdt
