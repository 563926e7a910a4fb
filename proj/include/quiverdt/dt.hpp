#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "quiverdt/quiver.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

// dim R_d = Σ_{arrows i->j} d_i d_j.
inline long long dim_rep_space(const Quiver& q, const DimVector& d) {
  if (d.size() != q.size()) throw LengthMismatch("dimension vector does not match quiver");
  long long s = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) s += q.arrow_count(i, j) * d[i] * d[j];
  return s;
}

namespace detail {

// [R_d]/[G_d] = L^{dim R_d} / ∏_i [GL(d_i)] as a canonical fraction. With
// [GL(n)] = L^{n(n-1)/2} ∏_{r<=n} (L^r - 1) the numerator stays a single
// monomial in v.
inline CoeffFraction stack_class_unnormalized(const Quiver& q, const DimVector& d) {
  VExp vexp = checked_mul(2, dim_rep_space(q, d));
  DenominatorMultiset den;
  for (std::size_t i = 0; i < q.size(); ++i) {
    vexp = checked_add(vexp, -d[i] * (d[i] - 1));
    for (long long r = 1; r <= d[i]; ++r) den.push(r);
  }
  return CoeffFraction(VPolynomial::v_power(vexp), std::move(den));
}

}  // namespace detail

// Normalized class of the full stack of d-dimensional representations:
// L^{(d,d)/2} [R_d]/[G_d], with L^{(d,d)/2} = v^{(d,d)}.
inline CoeffFraction stack_class(const Quiver& q, const DimVector& d) {
  return detail::stack_class_unnormalized(q, d) *
         VPolynomial::v_power(euler_form(q, d, d));
}

// Memoized table of semistable stack classes L^{(d,d)/2} [R^{ss}_d]/[G_d]
// for one quiver and stability. Entries are obtained from the
// Harder-Narasimhan recursion
//   [R_d]/[G_d] = Σ over tuples (d^1,...,d^s), d^k != 0, Σ d^k = d with
//                 strictly decreasing slopes, of
//                 L^{-Σ_{k<l} (d^l,d^k)} ∏_k [R^{ss}_{d^k}]/[G_{d^k}]
// solved for the s = 1 term. The cache behaves as a pure function table.
class StackClassTable {
public:
  StackClassTable(Quiver quiver, Stability theta)
      : quiver_(std::move(quiver)), theta_(std::move(theta)) {
    if (theta_.size() != quiver_.size())
      throw LengthMismatch("stability does not match quiver");
  }

  const Quiver& quiver() const { return quiver_; }
  const Stability& stability() const { return theta_; }

  CoeffFraction semistable_class(const DimVector& d) {
    return unnormalized(d) * VPolynomial::v_power(euler_form(quiver_, d, d));
  }

private:
  CoeffFraction unnormalized(const DimVector& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;

    CoeffFraction result = detail::stack_class_unnormalized(quiver_, d);
    if (!d.is_zero()) {
      // Subtract every Harder-Narasimhan tuple with at least two parts. The
      // first part is a proper nonzero subvector; every later part has
      // strictly smaller slope. By bilinearity the exponent Σ_{k<l}(d^l,d^k)
      // grows by (next, sum of earlier parts) when a part is appended.
      CoeffFraction sum;
      for (const DimVector& first : box_lattice(d)) {
        if (first.is_zero() || first == d) continue;
        hn_tail(first, d - first, slope(theta_, first), 0, unnormalized(first), sum);
      }
      result = result - sum;
    }
    auto [pos, inserted] = memo_.emplace(d, std::move(result));
    return pos->second;
  }

  // `chosen` is the sum of the parts appended so far, `rest` what remains to
  // fill, `exponent` the accumulated Σ_{k<l}(d^l,d^k), `product` the product
  // of the parts' semistable classes.
  void hn_tail(const DimVector& chosen, const DimVector& rest, const Rational& mu_last,
               long long exponent, const CoeffFraction& product, CoeffFraction& sum) {
    if (rest.is_zero()) {
      sum += product * VPolynomial::v_power(checked_mul(-2, exponent));
      return;
    }
    for (const DimVector& next : box_lattice(rest)) {
      if (next.is_zero()) continue;
      const Rational mu_next = slope(theta_, next);
      if (!(mu_next < mu_last)) continue;
      hn_tail(chosen + next, rest - next, mu_next,
              exponent + euler_form(quiver_, next, chosen), product * unnormalized(next), sum);
    }
  }

  Quiver quiver_;
  Stability theta_;
  std::map<DimVector, CoeffFraction> memo_;
};

inline CoeffFraction hn_semistable_class(StackClassTable& cache, const DimVector& d) {
  return cache.semistable_class(d);
}

// Table of Donaldson-Thomas invariants per dimension vector.
struct DtTable {
  Stability theta;
  DimVector box;
  GenericityReport genericity;
  std::map<DimVector, CoeffFraction> entries;

  CoeffFraction at(const DimVector& d) const {
    auto it = entries.find(d);
    return it == entries.end() ? CoeffFraction() : it->second;
  }
};

namespace detail {

// v - v^{-1} = L^{1/2} - L^{-1/2}.
inline VPolynomial v_minus_v_inverse() {
  return VPolynomial::v_power(1) - VPolynomial::v_power(-1);
}

// A_μ = 1 + Σ_{0 != d <= box, slope(d) = μ} (semistable class at d) t^d.
inline FractionSeries semistable_series(StackClassTable& classes, const Rational& mu,
                                        const DimVector& box) {
  FractionSeries a = FractionSeries::unit(box);
  for (const DimVector& d : box_lattice(box)) {
    if (d.is_zero() || slope(classes.stability(), d) != mu) continue;
    a.set_coeff(d, classes.semistable_class(d));
  }
  return a;
}

inline void require_generic(const GenericityReport& report, bool force) {
  if (report.ok() || force) return;
  std::string msg = "stability is not generic within the box";
  if (report.witness) {
    msg += ": <" + report.witness->d.str() + "," + report.witness->e.str() +
           "> = " + std::to_string(report.witness->pairing);
  }
  throw NonGenericStability(msg);
}

inline DtTable dt_slope_impl(StackClassTable& classes, const Rational& mu, const DimVector& box,
                             GenericityReport report) {
  DtTable table;
  table.theta = classes.stability();
  table.box = box;
  table.genericity = std::move(report);
  const FractionSeries a = semistable_series(classes, mu, box);
  const FractionSeries log_a = pleth_log(a);
  const VPolynomial shift = v_minus_v_inverse();
  for (const DimVector& d : box_lattice(box)) {
    if (d.is_zero() || slope(classes.stability(), d) != mu) continue;
    table.entries.emplace(d, log_a.coeff(d) * shift);
  }
  return table;
}

inline std::set<Rational, bool (*)(const Rational&, const Rational&)> occurring_slopes(
    const Stability& theta, const DimVector& box) {
  auto less = +[](const Rational& a, const Rational& b) { return a < b; };
  std::set<Rational, bool (*)(const Rational&, const Rational&)> slopes(less);
  for (const DimVector& d : box_lattice(box))
    if (!d.is_zero()) slopes.insert(slope(theta, d));
  return slopes;
}

}  // namespace detail

// DT invariants of one slope: DT_d = (v - v^{-1}) · Log(A_μ)_d for every
// nonzero d <= box of slope μ. Refuses non-generic stabilities unless forced.
inline DtTable dt_slope(StackClassTable& classes, const Rational& mu, const DimVector& box,
                        bool force = false) {
  GenericityReport report = generic_check(classes.quiver(), classes.stability(), box);
  detail::require_generic(report, force);
  return detail::dt_slope_impl(classes, mu, box, std::move(report));
}

inline DtTable dt_slope(const Quiver& q, const Stability& theta, const Rational& mu,
                        const DimVector& box, bool force = false) {
  StackClassTable classes(q, theta);
  return dt_slope(classes, mu, box, force);
}

// DT invariants for every nonzero d <= box, computed slope by slope.
inline DtTable dt_all(StackClassTable& classes, const DimVector& box, bool force = false) {
  GenericityReport report = generic_check(classes.quiver(), classes.stability(), box);
  detail::require_generic(report, force);
  DtTable table;
  table.theta = classes.stability();
  table.box = box;
  table.genericity = report;
  for (const Rational& mu : detail::occurring_slopes(classes.stability(), box)) {
    DtTable part = detail::dt_slope_impl(classes, mu, box, report);
    table.entries.insert(part.entries.begin(), part.entries.end());
  }
  return table;
}

inline DtTable dt_all(const Quiver& q, const Stability& theta, const DimVector& box,
                      bool force = false) {
  StackClassTable classes(q, theta);
  return dt_all(classes, box, force);
}

// Framed series P = A_f · A^{-1} where A = A_μ and A_f multiplies the
// d-coefficient by L^{f·d}. Its d-coefficient is L^{f·d/2} times the
// normalized class of the framed moduli space.
inline FractionSeries framed_ic_series(StackClassTable& classes, const Rational& mu,
                                       const DimVector& f, const DimVector& box,
                                       bool force = false) {
  if (f.size() != classes.quiver().size())
    throw LengthMismatch("framing vector does not match quiver");
  GenericityReport report = generic_check(classes.quiver(), classes.stability(), box);
  detail::require_generic(report, force);
  const FractionSeries a = detail::semistable_series(classes, mu, box);
  FractionSeries a_f(box);
  for (const auto& [d, c] : a.coefficients())
    a_f.set_coeff(d, c * VPolynomial::v_power(checked_mul(2, dot(f, d))));
  return a_f * series_invert(a);
}

struct DtPtMismatch {
  DimVector d;
  CoeffFraction framed_side;
  CoeffFraction sym_side;
};

struct DtPtSlopeResult {
  Rational mu;
  bool primary_equal = false;
  bool alternative_checked = false;
  bool alternative_equal = false;
  std::vector<DtPtMismatch> mismatches;
};

struct DtPtReport {
  bool all_equal = true;
  std::vector<DtPtSlopeResult> slopes;
};

// DT/PT comparison: the framed series P against
// Sym( Σ_{0 != d} v [P^{f·d-1}]_L DT_d t^d ), with [P^{N-1}]_L = 1+L+...+L^{N-1}.
// For framing vectors with all entries even also checks the alternative form
// with [P^{f·d-1}]_vir = (v^{f·d} - v^{-f·d})/(v - v^{-1}) against the
// L^{-f·d/2}-rescaled framed series. Mismatches are reported, not thrown.
inline DtPtReport dtpt_verify(StackClassTable& classes, const std::optional<Rational>& mu,
                              const DimVector& f, const DimVector& box, bool force = false) {
  GenericityReport report = generic_check(classes.quiver(), classes.stability(), box);
  detail::require_generic(report, force);

  std::vector<Rational> slopes;
  if (mu) {
    slopes.push_back(*mu);
  } else {
    for (const Rational& s : detail::occurring_slopes(classes.stability(), box))
      slopes.push_back(s);
  }
  const bool even_framing = [&] {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] % 2 != 0) return false;
    return true;
  }();

  DtPtReport out;
  for (const Rational& s : slopes) {
    DtPtSlopeResult res;
    res.mu = s;
    const FractionSeries framed = framed_ic_series(classes, s, f, box, true);
    const DtTable dt = detail::dt_slope_impl(classes, s, box, report);

    FractionSeries arg(box);
    FractionSeries arg_vir(box);
    for (const auto& [d, dt_d] : dt.entries) {
      const long long fd = dot(f, d);
      if (fd == 0) continue;  // empty projective space contributes nothing
      VPolynomial proj;      // v [P^{fd-1}]_L = v (1 + L + ... + L^{fd-1})
      VPolynomial proj_vir;  // v^{fd-1} + v^{fd-3} + ... + v^{1-fd}
      for (long long j = 0; j < fd; ++j) {
        proj += VPolynomial::v_power(checked_add(checked_mul(2, j), 1));
        proj_vir += VPolynomial::v_power(checked_add(fd - 1, checked_mul(-2, j)));
      }
      arg.set_coeff(d, dt_d * proj);
      arg_vir.set_coeff(d, dt_d * proj_vir);
    }

    const FractionSeries sym_side = pleth_exp(arg);
    res.primary_equal = framed == sym_side;
    if (!res.primary_equal) {
      for (const DimVector& d : box_lattice(box)) {
        const CoeffFraction lhs = framed.coeff(d);
        const CoeffFraction rhs = sym_side.coeff(d);
        if (lhs != rhs) res.mismatches.push_back({d, lhs, rhs});
      }
    }
    if (even_framing) {
      res.alternative_checked = true;
      FractionSeries framed_rescaled(box);
      for (const auto& [d, c] : framed.coefficients())
        framed_rescaled.set_coeff(d, c * VPolynomial::v_power(checked_mul(-1, dot(f, d))));
      res.alternative_equal = framed_rescaled == pleth_exp(arg_vir);
    }
    out.all_equal = out.all_equal && res.primary_equal &&
                    (!res.alternative_checked || res.alternative_equal);
    out.slopes.push_back(std::move(res));
  }
  return out;
}

// A polystable point: stable summands with dimension vectors d^k, pairwise
// distinct as summands but possibly with equal dimension vectors, and
// multiplicities m_k >= 1. All d^k must share one slope and satisfy
// (d^k,d^k) <= 1.
struct PolystablePoint {
  std::vector<std::pair<DimVector, long long>> parts;

  DimVector ambient_dimension() const {
    if (parts.empty()) throw std::invalid_argument("polystable point needs at least one summand");
    DimVector d = DimVector::zeros(parts.front().first.size());
    for (const auto& [dk, mk] : parts) d = d + dk.scaled(mk);
    return d;
  }
};

struct LocalDtResult {
  Quiver ext;                // the local Ext-quiver of the collection
  DimVector multiplicities;  // dimension vector (m_1,...,m_s) for it
  CoeffFraction value;       // DT-function value at the polystable point
};

// Value of the DT function at a split polystable point ⊕_k E_k^{m_k}:
// build the Ext-quiver of (d^k), compute its DT invariant at trivial
// stability in dimension (m_k), and apply the bar involution v -> v^{-1}.
inline LocalDtResult local_dt(const Quiver& q, const Stability& theta,
                              const PolystablePoint& point, bool force = false) {
  if (point.parts.empty())
    throw std::invalid_argument("polystable point needs at least one summand");
  std::vector<DimVector> xi;
  std::vector<long long> mult;
  for (const auto& [dk, mk] : point.parts) {
    if (dk.is_zero()) throw ZeroDimension("polystable summand has zero dimension vector");
    if (mk < 1) throw std::invalid_argument("summand multiplicities must be >= 1");
    if (euler_form(q, dk, dk) > 1)
      throw std::invalid_argument("summand " + dk.str() +
                                  " has (d,d) > 1 and cannot support a stable representation");
    xi.push_back(dk);
    mult.push_back(mk);
  }
  const Rational mu = slope(theta, xi.front());
  for (const DimVector& dk : xi)
    if (slope(theta, dk) != mu)
      throw std::invalid_argument("polystable summands must share one slope");

  const DimVector ambient = point.ambient_dimension();
  detail::require_generic(generic_check(q, theta, ambient, mu), force);

  LocalDtResult out{ext_quiver(q, xi), DimVector(std::move(mult)), CoeffFraction()};
  StackClassTable local(out.ext, Stability::trivial(out.ext.size()));
  const DtTable table =
      detail::dt_slope_impl(local, Rational(0), out.multiplicities,
                            generic_check(out.ext, local.stability(), out.multiplicities));
  out.value = table.at(out.multiplicities).bar();
  return out;
}

struct IntegralityReport {
  bool ok = true;
  std::vector<DimVector> offenders;
};

// True iff every entry is a Laurent polynomial (empty denominator multiset
// after canonical reduction).
inline IntegralityReport check_integral(const DtTable& table) {
  IntegralityReport report;
  for (const auto& [d, value] : table.entries) {
    if (!value.is_integral()) {
      report.ok = false;
      report.offenders.push_back(d);
    }
  }
  return report;
}

struct PalindromyRow {
  DimVector d;
  bool palindromic = false;
  bool positive = false;
};

struct PalindromyReport {
  std::vector<PalindromyRow> rows;
  bool all_ok = true;
};

// Per nonzero entry: bar-invariance of the Laurent polynomial and positivity
// of its coefficients. Requires an integral table.
inline PalindromyReport check_palindromic_positive(const DtTable& table) {
  PalindromyReport report;
  for (const auto& [d, value] : table.entries) {
    if (!value.is_integral())
      throw NonIntegralInput("table entry at " + d.str() + " is not a Laurent polynomial");
    if (value.is_zero()) continue;
    PalindromyRow row;
    row.d = d;
    row.palindromic = value.numerator().is_palindromic();
    row.positive = value.numerator().all_coeffs_positive();
    report.all_ok = report.all_ok && row.palindromic && row.positive;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace quiverdt
