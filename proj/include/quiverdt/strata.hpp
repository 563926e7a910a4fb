#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "quiverdt/dt.hpp"
#include "quiverdt/quiver.hpp"

namespace quiverdt {

// Luna decomposition type ((d^1,m_1),...,(d^s,m_s)): stable summand
// dimension vectors with multiplicities, Σ m_k d^k = d. Two parts may carry
// the same dimension vector (distinct stables of equal dimension). Parts are
// kept in a canonical order for deduplication.
struct DecompositionType {
  std::vector<std::pair<DimVector, long long>> parts;

  std::size_t summand_count() const { return parts.size(); }

  DimVector total() const {
    if (parts.empty()) throw std::invalid_argument("decomposition type has no parts");
    DimVector d = DimVector::zeros(parts.front().first.size());
    for (const auto& [dk, mk] : parts) d = d + dk.scaled(mk);
    return d;
  }

  friend bool operator==(const DecompositionType& a, const DecompositionType& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const DecompositionType& a, const DecompositionType& b) {
    return a.parts < b.parts;
  }

  std::string str() const {
    std::string s;
    for (const auto& [dk, mk] : parts) {
      if (!s.empty()) s += " + ";
      s += dk.str() + "^" + std::to_string(mk);
    }
    return s;
  }
};

namespace detail {

template <class Visit>
void partitions_desc(long long n, long long max_part, std::vector<long long>& buf, Visit&& visit) {
  if (n == 0) {
    visit(buf);
    return;
  }
  for (long long p = std::min(n, max_part); p >= 1; --p) {
    buf.push_back(p);
    partitions_desc(n - p, p, buf, visit);
    buf.pop_back();
  }
}

}  // namespace detail

// All decomposition types for d: multisets of (d^k, m_k) with Σ m_k d^k = d,
// every d^k of the same slope as d, and (d^k,d^k) <= 1 — the numeric
// necessary condition for a nonempty stable locus. Types whose stratum is
// actually empty may appear; that is harmless for inequality verification.
inline std::vector<DecompositionType> enumerate_types(const Quiver& q, const Stability& theta,
                                                      const DimVector& d) {
  if (d.is_zero()) throw ZeroDimension("decomposition types need a nonzero dimension vector");
  const Rational mu = slope(theta, d);
  std::vector<DimVector> candidates;
  for (const DimVector& e : box_lattice(d)) {
    if (e.is_zero()) continue;
    if (slope(theta, e) != mu) continue;
    if (euler_form(q, e, e) > 1) continue;
    candidates.push_back(e);
  }

  std::vector<DecompositionType> out;
  std::vector<std::pair<DimVector, long long>> current;

  // Choose, for each candidate vector in turn, how many stable summands use
  // it and with which multiplicities (a partition of the total copy count).
  auto run = [&](auto&& self, std::size_t idx, const DimVector& rest) -> void {
    if (idx == candidates.size()) {
      if (rest.is_zero() && !current.empty()) out.push_back(DecompositionType{current});
      return;
    }
    const DimVector& e = candidates[idx];
    long long max_copies = rest.sum();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) max_copies = std::min(max_copies, rest[i] / e[i]);
    self(self, idx + 1, rest);  // zero copies of e
    for (long long k = 1; k <= max_copies; ++k) {
      std::vector<long long> buf;
      detail::partitions_desc(k, k, buf, [&](const std::vector<long long>& lambda) {
        const std::size_t base = current.size();
        for (long long mk : lambda) current.emplace_back(e, mk);
        self(self, idx + 1, rest - e.scaled(k));
        current.resize(base);
      });
    }
  };
  run(run, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// codim S_ξ = -(d,d) + Σ_k (d^k,d^k) + 1 - s.
inline long long codim_stratum(const Quiver& q, const DecompositionType& xi) {
  const DimVector d = xi.total();
  long long c = -euler_form(q, d, d) + 1 - static_cast<long long>(xi.summand_count());
  for (const auto& [dk, mk] : xi.parts) c += euler_form(q, dk, dk);
  return c;
}

// Upper bound for dim N_d - dim G_d on a symmetric quiver:
// -(1/2)(d,d) + (1/2) Σ_i (i,i) d_i - |d|, with (i,i) = 1 - #loops at i.
inline Rational nullcone_bound(const Quiver& q, const DimVector& d) {
  if (!q.is_symmetric()) throw NotSymmetric("nullcone bound requires a symmetric quiver");
  if (d.size() != q.size()) throw LengthMismatch("dimension vector does not match quiver");
  long long twice = -euler_form(q, d, d) - 2 * d.sum();
  for (std::size_t i = 0; i < q.size(); ++i) twice += (1 - q.loops_at(i)) * d[i];
  return Rational(twice, 2);
}

struct VirtualSmallnessRow {
  DecompositionType xi;
  Rational fiber_bound;  // -(1/2)(d,d) + (1/2) Σ (d^k,d^k) m_k - Σ m_k + f·d
  Rational rhs;          // (f·d - 1) + (1/2) codim S_ξ
  long long codim = 0;
  bool pass = false;
  bool equality = false;
};

struct VirtualSmallnessReport {
  std::vector<VirtualSmallnessRow> rows;
  bool all_pass = true;
  bool equality_only_at_dense = true;
};

// Checks, for every decomposition type of d, that the fiber-dimension bound
// stays below (f·d - 1) + (1/2) codim S_ξ, with equality admissible only for
// the dense type ((d,1)).
inline VirtualSmallnessReport verify_virtual_smallness(const Quiver& q, const Stability& theta,
                                                       const DimVector& d, const DimVector& f,
                                                       bool force = false) {
  if (f.size() != q.size()) throw LengthMismatch("framing vector does not match quiver");
  if (f.is_zero()) throw std::invalid_argument("framing vector must be nonzero");
  const Rational mu = slope(theta, d);
  detail::require_generic(generic_check(q, theta, d, mu), force);

  const long long fd = dot(f, d);
  VirtualSmallnessReport report;
  for (const DecompositionType& xi : enumerate_types(q, theta, d)) {
    long long twice_bound = -euler_form(q, d, d) + 2 * fd;
    for (const auto& [dk, mk] : xi.parts) twice_bound += euler_form(q, dk, dk) * mk - 2 * mk;
    VirtualSmallnessRow row;
    row.xi = xi;
    row.codim = codim_stratum(q, xi);
    row.fiber_bound = Rational(twice_bound, 2);
    row.rhs = Rational(2 * (fd - 1) + row.codim, 2);
    row.pass = row.fiber_bound <= row.rhs;
    row.equality = row.fiber_bound == row.rhs;
    const bool is_dense = xi.summand_count() == 1 && xi.parts.front().second == 1 &&
                          xi.parts.front().first == d;
    report.all_pass = report.all_pass && row.pass;
    if (row.equality && !is_dense) report.equality_only_at_dense = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace quiverdt
