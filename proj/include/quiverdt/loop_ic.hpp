#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quiverdt/vpolynomial.hpp"

namespace quiverdt {

// Cyclic class of a sequence (a_1,...,a_d) of nonnegative integers under
// rotation. For the m-loop quiver in ambient dimension d the sequences sum
// to (m-1)d. The representative is the lexicographically smallest rotation.
struct CyclicClass {
  std::vector<long long> representative;
  long long orbit_size = 0;
  bool primitive = false;
  bool almost_primitive = false;
  long long degree = 0;
};

// Degree of one rotation: Σ_{i=1}^{d} (d-i) a_i, so the last slot has weight
// zero. The degree of a class is the minimum over its rotations.
inline long long sequence_degree(const std::vector<long long>& seq) {
  const long long d = static_cast<long long>(seq.size());
  long long total = 0;
  for (long long i = 0; i < d; ++i) total += (d - 1 - i) * seq[static_cast<std::size_t>(i)];
  return total;
}

namespace detail {

inline std::vector<long long> rotated(const std::vector<long long>& seq, std::size_t shift) {
  std::vector<long long> r(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) r[i] = seq[(i + shift) % seq.size()];
  return r;
}

// Smallest p > 0 with rotate(seq, p) == seq; divides the length.
inline long long rotation_period(const std::vector<long long>& seq) {
  const std::size_t d = seq.size();
  for (std::size_t p = 1; p < d; ++p) {
    if (d % p != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < d && fixed; ++i) fixed = seq[i] == seq[(i + p) % d];
    if (fixed) return static_cast<long long>(p);
  }
  return static_cast<long long>(d);
}

template <class Visit>
void for_each_composition(long long total, std::size_t parts, std::vector<long long>& buf,
                          Visit&& visit) {
  if (parts == 1) {
    buf.push_back(total);
    visit(buf);
    buf.pop_back();
    return;
  }
  for (long long first = 0; first <= total; ++first) {
    buf.push_back(first);
    for_each_composition(total - first, parts - 1, buf, visit);
    buf.pop_back();
  }
}

}  // namespace detail

// All cyclic classes of sequences of length d summing to (m-1)d, sorted by
// representative. A class is primitive when no nontrivial rotation fixes it,
// and almost primitive when it is primitive or, for even m and d ≡ 2 mod 4,
// a twofold repetition of a primitive sequence of length d/2 (equivalently,
// rotation period exactly d/2).
inline std::vector<CyclicClass> enumerate_classes(long long m, long long d) {
  if (m < 2) throw std::invalid_argument("loop quiver invariants need m >= 2");
  if (d < 1) throw std::invalid_argument("enumerate_classes needs d >= 1");
  std::vector<CyclicClass> classes;
  std::vector<long long> buf;
  detail::for_each_composition((m - 1) * d, static_cast<std::size_t>(d), buf,
                               [&](const std::vector<long long>& seq) {
    long long degree = sequence_degree(seq);
    for (std::size_t s = 1; s < seq.size(); ++s) {
      const std::vector<long long> rot = detail::rotated(seq, s);
      if (rot < seq) return;  // not the canonical representative
      degree = std::min(degree, sequence_degree(rot));
    }
    CyclicClass c;
    c.representative = seq;
    c.orbit_size = detail::rotation_period(seq);
    c.primitive = c.orbit_size == d;
    c.almost_primitive =
        c.primitive || (m % 2 == 0 && d % 4 == 2 && c.orbit_size == d / 2);
    c.degree = degree;
    classes.push_back(std::move(c));
  });
  return classes;
}

struct AlmostPrimitiveClasses {
  std::vector<CyclicClass> classes;   // the almost primitive ones only
  std::size_t total_class_count = 0;  // number of all cyclic classes
};

inline AlmostPrimitiveClasses enumerate_ap_classes(long long m, long long d) {
  AlmostPrimitiveClasses out;
  for (auto& c : enumerate_classes(m, d)) {
    ++out.total_class_count;
    if (c.almost_primitive) out.classes.push_back(std::move(c));
  }
  return out;
}

// Poincaré polynomial in compactly supported intersection cohomology of the
// space of m matrix invariants in dimension d:
//   v^{(m-1)d^2+1} (1 - v^{-2}) / (1 - v^{-2d}) · Σ_C v^{-2 deg C}
// summed over almost primitive cyclic classes C. The division is exact; a
// failure raises NonExactDivision and indicates an enumeration bug.
inline VPolynomial ic_poincare_loop(long long m, long long d) {
  const AlmostPrimitiveClasses ap = enumerate_ap_classes(m, d);
  VPolynomial sum;
  for (const CyclicClass& c : ap.classes)
    sum += VPolynomial::v_power(checked_mul(-2, c.degree));
  const VPolynomial numerator =
      sum * (VPolynomial::one() - VPolynomial::v_power(-2))
          .times_v_power(checked_add(checked_mul((m - 1) * d, d), 1));
  const VPolynomial divisor = VPolynomial::one() - VPolynomial::v_power(checked_mul(-2, d));
  auto q = poly_exact_div(numerator, divisor);
  if (!q)
    throw NonExactDivision("loop invariant numerator is not divisible by 1 - v^{-2d} at m=" +
                           std::to_string(m) + ", d=" + std::to_string(d));
  return *q;
}

}  // namespace quiverdt
