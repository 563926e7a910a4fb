#pragma once

#include <random>
#include <vector>

#include "quiverdt/dt.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt::testing {

inline Quiver loop_quiver(long long m) { return Quiver({"x"}, {{m}}); }

inline Quiver kronecker(long long arrows) {
  return Quiver({"1", "2"}, {{0, arrows}, {0, 0}});
}

inline DimVector dims(std::vector<long long> entries) { return DimVector(std::move(entries)); }

inline CoeffFraction frac(VPolynomial num, std::vector<long long> den = {}) {
  return CoeffFraction(std::move(num), DenominatorMultiset(std::move(den)));
}

inline VPolynomial vpow(VExp k) { return VPolynomial::v_power(k); }
inline VPolynomial lpow(VExp k) { return VPolynomial::l_power(k); }

inline VPolynomial random_poly(std::mt19937& rng, int max_terms = 4, VExp exp_range = 6,
                               long long coeff_range = 9) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<VExp> exp(-exp_range, exp_range);
  std::uniform_int_distribution<long long> coeff(-coeff_range, coeff_range);
  VPolynomial p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    long long c = coeff(rng);
    if (c == 0) c = 1;
    p += VPolynomial::monomial(BigInt(c), exp(rng));
  }
  return p;
}

inline VPolynomial random_nonzero_poly(std::mt19937& rng) {
  VPolynomial p = random_poly(rng);
  while (p.is_zero()) p = random_poly(rng);
  return p;
}

inline CoeffFraction random_fraction(std::mt19937& rng) {
  std::uniform_int_distribution<int> nfac(0, 2);
  std::uniform_int_distribution<long long> r(1, 3);
  std::vector<long long> den;
  const int k = nfac(rng);
  for (int i = 0; i < k; ++i) den.push_back(r(rng));
  return CoeffFraction(random_poly(rng), DenominatorMultiset(std::move(den)));
}

// Random series with zero constant term inside the given box.
inline FractionSeries random_series(std::mt19937& rng, const DimVector& box, int max_monomials = 4) {
  FractionSeries f(box);
  const std::vector<DimVector> lattice = box_lattice(box);
  std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
  std::uniform_int_distribution<int> monomials(1, max_monomials);
  const int n = monomials(rng);
  for (int i = 0; i < n; ++i) {
    const DimVector& d = lattice[pick(rng)];
    if (d.is_zero()) continue;
    f.set_coeff(d, random_fraction(rng));
  }
  return f;
}

// Independent oracle for the plethystic exponential: Newton's identity
// n σ^n(f) = Σ_{k=1}^{n} ψ_k(f) σ^{n-k}(f), summed over n. Shares no code
// with pleth_exp beyond the Adams operation itself.
inline FractionSeries sym_via_newton(const FractionSeries& f) {
  const RationalSeries lifted =
      f.map_coeffs([](const CoeffFraction& c) { return RationalCoeff(c); });
  std::vector<RationalSeries> sigma;
  sigma.push_back(RationalSeries::unit(f.box()));
  RationalSeries total = sigma[0];
  const long long max_degree = f.box().sum();
  for (long long n = 1; n <= max_degree; ++n) {
    RationalSeries s(f.box());
    for (long long k = 1; k <= n; ++k)
      s += series_adams(lifted, k) * sigma[static_cast<std::size_t>(n - k)];
    s = s.map_coeffs(
        [&](const RationalCoeff& c) { return c.scaled_rational(BigInt(1), BigInt(n)); });
    total += s;
    sigma.push_back(std::move(s));
  }
  return total.map_coeffs([](const RationalCoeff& c) { return c.to_fraction(); });
}

}  // namespace quiverdt::testing
