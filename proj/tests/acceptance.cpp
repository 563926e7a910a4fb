// Acceptance suite: runs every advertised guarantee of the calculator and
// prints exactly one [PASS]/[FAIL] line per criterion, with wall-clock time.
// Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quiverdt/dt.hpp"
#include "quiverdt/loop_ic.hpp"
#include "quiverdt/strata.hpp"
#include "quiverdt/text_format.hpp"

using namespace quiverdt;

namespace {

Quiver loop_quiver(long long m) { return Quiver({"x"}, {{m}}); }
Quiver kronecker(long long k) { return Quiver({"1", "2"}, {{0, k}, {0, 0}}); }
DimVector dims(std::vector<long long> e) { return DimVector(std::move(e)); }
CoeffFraction vp(VExp k) { return CoeffFraction(VPolynomial::v_power(k)); }

struct Runner {
  int failures = 0;
  int index = 0;

  void run(const std::string& name, double budget_seconds,
           const std::function<bool(std::ostream&)>& body) {
    ++index;
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
      ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
      ok = false;
      detail << " [exceeded " << budget_seconds << "s budget]";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ": " << name << " (" << seconds
              << "s)";
    const std::string extra = detail.str();
    if (!ok && !extra.empty()) std::cout << " -- " << extra;
    std::cout << "\n"
              << std::flush;
  }
};

bool expect(std::ostream& out, bool cond, const std::string& what) {
  if (!cond) out << what << "; ";
  return cond;
}

}  // namespace

int main() {
  Runner r;

  r.run("dual-route loop check: plethystic DT equals necklace formula, m=2,3, d=1..4", 60,
        [](std::ostream& out) {
          bool ok = true;
          for (long long m = 2; m <= 3; ++m) {
            auto table = dt_all(loop_quiver(m), Stability({0}), dims({4}));
            for (long long d = 1; d <= 4; ++d) {
              const CoeffFraction lhs = table.at(dims({d}));
              const CoeffFraction rhs = CoeffFraction(ic_poincare_loop(m, d));
              ok &= expect(out, lhs == rhs,
                           "mismatch at m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                               ": " + to_pretty(lhs) + " vs " + to_pretty(rhs));
            }
          }
          auto two = dt_all(loop_quiver(2), Stability({0}), dims({3}));
          ok &= expect(out, two.at(dims({1})) == vp(2), "m=2 d=1 != v^2");
          ok &= expect(out, two.at(dims({2})) == vp(5), "m=2 d=2 != v^5");
          ok &= expect(out, two.at(dims({3})) == vp(10), "m=2 d=3 != v^10");
          auto three = dt_all(loop_quiver(3), Stability({0}), dims({2}));
          ok &= expect(out, three.at(dims({1})) == vp(3), "m=3 d=1 != v^3");
          ok &= expect(out, three.at(dims({2})) == vp(9), "m=3 d=2 != v^9");
          return ok;
        });

  r.run("Jordan quiver: DT_1 = v and DT_d = 0 for 2 <= d <= 5", 5, [](std::ostream& out) {
    auto table = dt_all(loop_quiver(1), Stability({0}), dims({5}));
    bool ok = expect(out, table.at(dims({1})) == vp(1), "DT_1 != v");
    for (long long d = 2; d <= 5; ++d)
      ok &= expect(out, table.at(dims({d})).is_zero(), "DT_" + std::to_string(d) + " != 0");
    return ok;
  });

  r.run("Kronecker quiver table at theta=(1,0)", 5, [](std::ostream& out) {
    auto table = dt_all(kronecker(2), Stability({1, 0}), dims({2, 2}));
    bool ok = true;
    ok &= expect(out, table.at(dims({1, 0})) == CoeffFraction::one(), "(1,0) != 1");
    ok &= expect(out, table.at(dims({0, 1})) == CoeffFraction::one(), "(0,1) != 1");
    ok &= expect(out, table.at(dims({1, 2})) == CoeffFraction::one(), "(1,2) != 1");
    ok &= expect(out, table.at(dims({2, 1})) == CoeffFraction::one(), "(2,1) != 1");
    ok &= expect(out, table.at(dims({1, 1})) == vp(1) + vp(-1), "(1,1) != v + v^-1");
    ok &= expect(out, table.at(dims({2, 0})).is_zero(), "(2,0) != 0");
    ok &= expect(out, table.at(dims({0, 2})).is_zero(), "(0,2) != 0");
    ok &= expect(out, table.at(dims({2, 2})).is_zero(), "(2,2) != 0");
    return ok;
  });

  r.run("integrality for 25 random symmetric quivers, |d| <= 5", 120, [](std::ostream& out) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> nverts(1, 3);
    std::uniform_int_distribution<long long> mult(0, 3);
    bool ok = true;
    for (int trial = 0; trial < 25 && ok; ++trial) {
      const int n = nverts(rng);
      std::vector<std::vector<long long>> arrows(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) arrows[i][j] = arrows[j][i] = mult(rng);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
      const Quiver q(labels, arrows);
      StackClassTable classes(q, Stability::trivial(n));
      // cover every |d| <= 5 by one box per maximal vector with |d| = 5
      std::map<DimVector, CoeffFraction> collected;
      for (const DimVector& top : box_lattice(dims(std::vector<long long>(n, 5)))) {
        if (top.sum() != 5) continue;
        auto table = dt_all(classes, top);
        collected.insert(table.entries.begin(), table.entries.end());
      }
      for (const auto& [d, value] : collected) {
        ok &= expect(out, value.is_integral(),
                     "non-integral DT at d=" + d.str() + " in trial " + std::to_string(trial));
      }
    }
    return ok;
  });

  r.run("DT/PT route comparison and framed Jordan series", 60, [](std::ostream& out) {
    bool ok = true;
    StackClassTable jordan(loop_quiver(1), Stability({0}));
    auto r1 = dtpt_verify(jordan, Rational(0), dims({1}), dims({4}));
    ok &= expect(out, r1.all_equal, "1-loop f=(1) box 4 mismatch");

    StackClassTable two(loop_quiver(2), Stability({0}));
    auto r2 = dtpt_verify(two, Rational(0), dims({2}), dims({3}));
    ok &= expect(out, r2.all_equal, "2-loop f=(2) box 3 mismatch");

    StackClassTable k2(kronecker(2), Stability({1, 0}));
    auto r3 = dtpt_verify(k2, std::nullopt, dims({2, 2}), dims({2, 2}));
    ok &= expect(out, r3.all_equal, "Kronecker f=(2,2) box (2,2) mismatch");

    const FractionSeries p = framed_ic_series(jordan, Rational(0), dims({1}), dims({4}));
    for (long long d = 0; d <= 4; ++d)
      ok &= expect(out, p.coeff(dims({d})) == CoeffFraction(VPolynomial::l_power(d)),
                   "framed Jordan P_" + std::to_string(d) + " != L^" + std::to_string(d));
    return ok;
  });

  r.run("palindromic positive DT for Kronecker quivers", 5, [](std::ostream& out) {
    bool ok = true;
    auto k2 = dt_all(kronecker(2), Stability({1, 0}), dims({1, 1}));
    ok &= expect(out, k2.at(dims({1, 1})) == vp(1) + vp(-1), "K2 (1,1) != v + v^-1");
    ok &= expect(out, check_palindromic_positive(k2).all_ok, "K2 palindromy/positivity");
    auto k3 = dt_all(kronecker(3), Stability({1, 0}), dims({1, 1}));
    ok &= expect(out, k3.at(dims({1, 1})) == vp(2) + vp(0) + vp(-2), "K3 (1,1) != v^2+1+v^-2");
    ok &= expect(out, check_palindromic_positive(k3).all_ok, "K3 palindromy/positivity");
    return ok;
  });

  r.run("local DT values at polystable points", 10, [](std::ostream& out) {
    bool ok = true;
    // stable points with (d,d) = 1, 0, -1, -3
    auto p1 = local_dt(Quiver({"x"}, {{0}}), Stability({0}), PolystablePoint{{{dims({1}), 1}}});
    ok &= expect(out, p1.value == vp(0), "(d,d)=1 stable point != v^0");
    for (long long m : {1, 2, 4}) {
      auto p = local_dt(loop_quiver(m), Stability({0}), PolystablePoint{{{dims({1}), 1}}});
      ok &= expect(out, p.value == vp(-m),
                   "(d,d)=" + std::to_string(1 - m) + " stable point != v^" + std::to_string(-m));
    }
    auto doubled = local_dt(loop_quiver(2), Stability({0}), PolystablePoint{{{dims({1}), 2}}});
    ok &= expect(out, doubled.value == vp(-5), "2-loop (1)^2 != v^-5");
    auto two_simples = local_dt(loop_quiver(1), Stability({0}),
                                PolystablePoint{{{dims({1}), 1}, {dims({1}), 1}}});
    ok &= expect(out, two_simples.value.is_zero(), "1-loop two simples != 0");
    return ok;
  });

  r.run("lambda-ring property suite", 60, [](std::ostream& out) {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> shape(0, 2);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<VExp> exp(-5, 5);
    std::uniform_int_distribution<long long> coeff(-6, 6);
    std::uniform_int_distribution<int> nfac(0, 2);
    std::uniform_int_distribution<long long> rfac(1, 3);

    auto random_poly = [&] {
      VPolynomial p;
      const int n = nterms(rng);
      for (int i = 0; i < n; ++i) {
        long long c = coeff(rng);
        if (c == 0) c = 1;
        p += VPolynomial::monomial(BigInt(c), exp(rng));
      }
      return p;
    };
    auto random_fraction = [&] {
      std::vector<long long> den;
      const int k = nfac(rng);
      for (int i = 0; i < k; ++i) den.push_back(rfac(rng));
      return CoeffFraction(random_poly(), DenominatorMultiset(std::move(den)));
    };
    auto random_series = [&](const DimVector& box) {
      FractionSeries f(box);
      const auto lattice = box_lattice(box);
      std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
      for (int i = 0; i < 4; ++i) {
        const DimVector& d = lattice[pick(rng)];
        if (!d.is_zero()) f.set_coeff(d, random_fraction());
      }
      return f;
    };

    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      const int which = shape(rng);
      const DimVector box = which == 0 ? dims({4}) : which == 1 ? dims({2, 2}) : dims({1, 3});
      const FractionSeries f = random_series(box);
      const FractionSeries g = random_series(box);
      ok &= expect(out, pleth_log(pleth_exp(f)) == f, "Log(Exp(f)) != f");
      ok &= expect(out, pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g),
                   "Exp(f+g) != Exp(f)Exp(g)");
    }
    for (int i = 0; i < 100 && ok; ++i) {
      const CoeffFraction a = random_fraction();
      const CoeffFraction b = random_fraction();
      ok &= expect(out, a.bar().bar() == a, "bar not involutive");
      ok &= expect(out, (a * b).bar() == a.bar() * b.bar(), "bar not multiplicative");
      ok &= expect(out, (a + b).bar() == a.bar() + b.bar(), "bar not additive");
      for (long long m = 1; m <= 4 && ok; ++m)
        for (long long n = 1; n <= 4 && ok; ++n)
          ok &= expect(out, a.adams(m).adams(n) == a.adams(m * n), "adams composition");
    }
    ok &= expect(out,
                 CoeffFraction(VPolynomial::v_power(1)).adams(3).adams(2) ==
                     CoeffFraction(-VPolynomial::v_power(6)),
                 "psi_2(psi_3(v)) != -v^6");
    return ok;
  });

  r.run("virtual smallness verifier for loop quivers, d <= 3, f = (2)", 10,
        [](std::ostream& out) {
          bool ok = true;
          for (long long m = 2; m <= 3; ++m) {
            for (long long d = 1; d <= 3; ++d) {
              const auto report =
                  verify_virtual_smallness(loop_quiver(m), Stability({0}), dims({d}), dims({2}));
              ok &= expect(out, report.all_pass,
                           "inequality violated at m=" + std::to_string(m) +
                               ", d=" + std::to_string(d));
              ok &= expect(out, report.equality_only_at_dense,
                           "equality away from the dense stratum at m=" + std::to_string(m) +
                               ", d=" + std::to_string(d));
              long long equalities = 0;
              for (const auto& row : report.rows) equalities += row.equality ? 1 : 0;
              ok &= expect(out, equalities == 1, "expected exactly one equality case");
            }
          }
          return ok;
        });

  r.run("necklace bookkeeping: orbit sizes count compositions; exact division", 10,
        [](std::ostream& out) {
          auto binom = [](long long n, long long k) {
            long long b = 1;
            for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
            return b;
          };
          bool ok = true;
          for (long long m = 2; m <= 3; ++m) {
            for (long long d = 1; d <= 6; ++d) {
              long long total = 0;
              for (const auto& c : enumerate_classes(m, d)) total += c.orbit_size;
              ok &= expect(out, total == binom((m - 1) * d + d - 1, d - 1),
                           "orbit sum mismatch at m=" + std::to_string(m) +
                               ", d=" + std::to_string(d));
              try {
                ic_poincare_loop(m, d);
              } catch (const NonExactDivision& e) {
                ok = expect(out, false, e.what());
              }
            }
          }
          return ok;
        });

  if (r.failures == 0)
    std::cout << "all " << r.index << " acceptance criteria passed\n";
  else
    std::cout << r.failures << " of " << r.index << " acceptance criteria FAILED\n";
  return r.failures;
}
