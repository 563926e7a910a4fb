#pragma once

#include <string>

#include "quiverdt/coeff_fraction.hpp"
#include "quiverdt/quiver.hpp"

namespace quiverdt {

namespace detail {

inline std::string format_poly(const VPolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  // Terms in decreasing v-exponent.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const VExp e = it->first;
    BigInt c = it->second;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const bool show_coeff = (e == 0) || c != 1;
    if (show_coeff) out += c.str();
    if (e != 0) {
      if (show_coeff && !latex) out += "*";
      out += "v";
      if (e != 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
  }
  return out;
}

inline std::string format_denominator(const DenominatorMultiset& den, bool latex) {
  std::string out;
  long long current = 0;
  long long count = 0;
  auto flush = [&] {
    if (count == 0) return;
    std::string factor =
        current == 1 ? "(L - 1)"
                     : (latex ? "(L^{" + std::to_string(current) + "} - 1)"
                              : "(L^" + std::to_string(current) + " - 1)");
    if (count > 1)
      factor += latex ? "^{" + std::to_string(count) + "}" : "^" + std::to_string(count);
    if (!out.empty() && !latex) out += "*";
    out += factor;
  };
  for (long long r : den.factors()) {
    if (r == current) {
      ++count;
    } else {
      flush();
      current = r;
      count = 1;
    }
  }
  flush();
  return out;
}

}  // namespace detail

inline std::string to_pretty(const VPolynomial& p) { return detail::format_poly(p, false); }
inline std::string to_latex(const VPolynomial& p) { return detail::format_poly(p, true); }

inline std::string to_pretty(const CoeffFraction& f) {
  if (f.is_integral()) return to_pretty(f.numerator());
  std::string num = to_pretty(f.numerator());
  if (f.numerator().term_count() > 1) num = "(" + num + ")";
  return num + " / (" + detail::format_denominator(f.denominator(), false) + ")";
}

inline std::string to_latex(const CoeffFraction& f) {
  if (f.is_integral()) return to_latex(f.numerator());
  return "\\frac{" + to_latex(f.numerator()) + "}{" +
         detail::format_denominator(f.denominator(), true) + "}";
}

}  // namespace quiverdt
