#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiverdt/errors.hpp"

namespace quiverdt {

// Exact rational number with small components, reduced, denominator > 0.
// Comparisons cross-multiply in 128-bit arithmetic; no floating point.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  explicit Rational(long long n) : num_(n), den_(1) {}

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parse "n" or "n/m"; nullopt on malformed input.
  static std::optional<Rational> parse(const std::string& s) {
    try {
      const auto slash = s.find('/');
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const long long n = std::stoll(s, &used);
        if (used != s.size()) return std::nullopt;
        return Rational(n);
      }
      const long long n = std::stoll(s.substr(0, slash), &used);
      if (used != slash) return std::nullopt;
      const std::string den_part = s.substr(slash + 1);
      const long long m = std::stoll(den_part, &used);
      if (used != den_part.size() || m == 0) return std::nullopt;
      return Rational(n, m);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

private:
  long long num_;
  long long den_;
};

// Dimension vector: one nonnegative integer per vertex. |d| is the entry sum.
class DimVector {
public:
  DimVector() = default;
  explicit DimVector(std::vector<long long> entries) : entries_(std::move(entries)) {
    for (long long x : entries_)
      if (x < 0) throw std::invalid_argument("dimension vector entries must be nonnegative");
  }

  static DimVector zeros(std::size_t n) { return DimVector(std::vector<long long>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i) {
    std::vector<long long> e(n, 0);
    e.at(i) = 1;
    return DimVector(std::move(e));
  }

  std::size_t size() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long long>& entries() const { return entries_; }

  long long sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }
  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](long long x) { return x == 0; });
  }

  bool leq(const DimVector& other) const {
    check_size(other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > other.entries_[i]) return false;
    return true;
  }

  friend DimVector operator+(const DimVector& a, const DimVector& b) {
    a.check_size(b);
    std::vector<long long> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
    return DimVector(std::move(e));
  }

  // Componentwise difference; precondition: b.leq(a).
  friend DimVector operator-(const DimVector& a, const DimVector& b) {
    a.check_size(b);
    std::vector<long long> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
    return DimVector(std::move(e));
  }

  DimVector scaled(long long k) const {
    std::vector<long long> e(entries_);
    for (auto& x : e) x *= k;
    return DimVector(std::move(e));
  }

  friend bool operator==(const DimVector& a, const DimVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const DimVector& a, const DimVector& b) { return !(a == b); }
  friend bool operator<(const DimVector& a, const DimVector& b) { return a.entries_ < b.entries_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

private:
  void check_size(const DimVector& other) const {
    if (entries_.size() != other.entries_.size())
      throw LengthMismatch("dimension vector sizes differ");
  }

  std::vector<long long> entries_;
};

// King stability: one integer weight per vertex.
class Stability {
public:
  Stability() = default;
  explicit Stability(std::vector<long long> theta) : theta_(std::move(theta)) {}
  static Stability trivial(std::size_t n) { return Stability(std::vector<long long>(n, 0)); }

  std::size_t size() const { return theta_.size(); }
  long long operator[](std::size_t i) const { return theta_[i]; }
  const std::vector<long long>& weights() const { return theta_; }

  bool is_trivial() const {
    return std::all_of(theta_.begin(), theta_.end(), [](long long t) { return t == 0; });
  }

  long long dot(const DimVector& d) const {
    if (theta_.size() != d.size()) throw LengthMismatch("stability/dimension size mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < theta_.size(); ++i) s += theta_[i] * d[i];
    return s;
  }

private:
  std::vector<long long> theta_;
};

// Finite quiver: ordered vertex labels and the arrow multiplicity matrix,
// arrows[i][j] = number of arrows i -> j.
class Quiver {
public:
  Quiver(std::vector<std::string> labels, std::vector<std::vector<long long>> arrows)
      : labels_(std::move(labels)), arrows_(std::move(arrows)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("quiver needs at least one vertex");
    if (arrows_.size() != n) throw std::invalid_argument("arrow matrix is not square");
    for (const auto& row : arrows_) {
      if (row.size() != n) throw std::invalid_argument("arrow matrix is not square");
      for (long long a : row)
        if (a < 0) throw std::invalid_argument("arrow multiplicities must be nonnegative");
    }
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (uniq.size() != n) throw std::invalid_argument("vertex labels must be distinct");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<long long>>& arrows() const { return arrows_; }
  long long arrow_count(std::size_t i, std::size_t j) const { return arrows_[i][j]; }
  long long loops_at(std::size_t i) const { return arrows_[i][i]; }

  long long total_arrows() const {
    long long t = 0;
    for (const auto& row : arrows_)
      for (long long a : row) t += a;
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (arrows_[i][j] != arrows_[j][i]) return false;
    return true;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<long long>> arrows_;
};

inline long long dot(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("dimension vector sizes differ");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Euler form (d,e) = Σ_i d_i e_i - Σ_{arrows i->j} d_i e_j.
inline long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.size() || e.size() != q.size())
    throw LengthMismatch("dimension vector does not match quiver");
  long long s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    s += d[i] * e[i];
    for (std::size_t j = 0; j < q.size(); ++j) s -= q.arrow_count(i, j) * d[i] * e[j];
  }
  return s;
}

// Antisymmetrized Euler form <d,e> = (d,e) - (e,d).
inline long long antisym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) - euler_form(q, e, d);
}

// Slope θ·d / |d| as an exact reduced rational; d must be nonzero.
inline Rational slope(const Stability& theta, const DimVector& d) {
  if (d.is_zero()) throw ZeroDimension("slope of the zero dimension vector is undefined");
  return Rational(theta.dot(d), d.sum());
}

enum class GenericityStatus { Unconditional, BoxRelative, NonGeneric };

struct GenericityWitness {
  DimVector d;
  DimVector e;
  long long pairing = 0;
};

struct GenericityReport {
  GenericityStatus status = GenericityStatus::BoxRelative;
  std::optional<GenericityWitness> witness;
  DimVector box;

  bool ok() const { return status != GenericityStatus::NonGeneric; }
  const char* status_name() const {
    switch (status) {
      case GenericityStatus::Unconditional: return "unconditional";
      case GenericityStatus::BoxRelative: return "box-relative";
      default: return "non-generic";
    }
  }
};

// All dimension vectors d <= box, in lexicographic order starting at 0.
inline std::vector<DimVector> box_lattice(const DimVector& box) {
  std::vector<DimVector> out;
  std::vector<long long> cur(box.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < box[i]) {
        ++cur[i];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (box.size() == 0) return out;
  }
}

// Same lattice ordered by total degree |d| first, then lexicographically.
inline std::vector<DimVector> box_lattice_graded(const DimVector& box) {
  std::vector<DimVector> out = box_lattice(box);
  std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    return a.sum() < b.sum();
  });
  return out;
}

// Check μ-genericity of θ within the box: <d,e> must vanish for all pairs of
// nonzero vectors d,e <= box of equal slope (restricted to `only_slope` when
// given). Symmetric quivers are generic unconditionally, with no enumeration.
inline GenericityReport generic_check(const Quiver& q, const Stability& theta, const DimVector& box,
                                      const std::optional<Rational>& only_slope = std::nullopt) {
  if (theta.size() != q.size() || box.size() != q.size())
    throw LengthMismatch("stability or box does not match quiver");
  GenericityReport report;
  report.box = box;
  if (q.is_symmetric()) {
    report.status = GenericityStatus::Unconditional;
    return report;
  }
  std::vector<DimVector> vecs;
  std::vector<Rational> slopes;
  for (const DimVector& d : box_lattice(box)) {
    if (d.is_zero()) continue;
    const Rational mu = slope(theta, d);
    if (only_slope && mu != *only_slope) continue;
    vecs.push_back(d);
    slopes.push_back(mu);
  }
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      if (slopes[i] != slopes[j]) continue;
      const long long p = antisym_form(q, vecs[i], vecs[j]);
      if (p != 0) {
        report.status = GenericityStatus::NonGeneric;
        // canonical orientation: report the pair with negative pairing
        if (p < 0)
          report.witness = GenericityWitness{vecs[i], vecs[j], p};
        else
          report.witness = GenericityWitness{vecs[j], vecs[i], -p};
        return report;
      }
    }
  }
  report.status = GenericityStatus::BoxRelative;
  return report;
}

// Local Ext-quiver of a collection ξ = (d^1,...,d^s): s vertices with
// δ_{kl} - (d^k,d^l) arrows from k to l.
inline Quiver ext_quiver(const Quiver& q, const std::vector<DimVector>& xi) {
  if (xi.empty()) throw std::invalid_argument("ext_quiver needs a nonempty collection");
  const std::size_t s = xi.size();
  std::vector<std::vector<long long>> arrows(s, std::vector<long long>(s, 0));
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t l = 0; l < s; ++l) {
      const long long a = (k == l ? 1 : 0) - euler_form(q, xi[k], xi[l]);
      if (a < 0)
        throw NegativeArrowCount("ext quiver arrow count " + std::to_string(a) + " from vertex " +
                                 std::to_string(k + 1) + " to " + std::to_string(l + 1) +
                                 " is negative; the collection is inconsistent");
      arrows[k][l] = a;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(s);
  for (std::size_t k = 0; k < s; ++k) labels.push_back("e" + std::to_string(k + 1));
  return Quiver(std::move(labels), std::move(arrows));
}

// Framed quiver: one extra vertex ∞ with f_i arrows ∞ -> i and none back.
// Returns the quiver and the index of the framing vertex.
inline std::pair<Quiver, std::size_t> framed_quiver(const Quiver& q, const DimVector& f) {
  if (f.size() != q.size()) throw LengthMismatch("framing vector does not match quiver");
  const std::size_t n = q.size();
  std::vector<std::string> labels = q.labels();
  std::string inf = "inf";
  while (std::find(labels.begin(), labels.end(), inf) != labels.end()) inf += "_";
  labels.push_back(inf);
  std::vector<std::vector<long long>> arrows(n + 1, std::vector<long long>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) arrows[i][j] = q.arrow_count(i, j);
  for (std::size_t i = 0; i < n; ++i) arrows[n][i] = f[i];
  return {Quiver(std::move(labels), std::move(arrows)), n};
}

}  // namespace quiverdt
