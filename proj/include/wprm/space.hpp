#pragma once

// Weight vectors and the F_q-rational points of the weighted projective space P(w).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/field.hpp"

namespace wprm {

/// Number of F_q-points of an m-dimensional (weighted) projective space:
/// (q^{j+1} - 1) / (q - 1), with p_0 = 1 and p_{-1} = 0.
inline std::uint64_t p_j(std::uint64_t q, int j) {
  require(j >= -1, Errc::InvalidArgument, "p_j needs j >= -1");
  std::uint64_t sum = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i <= j; ++i) {
    sum += pw;
    pw *= q;
  }
  return sum;
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

class Weights {
 public:
  Weights() = default;

  explicit Weights(std::vector<int> w) : w_(std::move(w)) {
    require(!w_.empty(), Errc::InvalidArgument, "weight vector must be nonempty");
    for (int x : w_) require(x >= 1, Errc::InvalidArgument, "weights must be positive");
    gcd_ = 0;
    lcm_ = 1;
    for (int x : w_) {
      gcd_ = std::gcd(gcd_, static_cast<long long>(x));
      lcm_ = std::lcm(lcm_, static_cast<long long>(x));
    }
  }

  Weights(std::initializer_list<int> w) : Weights(std::vector<int>(w)) {}

  [[nodiscard]] const std::vector<int>& values() const noexcept { return w_; }
  [[nodiscard]] int operator[](std::size_t i) const { return w_[i]; }
  [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
  /// Index of the last variable; the space has dimension m.
  [[nodiscard]] int m() const noexcept { return static_cast<int>(w_.size()) - 1; }
  [[nodiscard]] long long lcm() const noexcept { return lcm_; }
  [[nodiscard]] long long gcd() const noexcept { return gcd_; }
  [[nodiscard]] long long sum() const noexcept { return std::accumulate(w_.begin(), w_.end(), 0LL); }

  /// Smallest weight among w_1..w_m.
  [[nodiscard]] int min_tail() const {
    require(m() >= 1, Errc::InvalidArgument, "min_tail needs m >= 1");
    return *std::min_element(w_.begin() + 1, w_.end());
  }

  /// True when w_1 <= w_2 <= ... <= w_m.
  [[nodiscard]] bool tail_sorted() const noexcept {
    return m() < 1 || std::is_sorted(w_.begin() + 1, w_.end());
  }

  /// The index l of "1 = w_0 <= w_1 = ... = w_l < w_{l+1} <= ... <= w_m" with 1 <= l <= m-1,
  /// when the weights have that shape.
  [[nodiscard]] std::optional<int> ell() const {
    if (m() < 2 || w_[0] != 1 || !tail_sorted()) return std::nullopt;
    int l = 1;
    while (l + 1 <= m() && w_[l + 1] == w_[1]) ++l;
    if (l > m() - 1) return std::nullopt;
    return l;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Weights& a, const Weights& b) noexcept { return a.w_ == b.w_; }

 private:
  std::vector<int> w_;
  long long gcd_ = 1;
  long long lcm_ = 1;
};

struct ProjectivePoint {
  std::vector<Elem> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Lexicographic comparison of coordinate vectors under the field's fixed element order.
inline bool lex_less(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = F.order_index(a[i]);
    const auto y = F.order_index(b[i]);
    if (x != y) return x < y;
  }
  return false;
}

/// y ~ x in P(w): some lambda in the algebraic closure has y_i = lambda^{w_i} x_i for all i.
/// Decided without extension fields: supports must agree and the discrete logs
/// gamma_i of y_i / x_i satisfy (w_j/g) gamma_i == (w_i/g) gamma_j mod q-1, g = gcd(w_i, w_j),
/// for every pair in the support.
inline bool points_equivalent(const std::vector<Elem>& x, const std::vector<Elem>& y, const Weights& w,
                              const Field& F) {
  require(x.size() == w.size() && y.size() == w.size(), Errc::InvalidArgument,
          "coordinate vector length must match the weights");
  const auto is_zero = [](const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e.value == 0; });
  };
  require(!is_zero(x) && !is_zero(y), Errc::ZeroVector, "the zero vector is not a point");

  std::vector<std::size_t> support;
  std::vector<long long> gamma;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i].value == 0) != (y[i].value == 0)) return false;
    if (x[i].value == 0) continue;
    support.push_back(i);
    gamma.push_back(F.discrete_log(F.div(y[i], x[i])));
  }
  const long long n = F.q() - 1;
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const long long wi = w[support[a]];
      const long long wj = w[support[b]];
      const long long g = std::gcd(wi, wj);
      if (((wj / g) * gamma[a] - (wi / g) * gamma[b]) % n != 0) return false;
    }
  }
  return true;
}

/// Caches, per support pattern, the group of log-rescalings that keep a point in its class.
class Canonicalizer {
 public:
  Canonicalizer(Field F, Weights w) : F_(std::move(F)), w_(std::move(w)) {}

  [[nodiscard]] const Field& field() const noexcept { return F_; }
  [[nodiscard]] const Weights& weights() const noexcept { return w_; }

  /// All gamma in (Z/(q-1))^S passing the pairwise congruences, for the support bitmask.
  const std::vector<std::vector<std::uint32_t>>& rescalings(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (mask & (1u << i)) support.push_back(i);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    extend(support, cur, out);
    return cache_.emplace(mask, std::move(out)).first->second;
  }

  /// The lexicographically smallest member of the class of x.
  std::vector<Elem> canonical(const std::vector<Elem>& x) {
    require(x.size() == w_.size(), Errc::InvalidArgument, "coordinate vector length must match the weights");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].value != 0) mask |= 1u << i;
    require(mask != 0, Errc::ZeroVector, "the zero vector is not a point");
    const auto& gammas = rescalings(mask);
    std::vector<Elem> best = x;
    std::vector<Elem> cand(x.size());
    for (const auto& gamma : gammas) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        cand[i] = x[i].value == 0 ? x[i] : F_.mul(x[i], F_.exp(gamma[k++]));
      }
      if (lex_less(F_, cand, best)) best = cand;
    }
    return best;
  }

 private:
  void extend(const std::vector<std::size_t>& support, std::vector<std::uint32_t>& cur,
              std::vector<std::vector<std::uint32_t>>& out) const {
    if (cur.size() == support.size()) {
      out.push_back(cur);
      return;
    }
    const long long n = F_.q() - 1;
    const std::size_t b = cur.size();
    for (std::uint32_t gb = 0; gb < n; ++gb) {
      bool ok = true;
      for (std::size_t a = 0; a < b && ok; ++a) {
        const long long wi = w_[support[a]];
        const long long wj = w_[support[b]];
        const long long g = std::gcd(wi, wj);
        ok = ((wj / g) * cur[a] - (wi / g) * static_cast<long long>(gb)) % n == 0;
      }
      if (!ok) continue;
      cur.push_back(gb);
      extend(support, cur, out);
      cur.pop_back();
    }
  }

  Field F_;
  Weights w_;
  std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> cache_;
};

inline std::vector<Elem> canonicalize(const std::vector<Elem>& x, const Weights& w, const Field& F) {
  Canonicalizer c(F, w);
  return c.canonical(x);
}

/// Canonical representatives of P(w)(F_q), sorted lexicographically.
class PointSet {
 public:
  PointSet(Field F, Weights w, std::vector<ProjectivePoint> pts)
      : F_(std::move(F)), w_(std::move(w)), pts_(std::move(pts)) {}

  [[nodiscard]] const Field& field() const noexcept { return F_; }
  [[nodiscard]] const Weights& weights() const noexcept { return w_; }
  [[nodiscard]] const std::vector<ProjectivePoint>& points() const noexcept { return pts_; }
  [[nodiscard]] std::size_t size() const noexcept { return pts_.size(); }
  [[nodiscard]] const ProjectivePoint& operator[](std::size_t i) const { return pts_[i]; }
  [[nodiscard]] auto begin() const noexcept { return pts_.begin(); }
  [[nodiscard]] auto end() const noexcept { return pts_.end(); }

  /// Position of the class of x (any representative), or nullopt if x is not a point here.
  [[nodiscard]] std::optional<std::size_t> index_of(const std::vector<Elem>& x) const {
    const auto c = canonicalize(x, w_, F_);
    const auto it = std::lower_bound(pts_.begin(), pts_.end(), c, [&](const ProjectivePoint& p, const auto& key) {
      return lex_less(F_, p.coords, key);
    });
    if (it == pts_.end() || it->coords != c) return std::nullopt;
    return static_cast<std::size_t>(it - pts_.begin());
  }

 private:
  Field F_;
  Weights w_;
  std::vector<ProjectivePoint> pts_;
};

/// One lex-minimal representative per class of F_q^{m+1} \ {0}. Throws PointCountMismatch if the
/// number of classes is not p_m.
inline PointSet enumerate_points(const Field& F, const Weights& w) {
  const std::uint64_t q = F.q();
  const std::size_t len = w.size();
  require(len <= 31, Errc::InvalidArgument, "too many variables");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    total *= q;
    require(total <= (std::uint64_t{1} << 28), Errc::InvalidArgument, "point enumeration too large");
  }

  Canonicalizer canon(F, w);
  std::vector<bool> visited(total, false);
  std::vector<ProjectivePoint> pts;
  std::vector<Elem> x(len);
  const auto index_of = [&](const std::vector<Elem>& v) {
    std::uint64_t idx = 0;
    for (Elem e : v) idx = idx * q + F.order_index(e);
    return idx;
  };

  // idx enumerates order-index vectors lexicographically (coordinate 0 most significant).
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (visited[idx]) continue;
    std::uint64_t rest = idx;
    std::uint32_t mask = 0;
    for (std::size_t i = len; i-- > 0;) {
      x[i] = F.element_at(static_cast<std::uint32_t>(rest % q));
      rest /= q;
      if (x[i].value != 0) mask |= 1u << i;
    }
    pts.push_back(ProjectivePoint{x});
    std::vector<Elem> y(len);
    for (const auto& gamma : canon.rescalings(mask)) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < len; ++i) y[i] = x[i].value == 0 ? x[i] : F.mul(x[i], F.exp(gamma[k++]));
      visited[index_of(y)] = true;
    }
  }

  const std::uint64_t expected = p_j(q, w.m());
  require(pts.size() == expected, Errc::PointCountMismatch,
          "found " + std::to_string(pts.size()) + " classes, expected p_m = " + std::to_string(expected));
  return PointSet(F, w, std::move(pts));
}

}  // namespace wprm
