#pragma once

// Weighted monomials, graded pieces M_d, denumerants, the degree-lexicographic
// term order, sparse weighted-homogeneous polynomials, and zero counting.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/space.hpp"

namespace wprm {

class Monomial {
 public:
  Monomial() = default;
  Monomial(const Weights& w, std::vector<int> exps) : exps_(std::move(exps)) {
    require(exps_.size() == w.size(), Errc::InvalidArgument, "exponent vector length must match the weights");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      require(exps_[i] >= 0, Errc::InvalidArgument, "exponents must be nonnegative");
      wdeg_ += static_cast<long long>(w[i]) * exps_[i];
    }
  }

  static Monomial one(const Weights& w) { return Monomial(w, std::vector<int>(w.size(), 0)); }
  static Monomial variable(const Weights& w, std::size_t i, int power = 1) {
    std::vector<int> e(w.size(), 0);
    e.at(i) = power;
    return Monomial(w, std::move(e));
  }

  [[nodiscard]] const std::vector<int>& exps() const noexcept { return exps_; }
  [[nodiscard]] int operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] std::size_t size() const noexcept { return exps_.size(); }
  [[nodiscard]] long long wdeg() const noexcept { return wdeg_; }

  /// Index of the first variable with a positive exponent, or size() for the constant monomial.
  [[nodiscard]] std::size_t first_support() const noexcept {
    std::size_t i = 0;
    while (i < exps_.size() && exps_[i] == 0) ++i;
    return i;
  }

  [[nodiscard]] bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  [[nodiscard]] Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.wdeg_ += o.wdeg_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Degree-lexicographic with x_0 < x_1 < ... < x_m: weighted degree first, then the
  /// exponent vectors read from x_m down to x_0.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.wdeg_ <=> b.wdeg_; c != 0) return c;
    for (std::size_t i = a.exps_.size(); i-- > 0;)
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<int> exps_;
  long long wdeg_ = 0;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) noexcept { return a <=> b; }

/// The term order used by the library.
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a < b; }
};

/// Degree-lexicographic with the tie-break read from x_0 upward (so x_0 > x_1 > ... on ties).
/// Only used to probe how much downstream results depend on the tie-break direction.
struct DegLexFromFirst {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.wdeg() != b.wdeg()) return a.wdeg() < b.wdeg();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Number of (i_0..i_m) >= 0 with sum w_j i_j = d.
inline std::uint64_t denumerant(long long d, const std::vector<int>& w) {
  if (d < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int wj : w)
    for (long long s = wj; s <= d; ++s) ways[s] += ways[s - wj];
  return ways[d];
}

inline std::uint64_t denumerant(long long d, const Weights& w) { return denumerant(d, w.values()); }

/// Two-weight denumerant through the Euclidean division d = lambda * lcm + rho:
/// lambda + den(rho) when gcd(w0, w1) | d, else 0; den(rho) is 0 or 1.
inline std::uint64_t denumerant_two_weights(long long d, long long w0, long long w1) {
  require(w0 >= 1 && w1 >= 1 && d >= 0, Errc::InvalidArgument, "denumerant_two_weights needs w0,w1 >= 1, d >= 0");
  if (d % std::gcd(w0, w1) != 0) return 0;
  const long long l = std::lcm(w0, w1);
  const long long lambda = d / l;
  const long long rho = d % l;
  std::uint64_t den_rho = 0;
  for (long long i0 = 0; i0 * w0 <= rho; ++i0)
    if ((rho - i0 * w0) % w1 == 0) {
      den_rho = 1;
      break;
    }
  return static_cast<std::uint64_t>(lambda) + den_rho;
}

inline bool semigroup_contains(long long d, const std::vector<int>& w) { return denumerant(d, w) > 0; }
inline bool semigroup_contains(long long d, const Weights& w) { return denumerant(d, w) > 0; }

namespace detail {
inline void monomials_rec(const Weights& w, std::size_t i, long long rest, std::vector<int>& cur,
                          std::vector<Monomial>& out) {
  if (i + 1 == w.size()) {
    if (rest % w[i] == 0) {
      cur[i] = static_cast<int>(rest / w[i]);
      out.emplace_back(w, cur);
    }
    return;
  }
  for (long long a = 0; a * w[i] <= rest; ++a) {
    cur[i] = static_cast<int>(a);
    monomials_rec(w, i + 1, rest - a * w[i], cur, out);
  }
  cur[i] = 0;
}
}  // namespace detail

/// M_d in increasing term order.
template <class Order = DegLex>
std::vector<Monomial> monomials_of_degree(const Weights& w, long long d, Order order = {}) {
  require(d >= 0, Errc::InvalidArgument, "degree must be nonnegative");
  std::vector<Monomial> out;
  std::vector<int> cur(w.size(), 0);
  detail::monomials_rec(w, 0, d, cur, out);
  std::sort(out.begin(), out.end(), order);
  return out;
}

/// Value of a monomial at a coordinate vector.
inline Elem eval_monomial(const Field& F, const std::vector<int>& exps, const std::vector<Elem>& x) {
  long long log_sum = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (x[i].value == 0) return Field::zero();
    log_sum += static_cast<long long>(F.discrete_log(x[i])) * exps[i];
  }
  return F.exp(log_sum);
}

/// Sparse weighted-homogeneous polynomial. Terms are kept in increasing term order; no zero
/// coefficients are stored.
class WPoly {
 public:
  WPoly(Field F, Weights w, long long degree) : F_(std::move(F)), w_(std::move(w)), deg_(degree) {}

  static WPoly from_monomial(const Field& F, const Weights& w, const Monomial& mono, Elem c = Field::one()) {
    WPoly f(F, w, mono.wdeg());
    f.add_term(mono, c);
    return f;
  }

  [[nodiscard]] const Field& field() const noexcept { return F_; }
  [[nodiscard]] const Weights& weights() const noexcept { return w_; }
  [[nodiscard]] long long wdeg() const noexcept { return deg_; }
  [[nodiscard]] const std::map<Monomial, Elem>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t num_terms() const noexcept { return terms_.size(); }

  /// Adds c * mono, merging with an existing term.
  WPoly& add_term(const Monomial& mono, Elem c) {
    require(mono.size() == w_.size(), Errc::InvalidArgument, "monomial has the wrong number of variables");
    require(mono.wdeg() == deg_, Errc::NotHomogeneous,
            "term of degree " + std::to_string(mono.wdeg()) + " in a polynomial of degree " + std::to_string(deg_));
    if (c.value == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second = F_.add(it->second, c);
      if (it->second.value == 0) terms_.erase(it);
    }
    return *this;
  }

  [[nodiscard]] Elem coefficient(const Monomial& mono) const {
    const auto it = terms_.find(mono);
    return it == terms_.end() ? Field::zero() : it->second;
  }

  /// Initial (largest) monomial.
  [[nodiscard]] const Monomial& leading_monomial() const {
    require(!terms_.empty(), Errc::InvalidArgument, "zero polynomial has no initial term");
    return terms_.rbegin()->first;
  }

  [[nodiscard]] WPoly scaled(Elem c) const {
    WPoly r(F_, w_, deg_);
    for (const auto& [mono, a] : terms_) r.add_term(mono, F_.mul(a, c));
    return r;
  }

  WPoly& operator+=(const WPoly& o) {
    require(o.deg_ == deg_, Errc::NotHomogeneous, "sum of polynomials of different degrees");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }

  WPoly& operator-=(const WPoly& o) { return *this += o.scaled(F_.neg(Field::one())); }

  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }

  friend WPoly operator*(const WPoly& a, const WPoly& b) {
    WPoly r(a.F_, a.w_, a.deg_ + b.deg_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.F_.mul(ca, cb));
    return r;
  }

  friend bool operator==(const WPoly& a, const WPoly& b) noexcept {
    return a.deg_ == b.deg_ && a.w_ == b.w_ && a.terms_ == b.terms_;
  }

 private:
  Field F_;
  Weights w_;
  long long deg_;
  std::map<Monomial, Elem> terms_;
};

inline Elem evaluate(const WPoly& f, const std::vector<Elem>& x) {
  const Field& F = f.field();
  Elem s = Field::zero();
  for (const auto& [mono, c] : f.terms()) s = F.add(s, F.mul(c, eval_monomial(F, mono.exps(), x)));
  return s;
}

inline Elem evaluate(const WPoly& f, const ProjectivePoint& P) { return evaluate(f, P.coords); }

inline std::size_t count_zeros(const WPoly& f, const PointSet& pts) {
  std::size_t n = 0;
  for (const auto& P : pts)
    if (evaluate(f, P).value == 0) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Text format: terms "c*x0^a0*x1^a1*..." joined by '+', largest term first.
// Coefficients are integers 0..q-1 for prime q and g^k for prime powers.
// Variables with exponent 0 are omitted and exponent 1 is written without '^'.

inline std::string format_coefficient(const Field& F, Elem c) {
  if (F.is_prime()) return std::to_string(c.value);
  if (c.value == 0) return "0";
  return "g^" + std::to_string(F.discrete_log(c));
}

inline std::string format_monomial(const Monomial& mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (mono[i] != 1) s += "^" + std::to_string(mono[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_poly(const WPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!s.empty()) s += "+";
    s += format_coefficient(f.field(), it->second);
    bool constant = true;
    for (int e : it->first.exps()) constant = constant && e == 0;
    if (!constant) s += "*" + format_monomial(it->first);
  }
  return s;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& F, const Weights& w) : s_(text), F_(F), w_(w) {}

  WPoly parse(std::optional<long long> degree) {
    std::vector<std::pair<Monomial, Elem>> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    while (true) {
      auto [mono, c] = term();
      if (negate) c = F_.neg(c);
      terms.emplace_back(std::move(mono), c);
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_++];
      if (op != '+' && op != '-') error("expected '+' or '-'");
      negate = op == '-';
    }
    long long d = degree.value_or(-1);
    for (const auto& [mono, c] : terms) {
      if (c.value == 0) continue;
      if (d < 0) d = mono.wdeg();
    }
    if (d < 0) d = 0;
    WPoly f(F_, w_, d);
    for (const auto& [mono, c] : terms) {
      if (c.value == 0) continue;
      f.add_term(mono, c);
    }
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    if (pos_ - start > 9) error("integer too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  Elem coefficient() {
    if (peek() == 'g') {
      ++pos_;
      long long k = 1;
      if (peek() == '^') {
        ++pos_;
        k = integer();
      }
      return F_.exp(k);
    }
    const long long v = integer();
    if (v >= static_cast<long long>(F_.q())) error("coefficient out of range");
    return Elem{static_cast<std::uint32_t>(v)};
  }

  std::pair<Monomial, Elem> term() {
    Elem c = Field::one();
    std::vector<int> exps(w_.size(), 0);
    bool any = false;
    const char first = peek();
    if (first == 'g' || std::isdigit(static_cast<unsigned char>(first))) {
      c = coefficient();
      any = true;
      if (peek() != '*') return {Monomial(w_, exps), c};
      ++pos_;
    }
    while (true) {
      if (peek() != 'x') {
        if (!any) error("expected term");
        error("expected variable");
      }
      ++pos_;
      const long long idx = integer();
      if (idx < 0 || idx >= static_cast<long long>(w_.size())) error("variable index out of range");
      long long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer();
      }
      exps[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial(w_, exps), c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Field& F_;
  const Weights& w_;
};

}  // namespace detail

/// Parses the text format produced by format_poly (also accepts '-', implicit coefficients and
/// whitespace). The degree is taken from the first term unless given.
inline WPoly parse_poly(std::string_view text, const Field& F, const Weights& w,
                        std::optional<long long> degree = std::nullopt) {
  return detail::PolyParser(text, F, w).parse(degree);
}

}  // namespace wprm
