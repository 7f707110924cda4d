#pragma once

// Finite field F_q, q = p^deg <= 2^16.
//
// Elements are encoded by the integer sum c_i p^i of their coefficient vector
// over the polynomial basis 1, t, ..., t^{deg-1}; for prime q this is just the
// residue. Multiplication goes through exp/log tables over a fixed primitive
// element g. Small fields (q <= 256) additionally cache full add/mul tables.
//
// The field also fixes a total order on its elements used everywhere downstream:
// 0 first, then g^0, g^1, ..., g^{q-2}. See Field::order_index().

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wprm/error.hpp"

namespace wprm {

struct Elem {
  std::uint32_t value{0};

  friend constexpr bool operator==(Elem, Elem) = default;
};

namespace detail {

inline std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  std::uint64_t n = q;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

}  // namespace detail

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  explicit Field(std::uint32_t q) : t_(std::make_shared<Tables>(build(q))) {}

  [[nodiscard]] std::uint32_t q() const noexcept { return t_->q; }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return t_->p; }
  [[nodiscard]] std::uint32_t degree() const noexcept { return t_->deg; }
  [[nodiscard]] bool is_prime() const noexcept { return t_->deg == 1; }

  /// Coefficients c_0..c_deg of the monic modulus (c_deg = 1). For prime q this is t - 0.
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }
  [[nodiscard]] Elem generator() const noexcept { return t_->exp[1]; }

  [[nodiscard]] static constexpr Elem zero() noexcept { return Elem{0}; }
  [[nodiscard]] static constexpr Elem one() noexcept { return Elem{1}; }

  [[nodiscard]] Elem from_value(std::uint32_t v) const {
    require(v < t_->q, Errc::InvalidArgument,
            "element value " + std::to_string(v) + " out of range for q=" + std::to_string(t_->q));
    return Elem{v};
  }

  /// Image of an integer under Z -> F_p -> F_q.
  [[nodiscard]] Elem from_int(long long n) const {
    const long long p = t_->p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
  }

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept {
    const Tables& t = *t_;
    if (t.p == 2) return Elem{a.value ^ b.value};
    if (!t.add_table.empty()) return Elem{t.add_table[a.value * t.q + b.value]};
    if (t.deg == 1) {
      const std::uint32_t s = a.value + b.value;
      return Elem{s >= t.q ? s - t.q : s};
    }
    return Elem{digit_add(a.value, b.value)};
  }

  [[nodiscard]] Elem neg(Elem a) const noexcept { return Elem{t_->neg[a.value]}; }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
    const Tables& t = *t_;
    if (!t.mul_table.empty()) return Elem{t.mul_table[a.value * t.q + b.value]};
    if (a.value == 0 || b.value == 0) return zero();
    return t.exp[t.log[a.value] + t.log[b.value]];
  }

  [[nodiscard]] Elem inv(Elem a) const {
    require(a.value != 0, Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t l = t_->log[a.value];
    return t_->exp[l == 0 ? 0 : (t_->q - 1) - l];
  }

  [[nodiscard]] Elem div(Elem a, Elem b) const {
    require(b.value != 0, Errc::DivisionByZero, "division by zero");
    return mul(a, inv(b));
  }

  /// a^n for any integer n when a != 0; for a == 0 only n >= 0 is defined (0^0 = 1).
  [[nodiscard]] Elem pow(Elem a, long long n) const {
    if (a.value == 0) {
      require(n >= 0, Errc::DivisionByZero, "negative power of zero");
      return n == 0 ? one() : zero();
    }
    const long long order = t_->q - 1;
    long long e = (static_cast<long long>(t_->log[a.value]) * (n % order)) % order;
    if (e < 0) e += order;
    return t_->exp[static_cast<std::size_t>(e)];
  }

  /// Exponent k in {0..q-2} with g^k = a.
  [[nodiscard]] std::uint32_t discrete_log(Elem a) const {
    require(a.value != 0, Errc::LogOfZero, "discrete log of zero");
    return t_->log[a.value];
  }

  /// g^k for any integer k.
  [[nodiscard]] Elem exp(long long k) const noexcept {
    const long long order = t_->q - 1;
    long long e = k % order;
    if (e < 0) e += order;
    return t_->exp[static_cast<std::size_t>(e)];
  }

  /// Position of a in the fixed element order: 0 -> 0, g^k -> k + 1.
  [[nodiscard]] std::uint32_t order_index(Elem a) const noexcept {
    return a.value == 0 ? 0 : t_->log[a.value] + 1;
  }

  [[nodiscard]] Elem element_at(std::uint32_t index) const noexcept {
    return index == 0 ? zero() : t_->exp[index - 1];
  }

  /// All elements in the fixed order.
  [[nodiscard]] std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) out.push_back(element_at(i));
    return out;
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.t_->q == b.t_->q && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t deg = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;            // length 2(q-1): g^k for k in [0, 2q-2)
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add_table;
    std::vector<std::uint32_t> mul_table;
  };

  [[nodiscard]] std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t p = t_->p;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    while (a != 0 || b != 0) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  }

  // Polynomial arithmetic on encoded elements, used only while building tables.
  static std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::uint32_t deg) {
    std::vector<std::uint32_t> d(deg, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  static std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  }

  // a * b mod modulus, schoolbook.
  static std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                                   const std::vector<std::uint32_t>& modulus) {
    const std::uint32_t deg = static_cast<std::uint32_t>(modulus.size()) - 1;
    if (deg == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    const auto da = digits(a, p, deg);
    const auto db = digits(b, p, deg);
    std::vector<std::uint64_t> prod(2 * deg - 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i)
      for (std::uint32_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    for (std::size_t k = prod.size(); k-- > deg;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      // t^deg = -(c_0 + ... + c_{deg-1} t^{deg-1})
      for (std::uint32_t i = 0; i < deg; ++i)
        prod[k - deg + i] = (prod[k - deg + i] + (p - modulus[i]) % p * c) % p;
      prod[k] = 0;
    }
    std::vector<std::uint32_t> r(deg);
    for (std::uint32_t i = 0; i < deg; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(r, p);
  }

  static std::uint64_t multiplicative_order(std::uint32_t x, std::uint32_t q, std::uint32_t p,
                                            const std::vector<std::uint32_t>& modulus) {
    std::uint32_t y = x;
    for (std::uint64_t k = 1; k < q; ++k) {
      if (y == 1) return k;
      if (y == 0) return 0;
      y = poly_mulmod(y, x, p, modulus);
    }
    return 0;
  }

  static Tables build(std::uint32_t q) {
    const auto [p, deg] = detail::prime_power_split(q);
    require(p != 0, Errc::NotAPrimePower, std::to_string(q) + " is not a prime power");
    require(q <= kMaxOrder, Errc::InvalidArgument, "field order " + std::to_string(q) + " exceeds 2^16");

    Tables t;
    t.q = q;
    t.p = p;
    t.deg = deg;

    if (deg == 1) {
      t.modulus = {0, 1};
    } else {
      // First primitive monic polynomial t^deg + c_{deg-1} t^{deg-1} + ... + c_0,
      // scanning the integer encoding of (c_0, ..., c_{deg-1}) upward.
      const std::uint32_t x = p;  // the class of t
      for (std::uint32_t code = 1; code < q; ++code) {
        auto m = digits(code, p, deg);
        if (m[0] == 0) continue;
        m.push_back(1);
        if (multiplicative_order(x, q, p, m) == q - 1) {
          t.modulus = std::move(m);
          break;
        }
      }
    }

    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q; ++cand) {
      if (q == 2 || multiplicative_order(cand, q, p, t.modulus) == q - 1) {
        g = cand;
        break;
      }
    }

    t.exp.resize(2 * (q - 1));
    t.log.assign(q, 0);
    std::uint32_t y = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      t.exp[k] = Elem{y};
      t.exp[k + q - 1] = Elem{y};
      t.log[y] = k;
      y = poly_mulmod(y, g, p, t.modulus);
    }

    t.neg.resize(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      auto d = digits(v, p, deg);
      for (auto& c : d) c = (p - c) % p;
      t.neg[v] = encode(d, p);
    }

    if (q <= 256) {
      t.add_table.resize(std::size_t{q} * q);
      t.mul_table.resize(std::size_t{q} * q);
      for (std::uint32_t a = 0; a < q; ++a) {
        const auto da = digits(a, p, deg);
        for (std::uint32_t b = 0; b < q; ++b) {
          const auto db = digits(b, p, deg);
          std::vector<std::uint32_t> s(deg);
          for (std::uint32_t i = 0; i < deg; ++i) s[i] = (da[i] + db[i]) % p;
          t.add_table[a * q + b] = encode(s, p);
          t.mul_table[a * q + b] = (a == 0 || b == 0) ? 0 : t.exp[t.log[a] + t.log[b]].value;
        }
      }
    }
    return t;
  }

  std::shared_ptr<const Tables> t_;
};

}  // namespace wprm
