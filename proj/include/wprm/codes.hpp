#pragma once

// Weighted projective Reed-Muller codes: evaluation of F_q[x]^w_d on the rational points,
// exact minimum distance by enumerating projective coefficient classes, a seeded
// information-set search for low-weight codewords, and e_q = p_m - d_min.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/ideal.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

inline constexpr std::uint64_t default_class_budget = 10'000'000;

struct LinearCode {
  Field field;
  Weights weights;
  long long d = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<Elem>> gen;
  std::vector<Monomial> basis_monomials;
  bool injective = false;
};

/// Rows are the evaluation vectors of the monomials of M_d that are independent of the
/// smaller ones, i.e. of the standard monomials.
inline LinearCode wprm_code(const PointSet& pts, long long d) {
  const Weights& w = pts.weights();
  require(d >= 0, Errc::InvalidArgument, "degree must be nonnegative");
  const std::uint64_t den = denumerant(d, w);
  require(den >= 1, Errc::EmptyDegree, "no monomial of degree " + std::to_string(d) + " for weights " + w.to_string());
  LinearCode code{pts.field(), w, d, pts.size(), 0, {}, {}, false};
  RowEchelon elim(pts.field(), pts.size(), false);
  for (const auto& mono : monomials_of_degree(w, d)) {
    if (elim.rank() == pts.size()) break;
    auto v = evaluation_vector(mono, pts);
    if (elim.insert(v)) {
      code.gen.push_back(std::move(v));
      code.basis_monomials.push_back(mono);
    }
  }
  code.k = code.gen.size();
  code.injective = code.k == den;
  return code;
}

inline LinearCode wprm_code(const Field& F, const Weights& w, long long d) {
  return wprm_code(enumerate_points(F, w), d);
}

/// (q^k - 1)/(q - 1), saturating at the largest uint64 value.
inline std::uint64_t projective_class_count(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - power) return std::numeric_limits<std::uint64_t>::max();
    total += power;
    if (i + 1 < k && power > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    power *= q;
  }
  return total;
}

inline std::size_t hamming_weight(const std::vector<Elem>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e.value != 0; }));
}

namespace detail {
class ClassScanner {
 public:
  explicit ClassScanner(const LinearCode& code) : code_(code), q_(code.field.q()) {
    const Field& F = code.field;
    scaled_.resize(code.k);
    for (std::size_t r = 0; r < code.k; ++r) {
      scaled_[r].resize(q_);
      for (std::uint32_t c = 0; c < q_; ++c) {
        scaled_[r][c].resize(code.n);
        for (std::size_t j = 0; j < code.n; ++j) scaled_[r][c][j] = F.mul(F.element_at(c), code.gen[r][j]);
      }
    }
  }

  // Minimum weight over coefficient vectors (0,..,0,1,c,*,..,*) with the 1 at `lead` and
  // c the coefficient of row lead+1 (ignored when lead is the last row).
  [[nodiscard]] std::size_t scan(std::size_t lead, std::uint32_t c) const {
    std::vector<std::vector<Elem>> partial(code_.k + 1, std::vector<Elem>(code_.n, Field::zero()));
    partial[lead + 1] = scaled_[lead][1];
    if (lead + 1 == code_.k) return hamming_weight(partial[lead + 1]);
    add(partial[lead + 2], partial[lead + 1], scaled_[lead + 1][c]);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    dfs(lead + 2, partial, best);
    return best;
  }

  [[nodiscard]] std::vector<std::pair<std::size_t, std::uint32_t>> jobs() const {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (std::size_t lead = 0; lead < code_.k; ++lead) {
      if (lead + 1 == code_.k) {
        out.emplace_back(lead, 0);
      } else {
        for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(lead, c);
      }
    }
    return out;
  }

 private:
  void add(std::vector<Elem>& dst, const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    for (std::size_t j = 0; j < code_.n; ++j) dst[j] = code_.field.add(a[j], b[j]);
  }

  // partial[r] holds the sum of the rows before r.
  void dfs(std::size_t r, std::vector<std::vector<Elem>>& partial, std::size_t& best) const {
    if (r == code_.k) {
      best = std::min(best, hamming_weight(partial[r]));
      return;
    }
    if (r + 1 == code_.k) {
      const Field& F = code_.field;
      for (std::uint32_t c = 0; c < q_; ++c) {
        const auto& row = scaled_[r][c];
        std::size_t wt = 0;
        for (std::size_t j = 0; j < code_.n; ++j) wt += F.add(partial[r][j], row[j]).value != 0;
        best = std::min(best, wt);
      }
      return;
    }
    for (std::uint32_t c = 0; c < q_; ++c) {
      add(partial[r + 1], partial[r], scaled_[r][c]);
      dfs(r + 1, partial, best);
    }
  }

  const LinearCode& code_;
  std::uint32_t q_;
  std::vector<std::vector<std::vector<Elem>>> scaled_;  // scaled_[r][c] = element_at(c) * gen[r]
};
}  // namespace detail

/// Exact minimum distance by scanning all (q^k - 1)/(q - 1) codewords whose first nonzero
/// coefficient is 1. Jobs (leading row, next coefficient) are spread over `threads` workers.
inline std::size_t min_distance_exact(const LinearCode& code, std::uint64_t class_budget = default_class_budget,
                                      unsigned threads = 1) {
  require(code.k >= 1, Errc::InvalidArgument, "code has dimension 0");
  const std::uint64_t classes = projective_class_count(code.field.q(), code.k);
  require(classes <= class_budget, Errc::BudgetExceeded,
          "exhaustive search needs " + std::to_string(classes) + " classes (k = " + std::to_string(code.k) +
              ", q = " + std::to_string(code.field.q()) + "), budget is " + std::to_string(class_budget));
  const detail::ClassScanner scanner(code);
  const auto jobs = scanner.jobs();
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
  if (workers == 1) {
    for (const auto& [lead, c] : jobs) best[0] = std::min(best[0], scanner.scan(lead, c));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
          best[t] = std::min(best[t], scanner.scan(jobs[i].first, jobs[i].second));
      });
    }
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

struct RandomSearchResult {
  std::size_t weight;
  std::vector<Elem> codeword;
};

namespace detail {
// Uniform integer in [0, n) from a 64-bit engine by rejection; the standard distributions
// are implementation-defined, this is not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}
}  // namespace detail

/// Information-set search: each iteration permutes the coordinates at random, brings the
/// generator matrix to systematic form on the first independent columns, and inspects every
/// row and every combination row_a + c row_b. The smallest weight seen is an upper bound on
/// the minimum distance.
inline RandomSearchResult min_weight_random_search(const LinearCode& code, std::uint64_t iterations, std::uint64_t seed) {
  require(iterations >= 1, Errc::InvalidArgument, "iterations must be at least 1");
  require(code.k >= 1, Errc::InvalidArgument, "code has dimension 0");
  const Field& F = code.field;
  const std::size_t n = code.n;
  const std::size_t k = code.k;
  std::mt19937_64 rng(seed);
  RandomSearchResult best{std::numeric_limits<std::size_t>::max(), {}};
  const auto consider = [&](const std::vector<Elem>& v) {
    const std::size_t wt = hamming_weight(v);
    if (wt > 0 && wt < best.weight) best = {wt, v};
  };
  std::vector<std::size_t> perm(n);
  std::vector<Elem> tmp(n);
  for (std::uint64_t it = 0; it < iterations; ++it) {
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    for (std::size_t j = n; j > 1; --j) std::swap(perm[j - 1], perm[detail::uniform_below(rng, j)]);
    auto G = code.gen;
    std::size_t row = 0;
    for (std::size_t jj = 0; jj < n && row < k; ++jj) {
      const std::size_t col = perm[jj];
      std::size_t piv = row;
      while (piv < k && G[piv][col].value == 0) ++piv;
      if (piv == k) continue;
      std::swap(G[row], G[piv]);
      const Elem s = F.inv(G[row][col]);
      for (auto& e : G[row]) e = F.mul(e, s);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == row || G[r][col].value == 0) continue;
        const Elem c = F.neg(G[r][col]);
        for (std::size_t j = 0; j < n; ++j) G[r][j] = F.add(G[r][j], F.mul(c, G[row][j]));
      }
      ++row;
    }
    for (std::size_t a = 0; a < k; ++a) {
      consider(G[a]);
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::uint32_t ci = 1; ci < F.q(); ++ci) {
          const Elem c = F.element_at(ci);
          for (std::size_t j = 0; j < n; ++j) tmp[j] = F.add(G[a][j], F.mul(c, G[b][j]));
          consider(tmp);
        }
      }
    }
  }
  return best;
}

/// e_q(d; w) through the code: p_m when evaluation has a kernel (a form in the ideal vanishes
/// everywhere), otherwise p_m - d_min.
inline std::uint64_t eq_bruteforce(const PointSet& pts, long long d, std::uint64_t class_budget = default_class_budget,
                                   unsigned threads = 1) {
  const LinearCode code = wprm_code(pts, d);
  if (!code.injective) return pts.size();
  return pts.size() - min_distance_exact(code, class_budget, threads);
}

inline std::uint64_t eq_bruteforce(const Field& F, const Weights& w, long long d,
                                   std::uint64_t class_budget = default_class_budget, unsigned threads = 1) {
  return eq_bruteforce(enumerate_points(F, w), d, class_budget, threads);
}

/// One row per basis monomial, integer element codes separated by spaces, LF line endings.
inline std::string generator_to_text(const LinearCode& code) {
  std::ostringstream os;
  for (const auto& row : code.gen) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].value;
    os << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json generator_to_json(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["q"] = code.field.q();
  j["w"] = code.weights.values();
  j["d"] = code.d;
  j["n"] = code.n;
  j["k"] = code.k;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : code.gen) {
    std::vector<std::uint32_t> r;
    r.reserve(row.size());
    for (Elem e : row) r.push_back(e.value);
    rows.push_back(r);
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace wprm
