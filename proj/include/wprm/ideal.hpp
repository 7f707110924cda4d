#pragma once

// The vanishing ideal I(P(w)(F_q)) seen through evaluation: binomial membership, the
// universal binomials B_{i,j}, standard monomials by evaluation-rank elimination, the
// Mon^(i)_d partition, the Hilbert function and the regularity-degree scan.
//
// A degree-d monomial is standard iff its evaluation vector on the point set is not in the
// span of the evaluation vectors of the smaller monomials of M_d. Since I is the full
// vanishing ideal of a finite set, I_d is exactly the kernel of evaluation, and for a
// homogeneous ideal the degree-d initial terms are the initial terms of I_d.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

/// x^a - x^b vanishes on P(w)(F_q) iff the supports agree and q-1 divides every b_i - a_i.
inline bool is_vanishing_binomial(const Monomial& a, const Monomial& b, std::uint64_t q) {
  require(a.wdeg() == b.wdeg(), Errc::DegreeMismatch,
          "binomial with terms of degree " + std::to_string(a.wdeg()) + " and " + std::to_string(b.wdeg()));
  require(a.size() == b.size(), Errc::InvalidArgument, "monomials over different rings");
  const long long n = static_cast<long long>(q) - 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if ((static_cast<long long>(b[i]) - a[i]) % n != 0) return false;
  }
  return true;
}

/// B_{i,j} = x_i x_j (x_j^{w_i(q-1)} - x_i^{w_j(q-1)}), of degree w_i w_j (q-1) + w_i + w_j.
inline WPoly binomial_Bij(std::size_t i, std::size_t j, const Field& F, const Weights& w) {
  require(i < j && j < w.size(), Errc::InvalidArgument, "B_{i,j} needs 0 <= i < j <= m");
  const int n = static_cast<int>(F.q()) - 1;
  std::vector<int> e1(w.size(), 0);
  std::vector<int> e2(w.size(), 0);
  e1[i] = 1;
  e1[j] = 1 + w[i] * n;
  e2[i] = 1 + w[j] * n;
  e2[j] = 1;
  const Monomial m1(w, e1);
  WPoly f(F, w, m1.wdeg());
  f.add_term(m1, Field::one());
  f.add_term(Monomial(w, e2), F.neg(Field::one()));
  return f;
}

inline std::vector<Elem> evaluation_vector(const Monomial& mono, const PointSet& pts) {
  std::vector<Elem> v;
  v.reserve(pts.size());
  for (const auto& P : pts) v.push_back(eval_monomial(pts.field(), mono.exps(), P.coords));
  return v;
}

inline std::vector<Elem> evaluation_vector(const WPoly& f, const PointSet& pts) {
  std::vector<Elem> v;
  v.reserve(pts.size());
  for (const auto& P : pts) v.push_back(evaluate(f, P));
  return v;
}

/// Incremental row echelon form over F_q. Rows are kept sorted by pivot (first nonzero
/// column, normalized to 1). Optionally tracks every row as a combination of the accepted
/// input vectors, so that in-span vectors can be expressed in terms of them.
class RowEchelon {
 public:
  RowEchelon(Field F, std::size_t ncols, bool track = false) : F_(std::move(F)), n_(ncols), track_(track) {}

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t ncols() const noexcept { return n_; }
  [[nodiscard]] const Field& field() const noexcept { return F_; }

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(std::vector<Elem> v) {
    require(v.size() == n_, Errc::InvalidArgument, "row length mismatch");
    std::vector<Elem> combo;
    if (track_) combo.assign(rows_.size() + 1, Field::zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = v[rows_[r].pivot];
      if (c.value == 0) continue;
      axpy(v, rows_[r].values, F_.neg(c), rows_[r].pivot);
      if (track_) axpy(combo, rows_[r].combo, F_.neg(c), 0);
    }
    std::size_t pivot = 0;
    while (pivot < n_ && v[pivot].value == 0) ++pivot;
    if (pivot == n_) return false;
    const Elem s = F_.inv(v[pivot]);
    for (std::size_t k = pivot; k < n_; ++k) v[k] = F_.mul(v[k], s);
    if (track_) {
      combo.back() = Field::one();
      for (auto& c : combo) c = F_.mul(c, s);
    }
    Row row{pivot, std::move(v), std::move(combo)};
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < pivot) ++it;
    rows_.insert(it, std::move(row));
    return true;
  }

  /// Coefficients c_s with v = sum_s c_s * (s-th accepted vector), or nullopt when v is not in
  /// the span. Needs tracking enabled.
  [[nodiscard]] std::optional<std::vector<Elem>> express(std::vector<Elem> v) const {
    require(track_, Errc::InvalidArgument, "RowEchelon built without combination tracking");
    require(v.size() == n_, Errc::InvalidArgument, "row length mismatch");
    std::vector<Elem> coeffs(rows_.size(), Field::zero());
    for (const auto& row : rows_) {
      const Elem c = v[row.pivot];
      if (c.value == 0) continue;
      axpy(v, row.values, F_.neg(c), row.pivot);
      for (std::size_t s = 0; s < row.combo.size(); ++s)
        coeffs[s] = F_.add(coeffs[s], F_.mul(c, row.combo[s]));
    }
    for (Elem e : v)
      if (e.value != 0) return std::nullopt;
    return coeffs;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Elem> values;
    std::vector<Elem> combo;
  };

  // dst[k] += c * src[k] for k >= from (dst may be longer than src for combos).
  void axpy(std::vector<Elem>& dst, const std::vector<Elem>& src, Elem c, std::size_t from) const {
    for (std::size_t k = from; k < src.size(); ++k)
      if (src[k].value != 0) dst[k] = F_.add(dst[k], F_.mul(c, src[k]));
  }

  Field F_;
  std::size_t n_;
  bool track_;
  std::vector<Row> rows_;
};

/// \bar{M}_d with its partition by leading support.
class StandardBasis {
 public:
  long long d = 0;
  std::vector<Monomial> monomials;             // increasing term order
  std::vector<std::vector<Monomial>> partition;  // partition[i] = Mon^(i)_d
  std::size_t hilbert = 0;

  StandardBasis(long long degree, std::size_t nvars) : d(degree), partition(nvars) {}

  /// The unique combination of standard monomials with the same values as f on the point set.
  [[nodiscard]] WPoly normal_form(const WPoly& f, const PointSet& pts) const {
    require(f.wdeg() == d, Errc::DegreeMismatch, "normal form requested in the wrong degree");
    require(elimination != nullptr, Errc::InvalidArgument, "standard basis has no elimination data");
    const auto coeffs = elimination->express(evaluation_vector(f, pts));
    require(coeffs.has_value(), Errc::InvalidArgument, "evaluation outside the span of M_d");
    WPoly nf(f.field(), f.weights(), d);
    for (std::size_t s = 0; s < monomials.size(); ++s) nf.add_term(monomials[s], (*coeffs)[s]);
    return nf;
  }

  std::shared_ptr<const RowEchelon> elimination;
};

namespace detail {
template <class Order>
StandardBasis standard_monomials_impl(long long d, const PointSet& pts, Order order, bool track) {
  const Weights& w = pts.weights();
  StandardBasis sb(d, w.size());
  auto elim = std::make_shared<RowEchelon>(pts.field(), pts.size(), track);
  for (const auto& mono : monomials_of_degree(w, d, order)) {
    // Full rank: every remaining monomial is in the span.
    if (elim->rank() == pts.size()) break;
    if (elim->insert(evaluation_vector(mono, pts))) {
      sb.monomials.push_back(mono);
      const std::size_t i = mono.first_support();
      if (i < w.size()) sb.partition[i].push_back(mono);
    }
  }
  // The constant monomial (d = 0) has no leading variable; it is counted by hilbert only.
  sb.hilbert = sb.monomials.size();
  if (track) sb.elimination = std::move(elim);
  return sb;
}
}  // namespace detail

/// Greedy scan of M_d in increasing term order; a monomial is kept when its evaluation vector
/// is independent of those of the smaller monomials.
template <class Order = DegLex>
StandardBasis standard_monomials(long long d, const PointSet& pts, Order order = {}) {
  return detail::standard_monomials_impl(d, pts, order, true);
}

/// H(d) = |\bar{M}_d|, the rank of the evaluation map on M_d.
inline std::size_t hilbert_function(long long d, const PointSet& pts) {
  RowEchelon elim(pts.field(), pts.size(), false);
  for (const auto& mono : monomials_of_degree(pts.weights(), d)) {
    elim.insert(evaluation_vector(mono, pts));
    if (elim.rank() == pts.size()) break;
  }
  return elim.rank();
}

inline long long default_regularity_search_bound(const PointSet& pts, long long d_min) {
  return d_min + 4 * pts.weights().lcm() * (static_cast<long long>(pts.field().q()) - 1);
}

/// Smallest regularity degree >= d_min (H = p_m), returned with its standard basis. Also
/// checks |Mon^(i)| = q^{m-i} there.
inline StandardBasis find_regularity(const PointSet& pts, long long d_min, std::optional<long long> search_bound = {}) {
  const long long start = std::max<long long>(d_min, 1);
  const long long bound = search_bound.value_or(default_regularity_search_bound(pts, start));
  require(bound >= d_min, Errc::InvalidArgument, "search bound below d_min");
  const std::size_t pm = pts.size();
  const int m = pts.weights().m();
  for (long long d = start; d <= bound; ++d) {
    if (hilbert_function(d, pts) != pm) continue;
    StandardBasis sb = detail::standard_monomials_impl(d, pts, DegLex{}, false);
    for (int i = 0; i <= m; ++i) {
      const std::uint64_t expect = ipow(pts.field().q(), m - i);
      require(sb.partition[static_cast<std::size_t>(i)].size() == expect, Errc::RegularityNotFound,
              "degree " + std::to_string(d) + " has H = p_m but |Mon^(" + std::to_string(i) + ")| = " +
                  std::to_string(sb.partition[static_cast<std::size_t>(i)].size()) + " != " + std::to_string(expect));
    }
    return sb;
  }
  fail(Errc::RegularityNotFound,
       "no regularity degree in [" + std::to_string(d_min) + ", " + std::to_string(bound) + "]");
}

inline long long find_regularity_degree(const PointSet& pts, long long d_min,
                                        std::optional<long long> search_bound = {}) {
  return find_regularity(pts, d_min, search_bound).d;
}

}  // namespace wprm
