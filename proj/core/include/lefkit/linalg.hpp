#pragma once

#include <optional>
#include <vector>

#include "lefkit/matrix.hpp"

namespace lefkit {

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;  // increasing
  std::size_t rank = 0;
};

// Gauss-Jordan with columns processed left to right, so the pivot set is the
// lex-first independent column set of the row space.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& field = m.field();
  RrefResult<F> out{Matrix<F>(field, 0, 0), {}, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && field.is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    typename F::Element inv = field.div(field.one(), m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      typename F::Element factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) field.submul(m(i, j), factor, m(r, j));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

namespace detail {

// Fraction-free (Bareiss) elimination over the integers; intermediate
// entries stay minors of the input, which bounds their growth.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m[r].swap(m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace detail

inline std::size_t rank(const Matrix<RationalField>& m) {
  // Scale rows to integers (rank-preserving), then run Bareiss.
  std::vector<std::vector<mpz_class>> z(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    z[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class scaled = m(i, j) * mpq_class(lcm);
      z[i][j] = scaled.get_num();
    }
  }
  return detail::bareiss_rank(std::move(z));
}

inline std::size_t rank(const Matrix<PrimeField>& m) { return rref(m).rank; }

// Canonical kernel basis read off the reduced row echelon form: one vector
// per free column f, with coordinate 1 at f.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  RrefResult<F> rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Element> v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
      v[rr.pivot_cols[k]] = field.neg(rr.reduced(k, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve Mx = b; nullopt when inconsistent. Free variables are set to zero.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const Matrix<F>& m,
                                                      const std::vector<typename F::Element>& b) {
  const F& field = m.field();
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix<F> aug(field, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult<F> rr = rref(std::move(aug));
  for (std::size_t c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  std::vector<typename F::Element> x(m.cols(), field.zero());
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
    x[rr.pivot_cols[k]] = rr.reduced(k, m.cols());
  return x;
}

// Incrementally maintained row space in echelon form; the workhorse behind
// greedy rank profiles and the shifting selections.
template <class F>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(F field, std::size_t width)
      : field_(field), width_(width) {}

  // Returns true (and absorbs the vector) when it enlarges the span.
  bool add(std::vector<typename F::Element> v) {
    if (v.size() != width_) throw std::invalid_argument("span: width mismatch");
    reduce(v);
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (!field_.is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead == width_) return false;
    typename F::Element inv = field_.div(field_.one(), v[lead]);
    for (std::size_t j = lead; j < width_; ++j) v[j] = field_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(std::vector<typename F::Element> v) const {
    reduce(v);
    for (const auto& e : v)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<typename F::Element>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const typename F::Element& c = v[leads_[k]];
      if (field_.is_zero(c)) continue;
      typename F::Element factor = c;
      for (std::size_t j = leads_[k]; j < width_; ++j)
        field_.submul(v[j], factor, rows_[k][j]);
    }
  }

  F field_;
  std::size_t width_;
  std::vector<std::vector<typename F::Element>> rows_;
  std::vector<std::size_t> leads_;
};

// Greedy left-to-right selection of columns outside the span of the already
// selected ones; equals the lex-first basis of the column space.
template <class F>
std::vector<std::size_t> generic_rank_profile(
    F field, const std::vector<std::vector<typename F::Element>>& columns) {
  std::vector<std::size_t> selected;
  if (columns.empty()) return selected;
  IncrementalSpan<F> span(field, columns[0].size());
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (span.add(columns[i])) selected.push_back(i);
  return selected;
}

}  // namespace lefkit
