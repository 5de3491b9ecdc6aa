#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lefkit/complex.hpp"
#include "lefkit/linalg.hpp"
#include "lefkit/policy.hpp"

namespace lefkit {

// Monomial in x_1..x_n as a nondecreasing sequence of variable indices;
// degree is the length, support the set of distinct indices.
struct Monomial {
  std::vector<Vertex> vars;

  int degree() const { return static_cast<int>(vars.size()); }
  Face support() const;
  bool operator==(const Monomial&) const = default;
  // Ascending tuple order; matches the listing x1^2 < x1x2 < ... < xn^r.
  bool operator<(const Monomial& other) const { return vars < other.vars; }
  std::string to_string(char letter = 'x') const;
};

// One degree-one form per entry, as exact integer coefficient vectors of
// length n. Integer coefficients embed into every working field, so the
// same witness is meaningful over Q and over GF(p).
using LinearForm = std::vector<std::int64_t>;
using LinearSystem = std::vector<LinearForm>;

// All degree-r monomials with support in K, in ascending tuple order.
std::vector<Monomial> graded_basis(const Complex& k, int r);

// Kind-Kleinschmidt style criterion: Theta (of size dim+1) is an l.s.o.p.
// iff its restriction to the coordinates of each facet F has rank |F|.
bool is_lsop(const Complex& k, const LinearSystem& theta,
             const FieldSpec& field = FieldSpec::rationals());

// Draw integer forms from the policy until is_lsop holds (per trial).
LinearSystem draw_lsop(const Complex& k, const GenericityPolicy& policy,
                       std::uint64_t trial, const FieldSpec& field = FieldSpec::rationals(),
                       int max_attempts = 32);

// The graded quotient H(K,Theta) = F[K]/(Theta), built degree by degree as
// dense linear algebra over the monomial bases: the degree-i part of the
// ideal is spanned by {theta_j * m : m in graded_basis(K, i-1)}. Holds a
// monomial basis per degree (the lex-greedy complement of the image) plus
// reduction data expressing any polynomial in quotient coordinates.
template <class F>
class GradedQuotient {
 public:
  using Element = typename F::Element;

  GradedQuotient(Complex k, LinearSystem theta, int max_degree, F field)
      : k_(std::move(k)), theta_(std::move(theta)), field_(field) {
    const int n = k_.vertex_count();
    for (const LinearForm& form : theta_)
      if (static_cast<int>(form.size()) != n)
        throw std::invalid_argument("quotient: form length differs from vertex count");
    degrees_.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) build_degree(i);
    // Multiplication tables are completed here so the object is read-only
    // (and safe to share across threads) from now on.
    for (int i = 0; i < max_degree; ++i) ensure_mult_table(i);
  }

  const Complex& complex() const { return k_; }
  const LinearSystem& theta() const { return theta_; }
  const F& field() const { return field_; }
  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }

  const std::vector<Monomial>& full_basis(int i) const { return deg(i).full; }
  const std::vector<Monomial>& basis(int i) const { return deg(i).quotient_basis; }
  long long dim(int i) const {
    if (i < 0 || i > max_degree()) return 0;
    return static_cast<long long>(deg(i).nonpivots.size());
  }

  std::vector<long long> dims() const {
    std::vector<long long> out;
    for (int i = 0; i <= max_degree(); ++i) out.push_back(dim(i));
    return out;
  }

  // Full coordinates -> quotient coordinates (projection along the ideal).
  std::vector<Element> reduce(int i, std::vector<Element> full) const {
    const Degree& d = deg(i);
    if (full.size() != d.full.size()) throw std::invalid_argument("reduce: size mismatch");
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      const Element& c = full[d.pivots[r]];
      if (field_.is_zero(c)) continue;
      Element factor = c;
      for (std::size_t j = 0; j < full.size(); ++j)
        if (!field_.is_zero(d.rows[r][j])) field_.submul(full[j], factor, d.rows[r][j]);
    }
    std::vector<Element> q;
    q.reserve(d.nonpivots.size());
    for (std::size_t c : d.nonpivots) q.push_back(full[c]);
    return q;
  }

  // Quotient coordinates -> the representative supported on basis monomials.
  std::vector<Element> lift(int i, const std::vector<Element>& q) const {
    const Degree& d = deg(i);
    if (q.size() != d.nonpivots.size()) throw std::invalid_argument("lift: size mismatch");
    std::vector<Element> full(d.full.size(), field_.zero());
    for (std::size_t t = 0; t < q.size(); ++t) full[d.nonpivots[t]] = q[t];
    return full;
  }

  // Multiply a degree-i element (full coordinates) by an integer form,
  // landing in degree i+1 full coordinates; non-face monomials vanish.
  std::vector<Element> multiply_full(int i, const std::vector<Element>& full,
                                     const LinearForm& form) const {
    if (i + 1 > max_degree()) throw std::invalid_argument("multiply: degree overflow");
    const Degree& d = deg(i);
    const Degree& up = deg(i + 1);
    ensure_mult_table(i);
    std::vector<Element> out(up.full.size(), field_.zero());
    const int n = k_.vertex_count();
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
      if (field_.is_zero(full[idx])) continue;
      for (int v = 0; v < n; ++v) {
        if (form[v] == 0) continue;
        std::size_t target = d.mult_table[idx * n + v];
        if (target == kNoTarget) continue;
        out[target] = field_.add(out[target], field_.mul(full[idx], field_.from_int(form[v])));
      }
    }
    return out;
  }

  // One multiplication step in quotient coordinates.
  std::vector<Element> multiply_step(int i, const std::vector<Element>& q,
                                     const LinearForm& form) const {
    return reduce(i + 1, multiply_full(i, lift(i, q), form));
  }

 private:
  static constexpr std::size_t kNoTarget = static_cast<std::size_t>(-1);

  struct Degree {
    std::vector<Monomial> full;
    std::map<Monomial, std::size_t> index;
    // reduced generators of the ideal's degree part, in reduced echelon
    // form: each row is normalized and zero at every other pivot column
    std::vector<std::vector<Element>> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nonpivots;
    std::vector<Monomial> quotient_basis;
    mutable std::vector<std::size_t> mult_table;  // idx*n+v -> target index
  };

  const Degree& deg(int i) const {
    if (i < 0 || i >= static_cast<int>(degrees_.size()))
      throw std::invalid_argument("quotient: degree out of range");
    return degrees_[static_cast<std::size_t>(i)];
  }

  void ensure_mult_table(int i) const {
    const Degree& d = degrees_[static_cast<std::size_t>(i)];
    if (!d.mult_table.empty() || d.full.empty()) return;
    const Degree& up = degrees_[static_cast<std::size_t>(i) + 1];
    const int n = k_.vertex_count();
    d.mult_table.assign(d.full.size() * static_cast<std::size_t>(n), kNoTarget);
    for (std::size_t idx = 0; idx < d.full.size(); ++idx) {
      for (int v = 1; v <= n; ++v) {
        Monomial m = d.full[idx];
        m.vars.insert(std::upper_bound(m.vars.begin(), m.vars.end(), v), v);
        auto it = up.index.find(m);
        if (it != up.index.end()) d.mult_table[idx * n + (v - 1)] = it->second;
      }
    }
  }

  void insert_row(Degree& d, std::vector<Element> row) {
    // forward-reduce against existing rows
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      const Element& c = row[d.pivots[r]];
      if (field_.is_zero(c)) continue;
      Element factor = c;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!field_.is_zero(d.rows[r][j])) field_.submul(row[j], factor, d.rows[r][j]);
    }
    std::size_t lead = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!field_.is_zero(row[j])) {
        lead = j;
        break;
      }
    if (lead == row.size()) return;
    Element inv = field_.div(field_.one(), row[lead]);
    for (std::size_t j = lead; j < row.size(); ++j) row[j] = field_.mul(row[j], inv);
    // back-eliminate so every row is zero on the new pivot column
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      const Element& c = d.rows[r][lead];
      if (field_.is_zero(c)) continue;
      Element factor = c;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!field_.is_zero(row[j])) field_.submul(d.rows[r][j], factor, row[j]);
    }
    d.rows.push_back(std::move(row));
    d.pivots.push_back(lead);
  }

  void build_degree(int i) {
    Degree d;
    d.full = graded_basis(k_, i);
    for (std::size_t t = 0; t < d.full.size(); ++t) d.index[d.full[t]] = t;
    degrees_.push_back(std::move(d));
    Degree& cur = degrees_.back();
    if (i > 0 && !cur.full.empty()) {
      const Degree& below = degrees_[static_cast<std::size_t>(i) - 1];
      for (const LinearForm& form : theta_) {
        for (std::size_t m = 0; m < below.full.size(); ++m) {
          std::vector<Element> unit(below.full.size(), field_.zero());
          unit[m] = field_.one();
          insert_row(cur, multiply_full(i - 1, unit, form));
        }
      }
    }
    std::vector<bool> is_pivot(cur.full.size(), false);
    for (std::size_t p : cur.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < cur.full.size(); ++c)
      if (!is_pivot[c]) {
        cur.nonpivots.push_back(c);
        cur.quotient_basis.push_back(cur.full[c]);
      }
  }

  Complex k_;
  LinearSystem theta_;
  F field_;
  std::vector<Degree> degrees_;
};

// Spec default guard degree: everything Lefschetz- or shifting-shaped needs
// at most degree d = dim+1.
template <class F>
GradedQuotient<F> quotient(const Complex& k, const LinearSystem& theta, F field,
                           int max_degree = -1) {
  if (max_degree < 0) max_degree = k.dim() + 2;
  return GradedQuotient<F>(k, theta, max_degree, field);
}

template <class F>
std::vector<long long> hilbert_function(const GradedQuotient<F>& q) {
  return q.dims();
}

}  // namespace lefkit
