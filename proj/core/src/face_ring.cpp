#include "lefkit/face_ring.hpp"

#include <algorithm>
#include <sstream>

namespace lefkit {

Face Monomial::support() const {
  Face s = vars;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string Monomial::to_string(char letter) const {
  if (vars.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < vars.size()) {
    std::size_t j = i;
    while (j + 1 < vars.size() && vars[j + 1] == vars[i]) ++j;
    os << letter << vars[i];
    if (j > i) os << '^' << (j - i + 1);
    i = j + 1;
  }
  return os.str();
}

namespace {

void extend_monomials(const Face& support, std::size_t pos, int remaining, Monomial& acc,
                      std::vector<Monomial>& out) {
  // distribute `remaining` among support[pos..], each remaining spot >= 1
  const int slots = static_cast<int>(support.size() - pos);
  if (slots == 0) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  for (int take = 1; take + (slots - 1) <= remaining; ++take) {
    for (int t = 0; t < take; ++t) acc.vars.push_back(support[pos]);
    extend_monomials(support, pos + 1, remaining - take, acc, out);
    for (int t = 0; t < take; ++t) acc.vars.pop_back();
  }
}

}  // namespace

std::vector<Monomial> graded_basis(const Complex& k, int r) {
  if (r < 0) throw std::invalid_argument("graded_basis: negative degree");
  std::vector<Monomial> out;
  if (r == 0) {
    out.push_back(Monomial{});
    return out;
  }
  for (int dim = 0; dim <= std::min(k.dim(), r - 1); ++dim) {
    for (const Face& f : k.faces(dim)) {
      Monomial acc;
      extend_monomials(f, 0, r, acc, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class F>
bool facet_restrictions_full_rank(const Complex& k, const LinearSystem& theta, F field) {
  for (const Face& facet : k.facets()) {
    Matrix<F> m(field, theta.size(), facet.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
      for (std::size_t j = 0; j < facet.size(); ++j)
        m(i, j) = field.from_int(theta[i][static_cast<std::size_t>(facet[j]) - 1]);
    if (rank(m) != facet.size()) return false;
  }
  return true;
}

}  // namespace

bool is_lsop(const Complex& k, const LinearSystem& theta, const FieldSpec& field) {
  if (static_cast<int>(theta.size()) != k.dim() + 1)
    throw std::invalid_argument("is_lsop: |Theta| must equal dim(K)+1");
  for (const LinearForm& form : theta)
    if (static_cast<int>(form.size()) != k.vertex_count())
      throw std::invalid_argument("is_lsop: form length differs from vertex count");
  if (field.is_rational())
    return facet_restrictions_full_rank(k, theta, RationalField{});
  return facet_restrictions_full_rank(k, theta, PrimeField{field.p});
}

LinearSystem draw_lsop(const Complex& k, const GenericityPolicy& policy, std::uint64_t trial,
                       const FieldSpec& field, int max_attempts) {
  const int d = k.dim() + 1;
  const int n = k.vertex_count();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    LinearSystem theta;
    for (int j = 0; j < d; ++j)
      theta.push_back(random_vector(
          policy, stream_id(Stream::theta, trial, static_cast<std::uint64_t>(attempt) * 64 + j),
          static_cast<std::size_t>(n)));
    if (is_lsop(k, theta, field)) return theta;
  }
  throw std::runtime_error("draw_lsop: no l.s.o.p. found within attempt budget");
}

}  // namespace lefkit
