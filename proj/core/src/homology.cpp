#include "lefkit/homology.hpp"

#include <map>
#include <stdexcept>

namespace lefkit {

QMatrix boundary_matrix(const Complex& k, int degree) {
  if (degree < 0 || degree > k.dim() + 1)
    throw std::invalid_argument("boundary_matrix: degree out of range");
  RationalField q;
  const auto& domain = k.faces(degree);
  const auto& codomain = k.faces(degree - 1);
  std::map<Face, std::size_t> row_of;
  for (std::size_t i = 0; i < codomain.size(); ++i) row_of[codomain[i]] = i;
  QMatrix m(q, codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Face& f = domain[j];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      m(row_of.at(sub), j) = q.from_int(drop % 2 ? -1 : 1);
    }
  }
  return m;
}

BettiVector reduced_betti(const Complex& k) {
  const int dim = k.dim();
  // rank of the boundary map out of degree j, for j = 0..dim (+ zero beyond)
  std::vector<long long> rk(static_cast<std::size_t>(dim) + 2, 0);
  for (int j = 0; j <= dim; ++j)
    rk[j] = static_cast<long long>(rank(boundary_matrix(k, j)));
  BettiVector out;
  for (int j = -1; j <= dim; ++j) {
    long long faces_j = k.face_count(j);
    long long rank_out = j >= 0 ? rk[j] : 0;
    long long rank_in = j + 1 <= dim ? rk[j + 1] : 0;
    out.betti.push_back(faces_j - rank_out - rank_in);
  }
  return out;
}

HomologySphereVerdict is_homology_sphere(const Complex& k) {
  if (!k.is_pure()) return {false, std::nullopt};
  for (int d = -1; d <= k.dim(); ++d) {
    for (const Face& f : k.faces(d)) {
      Complex lk = link(k, f);
      BettiVector betti = reduced_betti(lk);
      const int top = lk.dim();
      for (int j = -1; j <= top; ++j) {
        long long want = (j == top) ? 1 : 0;
        if (betti.b(j) != want) return {false, f};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace lefkit
