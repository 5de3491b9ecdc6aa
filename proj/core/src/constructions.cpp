#include "lefkit/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lefkit {

Complex join(const Complex& k, const Complex& l) {
  const int nk = k.vertex_count();
  std::vector<Face> facets;
  for (const Face& a : k.facets()) {
    for (const Face& b : l.facets()) {
      Face f = a;
      for (Vertex v : b) f.push_back(v + nk);
      facets.push_back(std::move(f));
    }
  }
  return Complex::from_facets(nk + l.vertex_count(), std::move(facets));
}

Complex connected_sum(const Complex& k, const Complex& l, const VertexMap& glue) {
  // glue: vertices of a facet of L -> vertices of a facet of K, bijective.
  Face sigma_l, sigma_k;
  {
    std::set<Vertex> image;
    for (const auto& [from, to] : glue) {
      sigma_l.push_back(from);
      if (!image.insert(to).second)
        throw std::invalid_argument("connected_sum: glue map is not injective");
    }
    sigma_k.assign(image.begin(), image.end());
  }
  std::sort(sigma_l.begin(), sigma_l.end());

  auto is_facet = [](const Complex& c, const Face& f) {
    for (const Face& facet : c.facets())
      if (facet == f) return true;
    return false;
  };
  if (!is_facet(k, sigma_k))
    throw std::invalid_argument("connected_sum: glue image is not a facet of K");
  if (!is_facet(l, sigma_l))
    throw std::invalid_argument("connected_sum: glue domain is not a facet of L");
  if (k.dim() != l.dim())
    throw std::invalid_argument("connected_sum: dimensions differ");

  // Relabel L: glued vertices take their K labels, the rest n_K+1, ...
  const int nk = k.vertex_count();
  std::map<Vertex, Vertex> to_union = glue;
  Vertex next = nk + 1;
  for (Vertex v = 1; v <= l.vertex_count(); ++v)
    if (!to_union.count(v)) to_union[v] = next++;
  std::vector<Face> l_facets;
  for (const Face& f : l.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(to_union[v]);
    std::sort(g.begin(), g.end());
    l_facets.push_back(std::move(g));
  }
  const int n_union = next - 1;
  Complex l_emb = Complex::from_facets(n_union, std::move(l_facets));
  Complex k_emb = Complex::from_facets(n_union, k.facets());

  // The glued complexes must meet in exactly the closed facet <sigma>.
  Complex common = intersect(k_emb, l_emb);
  for (const Face& f : common.facets())
    if (!face_subset(f, sigma_k))
      throw std::invalid_argument("connected_sum: intersection exceeds the closed facet at " +
                                  face_to_string(f));

  std::vector<Face> facets;
  for (const Face& f : k_emb.facets())
    if (f != sigma_k) facets.push_back(f);
  for (const Face& f : l_emb.facets())
    if (f != sigma_k) facets.push_back(f);
  // Keep the boundary of sigma: its subfacets lie in other facets already,
  // except in degenerate cases like d = 1 where they must be added back.
  for (std::size_t drop = 0; drop < sigma_k.size(); ++drop) {
    Face sub;
    for (std::size_t i = 0; i < sigma_k.size(); ++i)
      if (i != drop) sub.push_back(sigma_k[i]);
    facets.push_back(std::move(sub));
  }
  return Complex::from_facets(n_union, std::move(facets));
}

Complex stellar(const Complex& k, const Face& f) {
  if (f.empty() || !k.contains(f))
    throw std::invalid_argument("stellar: " + face_to_string(f) + " is not a nonempty face");
  const int n = k.vertex_count();
  const Vertex apex = n + 1;
  std::vector<Face> facets;
  for (const Face& facet : k.facets())
    if (!face_subset(f, facet)) facets.push_back(facet);
  // {v_F} * boundary(F) * lk(F,K); boundary(F) = {F minus one vertex}.
  Complex lk = link(k, f);
  for (Vertex drop : f) {
    Face base = face_minus(f, {drop});
    for (const Face& g : lk.facets()) {
      Face nf = face_union(base, g);
      nf.push_back(apex);
      std::sort(nf.begin(), nf.end());
      facets.push_back(std::move(nf));
    }
  }
  return Complex::from_facets(n + 1, std::move(facets));
}

Complex barycentric(const Complex& k) {
  std::vector<Face> order;
  for (int dim = k.dim(); dim >= 1; --dim) {
    const auto& fs = k.faces(dim);
    order.insert(order.end(), fs.begin(), fs.end());  // already lex within a dimension
  }
  Complex out = k;
  for (const Face& f : order) out = stellar(out, f);
  return out;
}

Complex identify(const Complex& k, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("identify: u and v must be distinct");
  if (!k.contains({u}) || !k.contains({v}))
    throw std::invalid_argument("identify: u and v must be vertices of K");
  std::vector<Face> faces;
  for (const Face& t : k.all_faces()) {
    if (std::binary_search(t.begin(), t.end(), u))
      faces.push_back(face_union(face_minus(t, {u}), {v}));
    else
      faces.push_back(t);
  }
  // v keeps its label, labels above u shift down by one.
  std::vector<Face> relabeled;
  for (const Face& f : faces) {
    Face g;
    for (Vertex w : f) g.push_back(w > u ? w - 1 : w);
    std::sort(g.begin(), g.end());
    relabeled.push_back(std::move(g));
  }
  return Complex::from_facets(k.vertex_count() - 1, std::move(relabeled));
}

bool link_condition(const Complex& k, Vertex a, Vertex b) {
  Face ab{a, b};
  std::sort(ab.begin(), ab.end());
  if (!k.contains(ab))
    throw std::invalid_argument("link_condition: {a,b} is not a face");
  Complex both = intersect(link(k, {a}), link(k, {b}));
  return both == link(k, ab);
}

Complex contract(const Complex& k, Vertex a, Vertex b) {
  if (!link_condition(k, a, b))
    throw std::invalid_argument("contract: Link Condition fails for the given pair");
  return identify(k, a, b);
}

}  // namespace lefkit
