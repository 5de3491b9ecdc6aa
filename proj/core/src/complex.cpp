#include "lefkit/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefkit {

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool face_lex_less(const Face& a, const Face& b) {
  // min(S xor T) in S is plain lexicographic order on sorted sequences.
  return a < b;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_minus(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string face_to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << '}';
  return os.str();
}

namespace {

Face normalized_face(Face f) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw std::invalid_argument("face has a repeated vertex");
  return f;
}

}  // namespace

Complex::Complex(int n, std::vector<Face> facets)
    : n_(n), facets_(std::move(facets)), memo_(std::make_shared<Memo>()) {
  dim_ = -1;
  for (const Face& f : facets_) dim_ = std::max<int>(dim_, static_cast<int>(f.size()) - 1);
}

Complex Complex::from_facets(int n, std::vector<Face> facets) {
  if (n < 0) throw std::invalid_argument("complex: negative vertex count");
  for (Face& f : facets) {
    f = normalized_face(std::move(f));
    for (Vertex v : f)
      if (v < 1 || v > n) throw std::invalid_argument("complex: vertex label out of [1,n]");
  }
  std::sort(facets.begin(), facets.end(), face_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Drop faces contained in a later (hence larger or equal sized) one.
  std::vector<Face> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
      if (i != j && face_subset(facets[i], facets[j])) dominated = true;
    if (!dominated) maximal.push_back(facets[i]);
  }
  if (maximal.empty()) maximal.push_back({});  // the complex {[]}
  return Complex(n, std::move(maximal));
}

Complex Complex::from_faces(int n, const std::vector<Face>& faces) {
  std::set<Face> all;
  all.insert(Face{});
  for (const Face& f : faces) all.insert(normalized_face(f));
  for (const Face& f : all) {
    if (f.empty()) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      if (!all.count(sub))
        throw std::invalid_argument("face set is not downward closed at " + face_to_string(f));
    }
  }
  std::vector<Face> maximal;
  for (const Face& f : all) {
    bool dominated = false;
    for (const Face& g : all)
      if (f != g && face_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  return from_facets(n, std::move(maximal));
}

const std::vector<Face>& Complex::faces(int k) const {
  static const std::vector<Face> kEmpty;
  if (k < -1 || k > dim_) return kEmpty;
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto it = memo_->by_dim.find(k);
  if (it != memo_->by_dim.end()) return it->second;
  std::set<Face> out;
  if (k == -1) {
    out.insert(Face{});
  } else {
    const std::size_t size = static_cast<std::size_t>(k) + 1;
    for (const Face& facet : facets_) {
      if (facet.size() < size) continue;
      // enumerate all subsets of `facet` of the given size
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        Face f(size);
        for (std::size_t i = 0; i < size; ++i) f[i] = facet[idx[i]];
        out.insert(std::move(f));
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == facet.size() - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  auto& slot = memo_->by_dim[k];
  slot.assign(out.begin(), out.end());
  return slot;
}

std::vector<Face> Complex::all_faces() const {
  std::vector<Face> out;
  for (int k = -1; k <= dim_; ++k) {
    const auto& fk = faces(k);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

long long Complex::face_count(int k) const {
  return static_cast<long long>(faces(k).size());
}

bool Complex::contains(const Face& f) const {
  Face g = normalized_face(f);
  for (const Face& facet : facets_)
    if (face_subset(g, facet)) return true;
  return false;
}

bool Complex::is_pure() const {
  for (const Face& f : facets_)
    if (static_cast<int>(f.size()) != dim_ + 1) return false;
  return true;
}

std::vector<Vertex> Complex::vertex_support() const {
  std::set<Vertex> s;
  for (const Face& f : facets_) s.insert(f.begin(), f.end());
  return std::vector<Vertex>(s.begin(), s.end());
}

bool HVector::symmetric() const {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FVector f_vector(const Complex& k) {
  FVector out;
  out.counts.push_back(1);
  for (int i = 0; i <= k.dim(); ++i) out.counts.push_back(k.face_count(i));
  return out;
}

HVector h_vector(const Complex& k) {
  const int d = k.dim() + 1;
  FVector f = f_vector(k);
  HVector out;
  out.h.resize(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long acc = 0;
    for (int i = 0; i <= j; ++i)
      acc += ((j - i) % 2 ? -1 : 1) * binomial(d - i, j - i) * f.f(i - 1);
    out.h[j] = acc;
  }
  return out;
}

GVector g_vector(const Complex& k) {
  HVector h = h_vector(k);
  if (!h.symmetric()) throw std::invalid_argument("g-vector: h not symmetric");
  GVector out;
  const int top = h.d() / 2;
  out.g.resize(top + 1);
  out.g[0] = 1;
  for (int i = 1; i <= top; ++i) out.g[i] = h.h[i] - h.h[i - 1];
  return out;
}

Complex link(const Complex& k, const Face& f) {
  if (!k.contains(f)) throw std::invalid_argument("link: " + face_to_string(f) + " is not a face");
  if (f.empty()) return k;
  std::vector<Face> facets;
  for (const Face& facet : k.facets())
    if (face_subset(f, facet)) facets.push_back(face_minus(facet, f));
  return Complex::from_facets(k.vertex_count(), std::move(facets));
}

Complex closed_star(const Complex& k, const Face& f) {
  if (!k.contains(f)) throw std::invalid_argument("star: " + face_to_string(f) + " is not a face");
  std::vector<Face> facets;
  for (const Face& facet : k.facets())
    if (face_subset(f, facet)) facets.push_back(facet);
  return Complex::from_facets(k.vertex_count(), std::move(facets));
}

Complex skeleton(const Complex& k, int dim) {
  if (dim < -1) dim = -1;
  if (dim >= k.dim()) return k;
  std::vector<Face> facets;
  for (int i = -1; i <= dim; ++i) {
    const auto& fi = k.faces(i);
    facets.insert(facets.end(), fi.begin(), fi.end());
  }
  return Complex::from_facets(k.vertex_count(), std::move(facets));
}

bool is_shifted(const Complex& k) {
  for (int dim = 0; dim <= k.dim(); ++dim) {
    for (const Face& s : k.faces(dim)) {
      for (Vertex j : s) {
        for (Vertex i = 1; i < j; ++i) {
          if (std::binary_search(s.begin(), s.end(), i)) continue;
          Face swapped = face_union(face_minus(s, {j}), {i});
          if (!k.contains(swapped)) return false;
        }
      }
    }
  }
  return true;
}

Complex relabel(const Complex& k, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != k.vertex_count())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(perm.at(static_cast<std::size_t>(v) - 1));
    std::sort(g.begin(), g.end());
    facets.push_back(std::move(g));
  }
  return Complex::from_facets(k.vertex_count(), std::move(facets));
}

Complex compactify(const Complex& k) {
  std::vector<Vertex> support = k.vertex_support();
  std::map<Vertex, Vertex> to_new;
  for (std::size_t i = 0; i < support.size(); ++i)
    to_new[support[i]] = static_cast<Vertex>(i) + 1;
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(to_new[v]);
    facets.push_back(std::move(g));
  }
  return Complex::from_facets(static_cast<int>(support.size()), std::move(facets));
}

Complex intersect(const Complex& a, const Complex& b) {
  if (a.vertex_count() != b.vertex_count())
    throw std::invalid_argument("intersect: ambient vertex sets differ");
  std::vector<Face> common;
  for (int k = 0; k <= std::min(a.dim(), b.dim()); ++k)
    for (const Face& f : a.faces(k))
      if (b.contains(f)) common.push_back(f);
  return Complex::from_facets(a.vertex_count(), std::move(common));
}

Complex simplex_boundary(int d) {
  if (d < 1) throw std::invalid_argument("simplex_boundary: d must be >= 1");
  std::vector<Face> facets;
  Face all(d + 1);
  for (int i = 0; i <= d; ++i) all[i] = i + 1;
  for (int drop = 0; drop <= d; ++drop) {
    Face f;
    for (int i = 0; i <= d; ++i)
      if (i != drop) f.push_back(all[i]);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(d + 1, std::move(facets));
}

Complex cross_polytope_boundary(int d) {
  if (d < 1) throw std::invalid_argument("cross_polytope_boundary: d must be >= 1");
  std::vector<Face> facets;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Face f;
    for (int i = 0; i < d; ++i) f.push_back((mask >> i & 1) ? i + 1 + d : i + 1);
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(2 * d, std::move(facets));
}

namespace {

// Gale evenness on [1..n]: S is a facet iff every maximal run of consecutive
// elements of S avoiding 1 and n has even length.
bool gale_even(const Face& s, int n) {
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
    const bool internal = s[i] != 1 && s[j] != n;
    if (internal && (j - i + 1) % 2 != 0) return false;
    i = j + 1;
  }
  return true;
}

void for_each_subset(int n, int size, const std::function<void(const Face&)>& fn) {
  if (size < 0 || size > n) return;
  Face f(size);
  for (int i = 0; i < size; ++i) f[i] = i + 1;
  while (true) {
    fn(f);
    int i = size - 1;
    while (i >= 0 && f[i] == n - size + i + 1) --i;
    if (i < 0) break;
    ++f[i];
    for (int j = i + 1; j < size; ++j) f[j] = f[j - 1] + 1;
  }
}

}  // namespace

Complex cyclic_polytope_boundary(int d, int n) {
  if (d < 1) throw std::invalid_argument("cyclic_polytope_boundary: d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("cyclic_polytope_boundary: need n >= d+1");
  std::vector<Face> facets;
  for_each_subset(n, d, [&](const Face& s) {
    if (gale_even(s, n)) facets.push_back(s);
  });
  return Complex::from_facets(n, std::move(facets));
}

Complex delta_dn(int d, int n) {
  if (d < 1) throw std::invalid_argument("delta_dn: d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("delta_dn: need n >= d+1");
  std::vector<Face> facets;
  for_each_subset(n, d, [&](const Face& s) {
    for (int k = 1; k <= n; ++k) {
      if (std::binary_search(s.begin(), s.end(), k)) continue;
      // [k+1, d-k+2] must be contained in s; an empty interval always is.
      for (int v = k + 1; v <= d - k + 2; ++v)
        if (!std::binary_search(s.begin(), s.end(), v)) return;
    }
    facets.push_back(s);
  });
  return Complex::from_facets(n, std::move(facets));
}

Face t_set(int d, int k) {
  if (k < 0 || k > d / 2) throw std::invalid_argument("t_set: need 0 <= k <= floor(d/2)");
  Face t;
  for (int v = k + 2; v <= d - k; ++v) t.push_back(v);
  for (int v = d - k + 2; v <= d + 2; ++v) t.push_back(v);
  return t;
}

}  // namespace lefkit
