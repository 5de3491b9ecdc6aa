#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lefkit {

using Vertex = int;
// A face is a strictly increasing sequence of 1-based vertex labels.
using Face = std::vector<Vertex>;

// Size first, then lex; gives a canonical listing of mixed-dimension sets.
bool face_less(const Face& a, const Face& b);
// The paper's order on equal-sized sets: S < T iff min(S xor T) lies in S.
bool face_lex_less(const Face& a, const Face& b);

bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
std::string face_to_string(const Face& f);

// Finite simplicial complex on ambient vertex set [1..n], stored by its
// facets (an antichain). The empty face is always a member; faces are
// materialized per dimension on demand and memoized. Values are immutable
// after construction, so sharing the memo across copies is safe.
class Complex {
 public:
  // Normalizes: sorts, deduplicates, drops faces contained in others.
  static Complex from_facets(int n, std::vector<Face> facets);
  // Builds from a full face set; throws if it is not downward closed.
  static Complex from_faces(int n, const std::vector<Face>& faces);

  int vertex_count() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<Face>& facets() const { return facets_; }

  // Faces of cardinality k+1; k = -1 yields {[]}; out of range yields {}.
  const std::vector<Face>& faces(int k) const;
  // All faces including the empty one, by increasing dimension.
  std::vector<Face> all_faces() const;
  long long face_count(int k) const;

  bool contains(const Face& f) const;
  bool is_pure() const;
  // Vertices that actually occur (labels may be unused, e.g. after links).
  std::vector<Vertex> vertex_support() const;

  bool operator==(const Complex& other) const {
    return n_ == other.n_ && facets_ == other.facets_;
  }

 private:
  Complex(int n, std::vector<Face> facets);

  int n_;
  int dim_;
  std::vector<Face> facets_;

  struct Memo {
    std::mutex mutex;
    std::map<int, std::vector<Face>> by_dim;
  };
  std::shared_ptr<Memo> memo_;
};

struct FVector {
  // counts[k+1] = f_k, starting at f_{-1} = 1.
  std::vector<long long> counts;
  long long f(int k) const { return counts.at(static_cast<std::size_t>(k + 1)); }
  int dim() const { return static_cast<int>(counts.size()) - 2; }
  bool operator==(const FVector&) const = default;
};

struct HVector {
  std::vector<long long> h;  // h_0..h_d
  int d() const { return static_cast<int>(h.size()) - 1; }
  bool symmetric() const;
  bool operator==(const HVector&) const = default;
};

struct GVector {
  std::vector<long long> g;  // g_0..g_{floor(d/2)}
  bool operator==(const GVector&) const = default;
};

FVector f_vector(const Complex& k);
HVector h_vector(const Complex& k);
// Defined only for symmetric h; throws "h not symmetric" otherwise.
GVector g_vector(const Complex& k);

long long binomial(long long n, long long k);

// lk(F,K) = {T : T disjoint from F, T union F in K}, on the same ambient
// vertex set. link(K, {}) == K. Throws if F is not a face.
Complex link(const Complex& k, const Face& f);
// Closed star: the closure of {S in K : F subseteq S}.
Complex closed_star(const Complex& k, const Face& f);
Complex skeleton(const Complex& k, int dim);

bool is_shifted(const Complex& k);

// Relabel by a permutation of [1..n] given in one-line notation.
Complex relabel(const Complex& k, const std::vector<int>& perm);
// Restrict to the vertex support, relabeling order-preservingly to [1..m].
Complex compactify(const Complex& k);
// Face-set intersection of complexes on the same ambient vertex set.
Complex intersect(const Complex& a, const Complex& b);

// Generators.
Complex simplex_boundary(int d);
Complex cross_polytope_boundary(int d);
// Facets by the Gale evenness criterion on [1..n].
Complex cyclic_polytope_boundary(int d, int n);
// The extremal shifted complex of the shifting-theoretic upper bound theorem.
Complex delta_dn(int d, int n);
// Forbidden sets T_{d-k} characterizing Delta(d,n), 0 <= k <= floor(d/2).
Face t_set(int d, int k);

}  // namespace lefkit
