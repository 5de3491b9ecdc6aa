#pragma once

#include <map>

#include "lefkit/complex.hpp"

namespace lefkit {

// Vertex identification used for gluing in the connected sum: maps vertex
// labels of L to labels of K, defined exactly on a facet of L.
using VertexMap = std::map<Vertex, Vertex>;

// K * L on disjoint labels; L's vertices are relabeled to n_K+1..n_K+n_L.
Complex join(const Complex& k, const Complex& l);

// (K u L) minus the open facet sigma, where `glue` maps a facet of L
// bijectively onto a facet of K. Requires the glued complexes to intersect
// in exactly the closed facet <sigma>.
Complex connected_sum(const Complex& k, const Complex& l, const VertexMap& glue);

// Stellar(F, K) = (K \ st(F,K)) u ({v_F} * boundary(F) * lk(F,K)),
// with the new vertex v_F labeled n+1.
Complex stellar(const Complex& k, const Face& f);

// Iterated stellar subdivision over faces of dimension > 0, weakly
// decreasing size, ties broken lexicographically.
Complex barycentric(const Complex& k);

// Replace u by v: {T : u not in T} u {(T \ u) + v : u in T}, then relabel so
// v keeps its label and labels above u shift down by one.
Complex identify(const Complex& k, Vertex u, Vertex v);

// lk(a) ∩ lk(b) == lk({a,b}); requires {a,b} to be a face.
bool link_condition(const Complex& k, Vertex a, Vertex b);

// Edge contraction a -> b guarded by the Link Condition.
Complex contract(const Complex& k, Vertex a, Vertex b);

}  // namespace lefkit
