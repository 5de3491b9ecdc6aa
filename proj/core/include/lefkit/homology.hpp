#pragma once

#include <optional>

#include "lefkit/complex.hpp"
#include "lefkit/linalg.hpp"

namespace lefkit {

// Matrix of the boundary map from k-faces to (k-1)-faces with alternating
// signs by sorted position; k = 0 is the augmentation row onto the empty
// face (reduced chain complex).
QMatrix boundary_matrix(const Complex& k, int degree);

struct BettiVector {
  // betti[k+1] = reduced Betti number in degree k, from k = -1 to dim.
  std::vector<long long> betti;
  long long b(int k) const { return betti.at(static_cast<std::size_t>(k + 1)); }
  bool operator==(const BettiVector&) const = default;
};

// Reduced rational Betti numbers.
BettiVector reduced_betti(const Complex& k);

struct HomologySphereVerdict {
  bool is_sphere = false;
  std::optional<Face> failing_face;  // first face whose link fails, if any
};

// K is a (Q-)homology sphere: pure, and for every face F (including the
// empty set) the link has the reduced homology of a sphere of its dimension.
HomologySphereVerdict is_homology_sphere(const Complex& k);

}  // namespace lefkit
