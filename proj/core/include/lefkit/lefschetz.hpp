#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lefkit/constructions.hpp"
#include "lefkit/face_ring.hpp"

namespace lefkit {

// Multiplication by omega^power from H_i to H_{i+power} in quotient
// coordinates, computed as `power` single steps with reduction after each.
template <class F>
Matrix<F> mult_matrix(const GradedQuotient<F>& q, const LinearForm& omega, int i, int power) {
  if (i < 0 || i + power > q.max_degree())
    throw std::invalid_argument("mult_matrix: degree overflow");
  const F& field = q.field();
  const std::size_t domain = static_cast<std::size_t>(q.dim(i));
  const std::size_t codomain = static_cast<std::size_t>(q.dim(i + power));
  Matrix<F> m(field, codomain, domain);
  for (std::size_t c = 0; c < domain; ++c) {
    std::vector<typename F::Element> v(domain, field.zero());
    v[c] = field.one();
    for (int step = 0; step < power; ++step) v = q.multiply_step(i + step, v, omega);
    for (std::size_t r = 0; r < codomain; ++r) m(r, c) = v[r];
  }
  return m;
}

enum class Certification { witness_proved, probabilistic_negative, observed };
std::string to_string(Certification c);

struct PowerMapRank {
  int i = 0;            // omega^{d-2i}: H_i -> H_{d-i}
  long long rank = 0;
  long long target = 0; // h_i
  bool ok = false;
  int trial = -1;       // trial achieving the rank
};

struct SingleStepRank {
  int i = 0;            // omega: H_{i-1} -> H_i
  long long rank = 0;
  bool injective = false;
  bool surjective = false;
};

struct LefschetzReport {
  int d = 0;
  HVector h;
  bool h_symmetric = false;
  bool sphere_checked = false;
  bool sphere = false;
  std::vector<long long> quotient_dims;  // degrees 0..d of the reported witness
  bool dims_match_h = false;
  std::vector<PowerMapRank> power_maps;     // i = 0..floor(d/2)
  std::vector<SingleStepRank> single_steps; // i = 1..d
  std::optional<bool> sl;  // absent when h is not symmetric
  bool wl = false;
  bool wwl = false;
  Certification certification = Certification::observed;
  GenericityPolicy policy;
  FieldSpec field;
  int witness_trial = -1;  // trial whose witness hit every SL target
  LinearSystem theta;      // witness of that trial (or of the last trial)
  LinearForm omega;
  std::uint64_t modulus = 0;  // internal verification prime in rational mode

  bool passes(const std::string& which) const;  // "sl" | "wl" | "wwl"
};

nlohmann::json report_to_json(const LefschetzReport& r);

// Randomized certification: draws (Theta, omega) per trial, validates the
// l.s.o.p., and reports the best ranks over trials. In rational mode the
// ranks are evaluated modulo a random 31-bit prime; hitting the target is a
// proof over Q (mod-p ranks bound rational ranks from below, and the
// homology-sphere + l.s.o.p. checks pin the rational dimensions), while a
// miss is re-verified over Q before being reported as a negative.
LefschetzReport lefschetz_report(const Complex& k, const GenericityPolicy& policy,
                                 const FieldSpec& field = FieldSpec::rationals());

// Same report for one explicit witness; nothing is redrawn.
LefschetzReport verify_sl_witness(const Complex& k, const LinearSystem& theta,
                                  const LinearForm& omega, const GenericityPolicy& policy,
                                  const FieldSpec& field = FieldSpec::rationals());

// Omega_SL(K,i) membership by sampling: some drawn witness makes
// omega^{d-2i}: H_i -> H_{d-i} injective.
bool is_i_lefschetz(const Complex& k, int i, const GenericityPolicy& policy,
                    const FieldSpec& field = FieldSpec::rationals());

// The omega-invariant string decomposition of H(K,Theta) for an SL witness:
// strings starting in degree i number g_i and have length d-2i+1.
template <class F>
struct StringDecomposition {
  struct String {
    int start_degree = 0;
    std::vector<std::vector<typename F::Element>> orbit;  // m, wm, ..., w^{d-2i}m
  };
  std::vector<String> strings;
  std::vector<long long> counts_by_start;  // index i: strings starting in degree i
  long long total_dimension = 0;
  bool spans = false;  // per-degree joint rank equals dim H
};

template <class F>
StringDecomposition<F> primitive_decomposition(const GradedQuotient<F>& q,
                                               const LinearForm& omega, int d);

struct JoinSlWitness {
  Complex join_complex;
  LinearSystem theta;  // Theta_K ⊎ Theta_L on the join's vertex set
  LinearForm omega;    // omega_K + omega_L
  LefschetzReport report;    // join verified with the composed witness
  LefschetzReport report_k;  // factor certifications
  LefschetzReport report_l;
};

// Theorem-style composed witness for the join; requires characteristic zero.
JoinSlWitness join_sl_witness(const Complex& k, const Complex& l,
                              const GenericityPolicy& policy,
                              const FieldSpec& field = FieldSpec::rationals());

struct ConnectedSumSlWitness {
  Complex sum;
  LinearSystem theta;  // common l.s.o.p. for K, L, <sigma> and K#L
  LinearForm omega;
  LefschetzReport report;    // K#L under the common witness
  LefschetzReport report_k;  // embedded summands, same witness
  LefschetzReport report_l;
  bool dims_additive = false;  // dim H(K#L)_i = dim H(K)_i + dim H(L)_i, 0<i<d
  std::vector<long long> dims_k, dims_l, dims_sum;
};

ConnectedSumSlWitness connected_sum_sl_witness(const Complex& k, const Complex& l,
                                               const VertexMap& glue,
                                               const GenericityPolicy& policy,
                                               const FieldSpec& field = FieldSpec::rationals());

}  // namespace lefkit
