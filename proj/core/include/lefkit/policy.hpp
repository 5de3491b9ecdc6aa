#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefkit {

// Controls every randomized computation in the library. Genericity is
// realized by random integer coefficients drawn from [-coefficient_bound,
// coefficient_bound]; `trials` independent draws are compared or maximized
// over depending on the consumer. Everything downstream is a pure function
// of this struct, so runs are reproducible bit for bit.
struct GenericityPolicy {
  std::uint64_t seed = 0;
  int trials = 3;
  std::int64_t coefficient_bound = std::int64_t(1) << 20;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("policy: trials must be >= 1");
    if (coefficient_bound < (std::int64_t(1) << 16))
      throw std::invalid_argument("policy: coefficient bound must be >= 2^16");
  }
};

// Ground field selector: the rationals (default) or a prime field.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rational() const { return kind == Kind::rationals; }
  std::string describe() const;
};

bool is_prime_u64(std::uint64_t n);

// Stream identifiers keep independent uses of the same policy from
// colliding. A stream is (purpose, trial, index) folded into 64 bits.
enum class Stream : std::uint64_t {
  theta = 1,
  omega = 2,
  shift_matrix = 3,
  embedding = 4,
  certification_prime = 5,
  permutation = 6,
  random_complex = 7,
  ext_rows = 8,
  misc = 9,
};

std::uint64_t stream_id(Stream purpose, std::uint64_t trial, std::uint64_t index = 0);

// Deterministic counter-based generator: value depends only on
// (seed, stream, position).
std::uint64_t random_u64(const GenericityPolicy& policy, std::uint64_t stream,
                         std::uint64_t position);

// Uniform integer in [-B, B] where B = policy.coefficient_bound.
std::int64_t random_int(const GenericityPolicy& policy, std::uint64_t stream,
                        std::uint64_t position);

std::vector<std::int64_t> random_vector(const GenericityPolicy& policy,
                                        std::uint64_t stream, std::size_t length);

// Random prime in (2^30, 2^31), used as a verification modulus.
std::uint64_t certification_prime(const GenericityPolicy& policy, std::uint64_t stream);

// Random permutation of [1..n] (one-line notation, perm[i-1] is the image of i).
std::vector<int> random_permutation(const GenericityPolicy& policy,
                                    std::uint64_t stream, int n);

}  // namespace lefkit
