#include "lefkit/policy.hpp"

namespace lefkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin bases for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field: modulus is not prime");
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldSpec::describe() const {
  return is_rational() ? "Q" : ("GF(" + std::to_string(p) + ")");
}

std::uint64_t stream_id(Stream purpose, std::uint64_t trial, std::uint64_t index) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(purpose));
  h = splitmix64(h ^ (trial * 0x9e3779b97f4a7c15ULL));
  h = splitmix64(h ^ (index * 0xc2b2ae3d27d4eb4fULL));
  return h;
}

std::uint64_t random_u64(const GenericityPolicy& policy, std::uint64_t stream,
                         std::uint64_t position) {
  std::uint64_t h = splitmix64(policy.seed ^ 0x5851f42d4c957f2dULL);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ position);
  return h;
}

std::int64_t random_int(const GenericityPolicy& policy, std::uint64_t stream,
                        std::uint64_t position) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(policy.coefficient_bound) + 1;
  const std::uint64_t limit = (~0ULL / range) * range;
  std::uint64_t x = random_u64(policy, stream, position);
  std::uint64_t k = 1;
  while (x >= limit) {  // rejection keeps the draw exactly uniform
    x = random_u64(policy, stream, position ^ (0xb5026f5aa96619e9ULL * k++));
  }
  return static_cast<std::int64_t>(x % range) - policy.coefficient_bound;
}

std::vector<std::int64_t> random_vector(const GenericityPolicy& policy,
                                        std::uint64_t stream, std::size_t length) {
  std::vector<std::int64_t> v(length);
  for (std::size_t i = 0; i < length; ++i) v[i] = random_int(policy, stream, i);
  return v;
}

std::uint64_t certification_prime(const GenericityPolicy& policy, std::uint64_t stream) {
  const std::uint64_t lo = 1ULL << 30, hi = 1ULL << 31;
  std::uint64_t x = lo + random_u64(policy, stream, 0xdeadULL) % (hi - lo - 4096);
  x |= 1;
  while (!is_prime_u64(x)) x += 2;
  return x;
}

std::vector<int> random_permutation(const GenericityPolicy& policy,
                                    std::uint64_t stream, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uint64_t j = random_u64(policy, stream, static_cast<std::uint64_t>(i)) %
                      static_cast<std::uint64_t>(i + 1);
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace lefkit
