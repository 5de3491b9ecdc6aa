#include <set>

#include "doctest.h"
#include "lefkit/linalg.hpp"
#include "lefkit/policy.hpp"

using namespace lefkit;

TEST_CASE("rank and kernel on the stock examples") {
  RationalField q;
  CHECK(rank(QMatrix::identity(q, 3)) == 3);
  CHECK(kernel_basis(QMatrix::identity(q, 3)).empty());

  QMatrix zero(q, 2, 5);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).size() == 5);

  QMatrix m = QMatrix::from_int_rows(q, {{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == mpq_class(-2));
  CHECK(ker[0][1] == mpq_class(1));
}

TEST_CASE("kernel vectors satisfy Mv = 0 exactly") {
  RationalField q;
  GenericityPolicy policy;
  for (int inst = 0; inst < 10; ++inst) {
    QMatrix m(q, 4, 7);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        m(i, j) = q.from_int(random_int(policy, stream_id(Stream::misc, inst), i * 7 + j) % 9 - 4);
    for (const auto& v : kernel_basis(m)) {
      auto y = m.apply(v);
      for (const auto& e : y) CHECK(e == 0);
    }
    CHECK(kernel_basis(m).size() + rank(m) == 7);
  }
}

TEST_CASE("generic rank profile: stock examples") {
  RationalField q;
  auto e = [&](int i) {
    std::vector<mpq_class> v(3, 0);
    v[i] = 1;
    return v;
  };
  // columns (e1, e1, e2) -> first and third selected
  auto sel = generic_rank_profile(q, {e(0), e(0), e(1)});
  CHECK(sel == std::vector<std::size_t>{0, 2});
  // all-zero columns -> nothing selected
  std::vector<std::vector<mpq_class>> zeros(4, std::vector<mpq_class>(3, 0));
  CHECK(generic_rank_profile(q, zeros).empty());
}

TEST_CASE("generic rank profile is the lex-first column basis") {
  RationalField q;
  GenericityPolicy policy;
  for (int inst = 0; inst < 8; ++inst) {
    // random 3x6 with small entries so dependencies actually occur
    std::vector<std::vector<mpq_class>> cols(6, std::vector<mpq_class>(3));
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 3; ++i)
        cols[j][i] = q.from_int(random_int(policy, stream_id(Stream::misc, 100 + inst), j * 3 + i) % 3 - 1);
    auto sel = generic_rank_profile(q, cols);
    IncrementalSpan<RationalField> span(q, 3);
    std::size_t at = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool selected = at < sel.size() && sel[at] == j;
      if (selected) {
        CHECK(span.add(cols[j]));  // enlarges the span: independent
        ++at;
      } else {
        CHECK(span.contains(cols[j]));  // dependent on earlier selected ones
      }
    }
  }
}

TEST_CASE("rational rank agrees with prime-field rank on random integer matrices") {
  RationalField q;
  GenericityPolicy policy;
  for (int inst = 0; inst < 6; ++inst) {
    std::vector<std::vector<std::int64_t>> rows(5, std::vector<std::int64_t>(8));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 8; ++j)
        rows[i][j] = random_int(policy, stream_id(Stream::misc, 200 + inst), i * 8 + j) % 11 - 5;
    // plant a dependency
    rows[4] = rows[0];
    for (int j = 0; j < 8; ++j) rows[4][j] += 3 * rows[1][j];
    std::size_t rq = rank(QMatrix::from_int_rows(q, rows));
    // prime-field rank can only drop below the rational rank; with random
    // 31-bit moduli a drop flags a bad prime and triggers a retry
    bool agreed = false;
    for (std::uint64_t retry = 0; retry < 3 && !agreed; ++retry) {
      PrimeField fp(certification_prime(policy, stream_id(Stream::certification_prime, inst, retry)));
      std::size_t rp = rank(Matrix<PrimeField>::from_int_rows(fp, rows));
      CHECK(rp <= rq);
      agreed = rp == rq;
    }
    CHECK(agreed);
  }
}

TEST_CASE("solve returns exact solutions") {
  RationalField q;
  QMatrix m = QMatrix::from_int_rows(q, {{2, 1}, {1, 3}});
  auto x = solve(m, {q.from_int(5), q.from_int(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == mpq_class(1));
  CHECK((*x)[1] == mpq_class(3));
  // inconsistent system
  QMatrix s = QMatrix::from_int_rows(q, {{1, 1}, {1, 1}});
  CHECK(!solve(s, {q.from_int(0), q.from_int(1)}).has_value());
}

TEST_CASE("deterministic draws and independent streams") {
  GenericityPolicy policy;
  policy.seed = 42;
  auto a = random_vector(policy, stream_id(Stream::theta, 0), 16);
  auto b = random_vector(policy, stream_id(Stream::theta, 0), 16);
  CHECK(a == b);
  CHECK(random_vector(policy, stream_id(Stream::theta, 0), 0).empty());
  for (std::int64_t v : a) {
    CHECK(v >= -policy.coefficient_bound);
    CHECK(v <= policy.coefficient_bound);
  }
  // distinct trial indices give distinct streams: over 1000 draws expect no
  // repeated vectors at all
  std::set<std::vector<std::int64_t>> seen;
  for (int t = 0; t < 1000; ++t) seen.insert(random_vector(policy, stream_id(Stream::theta, t), 4));
  CHECK(seen.size() == 1000);
}

TEST_CASE("certification primes are 31-bit primes") {
  GenericityPolicy policy;
  for (int i = 0; i < 5; ++i) {
    std::uint64_t p = certification_prime(policy, stream_id(Stream::certification_prime, i));
    CHECK(p > (1ULL << 30));
    CHECK(p < (1ULL << 31));
    CHECK(is_prime_u64(p));
  }
  CHECK(is_prime_u64(2));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64((1ULL << 31) - 3));
  CHECK(is_prime_u64(2147483647ULL));  // 2^31 - 1
}
