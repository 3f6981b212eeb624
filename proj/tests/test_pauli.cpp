#include "doctest.h"
#include "stabsim/dense_math.hpp"
#include "stabsim/pauli.hpp"
#include "stabsim/rng.hpp"
#include "test_helpers.hpp"

using namespace stabsim;

namespace {
CMat dense_of(const PauliOperator& p) {
  CMat m(std::size_t(1) << p.n);
  m.a = p.to_dense();
  return m;
}
}  // namespace

TEST_CASE("pauli string round trip") {
  auto p = PauliOperator::from_string(4, "-iXYZI");
  CHECK(p.to_string() == "-iXYZI");
  CHECK(PauliOperator::from_string(2, "+ZZ").to_string() == "+ZZ");
  CHECK_THROWS(PauliOperator::from_string(2, "+Z"));
  CHECK_THROWS(PauliOperator::from_string(2, "+QQ"));
}

TEST_CASE("multiplication matches dense matrix product (n=2 exhaustive)") {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b)
      for (int pa = 0; pa < 4; pa += 2)
        for (int pb = 0; pb < 4; pb += 2) {
          PauliOperator p{2, a & 3, a >> 2, static_cast<std::uint8_t>(pa)};
          PauliOperator q{2, b & 3, b >> 2, static_cast<std::uint8_t>(pb)};
          auto want = mat_mul(dense_of(p), dense_of(q));
          auto got = dense_of(p * q);
          CHECK(max_abs_diff(want, got) < 1e-15);
        }
}

TEST_CASE("multiplication matches dense on random 4-qubit pairs") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator p{4, rng.next() & 15, rng.next() & 15, static_cast<std::uint8_t>(rng.next() & 3)};
    PauliOperator q{4, rng.next() & 15, rng.next() & 15, static_cast<std::uint8_t>(rng.next() & 3)};
    CHECK(max_abs_diff(mat_mul(dense_of(p), dense_of(q)), dense_of(p * q)) < 1e-15);
  }
}

TEST_CASE("commutation and hermiticity") {
  auto X0 = PauliOperator::x(2, 0), Z0 = PauliOperator::z(2, 0), Z1 = PauliOperator::z(2, 1);
  CHECK(!X0.commutes_with(Z0));
  CHECK(X0.commutes_with(Z1));
  CHECK(PauliOperator::y(3, 1).is_hermitian());
  PauliOperator bad{1, 1, 1, 0};  // XZ without the i
  CHECK(!bad.is_hermitian());
}
