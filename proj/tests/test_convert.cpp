#include <catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "relsig/oracle.hpp"

using namespace relsig;
using testutil::rationals;

namespace {

// Test-local reference: d via the literal Moebius double sum and level sums,
// sharing nothing with the conversion code under test.
std::vector<Rational> domination_by_brute_force(const StructureFunction& phi) {
  const int n = phi.n();
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  for (SubsetMask a = 0; a < phi.table_size(); ++a) {
    Rational coeff;
    for (SubsetMask b = 0; b <= a; ++b) {
      if ((b & a) != b) continue;
      const int sign_power = mask_popcount(a) - mask_popcount(b);
      if (phi.value(b)) coeff += (sign_power % 2 == 0) ? 1 : -1;
    }
    d[static_cast<std::size_t>(mask_popcount(a))] += coeff;
  }
  return d;
}

}  // namespace

TEST_CASE("vector type preconditions") {
  CHECK_THROWS_AS(SignatureVector(2, rationals({"1/2", "1/3"})), ValidationError);
  CHECK_THROWS_AS(TailSignature(2, rationals({"1", "1/2", "1/3"})), ValidationError);
  CHECK_THROWS_AS(TailSignature(2, rationals({"0", "1/2", "0"})), ValidationError);
  // A deliberately corrupted domination vector: d_0 = 1.
  try {
    DominationVector(2, rationals({"1", "0", "0"}));
    FAIL("expected a precondition failure");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::precondition);
  }
  CHECK_THROWS_AS(DominationVector(2, rationals({"0", "1", "1"})), ValidationError);
  CHECK_NOTHROW(SignatureVector::unchecked(2, rationals({"1/2", "1/3"})));
}

TEST_CASE("tail from signature") {
  const SignatureVector bridge(5, testutil::bridge_s());
  CHECK(tail_from_signature(bridge).values() == testutil::bridge_tail());
  CHECK(tail_from_signature(SignatureVector(3, rationals({"1", "0", "0"}))).values() ==
        rationals({"1", "0", "0", "0"}));
  CHECK(tail_from_signature(SignatureVector(3, rationals({"0", "0", "1"}))).values() ==
        rationals({"1", "1", "1", "0"}));
}

TEST_CASE("signature from tail") {
  const TailSignature bridge(5, testutil::bridge_tail());
  CHECK(signature_from_tail(bridge).values() == testutil::bridge_s());
  CHECK(signature_from_tail(TailSignature(2, rationals({"1", "0", "0"}))).values() ==
        rationals({"1", "0"}));
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto tail = testutil::random_tail(gen, 1 + static_cast<int>(gen() % 12));
    CHECK(tail_from_signature(signature_from_tail(tail)) == tail);
  }
}

TEST_CASE("domination from tail") {
  const TailSignature bridge(5, testutil::bridge_tail());
  CHECK(domination_from_tail(bridge).values() == testutil::bridge_d());
  CHECK(domination_from_tail(bridge, Route::closed).values() == testutil::bridge_d());

  CHECK(domination_from_tail(TailSignature(2, rationals({"1", "0", "0"}))).values() ==
        rationals({"0", "0", "1"}));

  // 2-out-of-3, checked against the brute-force Moebius reference.
  const auto reference = domination_by_brute_force(testutil::two_out_of_three());
  CHECK(reference == rationals({"0", "0", "3", "-2"}));
  const TailSignature two_of_three(3, rationals({"1", "1", "0", "0"}));
  CHECK(domination_from_tail(two_of_three).values() == reference);
}

TEST_CASE("tail from domination") {
  const DominationVector bridge(5, testutil::bridge_d());
  CHECK(tail_from_domination(bridge).values() == testutil::bridge_tail());
  CHECK(tail_from_domination(bridge, Route::closed).values() == testutil::bridge_tail());

  CHECK(tail_from_domination(DominationVector(3, rationals({"0", "0", "0", "1"}))).values() ==
        rationals({"1", "0", "0", "0"}));

  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = testutil::random_domination(gen, 1 + static_cast<int>(gen() % 12));
    CHECK(domination_from_tail(tail_from_domination(d)) == d);
  }
}

TEST_CASE("domination from signature") {
  const SignatureVector bridge(5, testutil::bridge_s());
  CHECK(domination_from_signature(bridge).values() == testutil::bridge_d());
  CHECK(domination_from_signature(bridge, Route::closed).values() == testutil::bridge_d());

  CHECK(domination_from_signature(SignatureVector(2, rationals({"1", "0"}))).values() ==
        rationals({"0", "0", "1"}));
  CHECK(domination_from_signature(SignatureVector(3, rationals({"0", "1", "0"}))).values() ==
        domination_by_brute_force(testutil::two_out_of_three()));
}

TEST_CASE("signature from domination") {
  const DominationVector bridge(5, testutil::bridge_d());
  CHECK(signature_from_domination(bridge).values() == testutil::bridge_s());
  CHECK(signature_from_domination(bridge, Route::closed).values() == testutil::bridge_s());

  CHECK(signature_from_domination(DominationVector(2, rationals({"0", "0", "1"}))).values() ==
        rationals({"1", "0"}));

  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = testutil::random_domination(gen, 1 + static_cast<int>(gen() % 12));
    CHECK(domination_from_signature(signature_from_domination(d)) == d);
  }
}

TEST_CASE("all six round trips compose to the identity") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 64);
    const auto s = testutil::random_signature(gen, n);
    const auto tail = testutil::random_tail(gen, n);
    const auto d = testutil::random_domination(gen, n);
    CHECK(signature_from_tail(tail_from_signature(s)) == s);
    CHECK(signature_from_domination(domination_from_signature(s)) == s);
    CHECK(tail_from_signature(signature_from_tail(tail)) == tail);
    CHECK(tail_from_domination(domination_from_tail(tail)) == tail);
    CHECK(domination_from_signature(signature_from_domination(d)) == d);
    CHECK(domination_from_tail(tail_from_domination(d)) == d);
  }
}

TEST_CASE("table and closed routes agree") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 16);
    const auto s = testutil::random_signature(gen, n);
    const auto tail = testutil::random_tail(gen, n);
    const auto d = testutil::random_domination(gen, n);
    CHECK(domination_from_signature(s, Route::table) ==
          domination_from_signature(s, Route::closed));
    CHECK(domination_from_tail(tail, Route::table) == domination_from_tail(tail, Route::closed));
    CHECK(signature_from_domination(d, Route::table) ==
          signature_from_domination(d, Route::closed));
    CHECK(tail_from_domination(d, Route::table) == tail_from_domination(d, Route::closed));
  }
  CHECK_THROWS_AS(domination_from_signature(testutil::random_signature(gen, 3), Route::reflect),
                  ValidationError);
}

TEST_CASE("signature through dominations matches Boland's formula") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& phi : oracle::enumerate_semicoherent(n)) {
      const DominationVector d(n, domination_by_brute_force(phi));
      CHECK(signature_from_domination(d) == oracle::boland_signature(phi));
    }
  }
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(gen() % 2);
    const auto phi = testutil::random_structure(gen, n);
    const DominationVector d(n, domination_by_brute_force(phi));
    CHECK(signature_from_domination(d) == oracle::boland_signature(phi));
  }
}

TEST_CASE("structure signatures produce integer dominations") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 6);
    const auto phi = testutil::random_structure(gen, n);
    const auto s = oracle::boland_signature(phi);
    for (const auto& dk : domination_from_signature(SignatureVector(n, s.values())).values())
      CHECK(denominator(dk) == 1);
  }
}

TEST_CASE("difference tables use the advertised number of combining steps") {
  std::mt19937_64 gen(19);
  for (int n : {1, 2, 3, 5, 8, 13, 40}) {
    const auto tail = testutil::random_tail(gen, n);
    const auto s = testutil::random_signature(gen, n);
    const auto d = testutil::random_domination(gen, n);
    StepCounter c1, c2, c3, c4;
    domination_from_tail(tail, Route::table, &c1);
    tail_from_domination(d, Route::table, &c2);
    domination_from_signature(s, Route::table, &c3);
    signature_from_domination(d, Route::table, &c4);
    const std::size_t half_up = static_cast<std::size_t>(n) * (n + 1) / 2;
    const std::size_t half_down = static_cast<std::size_t>(n) * (n - 1) / 2;
    CHECK(c1.combines == half_up);
    CHECK(c2.combines == half_up);
    CHECK(c3.combines == half_down);
    CHECK(c4.combines == half_down);
  }
}

TEST_CASE("level-sum conversions") {
  const auto bridge_phi = phi_vector(testutil::bridge());
  const DominationVector bridge_d(5, testutil::bridge_d());

  CHECK(phi_from_domination(bridge_d) == bridge_phi.as_rationals());
  CHECK(phi_from_domination(DominationVector(3, rationals({"0", "0", "0", "1"}))) ==
        rationals({"0", "0", "0", "1"}));
  CHECK(phi_from_domination(DominationVector(2, rationals({"0", "2", "-1"}))) ==
        rationals({"0", "2", "1"}));

  CHECK(domination_from_phi(bridge_phi).values() == testutil::bridge_d());
  CHECK(domination_from_phi(PhiVector({0, 0, 0, 1})).values() ==
        rationals({"0", "0", "0", "1"}));

  // Signed domination is the alternating sum of the path-set counts.
  Rational alternating;
  for (int j = 0; j <= 5; ++j) {
    const Rational term(bridge_phi.at(j));
    alternating += ((5 - j) % 2 == 0) ? term : -term;
  }
  CHECK(alternating == 2);
  CHECK(domination_from_phi(bridge_phi).at(5) == alternating);
}

TEST_CASE("tail from path-set counts") {
  CHECK(tail_from_phi(phi_vector(testutil::bridge())).values() == testutil::bridge_tail());
  CHECK(tail_from_phi(phi_vector(testutil::series(4))).values() ==
        rationals({"1", "0", "0", "0", "0"}));
  CHECK(tail_from_phi(PhiVector({0, 2, 1})).values() == rationals({"1", "1", "0"}));
}

TEST_CASE("generating identity") {
  const SignatureVector bridge_s(5, testutil::bridge_s());
  const TailSignature bridge_tail(5, testutil::bridge_tail());
  CHECK(check_generating_identity(bridge_s, bridge_tail));

  const SignatureVector series_s(2, rationals({"1", "0"}));
  CHECK(check_generating_identity(series_s, tail_from_signature(series_s)));

  const TailSignature parallel_tail(5, rationals({"1", "1", "1", "1", "1", "0"}));
  CHECK_FALSE(check_generating_identity(bridge_s, parallel_tail));

  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = testutil::random_signature(gen, 1 + static_cast<int>(gen() % 20));
    CHECK(check_generating_identity(s, tail_from_signature(s)));
  }
}

TEST_CASE("role tags travel through conversions") {
  const SignatureVector p = SignatureVector(5, testutil::bridge_s(), Role::probability);
  CHECK(tail_from_signature(p).role() == Role::probability);
  CHECK(domination_from_signature(p).role() == Role::probability);
}
