#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bic/gf.hpp"
#include "bic/rng.hpp"

#include <stdexcept>

using namespace bic;

namespace {

// Independent product path: schoolbook polynomial multiplication followed by
// long division by the modulus. Deliberately different from both Gf::mul
// (log/exp tables) and Gf::mul_slow (interleaved reduction).
std::uint16_t naive_mul(std::uint16_t a, std::uint16_t b, unsigned m) {
  std::uint32_t prod = 0;
  for (unsigned i = 0; i < m; ++i)
    if (b >> i & 1) prod ^= static_cast<std::uint32_t>(a) << i;
  const std::uint32_t mod = Gf::modulus(m);
  for (int bit = 2 * m - 2; bit >= static_cast<int>(m); --bit)
    if (prod >> bit & 1) prod ^= mod << (bit - m);
  return static_cast<std::uint16_t>(prod);
}

}  // namespace

TEST_CASE("multiplicative identity and absorbing zero") {
  FieldElem one = gf_elem(8, 0x01);
  FieldElem x = gf_elem(8, 0x5A);
  CHECK(gf_mul(one, x).value == 0x5A);
  CHECK(gf_mul(x, one).value == 0x5A);

  FieldElem zero = gf_elem(8, 0x00);
  for (std::uint16_t v : {0x00, 0x01, 0x5A, 0xFF})
    CHECK(gf_mul(zero, gf_elem(8, v)).value == 0x00);
}

TEST_CASE("0x53 and 0xCA are inverses in GF(2^8)") {
  // Independent check first, then the library path.
  CHECK(naive_mul(0x53, 0xCA, 8) == 0x01);
  CHECK(gf_mul(gf_elem(8, 0x53), gf_elem(8, 0xCA)).value == 0x01);
  CHECK(gf_inv(gf_elem(8, 0x53)).value == 0xCA);
}

TEST_CASE("mismatched degrees are rejected") {
  CHECK_THROWS_AS(gf_mul(gf_elem(8, 1), gf_elem(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(gf_add(gf_elem(2, 1), gf_elem(3, 1)), std::invalid_argument);
}

TEST_CASE("every nonzero element has a multiplicative inverse (m <= 8)") {
  for (unsigned m = 1; m <= 8; ++m) {
    const Gf& f = Gf::get(m);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      const std::uint16_t inv = f.inv(static_cast<std::uint16_t>(a));
      CHECK(f.mul(static_cast<std::uint16_t>(a), inv) == 1);
    }
  }
  CHECK_THROWS_AS(Gf::get(8).inv(0), std::domain_error);
}

TEST_CASE("table product agrees with both reference paths") {
  for (unsigned m : {2u, 5u, 8u, 12u, 16u}) {
    const Gf& f = Gf::get(m);
    SplitMix64 rng(m);
    for (int i = 0; i < 500; ++i) {
      std::uint16_t a = rng.field_value(m);
      std::uint16_t b = rng.field_value(m);
      CHECK(f.mul(a, b) == Gf::mul_slow(a, b, m));
      CHECK(f.mul(a, b) == naive_mul(a, b, m));
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  const Gf& f = Gf::get(8);
  std::uint16_t acc = 1;
  for (unsigned e = 0; e < 300; ++e) {
    CHECK(f.pow(0x37, e) == acc);
    acc = f.mul(acc, 0x37);
  }
}

TEST_CASE("degree bounds") {
  CHECK_THROWS_AS(Gf::get(0), std::invalid_argument);
  CHECK_THROWS_AS(Gf::get(17), std::invalid_argument);
  CHECK_THROWS_AS(gf_elem(4, 16), std::invalid_argument);
}
