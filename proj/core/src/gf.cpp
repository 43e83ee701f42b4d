#include "bic/gf.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bic {

namespace {

// Irreducible moduli, one per degree, leading term included. Degree 8 is
// x^8+x^4+x^3+x+1; the rest are the usual low-weight choices.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11B,    // x^8 + x^4 + x^3 + x + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

std::array<std::unique_ptr<Gf>, 17> g_contexts;
std::array<std::once_flag, 17> g_once;

}  // namespace

std::uint32_t Gf::modulus(unsigned degree) {
  if (degree < 1 || degree > 16)
    throw std::invalid_argument("field degree must be in 1..16");
  return kModuli[degree];
}

std::uint16_t Gf::mul_slow(std::uint16_t a, std::uint16_t b, unsigned degree) {
  const std::uint32_t mod = modulus(degree);
  std::uint32_t acc = 0;
  std::uint32_t x = a;
  std::uint32_t y = b;
  while (y) {
    if (y & 1) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x >> degree) x ^= mod;
  }
  return static_cast<std::uint16_t>(acc);
}

Gf::Gf(unsigned degree)
    : degree_(degree), size_(1u << degree), exp_(size_, 0), log_(size_, 0) {
  // Find a primitive element: its powers must visit every nonzero value.
  for (std::uint32_t g = 2; g < size_; ++g) {
    std::uint16_t v = 1;
    std::uint32_t seen = 0;
    for (std::uint32_t i = 0; i < size_ - 1; ++i) {
      exp_[i] = v;
      log_[v] = i;
      ++seen;
      v = mul_slow(v, static_cast<std::uint16_t>(g), degree);
      if (v == 1 && i + 1 < size_ - 1) break;  // order too small
    }
    if (v == 1 && seen == size_ - 1) return;
  }
  if (size_ == 2) {  // GF(2): the loop above never runs, tables are trivial
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  throw std::logic_error("no primitive element found; modulus not irreducible?");
}

const Gf& Gf::get(unsigned degree) {
  modulus(degree);  // range check
  std::call_once(g_once[degree], [degree] {
    g_contexts[degree] = std::unique_ptr<Gf>(new Gf(degree));
  });
  return *g_contexts[degree];
}

std::uint16_t Gf::inv(std::uint16_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(2^m)");
  if (a == 1) return 1;
  return exp_[(size_ - 1) - log_[a]];
}

std::uint16_t Gf::pow(std::uint16_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t le = (log_[a] * static_cast<std::uint64_t>(e)) % (size_ - 1);
  return exp_[le];
}

FieldElem gf_elem(unsigned degree, std::uint16_t value) {
  if (degree < 1 || degree > 16)
    throw std::invalid_argument("field degree must be in 1..16");
  if (value >= (1u << degree))
    throw std::invalid_argument("field element value out of range");
  return FieldElem{value, static_cast<std::uint8_t>(degree)};
}

namespace {
void check_same_field(FieldElem a, FieldElem b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("mismatched field degrees");
}
}  // namespace

FieldElem gf_add(FieldElem a, FieldElem b) {
  check_same_field(a, b);
  return FieldElem{static_cast<std::uint16_t>(a.value ^ b.value), a.degree};
}

FieldElem gf_mul(FieldElem a, FieldElem b) {
  check_same_field(a, b);
  return FieldElem{Gf::get(a.degree).mul(a.value, b.value), a.degree};
}

FieldElem gf_inv(FieldElem a) {
  return FieldElem{Gf::get(a.degree).inv(a.value), a.degree};
}

}  // namespace bic
