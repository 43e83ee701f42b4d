#pragma once

#include <cstdint>
#include <vector>

namespace bic {

/// One element of GF(2^m), 1 <= m <= 16. Carries its extension degree so
/// that mixing elements of different fields is caught at the operation.
struct FieldElem {
  std::uint16_t value = 0;
  std::uint8_t degree = 1;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// Arithmetic context for GF(2^m) under a fixed irreducible polynomial per
/// degree. Multiplication and inversion run off log/exp tables built once
/// per degree via a primitive element, so the tables stay valid for
/// non-primitive moduli such as the degree-8 polynomial.
class Gf {
 public:
  /// Shared context for the given extension degree (1..16). Thread safe.
  static const Gf& get(unsigned degree);

  /// Fixed modulus for the degree, including the leading term
  /// (e.g. 0x11B for m = 8, which is x^8+x^4+x^3+x+1).
  static std::uint32_t modulus(unsigned degree);

  unsigned degree() const { return degree_; }
  std::uint32_t order() const { return size_; }  // 2^m

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

  /// Reference product by shift-and-xor polynomial reduction; used to build
  /// the tables and kept public as an independent check path.
  static std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b, unsigned degree);

 private:
  explicit Gf(unsigned degree);

  unsigned degree_;
  std::uint32_t size_;
  std::vector<std::uint16_t> exp_;  // exp_[i] = g^i for a primitive g
  std::vector<std::uint32_t> log_;
};

// Element-level API. All binary operations require matching degrees and
// throw std::invalid_argument otherwise.
FieldElem gf_elem(unsigned degree, std::uint16_t value);
FieldElem gf_add(FieldElem a, FieldElem b);
FieldElem gf_mul(FieldElem a, FieldElem b);
FieldElem gf_inv(FieldElem a);

}  // namespace bic
