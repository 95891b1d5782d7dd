#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a finite field. Carries the owning field; mixing elements of
// structurally different fields throws FieldMismatch instead of coercing.
struct FieldElem {
  const Field* field = nullptr;
  uint32_t v = 0;  // packed base-p digit vector, constant digit lowest

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

FieldElem operator+(FieldElem a, FieldElem b);
FieldElem operator-(FieldElem a, FieldElem b);
FieldElem operator*(FieldElem a, FieldElem b);
FieldElem operator/(FieldElem a, FieldElem b);
FieldElem operator-(FieldElem a);

// GF(p^m), p prime, q = p^m <= 2^16. Extension fields are represented by a
// monic irreducible modulus polynomial with coefficients listed constant-first.
// Instances are immutable; all mutating state is precomputed at construction.
class Field {
public:
  // modulus: m+1 coefficients, constant first, required monic and irreducible.
  // When absent for m > 1, a built-in modulus is used for
  // q in {4, 8, 9, 16, 25, 27, 49}; other orders throw MissingModulus.
  static FieldPtr make(uint32_t p, uint32_t m = 1,
                       std::optional<std::vector<uint32_t>> modulus = std::nullopt);

  // Descriptor syntax: "p", "p^m", or "p^m:c0,c1,...,cm" (constant-first).
  static FieldPtr parse(const std::string& descriptor);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return m_; }
  uint32_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string descriptor() const;

  bool same_as(const Field& o) const;

  // Arithmetic on packed representations. Values must be < order().
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws ZeroInverse on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  FieldElem elem(uint32_t code) const;
  FieldElem from_int(int64_t k) const;  // embeds k mod p as a constant
  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }

  // "5" for prime fields, "(c0,c1,...)" for extension fields.
  std::string format(uint32_t code) const;
  // Accepts what format() emits, a bare integer (residue for m = 1, packed
  // code for m > 1), and negative integers for m = 1.
  std::optional<uint32_t> parse_elem(const std::string& text) const;

  std::vector<uint32_t> decode(uint32_t code) const;  // m digits
  uint32_t encode(const std::vector<uint32_t>& digits) const;

private:
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

  uint32_t poly_mul(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0;
  uint32_t m_ = 1;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;   // empty for m == 1
  std::vector<uint32_t> inv_;       // inverse table, index 0 unused
  std::vector<uint32_t> mul_;      // full table for small extension fields
};

bool is_prime(uint64_t n);

}  // namespace harmonic
