#include "harmonic/field.hpp"

#include <algorithm>
#include <sstream>

namespace harmonic {

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;
constexpr uint32_t kMulTableMaxOrder = 512;

// Built-in irreducible moduli, constant-first.
const struct {
  uint32_t q;
  std::vector<uint32_t> coeffs;
} kBuiltinModuli[] = {
    {4, {1, 1, 1}},        // x^2 + x + 1 over GF(2)
    {8, {1, 1, 0, 1}},     // x^3 + x + 1 over GF(2)
    {9, {1, 0, 1}},        // x^2 + 1 over GF(3)
    {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1 over GF(2)
    {25, {2, 0, 1}},       // x^2 + 2 over GF(5)
    {27, {1, 2, 0, 1}},    // x^3 + 2x + 1 over GF(3)
    {49, {1, 0, 1}},       // x^2 + 1 over GF(7)
};

using Poly = std::vector<uint32_t>;  // constant-first, may carry leading zeros

int poly_deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[size_t(i)] != 0) return i;
  return -1;
}

// Remainder of f modulo g over GF(p); g must be nonzero.
Poly poly_rem(Poly f, const Poly& g, uint32_t p) {
  int dg = poly_deg(g);
  uint32_t lead_inv = 1;
  {
    // extended Euclid on the leading coefficient
    int64_t a = g[size_t(dg)], b = p, x0 = 1, x1 = 0;
    while (b) {
      int64_t t = a / b;
      a -= t * b;
      std::swap(a, b);
      x0 -= t * x1;
      std::swap(x0, x1);
    }
    lead_inv = uint32_t(((x0 % p) + p) % p);
  }
  for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
    uint32_t c = uint32_t(uint64_t(f[size_t(df)]) * lead_inv % p);
    for (int i = 0; i <= dg; ++i) {
      uint64_t sub = uint64_t(c) * g[size_t(i)] % p;
      uint32_t& coef = f[size_t(df - dg + i)];
      coef = uint32_t((coef + p - sub) % p);
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, uint32_t p) {
  return poly_deg(poly_rem(f, g, p)) < 0;
}

bool modulus_irreducible(const Poly& f, uint32_t p, uint32_t m) {
  // Trial division by every monic polynomial of degree 1..m/2.
  for (uint32_t d = 1; d <= m / 2; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = uint32_t(t % p);
        t /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (field == nullptr || o.field == nullptr) return field == o.field && v == o.v;
  return field->same_as(*o.field) && v == o.v;
}

namespace {
const Field& common_field(const FieldElem& a, const FieldElem& b) {
  if (a.field == nullptr || b.field == nullptr)
    throw Error(Errc::FieldMismatch, "element without a field");
  if (a.field != b.field && !a.field->same_as(*b.field))
    throw Error(Errc::FieldMismatch,
                a.field->descriptor() + " vs " + b.field->descriptor());
  return *a.field;
}
}  // namespace

FieldElem operator+(FieldElem a, FieldElem b) {
  const Field& f = common_field(a, b);
  return {a.field, f.add(a.v, b.v)};
}
FieldElem operator-(FieldElem a, FieldElem b) {
  const Field& f = common_field(a, b);
  return {a.field, f.sub(a.v, b.v)};
}
FieldElem operator*(FieldElem a, FieldElem b) {
  const Field& f = common_field(a, b);
  return {a.field, f.mul(a.v, b.v)};
}
FieldElem operator/(FieldElem a, FieldElem b) {
  const Field& f = common_field(a, b);
  return {a.field, f.div(a.v, b.v)};
}
FieldElem operator-(FieldElem a) {
  if (a.field == nullptr) throw Error(Errc::FieldMismatch, "element without a field");
  return {a.field, a.field->neg(a.v)};
}

FieldPtr Field::make(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus) {
  if (!is_prime(p))
    throw Error(Errc::NonPrimeCharacteristic, "characteristic " + std::to_string(p));
  if (m == 0) throw Error(Errc::BadArgument, "degree must be positive");

  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(Errc::TooLarge, "field order exceeds 2^16");
  }

  std::vector<uint32_t> mod;
  if (m > 1) {
    if (modulus.has_value()) {
      mod = *modulus;
      if (mod.size() != size_t(m) + 1)
        throw Error(Errc::BadArgument, "modulus needs " + std::to_string(m + 1) + " coefficients");
      for (auto& c : mod) c %= p;
      if (mod[m] != 1)
        throw Error(Errc::BadArgument, "modulus must be monic");
      if (!modulus_irreducible(mod, p, m))
        throw Error(Errc::ReducibleModulus, "modulus factors over GF(" + std::to_string(p) + ")");
    } else {
      for (const auto& row : kBuiltinModuli)
        if (row.q == q) mod = row.coeffs;
      if (mod.empty())
        throw Error(Errc::MissingModulus,
                    "no built-in modulus for order " + std::to_string(q));
    }
  } else if (modulus.has_value()) {
    throw Error(Errc::BadArgument, "prime field takes no modulus");
  }

  return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < m_; ++i) q *= p_;
  q_ = uint32_t(q);

  if (m_ > 1 && q_ <= kMulTableMaxOrder) {
    mul_.assign(size_t(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = a; b < q_; ++b) {
        uint32_t r = poly_mul(a, b);
        mul_[size_t(a) * q_ + b] = r;
        mul_[size_t(b) * q_ + a] = r;
      }
  }

  inv_.assign(q_, 0);
  if (m_ == 1) {
    for (uint32_t a = 1; a < q_; ++a) {
      int64_t r0 = p_, r1 = a, x0 = 0, x1 = 1;
      while (r1) {
        int64_t t = r0 / r1;
        r0 -= t * r1;
        std::swap(r0, r1);
        x0 -= t * x1;
        std::swap(x0, x1);
      }
      inv_[a] = uint32_t(((x0 % p_) + p_) % p_);
    }
  } else {
    for (uint32_t a = 1; a < q_; ++a) inv_[a] = pow(a, q_ - 2);
  }
}

bool Field::same_as(const Field& o) const {
  return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (m_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::neg(uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t Field::poly_mul(uint32_t a, uint32_t b) const {
  std::vector<uint32_t> da = decode(a), db = decode(b);
  std::vector<uint32_t> prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < m_; ++j)
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(da[i]) * db[j]) % p_);
  }
  // reduce with x^m == -(modulus without leading term)
  for (int d = int(2 * m_ - 2); d >= int(m_); --d) {
    uint32_t c = prod[size_t(d)];
    if (c == 0) continue;
    prod[size_t(d)] = 0;
    for (uint32_t i = 0; i < m_; ++i) {
      uint64_t sub_term = uint64_t(c) * modulus_[i] % p_;
      prod[size_t(d) - m_ + i] =
          uint32_t((prod[size_t(d) - m_ + i] + p_ - sub_term) % p_);
    }
  }
  prod.resize(m_);
  return encode(prod);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (m_ == 1) return uint32_t(uint64_t(a) * b % p_);
  if (!mul_.empty()) return mul_[size_t(a) * q_ + b];
  return poly_mul(a, b);
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "division by zero in GF(" + descriptor() + ")");
  return inv_[a];
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t out = 1, base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

FieldElem Field::elem(uint32_t code) const {
  if (code >= q_)
    throw Error(Errc::BadArgument, "code " + std::to_string(code) + " out of range");
  return {this, code};
}

FieldElem Field::from_int(int64_t k) const {
  int64_t r = k % int64_t(p_);
  if (r < 0) r += p_;
  return {this, uint32_t(r)};
}

std::vector<uint32_t> Field::decode(uint32_t code) const {
  std::vector<uint32_t> out(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

uint32_t Field::encode(const std::vector<uint32_t>& digits) const {
  uint32_t out = 0, mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    out += (i < digits.size() ? digits[i] % p_ : 0) * mult;
    mult *= p_;
  }
  return out;
}

std::string Field::format(uint32_t code) const {
  if (m_ == 1) return std::to_string(code);
  std::vector<uint32_t> d = decode(code);
  std::string out = "(";
  for (uint32_t i = 0; i < m_; ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::optional<uint32_t> Field::parse_elem(const std::string& text) const {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.empty()) return std::nullopt;
  if (t.front() == '(') {
    if (t.back() != ')') return std::nullopt;
    std::vector<uint32_t> digits;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        long long v = std::stoll(part);
        v %= int64_t(p_);
        if (v < 0) v += p_;
        digits.push_back(uint32_t(v));
      } catch (...) {
        return std::nullopt;
      }
    }
    if (digits.empty() || digits.size() > m_) return std::nullopt;
    return encode(digits);
  }
  try {
    size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) return std::nullopt;
    if (m_ == 1) {
      v %= int64_t(p_);
      if (v < 0) v += p_;
      return uint32_t(v);
    }
    if (v < 0 || v >= int64_t(q_)) return std::nullopt;
    return uint32_t(v);
  } catch (...) {
    return std::nullopt;
  }
}

std::string Field::descriptor() const {
  if (m_ == 1) return std::to_string(p_);
  std::string out = std::to_string(p_) + "^" + std::to_string(m_);
  bool builtin = false;
  for (const auto& row : kBuiltinModuli)
    if (row.q == q_ && row.coeffs == modulus_) builtin = true;
  if (!builtin) {
    out += ':';
    for (size_t i = 0; i < modulus_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(modulus_[i]);
    }
  }
  return out;
}

FieldPtr Field::parse(const std::string& descriptor) {
  std::string body = descriptor;
  std::optional<std::vector<uint32_t>> modulus;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    std::vector<uint32_t> coeffs;
    std::stringstream ss(body.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        coeffs.push_back(uint32_t(std::stoul(part)));
      } catch (...) {
        throw Error(Errc::SyntaxError, "bad modulus coefficient '" + part + "'");
      }
    }
    modulus = std::move(coeffs);
    body = body.substr(0, colon);
  }
  uint32_t p = 0, m = 1;
  try {
    if (auto caret = body.find('^'); caret != std::string::npos) {
      p = uint32_t(std::stoul(body.substr(0, caret)));
      m = uint32_t(std::stoul(body.substr(caret + 1)));
    } else {
      p = uint32_t(std::stoul(body));
    }
  } catch (...) {
    throw Error(Errc::SyntaxError, "bad field descriptor '" + descriptor + "'");
  }
  return make(p, m, std::move(modulus));
}

}  // namespace harmonic
