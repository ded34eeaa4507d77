#ifndef VERONUCLEUS_GF_HPP
#define VERONUCLEUS_GF_HPP

// Finite fields GF(p^e). Elements are packed as integers whose base-p digits
// are the coefficients of the polynomial representative (x^0 first), so the
// zero element is 0 and the identity is 1. Multiplication goes through
// discrete log/exp tables built once per field.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "base_p.hpp"

namespace veronucleus {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients over Z_p, x^0 first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  poly_trim(a);
  const std::size_t df = f.size() - 1;
  const auto lead_inv = static_cast<std::uint32_t>(pow_mod(f.back(), p - 2, p));
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly a, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  r = poly_mod(r, f, p);
  a = poly_mod(std::move(a), f, p);
  while (e != 0) {
    if (e & 1U) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1U;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree e is irreducible iff gcd(x^{p^k} - x, f) = 1 for all
// 1 <= k <= e/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  Poly h{0, 1};
  for (std::size_t k = 1; k <= e / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

class FieldElement;

/// An immutable finite field GF(p^e). Copies share one set of tables; copying
/// is cheap.
class FieldSpec {
 public:
  /// Builds GF(p^e). For e > 1 the modulus is the smallest monic irreducible
  /// polynomial of degree e, ordering candidates by their coefficient vectors
  /// read from x^{e-1} down to x^0.
  static FieldSpec make(std::uint32_t p, std::uint32_t e, std::uint64_t cap = kDefaultFieldCap) {
    require_prime(p);
    if (e == 0) throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > cap)
        throw std::invalid_argument("GF(" + std::to_string(p) + "^" + std::to_string(e) +
                                    ") exceeds the field size cap of " + std::to_string(cap));
    }
    auto data = std::make_shared<Data>();
    data->p = p;
    data->e = e;
    data->q = static_cast<Elem>(q);
    data->place.resize(e);
    for (std::uint32_t i = 0; i < e; ++i) data->place[i] = i == 0 ? 1 : data->place[i - 1] * p;

    if (e > 1) {
      const std::uint64_t tail_count = q;  // p^e choices of lower coefficients
      for (std::uint64_t c = 0; c < tail_count; ++c) {
        detail::Poly f(e + 1, 0);
        f[e] = 1;
        // c's most significant base-p digit is the x^{e-1} coefficient.
        std::uint64_t v = c;
        for (std::uint32_t i = 0; i < e; ++i) {
          f[i] = static_cast<std::uint32_t>(v % p);
          v /= p;
        }
        if (f[0] != 0 && detail::is_irreducible(f, p)) {
          data->modulus = std::move(f);
          break;
        }
      }
      if (data->modulus.empty()) throw std::logic_error("no irreducible polynomial found");
    }
    build_tables(*data);
    return FieldSpec(std::move(data));
  }

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return d_->p; }
  [[nodiscard]] std::uint32_t degree() const noexcept { return d_->e; }
  [[nodiscard]] Elem order() const noexcept { return d_->q; }
  /// Monic modulus, x^0 first; empty for prime fields.
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return d_->modulus; }
  [[nodiscard]] std::string name() const {
    return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->e) + ")";
  }
  /// A primitive element (generator of the multiplicative group).
  [[nodiscard]] Elem generator() const noexcept { return d_->generator; }

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept {
    if (d_->p == 2) return a ^ b;
    if (d_->e == 1) return (a + b) % d_->p;
    Elem r = 0;
    for (std::uint32_t i = 0; i < d_->e; ++i) {
      const Elem da = a % d_->p, db = b % d_->p;
      r += ((da + db) % d_->p) * d_->place[i];
      a /= d_->p;
      b /= d_->p;
    }
    return r;
  }

  [[nodiscard]] Elem neg(Elem a) const noexcept {
    if (d_->p == 2) return a;
    if (d_->e == 1) return a == 0 ? 0 : d_->p - a;
    Elem r = 0;
    for (std::uint32_t i = 0; i < d_->e; ++i) {
      const Elem da = a % d_->p;
      r += ((d_->p - da) % d_->p) * d_->place[i];
      a /= d_->p;
    }
    return r;
  }

  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return d_->exp[d_->log[a] + d_->log[b]];
  }

  [[nodiscard]] Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
  }

  [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  [[nodiscard]] Elem pow(Elem a, std::uint64_t k) const noexcept {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = std::uint64_t{d_->log[a]} * (k % (d_->q - 1)) % (d_->q - 1);
    return d_->exp[l];
  }

  [[nodiscard]] Elem frobenius(Elem a) const noexcept { return pow(a, d_->p); }

  /// Image of an integer in the prime subfield.
  [[nodiscard]] Elem from_integer(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(d_->p);
    return static_cast<Elem>(((v % p) + p) % p);
  }

  [[nodiscard]] std::vector<std::uint32_t> coefficients(Elem a) const {
    std::vector<std::uint32_t> c(d_->e);
    for (auto& x : c) {
      x = a % d_->p;
      a /= d_->p;
    }
    return c;
  }

  [[nodiscard]] Elem from_coefficients(std::span<const std::uint32_t> c) const {
    if (c.size() != d_->e) throw std::invalid_argument("coefficient vector length differs from field degree");
    Elem v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= d_->p) throw std::invalid_argument("coefficient out of range");
      v += c[i] * d_->place[i];
    }
    return v;
  }

  [[nodiscard]] bool contains(Elem a) const noexcept { return a < d_->q; }

  [[nodiscard]] FieldElement element(Elem v) const;
  [[nodiscard]] FieldElement zero() const;
  [[nodiscard]] FieldElement one() const;
  /// All q elements, zero first, in packed-integer order.
  [[nodiscard]] std::vector<FieldElement> all_elements() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus);
  }

 private:
  struct Data {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    Elem q = 0;
    Elem generator = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> place;  // p^i
    std::vector<Elem> exp;    // length 2(q-1)
    std::vector<std::uint32_t> log;
  };

  explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static detail::Poly unpack(const Data& d, Elem a) {
    detail::Poly c(d.e);
    for (auto& x : c) {
      x = a % d.p;
      a /= d.p;
    }
    detail::poly_trim(c);
    return c;
  }

  static Elem pack(const Data& d, const detail::Poly& c) {
    Elem v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * d.place[i];
    return v;
  }

  static void build_tables(Data& d) {
    const std::uint64_t group = d.q - 1;
    d.exp.assign(2 * group, 0);
    d.log.assign(d.q, 0);
    if (group == 1) {  // GF(2)
      d.generator = 1;
      d.exp = {1, 1};
      return;
    }
    const detail::Poly f = d.e == 1 ? detail::Poly{0, 1} : d.modulus;
    const auto factors = detail::prime_factors(group);
    for (Elem g = 2; g < d.q; ++g) {
      const auto gp = unpack(d, g);
      bool primitive = true;
      for (auto r : factors) {
        if (detail::poly_powmod(gp, group / r, f, d.p) == detail::Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        d.generator = g;
        break;
      }
    }
    if (d.generator == 0) throw std::logic_error("no primitive element found");
    const auto gp = unpack(d, d.generator);
    detail::Poly cur{1};
    for (std::uint64_t i = 0; i < group; ++i) {
      const Elem v = pack(d, cur);
      d.exp[i] = v;
      d.exp[i + group] = v;
      d.log[v] = static_cast<std::uint32_t>(i);
      cur = detail::poly_mulmod(cur, gp, f, d.p);
    }
  }

  std::shared_ptr<const Data> d_;
};

/// Builds GF(p^e); see FieldSpec::make.
[[nodiscard]] inline FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                                          std::uint64_t cap = kDefaultFieldCap) {
  return FieldSpec::make(p, e, cap);
}

/// Smallest e >= 1 with p^e >= at_least.
[[nodiscard]] inline std::uint32_t minimal_degree(std::uint32_t p, std::uint64_t at_least) {
  require_prime(p);
  std::uint32_t e = 1;
  for (std::uint64_t q = p; q < at_least; q *= p) ++e;
  return e;
}

/// A field element tied to its field. Mixing elements of different fields is
/// an error.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) throw std::invalid_argument("value outside " + field_.name());
  }

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] Elem value() const noexcept { return value_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }
  [[nodiscard]] std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }

  [[nodiscard]] FieldElement inv() const { return {field_, field_.inv(value_)}; }
  [[nodiscard]] FieldElement pow(std::uint64_t k) const { return {field_, field_.pow(value_, k)}; }
  [[nodiscard]] FieldElement frobenius() const { return {field_, field_.frobenius(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_))
      throw std::invalid_argument("mixed-field operands: " + a.field_.name() + " and " + b.field_.name());
  }

  FieldSpec field_;
  Elem value_;
};

inline FieldElement FieldSpec::element(Elem v) const { return {*this, v}; }
inline FieldElement FieldSpec::zero() const { return {*this, 0}; }
inline FieldElement FieldSpec::one() const { return {*this, 1}; }

inline std::vector<FieldElement> FieldSpec::all_elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (Elem v = 0; v < order(); ++v) out.emplace_back(*this, v);
  return out;
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_GF_HPP
