#ifndef VERONUCLEUS_BASE_P_HPP
#define VERONUCLEUS_BASE_P_HPP

// Base-p digit combinatorics: Lucas' theorem for binomial and multinomial
// coefficients, the class partition of zero entries of Pascal's triangle
// modulo p, and the associated counting functions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace veronucleus {

using BigInt = boost::multiprecision::cpp_int;

/// Trial-division primality test. Inputs are small (characteristics of
/// enumerable fields), so nothing cleverer is needed.
[[nodiscard]] constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("base " + std::to_string(p) + " is not a prime");
}

/// Base-p representation of a non-negative integer, least significant digit
/// first. Zero has no stored digits.
class Digits {
 public:
  Digits(std::uint64_t value, std::uint32_t base) : value_(value), base_(base) {
    require_prime(base);
    for (std::uint64_t v = value; v != 0; v /= base)
      digits_.push_back(static_cast<std::uint32_t>(v % base));
  }

  [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
  [[nodiscard]] std::uint32_t base() const noexcept { return base_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] std::span<const std::uint32_t> digits() const noexcept { return digits_; }

  /// Digit at position sigma; positions beyond the stored length are zero.
  [[nodiscard]] std::uint32_t operator[](std::size_t sigma) const noexcept {
    return sigma < digits_.size() ? digits_[sigma] : 0;
  }

  [[nodiscard]] std::vector<std::size_t> nonzero_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < digits_.size(); ++s)
      if (digits_[s] != 0) out.push_back(s);
    return out;
  }

  /// Most-significant-first rendering, e.g. "⟨110011⟩". Digits above 9 are
  /// separated by dots.
  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << "⟨";
    if (digits_.empty()) os << '0';
    for (std::size_t s = digits_.size(); s-- > 0;) {
      os << digits_[s];
      if (base_ > 10 && s != 0) os << '.';
    }
    os << "⟩";
    return os.str();
  }

  friend bool operator==(const Digits&, const Digits&) = default;

 private:
  std::uint64_t value_;
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

[[nodiscard]] inline Digits to_digits(std::uint64_t n, std::uint32_t p) { return Digits(n, p); }

[[nodiscard]] inline std::uint64_t from_digits(const Digits& d) {
  std::uint64_t v = 0;
  for (std::size_t s = d.size(); s-- > 0;) v = v * d.base() + d[s];
  return v;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = r * a % m;
    a = a * a % m;
    e >>= 1U;
  }
  return r;
}

// Multinomial coefficient of single digits, all < p, mod p. Returns 0 if the
// parts do not sum to top (a carry occurred).
inline std::uint32_t digit_multinom_mod_p(std::uint32_t top, std::span<const std::uint32_t> parts,
                                          std::uint32_t p) {
  std::uint64_t sum = 0;
  for (auto e : parts) sum += e;
  if (sum != top) return 0;
  std::uint64_t num = 1;
  for (std::uint64_t f = 2; f <= top; ++f) num = num * f % p;
  std::uint64_t den = 1;
  for (auto e : parts)
    for (std::uint64_t f = 2; f <= e; ++f) den = den * f % p;
  // top < p, so den is a unit.
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

inline BigInt big_pow(std::uint64_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// C(n, j) mod p by Lucas' theorem; 0 when j > n.
[[nodiscard]] inline std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t j, std::uint32_t p) {
  require_prime(p);
  if (j > n) return 0;
  std::uint64_t r = 1;
  while (n != 0 || j != 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto jd = static_cast<std::uint32_t>(j % p);
    if (jd > nd) return 0;
    const std::uint32_t parts[2] = {jd, nd - jd};
    r = r * detail::digit_multinom_mod_p(nd, parts, p) % p;
    n /= p;
    j /= p;
  }
  return static_cast<std::uint32_t>(r);
}

/// t! / (e_0! ... e_m!) mod p, digit by digit.
[[nodiscard]] inline std::uint32_t multinom_mod_p(std::uint64_t t, std::span<const std::uint64_t> e,
                                                  std::uint32_t p) {
  require_prime(p);
  std::uint64_t total = 0;
  for (auto x : e) {
    if (x > t || total > t - x) throw std::invalid_argument("multinomial exponents do not sum to t");
    total += x;
  }
  if (total != t) throw std::invalid_argument("multinomial exponents do not sum to t");

  std::vector<std::uint64_t> rest(e.begin(), e.end());
  std::vector<std::uint32_t> digits(rest.size());
  std::uint64_t r = 1;
  while (t != 0) {
    for (std::size_t i = 0; i < rest.size(); ++i) {
      digits[i] = static_cast<std::uint32_t>(rest[i] % p);
      rest[i] /= p;
    }
    r = r * detail::digit_multinom_mod_p(static_cast<std::uint32_t>(t % p), digits, p) % p;
    if (r == 0) return 0;
    t /= p;
  }
  return static_cast<std::uint32_t>(r);
}

/// Exact binomial coefficient.
[[nodiscard]] inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// A vanishing entry (n, j) of Pascal's triangle mod p and the size class of
/// the maximal zero subtriangle containing it.
struct ZeroClass {
  std::size_t class_index;
  std::uint64_t n;
  std::uint64_t j;

  friend bool operator==(const ZeroClass&, const ZeroClass&) = default;
};

/// Class of the zero entry (n, j); empty if C(n, j) is non-zero mod p.
[[nodiscard]] inline std::optional<ZeroClass> zero_class(std::uint64_t n, std::uint64_t j,
                                                        std::uint32_t p) {
  if (j > n) throw std::invalid_argument("zero_class requires j <= n");
  const Digits nd(n, p);
  const Digits jd(j, p);
  std::optional<std::size_t> last_borrow;
  for (std::size_t s = 0; s < jd.size(); ++s)
    if (jd[s] > nd[s]) last_borrow = s;
  if (!last_borrow) return std::nullopt;
  // j <= n guarantees a higher position where j's digit is smaller.
  for (std::size_t s = *last_borrow + 1; s < nd.size(); ++s)
    if (jd[s] < nd[s]) return ZeroClass{s, n, j};
  throw std::logic_error("zero_class: inconsistent digits");
}

/// Number of entries of row n of Pascal's triangle mod p lying in class i.
[[nodiscard]] inline BigInt phi(std::size_t i, std::uint64_t n, std::uint32_t p) {
  if (i == 0) throw std::invalid_argument("phi requires class index i >= 1");
  const Digits nd(n, p);
  if (nd[i] == 0) return 0;
  BigInt low = 0;
  for (std::size_t mu = 0; mu < i; ++mu) low += BigInt(nd[mu]) * detail::big_pow(p, mu);
  BigInt r = (detail::big_pow(p, i) - 1 - low) * nd[i];
  for (std::size_t s = i + 1; s < nd.size(); ++s) r *= nd[s] + 1;
  return r;
}

/// Number of entries of row n in classes i, i+1, ...
[[nodiscard]] inline BigInt sigma(std::size_t i, std::uint64_t n, std::uint32_t p) {
  if (i == 0) throw std::invalid_argument("sigma requires class index i >= 1");
  const Digits nd(n, p);
  BigInt low = 1;
  for (std::size_t mu = 0; mu < std::min(i, nd.size()); ++mu)
    low += BigInt(nd[mu]) * detail::big_pow(p, mu);
  for (std::size_t s = i; s < nd.size(); ++s) low *= nd[s] + 1;
  return BigInt(n) + 1 - low;
}

/// Sum of b_sigma p^sigma over sigma >= r, i.e. b with its low r digits zeroed.
[[nodiscard]] inline std::uint64_t top_line(std::size_t r, std::uint64_t b, std::uint32_t p) {
  const Digits bd(b, p);
  std::uint64_t v = 0;
  for (std::size_t s = bd.size(); s-- > r;) v = v * p + bd[s];
  for (std::size_t s = 0; s < r && s < bd.size(); ++s) v *= p;
  return v;
}

/// Pascal's simplex index set: all (e_0, ..., e_m) with sum t, in
/// graded-lexicographic order (descending in e_0, then e_1, ...).
[[nodiscard]] inline std::vector<std::vector<std::uint64_t>> exponent_tuples(std::size_t m,
                                                                             std::uint64_t t) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur(m + 1, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos == m) {
      cur[m] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint64_t v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, t);
  return out;
}

/// Number of (m+1)-tuples in E^t_m whose multinomial coefficient vanishes mod p.
[[nodiscard]] inline BigInt count_vanishing_multinomials(std::size_t m, std::uint64_t t,
                                                         std::uint32_t p) {
  if (m == 0) throw std::invalid_argument("count_vanishing_multinomials requires m >= 1");
  const Digits td(t, p);
  BigInt nonvanishing = 1;
  for (std::size_t s = 0; s < td.size(); ++s) nonvanishing *= binomial(m + td[s], td[s]);
  return binomial(m + t, t) - nonvanishing;
}

/// ASCII rendering of the first `rows` rows of Pascal's triangle mod p, centred,
/// with vanishing entries left blank.
[[nodiscard]] inline std::string render_triangle(std::size_t rows, std::uint32_t p) {
  require_prime(p);
  if (rows == 0) throw std::invalid_argument("render_triangle requires rows >= 1");
  const std::size_t width = std::to_string(p - 1).size();
  std::string out;
  for (std::size_t n = 0; n < rows; ++n) {
    std::string line((rows - 1 - n) * (width + 1) / 2, ' ');
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != 0) line += ' ';
      const auto v = binom_mod_p(n, j, p);
      std::string cell = v == 0 ? std::string(width, ' ') : std::to_string(v);
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_BASE_P_HPP
