#ifndef VERONUCLEUS_VERONESE_HPP
#define VERONUCLEUS_VERONESE_HPP

// Veronese varieties V_m^t: the monomial map, the dual map onto osculating
// hyperplanes, and the intersection of all osculating hyperplanes.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "base_p.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace veronucleus {

using Exponents = std::vector<std::uint64_t>;

class VeroneseSpec {
 public:
  VeroneseSpec(std::size_t m, std::uint64_t t, FieldSpec field)
      : m_(m), t_(t), field_(std::move(field)), exponents_(exponent_tuples(m, t)) {
    if (m_ < 1) throw std::invalid_argument("Veronese variety requires m >= 1");
    if (t_ < 2) throw std::invalid_argument("Veronese variety requires t >= 2");
  }

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint64_t t() const noexcept { return t_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  /// C(m+t, t), the dimension of the ambient vector space.
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return exponents_.size(); }
  /// E^t_m in graded-lexicographic order; position = coordinate index.
  [[nodiscard]] const std::vector<Exponents>& exponents() const noexcept { return exponents_; }
  /// q >= t: the hyperplane nucleus is spanned by base points.
  [[nodiscard]] bool in_hypothesis() const noexcept { return field_.order() >= t_; }

 private:
  std::size_t m_;
  std::uint64_t t_;
  FieldSpec field_;
  std::vector<Exponents> exponents_;
};

namespace detail {

inline void check_parameter_vector(const VeroneseSpec& s, std::span<const Elem> x) {
  if (x.size() != s.m() + 1) throw std::invalid_argument("parameter vector must have m + 1 coordinates");
  bool nonzero = false;
  for (auto v : x) {
    if (!s.field().contains(v)) throw std::invalid_argument("coordinate outside " + s.field().name());
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw std::invalid_argument("parameter vector must be non-zero");
}

inline Elem monomial(const FieldSpec& f, std::span<const Elem> x, const Exponents& e) {
  Elem r = 1;
  for (std::size_t i = 0; i < e.size(); ++i) r = f.mul(r, f.pow(x[i], e[i]));
  return r;
}

}  // namespace detail

/// Image of the parameter point x: the monomials Π x_i^{e_i}.
[[nodiscard]] inline Vector veronese_point(const VeroneseSpec& s, std::span<const Elem> x) {
  detail::check_parameter_vector(s, x);
  Vector out;
  out.reserve(s.ambient_dim());
  for (const auto& e : s.exponents()) out.push_back(detail::monomial(s.field(), x, e));
  return out;
}

/// Dual coordinates of the osculating hyperplane along the image of the
/// parameter hyperplane Σ a_i x_i = 0: multinomial(t; e) Π a_i^{e_i}.
[[nodiscard]] inline Vector osculating_hyperplane(const VeroneseSpec& s, std::span<const Elem> a) {
  detail::check_parameter_vector(s, a);
  const auto& f = s.field();
  Vector out;
  out.reserve(s.ambient_dim());
  bool nonzero = false;
  for (const auto& e : s.exponents()) {
    const Elem c = f.mul(multinom_mod_p(s.t(), e, f.characteristic()), detail::monomial(f, a, e));
    nonzero = nonzero || c != 0;
    out.push_back(c);
  }
  if (!nonzero) throw std::logic_error("dual Veronese image vanished");
  return out;
}

/// One representative per projective point of P^m(q): first non-zero
/// coordinate equal to 1.
[[nodiscard]] inline std::vector<Vector> projective_points(const FieldSpec& f, std::size_t m) {
  std::vector<Vector> out;
  const Elem q = f.order();
  for (std::size_t lead = 0; lead <= m; ++lead) {
    const std::size_t free = m - lead;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Vector v(m + 1, 0);
      v[lead] = 1;
      std::uint64_t rest = c;
      for (std::size_t i = m; i > lead; --i) {
        v[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// Intersection of all osculating hyperplanes, as the kernel of the matrix of
/// their dual coordinates.
[[nodiscard]] inline Subspace hyperplane_nucleus_bruteforce(const VeroneseSpec& s) {
  std::vector<Vector> rows;
  for (const auto& a : projective_points(s.field(), s.m())) rows.push_back(osculating_hyperplane(s, a));
  return kernel(Matrix(s.field(), s.ambient_dim(), rows));
}

/// Exponent tuples whose multinomial coefficient vanishes mod p; their base
/// points always lie in the hyperplane nucleus and span it when q >= t.
[[nodiscard]] inline std::vector<Exponents> hyperplane_nucleus_basis(const VeroneseSpec& s) {
  std::vector<Exponents> out;
  for (const auto& e : s.exponents())
    if (multinom_mod_p(s.t(), e, s.field().characteristic()) == 0) out.push_back(e);
  return out;
}

/// Coordinate indices of hyperplane_nucleus_basis within exponents().
[[nodiscard]] inline std::vector<std::size_t> hyperplane_nucleus_basis_indices(const VeroneseSpec& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.exponents().size(); ++i)
    if (multinom_mod_p(s.t(), s.exponents()[i], s.field().characteristic()) == 0) out.push_back(i);
  return out;
}

/// C(m+t, t) - Π_σ C(m + t_σ, t_σ) - 1, characteristic p.
[[nodiscard]] inline BigInt hyperplane_nucleus_dim(std::size_t m, std::uint64_t t, std::uint32_t p) {
  return count_vanishing_multinomials(m, t, p) - 1;
}

[[nodiscard]] inline BigInt hyperplane_nucleus_dim(const VeroneseSpec& s) {
  return hyperplane_nucleus_dim(s.m(), s.t(), s.field().characteristic());
}

/// Projective dimension of an (r, k)-osculating subspace of V_m^t:
/// Σ_{i=t-k}^{t} C(r+i, i) C(m+t-r-i-1, t-i) - 1.
[[nodiscard]] inline BigInt osculating_dim_formula(long r, long k, long m, long t) {
  if (m < 1 || t < 1) throw std::invalid_argument("osculating_dim_formula requires m, t >= 1");
  if (r < 0 || r >= m) throw std::out_of_range("r must satisfy 0 <= r < m");
  if (k < -1 || k > t - 1) throw std::out_of_range("k must satisfy -1 <= k <= t - 1");
  BigInt sum = 0;
  for (long i = t - k; i <= t; ++i)
    sum += binomial(static_cast<std::uint64_t>(r + i), static_cast<std::uint64_t>(i)) *
           binomial(static_cast<std::uint64_t>(m + t - r - i - 1), static_cast<std::uint64_t>(t - i));
  return sum - 1;
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_VERONESE_HPP
