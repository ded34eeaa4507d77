#ifndef VERONUCLEUS_NRC_HPP
#define VERONUCLEUS_NRC_HPP

// Normal rational curves {F(1, x, ..., x^n) | x in F ∪ {∞}}: osculating
// subspaces from Hasse derivatives, k-nuclei by brute-force intersection and
// by the closed-form digit criteria.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "base_p.hpp"
#include "gf.hpp"
#include "index_set.hpp"
#include "linalg.hpp"

namespace veronucleus {

class NrcSpec {
 public:
  NrcSpec(std::size_t n, FieldSpec field) : n_(n), field_(std::move(field)) {
    if (n_ < 2) throw std::invalid_argument("normal rational curve requires n >= 2");
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::uint64_t q() const noexcept { return field_.order(); }
  [[nodiscard]] std::uint32_t p() const noexcept { return field_.characteristic(); }

  /// q >= n + 2: the curve is a (q+1)-arc and its collineation group is
  /// induced by PΓL(2, q).
  [[nodiscard]] bool is_arc_regime() const noexcept { return q() >= n_ + 2; }
  /// q >= k + 1: the closed forms for the k-nucleus are exact.
  [[nodiscard]] bool formula_applies(long k) const noexcept { return static_cast<long>(q()) >= k + 1; }
  /// q >= n: the count of distinct nuclei is exact.
  [[nodiscard]] bool count_applies() const noexcept { return q() >= n_; }

 private:
  std::size_t n_;
  FieldSpec field_;
};

/// Inhomogeneous curve parameter: a field element or ∞.
class CurveParameter {
 public:
  static CurveParameter finite(Elem u) { return CurveParameter(u); }
  static CurveParameter infinity() { return CurveParameter(); }

  [[nodiscard]] bool is_infinity() const noexcept { return !value_.has_value(); }
  [[nodiscard]] Elem value() const {
    if (!value_) throw std::logic_error("parameter at infinity has no field value");
    return *value_;
  }
  [[nodiscard]] std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const CurveParameter&, const CurveParameter&) = default;

 private:
  CurveParameter() = default;
  explicit CurveParameter(Elem v) : value_(v) {}
  std::optional<Elem> value_;
};

struct CurvePoint {
  CurveParameter parameter;
  Vector coordinates;
};

inline void check_parameter(const NrcSpec& s, const CurveParameter& u) {
  if (!u.is_infinity() && !s.field().contains(u.value()))
    throw std::invalid_argument("curve parameter outside " + s.field().name());
}

[[nodiscard]] inline CurvePoint curve_point(const NrcSpec& s, const CurveParameter& u) {
  check_parameter(s, u);
  Vector c(s.n() + 1, 0);
  if (u.is_infinity()) {
    c[s.n()] = 1;
  } else {
    Elem x = 1;
    for (auto& v : c) {
      v = x;
      x = s.field().mul(x, u.value());
    }
  }
  return {u, std::move(c)};
}

/// The q+1 points of the curve, one per field element (packed order) and ∞ last.
[[nodiscard]] inline std::vector<CurvePoint> curve_points(const NrcSpec& s) {
  std::vector<CurvePoint> out;
  out.reserve(s.q() + 1);
  for (Elem u = 0; u < s.field().order(); ++u) out.push_back(curve_point(s, CurveParameter::finite(u)));
  out.push_back(curve_point(s, CurveParameter::infinity()));
  return out;
}

/// Hasse derivative D^(k) on a coefficient vector (x^0 first):
/// D^(k)(X^r) = C(r, k) X^(r-k). The result has poly.size() - k entries.
[[nodiscard]] inline Vector hasse_derivative(std::size_t k, std::span<const Elem> poly, const FieldSpec& field) {
  if (k >= poly.size()) return {};
  Vector out(poly.size() - k, 0);
  for (std::size_t r = k; r < poly.size(); ++r)
    out[r - k] = field.mul(binom_mod_p(r, k, field.characteristic()), poly[r]);
  return out;
}

/// Columns: the curve point at u and its derivative points. For finite u the
/// (r, k) entry is C(r, k) u^(r-k); at ∞ the columns are c_n, c_{n-1}, ..., c_0.
[[nodiscard]] inline Matrix derivative_matrix(const NrcSpec& s, const CurveParameter& u) {
  check_parameter(s, u);
  const std::size_t n = s.n();
  const auto& f = s.field();
  Matrix m(f, n + 1, n + 1);
  if (u.is_infinity()) {
    for (std::size_t k = 0; k <= n; ++k) m.set(n - k, k, 1);
    return m;
  }
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t k = 0; k <= r; ++k)
      m.set(r, k, f.mul(binom_mod_p(r, k, f.characteristic()), f.pow(u.value(), r - k)));
  return m;
}

inline void check_osculation_order(const NrcSpec& s, long k) {
  if (k < -1 || k > static_cast<long>(s.n()) - 1)
    throw std::out_of_range("osculation order k = " + std::to_string(k) + " outside [-1, " +
                            std::to_string(s.n() - 1) + "]");
}

/// k-osculating subspace at u: span of the first k+1 columns of the
/// derivative matrix. k = -1 gives the zero subspace.
[[nodiscard]] inline Subspace osculating_subspace(const NrcSpec& s, const CurveParameter& u, long k) {
  check_osculation_order(s, k);
  const auto m = derivative_matrix(s, u);
  std::vector<Vector> cols;
  for (long c = 0; c <= k; ++c) cols.push_back(m.column(static_cast<std::size_t>(c)));
  return Subspace::span(s.field(), s.n() + 1, cols);
}

/// k-nucleus as the intersection of all q+1 k-osculating subspaces.
[[nodiscard]] inline Subspace nucleus_bruteforce(const NrcSpec& s, long k) {
  check_osculation_order(s, k);
  const std::size_t ambient = s.n() + 1;
  if (k == -1) return Subspace::zero(s.field(), ambient);
  // Lazily produced so the early exit in intersect_all also skips the
  // construction of the remaining subspaces.
  struct Osculating {
    const NrcSpec* spec;
    long k;
    struct iterator {
      const NrcSpec* spec;
      long k;
      std::uint64_t i;
      Subspace operator*() const {
        const auto u = i < spec->q() ? CurveParameter::finite(static_cast<Elem>(i)) : CurveParameter::infinity();
        return osculating_subspace(*spec, u, k);
      }
      iterator& operator++() {
        ++i;
        return *this;
      }
      bool operator!=(const iterator& o) const { return i != o.i; }
    };
    [[nodiscard]] iterator begin() const { return {spec, k, 0}; }
    [[nodiscard]] iterator end() const { return {spec, k, spec->q() + 1}; }
  };
  return intersect_all(s.field(), ambient, Osculating{&s, k});
}

/// Indices j in {0..n} with C(k+1, j) ≡ ... ≡ C(n, j) ≡ 0 (mod p).
[[nodiscard]] inline IndexSet nucleus_basis_indices(std::size_t n, std::uint32_t p, long k) {
  require_prime(p);
  if (k < -1 || k > static_cast<long>(n) - 1) throw std::out_of_range("osculation order out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= n; ++j) {
    bool vanishes = true;
    for (std::size_t r = static_cast<std::size_t>(k + 1); r <= n && vanishes; ++r)
      vanishes = binom_mod_p(r, j, p) == 0;
    if (vanishes) out.push_back(j);
  }
  return {n, std::move(out)};
}

struct NucleusBasis {
  IndexSet indices;
  /// q >= k + 1. Outside it the span of these base points is only contained
  /// in the nucleus.
  bool in_hypothesis;
};

[[nodiscard]] inline NucleusBasis nucleus_basis_formula(const NrcSpec& s, long k) {
  check_osculation_order(s, k);
  return {nucleus_basis_indices(s.n(), s.p(), k), s.formula_applies(k)};
}

struct NucleusDimension {
  long dim;
  /// Smallest R with T(R, n+1) <= k+1.
  std::size_t R;
  /// Lower end of the bracket T(R) <= k+1 < T(Q).
  std::size_t Q;
  /// At most one non-zero digit of n+1 in positions Q..R-1.
  bool digit_condition;
  bool in_hypothesis;
};

/// Projective dimension Σ(R, n) - 1 of the k-nucleus.
[[nodiscard]] inline NucleusDimension nucleus_dim_formula(std::size_t n, std::uint32_t p, long k,
                                                          bool in_hypothesis = true) {
  require_prime(p);
  if (k < -1 || k > static_cast<long>(n) - 1) throw std::out_of_range("osculation order out of range");
  const std::uint64_t b = n + 1;
  const std::uint64_t bound = static_cast<std::uint64_t>(k + 1);
  const Digits bd(b, p);
  std::size_t R = 0;
  while (top_line(R, b, p) > bound) ++R;
  // R >= 1 because T(0, b) = n + 1 > k + 1.
  const std::uint64_t above = top_line(R - 1, b, p);
  std::size_t Q = R - 1;
  while (Q > 0 && top_line(Q - 1, b, p) == above) --Q;
  std::size_t nonzero = 0;
  for (std::size_t s = Q; s < R; ++s) nonzero += bd[s] != 0;
  const long dim = static_cast<long>(sigma(R, n, p)) - 1;
  return {dim, R, Q, nonzero <= 1, in_hypothesis};
}

[[nodiscard]] inline NucleusDimension nucleus_dim_formula(const NrcSpec& s, long k) {
  check_osculation_order(s, k);
  return nucleus_dim_formula(s.n(), s.p(), k, s.formula_applies(k));
}

/// Number of distinct nuclei (the empty one included): the number of non-zero
/// base-p digits of n + 1. Exact for q >= n.
[[nodiscard]] inline std::size_t count_nuclei(std::size_t n, std::uint32_t p) {
  return Digits(n + 1, p).nonzero_positions().size();
}

/// If n = 2p^i - 2 >= 2, the smallest non-empty nucleus is the point
/// F c_{p^i - 1}; returns that index.
[[nodiscard]] inline std::optional<std::size_t> point_nucleus_predicate(std::size_t n, std::uint32_t p) {
  require_prime(p);
  if (n < 2 || n % 2 != 0) return std::nullopt;
  std::uint64_t pi = 1;
  while (pi < (n + 2) / 2) pi *= p;
  if (2 * pi - 2 == n) return pi - 1;
  return std::nullopt;
}

struct ArcCheckOptions {
  /// Subsets are enumerated exhaustively up to this many; above it they are
  /// sampled.
  std::uint64_t exhaustive_limit = 500000;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0x5eedULL;
};

/// True iff every min(|points|, ambient) of the points are linearly independent.
[[nodiscard]] inline bool is_arc(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& points,
                                 const ArcCheckOptions& opt = {}) {
  const std::size_t size = std::min(points.size(), ambient);
  if (size == 0) return true;
  auto independent = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    rows.reserve(idx.size());
    for (auto i : idx) rows.push_back(points[i]);
    return rank(Matrix(field, ambient, rows)) == idx.size();
  };
  if (binomial(points.size(), size) <= opt.exhaustive_limit) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (!independent(idx)) return false;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == points.size() - size + i - 1) --i;
      if (i == 0) return true;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::uint64_t s = 0; s < opt.samples; ++s) {
    // Partial Fisher-Yates for a uniform subset.
    for (std::size_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    if (!independent({all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size)})) return false;
  }
  return true;
}

/// Every n+1 of the q+1 curve points are independent.
[[nodiscard]] inline bool arc_check(const NrcSpec& s, const ArcCheckOptions& opt = {}) {
  std::vector<Vector> pts;
  for (auto& cp : curve_points(s)) pts.push_back(std::move(cp.coordinates));
  return is_arc(s.field(), s.n() + 1, pts, opt);
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_NRC_HPP
