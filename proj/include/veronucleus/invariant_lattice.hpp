#ifndef VERONUCLEUS_INVARIANT_LATTICE_HPP
#define VERONUCLEUS_INVARIANT_LATTICE_HPP

// Invariant subspaces of a normal rational curve. Over a large enough field
// they are spans of base points F c_λ, λ in an index set closed under the
// reversal j -> n - j and under Ω(j) = {m <= n : C(m, j) ≢ 0 mod p}. The
// irreducible ones are produced by the interval-family construction below;
// the whole lattice is their closure under union.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "base_p.hpp"
#include "gf.hpp"
#include "index_set.hpp"
#include "linalg.hpp"
#include "nrc.hpp"

namespace veronucleus {

/// Ω(j) = {m : 0 <= m <= n, C(m, j) ≢ 0 mod p}. Empty when j > n.
[[nodiscard]] inline IndexSet omega(std::uint64_t j, std::size_t n, std::uint32_t p) {
  require_prime(p);
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= n; ++m)
    if (binom_mod_p(m, j, p) != 0) out.push_back(m);
  return {n, std::move(out)};
}

/// Ω(J) = ∪_{j in J} Ω(j).
[[nodiscard]] inline IndexSet omega_closure(const IndexSet& J, std::uint32_t p) {
  IndexSet out(J.n());
  for (auto j : J) out = out.united(omega(j, J.n(), p));
  return out;
}

/// Ψ(J) = J ∪ {n - j : j in J}.
[[nodiscard]] inline IndexSet psi_closure(const IndexSet& J) {
  std::vector<std::size_t> out(J.begin(), J.end());
  for (auto j : J) out.push_back(J.n() - j);
  return {J.n(), std::move(out)};
}

[[nodiscard]] inline bool is_invariant_index_set(const IndexSet& J, std::uint32_t p) {
  return psi_closure(J).is_subset_of(J) && omega_closure(J, p).is_subset_of(J);
}

/// V(i, b): b with all digits at positions >= i removed.
[[nodiscard]] inline std::uint64_t v_truncate(std::size_t i, std::uint64_t b, std::uint32_t p) {
  return b - top_line(i, b, p);
}

/// Digit positions {j : high > j >= low}, i.e. [low, high).
struct Interval {
  std::size_t low;
  std::size_t high;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A cut position i and a family I_1, ..., I_L of digit intervals of b.
struct IntervalFamily {
  std::size_t i = 0;
  std::vector<std::optional<Interval>> intervals;
  std::uint64_t b = 1;
  std::uint32_t p = 2;

  /// Throws std::invalid_argument unless every non-empty interval satisfies
  /// i-1 >= high > low >= 0, later intervals lie strictly above earlier ones,
  /// b_high < p-1 and b_low > 0.
  void validate() const {
    require_prime(p);
    const Digits bd(b, p);
    std::optional<std::size_t> prev_high;
    for (const auto& iv : intervals) {
      if (!iv) continue;
      if (!(iv->high > iv->low && iv->high + 1 <= i))
        throw std::invalid_argument("interval [" + std::to_string(iv->low) + "," + std::to_string(iv->high) +
                                    ") is not inside the cut " + std::to_string(i));
      if (prev_high && iv->low <= *prev_high)
        throw std::invalid_argument("intervals overlap or are out of order");
      if (!(bd[iv->high] < p - 1 && bd[iv->low] > 0))
        throw std::invalid_argument("digit condition fails for interval [" + std::to_string(iv->low) + "," +
                                    std::to_string(iv->high) + ")");
      prev_high = iv->high;
    }
  }

  [[nodiscard]] bool is_valid() const {
    try {
      validate();
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }

  /// Display label, e.g. "Λ({0,1};3,32)" or "Λ(∅;4,32)".
  [[nodiscard]] std::string label() const {
    std::string s = "Λ(";
    bool any = false;
    for (const auto& iv : intervals) {
      if (!iv) continue;
      if (any) s += ',';
      s += '{';
      for (std::size_t j = iv->low; j < iv->high; ++j) {
        if (j != iv->low) s += ',';
        s += std::to_string(j);
      }
      s += '}';
      any = true;
    }
    if (!any) s += "∅";
    return s + ";" + std::to_string(i) + "," + std::to_string(b) + ")";
  }

  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;
};

/// V(I_1, ..., I_L; i, b): starting from V(i, b), each non-empty interval
/// raises the digit at its upper end by one and clears the digits inside it.
[[nodiscard]] inline std::uint64_t v_modified(const IntervalFamily& f) {
  f.validate();
  const Digits bd(f.b, f.p);
  std::vector<std::uint64_t> d(f.i);
  for (std::size_t s = 0; s < f.i; ++s) d[s] = bd[s];
  for (const auto& iv : f.intervals) {
    if (!iv) continue;
    d[iv->high] += 1;
    for (std::size_t s = iv->low; s < iv->high; ++s) d[s] = 0;
  }
  std::uint64_t v = 0;
  for (std::size_t s = d.size(); s-- > 0;) v = v * f.p + d[s];
  return v;
}

namespace detail {

// Maximal runs of consecutive integers in a sorted set, as [low, high).
inline std::vector<Interval> runs_of(const std::vector<std::size_t>& sorted) {
  std::vector<Interval> out;
  for (auto x : sorted) {
    if (!out.empty() && out.back().high == x)
      ++out.back().high;
    else
      out.push_back({x, x + 1});
  }
  return out;
}

}  // namespace detail

/// One choice (T_1, ..., T_L) with T_α ⊆ I_α.
struct TVariant {
  std::vector<std::vector<std::size_t>> parts;
  /// The maximal runs of all T_α, as the interval family that defines V.
  IntervalFamily runs;
  std::uint64_t value;
};

/// All (T_1, ..., T_L) with each T_α empty or a subset of I_α for which
/// V(T_1, ..., T_L; i, b) is defined: every maximal run of every T_α must
/// itself satisfy the interval conditions.
[[nodiscard]] inline std::vector<TVariant> t_variants(const IntervalFamily& f) {
  f.validate();
  const Digits bd(f.b, f.p);
  auto run_ok = [&](const Interval& r) { return bd[r.high] < f.p - 1 && bd[r.low] > 0 && r.high < f.i; };

  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& iv : f.intervals) {
    std::vector<std::vector<std::size_t>> opts{{}};
    if (iv) {
      const std::size_t width = iv->high - iv->low;
      if (width >= 63) throw std::invalid_argument("interval too wide");
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
        std::vector<std::size_t> t;
        for (std::size_t k = 0; k < width; ++k)
          if ((mask >> k) & 1U) t.push_back(iv->low + k);
        const auto rs = detail::runs_of(t);
        if (std::all_of(rs.begin(), rs.end(), run_ok)) opts.push_back(std::move(t));
      }
    }
    choices.push_back(std::move(opts));
  }

  std::vector<TVariant> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    TVariant v;
    v.runs.i = f.i;
    v.runs.b = f.b;
    v.runs.p = f.p;
    for (std::size_t a = 0; a < choices.size(); ++a) {
      const auto& t = choices[a][pick[a]];
      v.parts.push_back(t);
      for (const auto& r : detail::runs_of(t)) v.runs.intervals.emplace_back(r);
    }
    v.value = v_modified(v.runs);
    out.push_back(std::move(v));
    std::size_t a = 0;
    while (a < pick.size() && ++pick[a] == choices[a].size()) pick[a++] = 0;
    if (a == pick.size()) break;
  }
  return out;
}

/// Λ(I_1, ..., I_L; i, b) = ∪ Ω(V(T_1, ..., T_L; i, b)) over all variants.
/// Throws std::logic_error if the result is not Ψ- and Ω-closed.
[[nodiscard]] inline IndexSet lambda_set(const IntervalFamily& f) {
  if (f.b == 0) throw std::invalid_argument("b = n + 1 must be positive");
  const std::size_t n = f.b - 1;
  IndexSet out(n);
  for (const auto& v : t_variants(f)) out = out.united(omega(v.value, n, f.p));
  if (!is_invariant_index_set(out, f.p))
    throw std::logic_error(f.label() + " = " + out.to_string() + " is not closed under Ψ and Ω");
  return out;
}

/// Every valid interval family at cut i (empty intervals omitted; the empty
/// family comes first).
[[nodiscard]] inline std::vector<IntervalFamily> interval_families(std::size_t i, std::uint64_t b, std::uint32_t p) {
  const Digits bd(b, p);
  std::vector<Interval> candidates;
  for (std::size_t high = 1; high + 1 <= i; ++high)
    for (std::size_t low = 0; low < high; ++low)
      if (bd[high] < p - 1 && bd[low] > 0) candidates.push_back({low, high});
  std::sort(candidates.begin(), candidates.end());

  std::vector<IntervalFamily> out;
  std::vector<std::optional<Interval>> cur;
  auto rec = [&](auto&& self, std::optional<std::size_t> last_high) -> void {
    out.push_back({i, cur, b, p});
    for (const auto& c : candidates) {
      if (last_high && c.low <= *last_high) continue;
      cur.emplace_back(c);
      self(self, c.high);
      cur.pop_back();
    }
  };
  rec(rec, std::nullopt);
  return out;
}

struct Irreducible {
  IndexSet indices;
  /// Every (i, intervals) descriptor producing this set.
  std::vector<IntervalFamily> descriptors;
};

/// All distinct Λ sets for b = n + 1, cut positions 0 through the number of
/// digits of b. Sorted by IndexSet order.
[[nodiscard]] inline std::vector<Irreducible> enumerate_irreducibles(std::size_t n, std::uint32_t p) {
  const std::uint64_t b = n + 1;
  const Digits bd(b, p);
  std::map<IndexSet, std::vector<IntervalFamily>> found;
  for (std::size_t i = 0; i <= bd.size(); ++i)
    for (auto& f : interval_families(i, b, p)) {
      auto set = lambda_set(f);
      found[std::move(set)].push_back(std::move(f));
    }
  std::vector<Irreducible> out;
  for (auto& [set, ds] : found) {
    // Fewest intervals first, then the largest cut: the most economical name.
    std::stable_sort(ds.begin(), ds.end(), [](const IntervalFamily& a, const IntervalFamily& c) {
      auto count = [](const IntervalFamily& f) {
        return std::count_if(f.intervals.begin(), f.intervals.end(), [](const auto& iv) { return iv.has_value(); });
      };
      if (count(a) != count(c)) return count(a) < count(c);
      return a.i > c.i;
    });
    out.push_back({set, std::move(ds)});
  }
  return out;
}

struct LatticeNode {
  IndexSet indices;
  bool irreducible = false;
  bool nucleus = false;
  std::vector<IntervalFamily> descriptors;
};

struct Lattice {
  std::size_t n = 0;
  std::uint32_t p = 2;
  /// Sorted by IndexSet order, so the empty set comes first.
  std::vector<LatticeNode> nodes;
  /// (lower, upper) node indices of the covering relation.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
  /// Set when a union of two nodes was not closed and had to be re-closed.
  bool reclosed = false;

  [[nodiscard]] std::optional<std::size_t> find(const IndexSet& s) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].indices == s) return i;
    return std::nullopt;
  }
};

namespace detail {

inline IndexSet close_index_set(IndexSet s, std::uint32_t p) {
  while (true) {
    auto next = omega_closure(psi_closure(s), p).united(s);
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace detail

/// Closure of the irreducibles under union, with the covering relation and
/// the irreducible / nucleus flags.
[[nodiscard]] inline Lattice build_lattice(const std::vector<Irreducible>& irreducibles, std::size_t n,
                                           std::uint32_t p) {
  Lattice lat;
  lat.n = n;
  lat.p = p;
  std::set<IndexSet> nodes{IndexSet(n)};
  std::map<IndexSet, std::vector<IntervalFamily>> descriptors;
  for (const auto& irr : irreducibles) {
    if (irr.indices.n() != n) throw std::invalid_argument("irreducible over a different n");
    nodes.insert(irr.indices);
    auto& d = descriptors[irr.indices];
    d.insert(d.end(), irr.descriptors.begin(), irr.descriptors.end());
  }
  std::vector<IndexSet> work(nodes.begin(), nodes.end());
  while (!work.empty()) {
    const IndexSet a = std::move(work.back());
    work.pop_back();
    std::vector<IndexSet> fresh;
    for (const auto& c : nodes) {
      IndexSet u = a.united(c);
      if (!is_invariant_index_set(u, p)) {
        lat.reclosed = true;
        u = detail::close_index_set(std::move(u), p);
      }
      if (!nodes.contains(u)) fresh.push_back(std::move(u));
    }
    for (auto& u : fresh)
      if (nodes.insert(u).second) work.push_back(std::move(u));
  }

  std::set<IndexSet> nuclei;
  for (long k = -1; k <= static_cast<long>(n) - 1; ++k) nuclei.insert(nucleus_basis_indices(n, p, k));

  for (const auto& s : nodes) {
    LatticeNode node{s, false, nuclei.contains(s), {}};
    if (auto it = descriptors.find(s); it != descriptors.end()) node.descriptors = it->second;
    lat.nodes.push_back(std::move(node));
  }
  const std::size_t count = lat.nodes.size();
  for (std::size_t a = 0; a < count; ++a) {
    IndexSet below(n);
    bool any_below = false;
    for (std::size_t c = 0; c < count; ++c) {
      if (c == a || !lat.nodes[c].indices.is_subset_of(lat.nodes[a].indices)) continue;
      below = below.united(lat.nodes[c].indices);
      any_below = true;
    }
    lat.nodes[a].irreducible = !any_below || below != lat.nodes[a].indices;
  }
  for (std::size_t lo = 0; lo < count; ++lo)
    for (std::size_t hi = 0; hi < count; ++hi) {
      if (lo == hi || !lat.nodes[lo].indices.is_subset_of(lat.nodes[hi].indices)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < count && covered; ++mid) {
        if (mid == lo || mid == hi) continue;
        if (lat.nodes[lo].indices.is_subset_of(lat.nodes[mid].indices) &&
            lat.nodes[mid].indices.is_subset_of(lat.nodes[hi].indices))
          covered = false;
      }
      if (covered) lat.cover_edges.emplace_back(lo, hi);
    }
  return lat;
}

[[nodiscard]] inline Lattice build_lattice(std::size_t n, std::uint32_t p) {
  return build_lattice(enumerate_irreducibles(n, p), n, p);
}

[[nodiscard]] inline bool is_totally_ordered(const Lattice& lat) {
  for (const auto& a : lat.nodes)
    for (const auto& b : lat.nodes)
      if (!a.indices.is_subset_of(b.indices) && !b.indices.is_subset_of(a.indices)) return false;
  return true;
}

/// Digit test for the lattice of invariant subspaces to be a chain: with
/// N_1 < ... < N_d the positions of the non-zero digits of n + 1, either
/// d <= 2, or the positions are consecutive and the inner digits all equal
/// p - 1.
[[nodiscard]] inline bool is_chain_criterion(std::size_t n, std::uint32_t p) {
  const Digits bd(n + 1, p);
  const auto pos = bd.nonzero_positions();
  const std::size_t d = pos.size();
  if (d <= 2) return true;
  if (pos.back() - pos.front() != d - 1) return false;
  for (std::size_t k = 1; k + 1 < d; ++k)
    if (bd[pos[k]] != p - 1) return false;
  return true;
}

inline constexpr std::size_t kDefaultClosureCap = 16;

/// All Λ ⊆ {0..n} with Ψ(Λ) ⊆ Λ and Ω(Λ) ⊆ Λ, by scanning all 2^(n+1) subsets.
[[nodiscard]] inline std::vector<IndexSet> closure_bruteforce(std::size_t n, std::uint32_t p,
                                                              std::size_t cap = kDefaultClosureCap) {
  require_prime(p);
  if (n > cap || n >= 62)
    throw std::invalid_argument("closure brute force for n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  std::vector<std::uint64_t> needs(n + 1);  // Ω(j) ∪ {n - j} as a bit mask
  for (std::size_t j = 0; j <= n; ++j) {
    std::uint64_t m = std::uint64_t{1} << (n - j);
    for (std::size_t r = 0; r <= n; ++r)
      if (binom_mod_p(r, j, p) != 0) m |= std::uint64_t{1} << r;
    needs[j] = m;
  }
  std::vector<IndexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << (n + 1);
  for (std::uint64_t s = 0; s < limit; ++s) {
    bool closed = true;
    for (std::size_t j = 0; j <= n && closed; ++j)
      if ((s >> j) & 1U) closed = (needs[j] & ~s) == 0;
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j <= n; ++j)
      if ((s >> j) & 1U) members.push_back(j);
    out.emplace_back(n, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Coefficients of (a + b y)^k as a polynomial in y.
inline Vector linear_power(const FieldSpec& f, Elem a, Elem b, std::size_t k) {
  Vector r{1};
  for (std::size_t i = 0; i < k; ++i) {
    Vector next(r.size() + 1, 0);
    for (std::size_t d = 0; d < r.size(); ++d) {
      next[d] = f.add(next[d], f.mul(a, r[d]));
      next[d + 1] = f.add(next[d + 1], f.mul(b, r[d]));
    }
    r = std::move(next);
  }
  return r;
}

inline Vector poly_mul(const FieldSpec& f, const Vector& x, const Vector& y) {
  Vector r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
  return r;
}

}  // namespace detail

/// Action of g = [[a, b], [c, d]] on the ambient space of the degree-n curve,
/// induced by (x_0, x_1) -> (a x_0 + b x_1, c x_0 + d x_1) on parameters: row j
/// holds the coefficients of (a X_0 + b X_1)^(n-j) (c X_0 + d X_1)^j in the
/// basis X_0^(n-e) X_1^e. It sends the curve point of x to the curve point of
/// g x.
[[nodiscard]] inline Matrix symmetric_power_matrix(const Matrix& g, std::size_t n) {
  if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("symmetric power needs a 2x2 matrix");
  const auto& f = g.field();
  const Elem det = f.sub(f.mul(g(0, 0), g(1, 1)), f.mul(g(0, 1), g(1, 0)));
  if (det == 0) throw std::invalid_argument("symmetric power of a singular matrix");
  Matrix out(f, n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const auto row = detail::poly_mul(f, detail::linear_power(f, g(0, 0), g(0, 1), n - j),
                                      detail::linear_power(f, g(1, 0), g(1, 1), j));
    for (std::size_t e = 0; e <= n; ++e) out.set(j, e, row[e]);
  }
  return out;
}

struct NamedMatrix {
  std::string name;
  Matrix matrix;
};

/// diag(1, γ) for a primitive γ, the swap, and the unipotent [[1, 1], [0, 1]];
/// together they generate GL(2, q).
[[nodiscard]] inline std::vector<NamedMatrix> gl2_generators(const FieldSpec& f) {
  Matrix diag(f, 2, 2), swap(f, 2, 2), unip(f, 2, 2);
  diag.set(0, 0, 1);
  diag.set(1, 1, f.generator());
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  unip.set(0, 0, 1);
  unip.set(0, 1, 1);
  unip.set(1, 1, 1);
  return {{"diagonal", diag}, {"swap", swap}, {"unipotent", unip}};
}

struct InvarianceCheck {
  bool invariant;
  /// q >= n + 2 (or n = 2), the regime where coordinate spans are the only
  /// candidates.
  bool in_hypothesis;
  /// First generator that moves the span, if any.
  std::optional<std::string> moved_by;
};

/// Whether span{c_λ : λ in candidate} is mapped into itself by the curve
/// actions of the GL(2, q) generators.
[[nodiscard]] inline InvarianceCheck invariance_oracle(const FieldSpec& field, const IndexSet& candidate) {
  const std::size_t n = candidate.n();
  const auto span = Subspace::coordinate(field, n + 1, candidate.members());
  InvarianceCheck out{true, field.order() >= n + 2 || n == 2, std::nullopt};
  for (const auto& g : gl2_generators(field)) {
    const auto m = symmetric_power_matrix(g.matrix, n);
    for (auto lam : candidate)
      if (!span.contains(m.column(lam))) {
        out.invariant = false;
        out.moved_by = g.name;
        return out;
      }
  }
  return out;
}

[[nodiscard]] inline InvarianceCheck invariance_oracle(std::size_t n, std::uint32_t p, std::uint32_t e,
                                                       const IndexSet& candidate) {
  if (candidate.n() != n) throw std::invalid_argument("candidate index set over a different n");
  return invariance_oracle(make_field(p, e), candidate);
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_INVARIANT_LATTICE_HPP
