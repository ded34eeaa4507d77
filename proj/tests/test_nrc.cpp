#include <catch_amalgamated.hpp>

#include <vector>

#include <veronucleus/nrc.hpp>

using namespace veronucleus;

namespace {

const auto inf = CurveParameter::infinity();
CurveParameter at(Elem u) { return CurveParameter::finite(u); }

}  // namespace

TEST_CASE("richness flags") {
  const NrcSpec s(4, make_field(2, 3));
  CHECK(s.is_arc_regime());
  CHECK(s.count_applies());
  CHECK(s.formula_applies(3));
  CHECK_FALSE(NrcSpec(4, make_field(2, 2)).is_arc_regime());
  CHECK_FALSE(NrcSpec(8, make_field(2, 2)).formula_applies(4));
  CHECK_THROWS_AS(NrcSpec(1, make_field(2, 1)), std::invalid_argument);
}

TEST_CASE("curve points") {
  const NrcSpec s(2, make_field(2, 1));
  const auto pts = curve_points(s);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].coordinates == Vector{1, 0, 0});
  CHECK(pts[1].coordinates == Vector{1, 1, 1});
  CHECK(pts[2].coordinates == Vector{0, 0, 1});
  CHECK(pts[2].parameter.is_infinity());

  const NrcSpec s4(2, make_field(2, 2));
  const auto p4 = curve_points(s4);
  CHECK(p4.size() == 5);
  for (std::size_t i = 0; i < p4.size(); ++i)
    for (std::size_t j = i + 1; j < p4.size(); ++j)
      CHECK(Subspace::span(s4.field(), 3, {p4[i].coordinates, p4[j].coordinates}).rank() == 2);

  const NrcSpec s7(7, make_field(3, 2));
  CHECK(curve_point(s7, inf).coordinates == Vector{0, 0, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(curve_point(s7, at(9)), std::invalid_argument);
}

TEST_CASE("Hasse derivatives") {
  const auto f2 = make_field(2, 1);
  CHECK(hasse_derivative(1, Vector{0, 0, 1}, f2) == Vector{0, 0});  // D(X^2) = 2X
  const auto f5 = make_field(5, 1);
  const Vector poly{3, 1, 4, 1, 2};
  CHECK(hasse_derivative(0, poly, f5) == poly);
  CHECK(hasse_derivative(2, Vector{0, 0, 0, 1}, f5) == Vector{0, 3});  // C(3,2) X
  CHECK(hasse_derivative(2, Vector{0, 0, 0, 1}, make_field(3, 1)) == Vector{0, 0});
  CHECK(hasse_derivative(7, poly, f5).empty());
}

TEST_CASE("derivative matrices") {
  const NrcSpec s(2, make_field(2, 1));
  CHECK(derivative_matrix(s, at(0)) == Matrix::identity(s.field(), 3));
  CHECK(derivative_matrix(s, at(1)) == Matrix(s.field(), 3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(derivative_matrix(s, inf) == Matrix(s.field(), 3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

  // Column k is the k-th Hasse derivative of (1, u, ..., u^n) read as a polynomial in u.
  for (const auto& f : {make_field(3, 2), make_field(2, 4), make_field(7, 1)}) {
    const NrcSpec sp(6, f);
    for (Elem u = 0; u < f.order(); ++u) {
      const auto m = derivative_matrix(sp, at(u));
      CHECK(rank(m) == 7);
      CHECK(m.column(0) == curve_point(sp, at(u)).coordinates);
    }
    CHECK(rank(derivative_matrix(sp, inf)) == 7);
  }
}

TEST_CASE("osculating subspaces have dimension k") {
  const NrcSpec s(5, make_field(2, 3));
  for (long k = -1; k <= 4; ++k) {
    for (Elem u = 0; u < s.field().order(); ++u) CHECK(osculating_subspace(s, at(u), k).projective_dim() == k);
    CHECK(osculating_subspace(s, inf, k).projective_dim() == k);
  }
  CHECK(osculating_subspace(s, at(3), -1).is_zero());
  CHECK(osculating_subspace(s, at(3), 0) == Subspace::span(s.field(), 6, {curve_point(s, at(3)).coordinates}));
  CHECK_THROWS_AS(osculating_subspace(s, at(1), 5), std::out_of_range);
  CHECK_THROWS_AS(osculating_subspace(s, at(1), -2), std::out_of_range);
}

TEST_CASE("the conic over GF(4) has concurrent tangents") {
  const NrcSpec s(2, make_field(2, 2));
  const auto nuc = nucleus_bruteforce(s, 1);
  CHECK(nuc == Subspace::span(s.field(), 3, {{0, 1, 0}}));
  CHECK(nucleus_bruteforce(s, -1).is_zero());
  CHECK(nucleus_bruteforce(s, 0).is_zero());
  // Each of the five tangents passes through that point.
  for (Elem u = 0; u < 4; ++u) CHECK(subspace_leq(nuc, osculating_subspace(s, at(u), 1)));
  CHECK(subspace_leq(nuc, osculating_subspace(s, inf, 1)));
}

TEST_CASE("nucleus examples") {
  CHECK(nucleus_bruteforce(NrcSpec(4, make_field(2, 3)), 3).projective_dim() == 2);
  CHECK(nucleus_basis_indices(2, 2, 1) == IndexSet(2, {1}));
  for (long k = -1; k <= 2; ++k) {
    CHECK(nucleus_basis_indices(3, 2, k).empty());
    CHECK(nucleus_dim_formula(3, 2, k).dim == -1);
  }
  CHECK(nucleus_basis_indices(50, 2, 31).size() == 13);
  CHECK_THROWS_AS(nucleus_basis_indices(5, 2, 5), std::out_of_range);
}

TEST_CASE("the n = 50 dimension table") {
  for (long k = -1; k <= 49; ++k) {
    const long want = k <= 30 ? -1 : k <= 46 ? 12 : k <= 48 ? 38 : 42;
    const auto d = nucleus_dim_formula(50, 2, k);
    CHECK(d.dim == want);
    CHECK(d.digit_condition);
    CHECK(static_cast<long>(nucleus_basis_indices(50, 2, k).size()) - 1 == want);
  }
  CHECK(count_nuclei(50, 2) == 4);
}

TEST_CASE("Timmermann's formula at k = n - 1") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U})
    for (std::size_t n = 2; n <= 200; ++n) {
      const Digits d(n, p);
      long prod = 1;
      for (std::size_t s = 0; s < d.size(); ++s) prod *= d[s] + 1;
      CHECK(nucleus_dim_formula(n, p, static_cast<long>(n) - 1).dim == static_cast<long>(n) - prod);
    }
}

TEST_CASE("formula and brute force agree on the small grid") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 2; n <= 10; ++n) {
      const auto f = make_field(p, minimal_degree(p, n + 2));
      const NrcSpec s(n, f);
      std::vector<Subspace> nuclei;
      for (long k = -1; k <= static_cast<long>(n) - 1; ++k) {
        const auto nuc = nucleus_bruteforce(s, k);
        const auto basis = nucleus_basis_formula(s, k);
        CHECK(basis.in_hypothesis);
        CHECK(nuc == Subspace::coordinate(f, n + 1, basis.indices.members()));
        CHECK(nuc.projective_dim() == nucleus_dim_formula(s, k).dim);
        if (!nuclei.empty()) CHECK(subspace_leq(nuclei.back(), nuc));
        nuclei.push_back(nuc);
      }
      std::size_t distinct = 1;
      for (std::size_t i = 1; i < nuclei.size(); ++i) distinct += !(nuclei[i] == nuclei[i - 1]);
      CHECK(distinct == count_nuclei(n, p));
    }
}

TEST_CASE("count of distinct nuclei") {
  CHECK(count_nuclei(2, 2) == 2);
  CHECK(count_nuclei(3, 2) == 1);
  CHECK(count_nuclei(8, 3) == 1);
  CHECK(count_nuclei(31, 3) == 3);
}

TEST_CASE("point nuclei") {
  CHECK(point_nucleus_predicate(2, 2) == 1U);
  CHECK(point_nucleus_predicate(6, 2) == 3U);
  CHECK_FALSE(point_nucleus_predicate(5, 2).has_value());
  CHECK(point_nucleus_predicate(4, 3) == 2U);

  const NrcSpec s(6, make_field(2, 4));
  for (long k = -1; k <= 5; ++k) {
    const auto nuc = nucleus_bruteforce(s, k);
    if (nuc.is_zero()) continue;
    CHECK(nuc == Subspace::span(s.field(), 7, {{0, 0, 0, 1, 0, 0, 0}}));
    break;
  }
}

TEST_CASE("arcs") {
  CHECK(arc_check(NrcSpec(2, make_field(2, 2))));
  CHECK(arc_check(NrcSpec(3, make_field(2, 2))));
  CHECK(arc_check(NrcSpec(2, make_field(2, 1))));
  for (std::size_t n : {2U, 3U, 4U}) {
    CHECK(arc_check(NrcSpec(n, make_field(2, minimal_degree(2, n + 2)))));
    CHECK(arc_check(NrcSpec(n, make_field(3, minimal_degree(3, n + 2)))));
  }
  // A repeated point is never part of an arc.
  const auto f = make_field(3, 1);
  CHECK_FALSE(is_arc(f, 3, {{1, 0, 0}, {0, 1, 0}, {2, 0, 0}}));

  // The sampled path visits dependent triples too.
  ArcCheckOptions sampled;
  sampled.exhaustive_limit = 0;
  CHECK(arc_check(NrcSpec(3, make_field(2, 3)), sampled));
  std::vector<Vector> bad;
  for (auto& p : curve_points(NrcSpec(2, make_field(3, 1)))) bad.push_back(p.coordinates);
  bad.push_back({0, 1, 0});
  bad.push_back({0, 2, 0});
  CHECK_FALSE(is_arc(f, 3, bad, sampled));
}

TEST_CASE("a conic and its nucleus form a (q+2)-arc") {
  for (std::uint32_t e : {2U, 3U}) {
    const NrcSpec s(2, make_field(2, e));
    std::vector<Vector> pts;
    for (auto& p : curve_points(s)) pts.push_back(p.coordinates);
    const auto nuc = nucleus_bruteforce(s, 1);
    REQUIRE(nuc.rank() == 1);
    const auto row = nuc.basis().row(0);
    pts.emplace_back(row.begin(), row.end());
    CHECK(pts.size() == s.q() + 2);
    CHECK(is_arc(s.field(), 3, pts));
  }
}
