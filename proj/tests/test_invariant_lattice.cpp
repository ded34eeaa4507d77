#include <catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <veronucleus/invariant_lattice.hpp>

#include "support/golden_lattice.hpp"

using namespace veronucleus;

namespace {

IntervalFamily family(std::size_t i, std::vector<std::optional<Interval>> ivs, std::uint64_t b = 32,
                      std::uint32_t p = 3) {
  return {i, std::move(ivs), b, p};
}

std::set<std::uint64_t> variant_values(const IntervalFamily& f) {
  std::set<std::uint64_t> out;
  for (const auto& v : t_variants(f)) out.insert(v.value);
  return out;
}

std::vector<IndexSet> node_sets(const Lattice& lat) {
  std::vector<IndexSet> out;
  for (const auto& node : lat.nodes) out.push_back(node.indices);
  return out;
}

}  // namespace

TEST_CASE("omega") {
  CHECK(omega(0, 9, 2) == IndexSet::full(9));
  CHECK(omega(2, 31, 3) == IndexSet(31, {2, 5, 8, 11, 14, 17, 20, 23, 26, 29}));
  CHECK(omega(32, 31, 3).empty());
  CHECK(omega(1, 2, 2) == IndexSet(2, {1}));
}

TEST_CASE("psi closure") {
  CHECK(psi_closure(IndexSet(5)).empty());
  CHECK(psi_closure(IndexSet(5, {0})) == IndexSet(5, {0, 5}));
  const IndexSet sym(6, {1, 3, 5});
  CHECK(psi_closure(sym) == sym);
}

TEST_CASE("closure laws") {
  for (std::uint32_t p : {2U, 3U})
    for (std::size_t n = 1; n <= 9; ++n)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)); mask += 5) {
        std::vector<std::size_t> m;
        for (std::size_t j = 0; j <= n; ++j)
          if ((mask >> j) & 1U) m.push_back(j);
        const IndexSet J(n, m);
        const auto w = omega_closure(J, p);
        CHECK(J.is_subset_of(w));  // j is in Ω(j)
        CHECK(omega_closure(w, p) == w);
        CHECK(psi_closure(psi_closure(J)) == psi_closure(J));
        CHECK(J.is_subset_of(psi_closure(J)));
      }
}

TEST_CASE("truncated values") {
  CHECK(v_truncate(0, 32, 3) == 0);
  CHECK(v_truncate(2, 32, 3) == 5);
  CHECK(v_truncate(3, 32, 3) == 5);
  CHECK(v_truncate(4, 32, 3) == 32);
  CHECK(v_truncate(1, 32, 3) == 2);
}

TEST_CASE("interval families") {
  CHECK(v_modified(family(3, {Interval{0, 1}})) == 6);
  CHECK(v_modified(family(3, {Interval{0, 2}})) == 9);
  CHECK(v_modified(family(3, {std::nullopt})) == 5);
  CHECK(v_modified(family(2, {})) == 5);
  CHECK(family(3, {Interval{0, 2}}).label() == "Λ({0,1};3,32)");
  CHECK(family(4, {}).label() == "Λ(∅;4,32)");

  CHECK_FALSE(family(3, {Interval{0, 3}}).is_valid());                   // reaches the cut
  CHECK_FALSE(family(3, {Interval{1, 1}}).is_valid());                   // empty range
  CHECK_FALSE(family(4, {Interval{2, 3}}).is_valid());                   // b_2 = 0
  CHECK_FALSE(family(4, {Interval{0, 1}, Interval{1, 2}}).is_valid());  // touching
  CHECK_THROWS_AS(v_modified(family(3, {Interval{2, 3}})), std::invalid_argument);
}

TEST_CASE("variants") {
  const auto none = t_variants(family(3, {std::nullopt, std::nullopt}));
  REQUIRE(none.size() == 1);
  CHECK(none[0].value == 5);

  const auto single = t_variants(family(3, {Interval{1, 2}}));
  REQUIRE(single.size() == 2);
  CHECK(variant_values(family(3, {Interval{1, 2}})) == std::set<std::uint64_t>{5, 11});

  CHECK(variant_values(family(3, {Interval{0, 2}})) == std::set<std::uint64_t>{5, 6, 9, 11});
}

TEST_CASE("lambda sets for n = 31, p = 3") {
  CHECK(lambda_set(family(0, {})) == IndexSet::full(31));
  CHECK(lambda_set(family(3, {Interval{0, 1}})) == omega(5, 31, 3).united(omega(6, 31, 3)));
  CHECK(lambda_set(family(4, {})).empty());
  CHECK(lambda_set(family(1, {})) == omega(2, 31, 3));
  CHECK(lambda_set(family(2, {})) == lambda_set(family(3, {})));
}

TEST_CASE("irreducibles for n = 31, p = 3") {
  const auto irr = enumerate_irreducibles(31, 3);
  REQUIRE(irr.size() == 7);
  std::set<std::string> labels;
  for (const auto& x : irr) {
    REQUIRE_FALSE(x.descriptors.empty());
    labels.insert(x.descriptors.front().label());
    for (const auto& d : x.descriptors) CHECK(lambda_set(d) == x.indices);
  }
  CHECK(labels == golden::irreducible_labels_31_3());
}

TEST_CASE("small irreducible families") {
  const auto irr3 = enumerate_irreducibles(3, 2);
  std::set<IndexSet> sets3;
  for (const auto& x : irr3) sets3.insert(x.indices);
  CHECK(sets3.contains(IndexSet::full(3)));
  CHECK(sets3.contains(IndexSet(3)));

  std::set<IndexSet> sets2;
  for (const auto& x : enumerate_irreducibles(2, 2)) sets2.insert(x.indices);
  CHECK(sets2.contains(IndexSet(2, {1})));
}

TEST_CASE("the n = 31, p = 3 lattice") {
  const auto lat = build_lattice(31, 3);
  CHECK(lat.nodes.size() == 10);
  CHECK_FALSE(lat.reclosed);
  std::size_t irreducible = 0, nuclei = 0;
  for (const auto& node : lat.nodes) {
    irreducible += node.irreducible;
    nuclei += node.nucleus;
  }
  CHECK(irreducible == 7);
  CHECK(nuclei == 3);
  CHECK(nuclei == count_nuclei(31, 3));
  CHECK(golden::isomorphic(golden::to_poset(lat), golden::lattice_31_3()));
  CHECK_FALSE(is_totally_ordered(lat));

  // A single flag flip breaks the match.
  auto wrong = golden::lattice_31_3();
  wrong.nucleus[5] = true;
  CHECK_FALSE(golden::isomorphic(golden::to_poset(lat), wrong));
}

TEST_CASE("a single irreducible gives a two-node chain") {
  const auto lat = build_lattice({Irreducible{IndexSet::full(4), {}}}, 4, 2);
  REQUIRE(lat.nodes.size() == 2);
  CHECK(lat.nodes[0].indices.empty());
  CHECK(lat.nodes[1].indices == IndexSet::full(4));
  CHECK(lat.cover_edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(is_totally_ordered(lat));
}

TEST_CASE("cover edges have no shortcuts") {
  const auto lat = build_lattice(26, 3);
  for (const auto& [lo, hi] : lat.cover_edges) {
    CHECK(lat.nodes[lo].indices.is_subset_of(lat.nodes[hi].indices));
    for (std::size_t mid = 0; mid < lat.nodes.size(); ++mid) {
      if (mid == lo || mid == hi) continue;
      const bool between = lat.nodes[lo].indices.is_subset_of(lat.nodes[mid].indices) &&
                           lat.nodes[mid].indices.is_subset_of(lat.nodes[hi].indices);
      CHECK_FALSE(between);
    }
  }
}

TEST_CASE("closure brute force") {
  CHECK(closure_bruteforce(2, 2) == std::vector<IndexSet>{IndexSet(2), IndexSet(2, {1}), IndexSet::full(2)});
  CHECK(closure_bruteforce(3, 2) == std::vector<IndexSet>{IndexSet(3), IndexSet::full(3)});
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = closure_bruteforce(n, 5);
    CHECK(all.front().empty());
    CHECK(all.back() == IndexSet::full(n));
  }
  CHECK_THROWS_AS(closure_bruteforce(17, 2), std::invalid_argument);
}

TEST_CASE("lattice nodes match the closure brute force") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto lat = build_lattice(n, p);
      CHECK_FALSE(lat.reclosed);
      CHECK(node_sets(lat) == closure_bruteforce(n, p));
    }
}

TEST_CASE("nuclei are lattice nodes") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 2; n <= 30; ++n) {
      const auto lat = build_lattice(n, p);
      std::size_t flagged = 0;
      for (const auto& node : lat.nodes) flagged += node.nucleus;
      CHECK(flagged == count_nuclei(n, p));
      for (long k = -1; k <= static_cast<long>(n) - 1; ++k) CHECK(lat.find(nucleus_basis_indices(n, p, k)));
    }
}

TEST_CASE("chain criterion") {
  CHECK_FALSE(is_chain_criterion(31, 3));
  CHECK_FALSE(is_chain_criterion(50, 2));
  CHECK(is_chain_criterion(8, 3));
  CHECK(is_chain_criterion(7, 2));
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 1; n <= 40; ++n) CHECK(is_chain_criterion(n, p) == is_totally_ordered(build_lattice(n, p)));
}

TEST_CASE("symmetric powers") {
  const auto f = make_field(2, 3);
  const std::size_t n = 5;
  CHECK(symmetric_power_matrix(Matrix::identity(f, 2), n) == Matrix::identity(f, n + 1));

  const Elem a = f.generator();
  Matrix diag(f, 2, 2);
  diag.set(0, 0, 1);
  diag.set(1, 1, a);
  Matrix want(f, n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) want.set(j, j, f.pow(a, j));
  CHECK(symmetric_power_matrix(diag, n) == want);

  Matrix swap(f, 2, 2);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  const auto rev = symmetric_power_matrix(swap, n);
  const Vector x{1, 2, 3, 4, 5, 6};
  CHECK(rev.apply(x) == Vector{6, 5, 4, 3, 2, 1});

  CHECK_THROWS_AS(symmetric_power_matrix(Matrix(f, 2, 2), n), std::invalid_argument);
}

TEST_CASE("symmetric powers permute the curve") {
  for (const auto& f : {make_field(2, 3), make_field(3, 2), make_field(5, 1)}) {
    const NrcSpec s(4, f);
    std::vector<Subspace> points;
    for (const auto& cp : curve_points(s)) points.push_back(Subspace::span(f, 5, {cp.coordinates}));
    for (const auto& g : gl2_generators(f)) {
      const auto m = symmetric_power_matrix(g.matrix, 4);
      for (const auto& cp : curve_points(s)) {
        const auto image = Subspace::span(f, 5, {m.apply(cp.coordinates)});
        bool on_curve = false;
        for (const auto& q : points) on_curve = on_curve || q == image;
        CHECK(on_curve);
      }
    }
  }
}

TEST_CASE("invariance oracle") {
  CHECK(invariance_oracle(2, 2, 2, IndexSet::full(2)).invariant);
  CHECK(invariance_oracle(2, 2, 2, IndexSet(2, {1})).invariant);
  const auto moved = invariance_oracle(2, 2, 2, IndexSet(2, {0}));
  CHECK_FALSE(moved.invariant);
  CHECK(moved.moved_by == std::optional<std::string>("swap"));
  const auto f4 = make_field(2, 2);
  const auto unip = symmetric_power_matrix(gl2_generators(f4)[2].matrix, 2);
  // The unipotent fixes the curve point at 0 and sends the point at infinity to the point at 1.
  CHECK(unip.column(0) == Vector{1, 0, 0});
  CHECK(unip.column(2) == Vector{1, 1, 1});
  CHECK(moved.in_hypothesis);
  CHECK_FALSE(invariance_oracle(make_field(2, 1), IndexSet::full(5)).in_hypothesis);
  CHECK_THROWS_AS(invariance_oracle(3, 2, 2, IndexSet(2, {1})), std::invalid_argument);
}

TEST_CASE("lattice nodes are invariant subspaces") {
  for (std::uint32_t p : {2U, 3U})
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto f = make_field(p, minimal_degree(p, n + 2));
      const auto lat = build_lattice(n, p);
      for (const auto& node : lat.nodes) CHECK(invariance_oracle(f, node.indices).invariant);
      // Coordinate sets outside the lattice are moved.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)); ++mask) {
        std::vector<std::size_t> m;
        for (std::size_t j = 0; j <= n; ++j)
          if ((mask >> j) & 1U) m.push_back(j);
        const IndexSet s(n, m);
        CHECK(invariance_oracle(f, s).invariant == lat.find(s).has_value());
      }
    }
}
