#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <veronucleus/base_p.hpp>

using namespace veronucleus;

namespace {

// Rows of Pascal's triangle mod p built by the additive recurrence only.
std::vector<std::vector<std::uint32_t>> pascal_rows(std::size_t rows, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out{{1}};
  while (out.size() < rows) {
    const auto& prev = out.back();
    std::vector<std::uint32_t> next(prev.size() + 1, 1);
    for (std::size_t j = 1; j < prev.size(); ++j) next[j] = (prev[j - 1] + prev[j]) % p;
    out.push_back(std::move(next));
  }
  return out;
}

BigInt direct_multinomial(std::uint64_t t, const std::vector<std::uint64_t>& e) {
  BigInt c = 1;
  std::uint64_t left = t;
  for (auto x : e) {
    c *= binomial(left, x);
    left -= x;
  }
  return c;
}

}  // namespace

TEST_CASE("digits of 51 in base 2 and 32 in base 3") {
  const auto d = to_digits(51, 2);
  CHECK(std::vector<std::uint32_t>(d.digits().begin(), d.digits().end()) == std::vector<std::uint32_t>{1, 1, 0, 0, 1, 1});
  CHECK(d.to_string() == "⟨110011⟩");

  const auto e = to_digits(32, 3);
  CHECK(std::vector<std::uint32_t>(e.digits().begin(), e.digits().end()) == std::vector<std::uint32_t>{2, 1, 0, 1});
  CHECK(e.to_string() == "⟨1012⟩");
  CHECK(e[7] == 0);

  CHECK(to_digits(0, 5).size() == 0);
}

TEST_CASE("digits round-trip") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U})
    for (std::uint64_t n = 0; n < 3000; n += 7) {
      const auto d = to_digits(n, p);
      CHECK(from_digits(d) == n);
      if (d.size() > 0) CHECK(d.digits().back() != 0);
    }
}

TEST_CASE("non-prime bases are rejected") {
  CHECK_THROWS_AS(to_digits(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(binom_mod_p(5, 2, 1), std::invalid_argument);
  const std::vector<std::uint64_t> e{1, 1};
  CHECK_THROWS_AS(multinom_mod_p(2, e, 6), std::invalid_argument);
}

TEST_CASE("binomials mod p") {
  CHECK(binom_mod_p(2, 1, 2) == 0);
  CHECK(binom_mod_p(50, 25, 2) == 0);
  CHECK(binom_mod_p(3, 5, 2) == 0);
  for (std::uint64_t n : {0ULL, 1ULL, 17ULL, 1000ULL}) CHECK(binom_mod_p(n, 0, 3) == 1);
}

TEST_CASE("Lucas agrees with the Pascal recurrence up to row 512") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const auto rows = pascal_rows(513, p);
    for (std::uint64_t n = 0; n < rows.size(); ++n)
      for (std::uint64_t j = 0; j <= n; ++j)
        if (binom_mod_p(n, j, p) != rows[n][j]) FAIL("n=" << n << " j=" << j << " p=" << p);
  }
}

TEST_CASE("multinomials mod p") {
  CHECK(multinom_mod_p(2, std::vector<std::uint64_t>{1, 1, 0}, 2) == 0);
  CHECK(multinom_mod_p(3, std::vector<std::uint64_t>{1, 1, 1}, 3) == 0);
  CHECK(multinom_mod_p(7, std::vector<std::uint64_t>{7, 0, 0, 0}, 5) == 1);
  CHECK_THROWS_AS(multinom_mod_p(3, std::vector<std::uint64_t>{1, 1}, 3), std::invalid_argument);

  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::uint64_t t = 0; t <= 14; ++t)
      for (const auto& e : exponent_tuples(2, t)) {
        const BigInt c = direct_multinomial(t, e) % p;
        CHECK(multinom_mod_p(t, e, p) == static_cast<std::uint32_t>(c));
      }
}

TEST_CASE("exponent tuples are graded-lex and complete") {
  const auto e = exponent_tuples(2, 2);
  const std::vector<std::vector<std::uint64_t>> want{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(e == want);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::uint64_t t = 0; t <= 8; ++t) CHECK(BigInt(exponent_tuples(m, t).size()) == binomial(m + t, t));
}

TEST_CASE("zero classes") {
  CHECK(zero_class(2, 1, 2) == ZeroClass{1, 2, 1});
  CHECK(zero_class(4, 2, 2) == ZeroClass{2, 4, 2});
  CHECK_FALSE(zero_class(5, 0, 2).has_value());
  // Row 5 mod 2 is 1 1 0 0 1 1; its zeros are the second line of the size-3
  // block whose top line is row 4.
  CHECK(zero_class(5, 2, 2)->class_index == 2);
  CHECK_THROWS_AS(zero_class(2, 3, 2), std::invalid_argument);
}

TEST_CASE("phi and sigma examples") {
  CHECK(phi(1, 2, 2) == 1);
  CHECK(phi(1, 3, 2) == 0);
  CHECK(phi(3, 50, 2) == 0);  // 50 = ⟨110010⟩ has digit 0 at position 3
  CHECK(sigma(1, 50, 2) == 43);
  CHECK(sigma(2, 50, 2) == 39);
  CHECK(sigma(1, 3, 2) == 0);
  CHECK_THROWS_AS(phi(0, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(sigma(0, 5, 2), std::invalid_argument);
}

TEST_CASE("class partition, Fine's count and the top-line chain") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto rows = pascal_rows(513, p);
    for (std::uint64_t n = 0; n < rows.size(); ++n) {
      const std::size_t len = to_digits(n, p).size();
      std::vector<std::uint64_t> per_class(len + 2, 0);
      std::uint64_t zeros = 0;
      for (std::uint64_t j = 0; j <= n; ++j) {
        const auto cls = zero_class(n, j, p);
        if (rows[n][j] != 0) {
          if (cls) FAIL("non-zero entry classified at n=" << n << " j=" << j);
          continue;
        }
        ++zeros;
        if (!cls) FAIL("zero entry unclassified at n=" << n << " j=" << j);
        REQUIRE(cls->class_index >= 1);
        REQUIRE(cls->class_index < per_class.size());
        ++per_class[cls->class_index];
        const auto top = top_line(cls->class_index, n + 1, p);
        REQUIRE(top <= n);
        for (std::uint64_t r = top; r <= n; ++r)
          if (rows[r][j] != 0) FAIL("top-line chain broken at n=" << n << " j=" << j << " r=" << r);
        if (top >= 1 && j <= top - 1 && rows[top - 1][j] == 0)
          FAIL("row above the top line still vanishes at n=" << n << " j=" << j);
      }
      BigInt tail = 0;
      for (std::size_t i = len + 1; i >= 1; --i) {
        REQUIRE(phi(i, n, p) == per_class[i]);
        tail += per_class[i];
        REQUIRE(sigma(i, n, p) == tail);
      }
      if (len > 0) REQUIRE(sigma(1, n, p) == zeros);
    }
  }
}

TEST_CASE("top line") {
  CHECK(top_line(2, 51, 2) == 48);
  CHECK(top_line(3, 51, 2) == 48);
  CHECK(top_line(4, 51, 2) == 48);
  CHECK(top_line(5, 51, 2) == 32);
  CHECK(top_line(0, 1234, 5) == 1234);
  CHECK(top_line(9, 51, 2) == 0);
}

TEST_CASE("vanishing multinomial count") {
  CHECK(count_vanishing_multinomials(2, 2, 2) == 3);
  CHECK(count_vanishing_multinomials(2, 3, 2) == 1);
  CHECK(count_vanishing_multinomials(3, 0, 5) == 0);
  CHECK_THROWS_AS(count_vanishing_multinomials(0, 4, 2), std::invalid_argument);

  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::uint64_t t = 0; t <= 30; ++t) {
        std::uint64_t direct = 0;
        for (const auto& e : exponent_tuples(m, t)) direct += direct_multinomial(t, e) % p == 0;
        CHECK(count_vanishing_multinomials(m, t, p) == direct);
      }
}

TEST_CASE("triangle rendering") {
  CHECK(render_triangle(1, 3) == "1\n");
  CHECK_THROWS_AS(render_triangle(0, 2), std::invalid_argument);

  // Entry j of row n sits at column indent(n) + 2j for single-digit residues.
  for (std::size_t rows : {4U, 8U}) {
    std::istringstream in(render_triangle(rows, 2));
    std::string line;
    for (std::size_t n = 0; n < rows; ++n) {
      REQUIRE(std::getline(in, line));
      const std::size_t indent = rows - 1 - n;
      for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t col = indent + 2 * j;
        const char c = col < line.size() ? line[col] : ' ';
        CHECK((c == '1') == (binom_mod_p(n, j, 2) != 0));
      }
    }
  }

  // Eight rows mod 2: one block of size 3 (6 entries) and three singletons.
  std::size_t size3 = 0, size1 = 0;
  for (std::uint64_t n = 0; n < 8; ++n)
    for (std::uint64_t j = 0; j <= n; ++j)
      if (auto c = zero_class(n, j, 2)) (c->class_index == 2 ? size3 : size1) += 1;
  CHECK(size3 == 6);
  CHECK(size1 == 3);
}
