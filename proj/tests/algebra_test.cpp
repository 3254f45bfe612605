#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "isoprod/algebra.hpp"

using namespace isoprod;

namespace {

// ---- independent oracles -------------------------------------------------

// Determinantal-divisor oracle: d_1 ... d_k = gcd of all k x k minors,
// computed by brute-force minor enumeration. No row operations involved.
std::vector<std::int64_t> minor_gcd_invariant_factors(const IntMatrix& m) {
  const std::int64_t nmin = std::min(m.rows, m.cols);
  std::vector<std::int64_t> g(static_cast<std::size_t>(nmin) + 1, 0);
  g[0] = 1;
  for (std::int64_t k = 1; k <= nmin; ++k) {
    std::int64_t gk = 0;
    std::vector<std::int64_t> rsel(static_cast<std::size_t>(k));
    std::iota(rsel.begin(), rsel.end(), 0);
    while (true) {
      std::vector<std::int64_t> csel(static_cast<std::size_t>(k));
      std::iota(csel.begin(), csel.end(), 0);
      while (true) {
        IntMatrix sub(k, k);
        for (std::int64_t i = 0; i < k; ++i)
          for (std::int64_t j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rsel[static_cast<std::size_t>(i)], csel[static_cast<std::size_t>(j)]);
        gk = gcd_nonneg(gk, mat_det(sub));
        std::int64_t i = k - 1;
        while (i >= 0 && csel[static_cast<std::size_t>(i)] == m.cols - k + i) --i;
        if (i < 0) break;
        ++csel[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < k; ++j)
          csel[static_cast<std::size_t>(j)] = csel[static_cast<std::size_t>(j - 1)] + 1;
      }
      std::int64_t i = k - 1;
      while (i >= 0 && rsel[static_cast<std::size_t>(i)] == m.rows - k + i) --i;
      if (i < 0) break;
      ++rsel[static_cast<std::size_t>(i)];
      for (std::int64_t j = i + 1; j < k; ++j)
        rsel[static_cast<std::size_t>(j)] = rsel[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (gk == 0) break;  // rank reached
    g[static_cast<std::size_t>(k)] = gk;
  }
  std::vector<std::int64_t> d;
  for (std::int64_t k = 1; k <= nmin; ++k) {
    if (g[static_cast<std::size_t>(k)] == 0) break;
    d.push_back(g[static_cast<std::size_t>(k)] / g[static_cast<std::size_t>(k - 1)]);
  }
  return d;
}

// Literal quotient enumeration for full-rank 2x2 relation matrices:
// membership in the row lattice by Cramer solving, group order by point
// counting in a fundamental box, exponent by element orders. Completely
// independent of any elimination.
struct QuotientShape {
  std::int64_t order;
  std::int64_t exponent;
};

bool in_lattice_2x2(const IntMatrix& m, std::int64_t x1, std::int64_t x2) {
  const std::int64_t a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  const std::int64_t det = a * d - b * c;
  REQUIRE(det != 0);
  const std::int64_t n1 = d * x1 - c * x2;  // det * (x * M^{-1})
  const std::int64_t n2 = -b * x1 + a * x2;
  return n1 % det == 0 && n2 % det == 0;
}

QuotientShape enumerate_quotient_2x2(const IntMatrix& m) {
  const std::int64_t det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  const std::int64_t box = det < 0 ? -det : det;
  std::int64_t lattice_points = 0;
  for (std::int64_t x = 0; x < box; ++x)
    for (std::int64_t y = 0; y < box; ++y)
      if (in_lattice_2x2(m, x, y)) ++lattice_points;
  QuotientShape q{};
  REQUIRE(lattice_points > 0);
  REQUIRE(box * box % lattice_points == 0);
  q.order = box * box / lattice_points;
  q.exponent = 1;
  for (std::int64_t x = 0; x < box; ++x)
    for (std::int64_t y = 0; y < box; ++y) {
      std::int64_t ord = 1;
      while (!in_lattice_2x2(m, ord * x, ord * y)) ++ord;
      q.exponent = std::lcm(q.exponent, ord);
    }
  return q;
}

bool is_unimodular(const IntMatrix& m) {
  std::int64_t d = mat_det(m);
  return d == 1 || d == -1;
}

void check_smith_certificate(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  CHECK(mat_mul(mat_mul(r.left, m), r.right) == r.diag);
  if (m.rows > 0) CHECK(is_unimodular(r.left));
  if (m.cols > 0) CHECK(is_unimodular(r.right));
  for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
    CHECK(r.invariant_factors[i] > 0);
    CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
  }
  CHECK(r.invariant_factors == minor_gcd_invariant_factors(m));
}

}  // namespace

TEST_CASE("checked arithmetic traps overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), std::overflow_error);
}

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a - a).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).as_integer() == 2);
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 3).as_integer());
}

TEST_CASE("smith normal form: relation matrix of the four-orbit curve") {
  // rows: E1 - E3, E2 - E4, 3E1 - 3E2 over generators (E1, E2, E3, E4)
  IntMatrix m = IntMatrix::from_rows({{1, 0, -1, 0}, {0, 1, 0, -1}, {3, -3, 0, 0}});
  SmithResult r = smith_normal_form(m);
  CHECK(r.invariant_factors == std::vector<std::int64_t>{1, 1, 3});
  CHECK(r.torsion == std::vector<std::int64_t>{3});
  CHECK(r.quotient_free_rank(4) == 1);  // quotient is Z + Z/3
  check_smith_certificate(m);
}

TEST_CASE("smith normal form: no relations leaves a free group") {
  IntMatrix m(0, 2);
  SmithResult r = smith_normal_form(m);
  CHECK(r.invariant_factors.empty());
  CHECK(r.quotient_free_rank(2) == 2);
}

TEST_CASE("smith normal form: diag(2,3) against the quotient enumeration oracle") {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  QuotientShape q = enumerate_quotient_2x2(m);
  CHECK(q.order == 6);
  CHECK(q.exponent == 6);  // cyclic of order six
  SmithResult r = smith_normal_form(m);
  CHECK(r.invariant_factors == std::vector<std::int64_t>{1, 6});
  check_smith_certificate(m);
}

TEST_CASE("smith vs quotient enumeration on all full-rank 2x2, entries <= 3") {
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c)
        for (std::int64_t d = -3; d <= 3; ++d) {
          if (a * d - b * c == 0) continue;
          IntMatrix m = IntMatrix::from_rows({{a, b}, {c, d}});
          SmithResult r = smith_normal_form(m);
          QuotientShape q = enumerate_quotient_2x2(m);
          REQUIRE(r.invariant_factors.size() == 2);
          CHECK(r.invariant_factors[0] * r.invariant_factors[1] == q.order);
          CHECK(r.invariant_factors[1] == q.exponent);
        }
}

TEST_CASE("smith certificate and minor-gcd oracle on assorted shapes") {
  check_smith_certificate(IntMatrix::from_rows({{0, 0}, {0, 0}}));
  check_smith_certificate(IntMatrix::from_rows({{2, 4, 4}}));
  check_smith_certificate(IntMatrix::from_rows({{-6, 111}, {0, -36}, {5, 2}}));
  check_smith_certificate(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 10}}));
  check_smith_certificate(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  // the transform-free path agrees with the full decomposition
  IntMatrix m = IntMatrix::from_rows({{-6, 111}, {0, -36}, {5, 2}});
  std::vector<std::int64_t> scratch(m.a.begin(), m.a.end());
  std::vector<std::int64_t> diag(2);
  smith_diagonal_inplace(scratch, m.rows, m.cols, diag);
  CHECK(diag == smith_normal_form(m).diagonal);
}

TEST_CASE("finite abelian groups: elements, subgroups, generation") {
  FinAbGroup g({3, 3});
  CHECK(g.order() == 9);
  CHECK(all_elements(g).size() == 9);

  GroupElement e1 = group_reduce(g, {1, 0});
  GroupElement e2 = group_reduce(g, {0, 1});
  auto h = subgroup_generated(g, e1);
  CHECK(h.size() == 3);
  CHECK(h[0] == group_identity(g));
  CHECK(subgroup_generated(g, group_identity(g)).size() == 1);
  CHECK(subgroup_generated(g, group_add(g, e1, e2)).size() == 3);

  // (Z/3)^2 carries the trivial subgroup, four of order 3, and itself.
  CHECK(all_subgroups(g).size() == 6);
  CHECK(generates_group(g, {e1, e2}));
  CHECK_FALSE(generates_group(g, {e1}));

  FinAbGroup z({0});
  CHECK_FALSE(z.finite());
  CHECK_THROWS(z.order());
}

TEST_CASE("characters of (3,3): count, identity first, closure") {
  FinAbGroup g({3, 3});
  auto chars = characters(g);
  CHECK(chars.size() == 9);
  CHECK(is_trivial(chars[0]));
  std::set<std::vector<std::int64_t>> keyset;
  for (const auto& c : chars) keyset.insert(c.weights);
  for (const auto& a : chars)
    for (const auto& b : chars) {
      CHECK(keyset.count(character_add(g, a, b).weights) == 1);
      CHECK(keyset.count(character_neg(g, a).weights) == 1);
    }
}

TEST_CASE("characters of the trivial group") {
  FinAbGroup g(std::vector<std::int64_t>{});
  auto chars = characters(g);
  REQUIRE(chars.size() == 1);
  CHECK(is_trivial(chars[0]));
}

TEST_CASE("characters of (2,2,2) against brute-force homomorphism enumeration") {
  FinAbGroup g({2, 2, 2});
  auto chars = characters(g);
  CHECK(chars.size() == 8);
  for (const auto& c : chars) CHECK(character_order(g, c) <= 2);

  // Oracle: all sign assignments on the 8 elements that are multiplicative.
  auto elems = all_elements(g);
  int homs = 0;
  for (int mask = 0; mask < 256; ++mask) {
    auto val = [&](const GroupElement& e) {
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == e) return (mask >> i) & 1 ? -1 : 1;
      REQUIRE(false);
      return 0;
    };
    bool mult = true;
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (val(group_add(g, a, b)) != val(a) * val(b)) mult = false;
    if (mult) ++homs;
  }
  CHECK(homs == 8);
}

TEST_CASE("character pairing: exact roots of unity, bilinearity, orthogonality") {
  FinAbGroup g({3, 3});
  auto chars = characters(g);
  auto elems = all_elements(g);

  // bilinearity chi(x + y) = chi(x) chi(y), exhaustive over 9 * 9 * 9
  for (const auto& chi : chars)
    for (const auto& x : elems)
      for (const auto& y : elems) {
        RootOfUnity lhs = character_eval(g, chi, group_add(g, x, y));
        RootOfUnity rhs = root_mul(character_eval(g, chi, x), character_eval(g, chi, y));
        CHECK(lhs == rhs);
      }

  // a nontrivial character hits each root of its image subgroup equally often
  for (const auto& chi : chars) {
    if (is_trivial(chi)) continue;
    std::int64_t ord = character_order(g, chi);
    std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
    for (const auto& x : elems) {
      RootOfUnity v = character_eval(g, chi, x);
      counts[{v.num, v.order}]++;
    }
    CHECK(counts.size() == static_cast<std::size_t>(ord));
    for (const auto& [root, n] : counts) CHECK(n == 9 / ord);
  }
}

TEST_CASE("presented group: normal forms decide equality") {
  // Z^2 / <(3, -3)> = Z + Z/3
  PresentedGroup p(2, IntMatrix::from_rows({{3, -3}}));
  CHECK(p.free_rank() == 1);
  CHECK(p.torsion() == std::vector<std::int64_t>{3});

  std::vector<std::int64_t> e1{1, 0}, e2{0, 1}, sum{3, -3}, twice{6, -6};
  CHECK_FALSE(p.equal(e1, e2));
  CHECK(p.is_zero(sum));
  CHECK(p.is_zero(twice));
  CHECK(p.equal(std::vector<std::int64_t>{4, -3}, e1));
}

TEST_CASE("root of unity normal forms") {
  CHECK(RootOfUnity::make(3, 9) == RootOfUnity::make(1, 3));
  CHECK(RootOfUnity::make(9, 9).is_one());
  CHECK(root_mul(RootOfUnity::make(1, 3), RootOfUnity::make(1, 3)) == RootOfUnity::make(2, 3));
  CHECK(root_mul(RootOfUnity::make(1, 2), RootOfUnity::make(1, 3)) == RootOfUnity::make(5, 6));
}
