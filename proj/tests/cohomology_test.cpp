#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isoprod/cohomology.hpp"
#include "isoprod/presets.hpp"

using namespace isoprod;

namespace {

struct Fixture {
  ProductQuotientSurface s = make_preset("z3^2");

  DivisorClass c_cls(std::int64_t a, std::int64_t b) const {
    return s.classes_c().from_coeffs({a, b, 0, 0});
  }
  DivisorClass d_cls(std::int64_t a, std::int64_t b) const {
    return s.classes_d().from_coeffs({a, b, 0, 0});
  }
  EquivariantLineBundle bundle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               Character chi = {}) const {
    if (chi.weights.empty()) chi = trivial_character(s.group());
    return EquivariantLineBundle{c_cls(a, b), d_cls(c, d), chi};
  }
};

std::array<std::int64_t, 3> exact_totals(const TotalProfile& t) {
  REQUIRE(t[0].is_exact());
  REQUIRE(t[1].is_exact());
  REQUIRE(t[2].is_exact());
  return {t[0].lo, t[1].lo, t[2].lo};
}

}  // namespace

TEST_CASE("kunneth on the displayed factor profiles") {
  // H(C, E2 - 2E1) = (0, 6) against the structure sheaf of D
  TotalProfile a = kunneth(CohStatus::exact(0), CohStatus::exact(6), CohStatus::exact(1), CohStatus::exact(4));
  CHECK(exact_totals(a) == std::array<std::int64_t, 3>{0, 6, 24});

  // both factors (0, 6)
  TotalProfile b = kunneth(CohStatus::exact(0), CohStatus::exact(6), CohStatus::exact(0), CohStatus::exact(6));
  CHECK(exact_totals(b) == std::array<std::int64_t, 3>{0, 0, 36});

  // a factor with no cohomology at all kills everything
  TotalProfile c = kunneth(CohStatus::exact(0), CohStatus::exact(0), CohStatus::exact(7), CohStatus::exact(5));
  CHECK(exact_totals(c) == std::array<std::int64_t, 3>{0, 0, 0});

  // structure sheaf of the product: q(X) = 8, p_g(X) = 16
  TotalProfile d = kunneth(CohStatus::exact(1), CohStatus::exact(4), CohStatus::exact(1), CohStatus::exact(4));
  CHECK(exact_totals(d) == std::array<std::int64_t, 3>{1, 8, 16});

  // interval inputs propagate: [1,2] * [4,4] + [1,1] * [1,1] = [5,9]
  TotalProfile e = kunneth(CohStatus::range(1, 2), CohStatus::exact(1), CohStatus::exact(1), CohStatus::exact(4));
  CHECK(e[0] == CohStatus::range(1, 2));
  CHECK(e[1] == CohStatus::range(5, 9));
}

TEST_CASE("invariant profile of the fourth difference is (0,0,4) for every character") {
  Fixture f;
  for (const auto& chi : characters(f.s.group())) {
    CohomologyProfile p = invariant_profile(f.bundle(-2, 1, -2, 1, chi), f.s);
    CHECK(exact_totals(p.total) == std::array<std::int64_t, 3>{0, 0, 36});
    CHECK(p.chi_s == 4);
    CHECK(p.invariant[0].provably_zero());
    CHECK(p.invariant[1].provably_zero());
    CHECK(p.invariant[2] == InvStatus::pinned(4));
  }
}

TEST_CASE("invariant profile of a totally vanishing difference") {
  Fixture f;
  CohomologyProfile p = invariant_profile(f.bundle(2, -1, 0, 0), f.s);
  CHECK(exact_totals(p.total) == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(p.invariant_all_zero());
  CHECK(p.chi_s == 0);
  for (const auto& st : p.invariant) CHECK(st.kind == InvStatus::Kind::zero_by_total);
}

TEST_CASE("invariant profile of the structure sheaf is (1,0,0)") {
  Fixture f;
  CohomologyProfile p = invariant_profile(f.bundle(0, 0, 0, 0), f.s);
  CHECK(exact_totals(p.total) == std::array<std::int64_t, 3>{1, 8, 16});
  CHECK(p.invariant[0] == InvStatus::known(1));
  CHECK(p.invariant[1] == InvStatus::known(0));
  CHECK(p.invariant[2] == InvStatus::known(0));
  CHECK(p.chi_s == 1);

  // a torsion twist of O_S keeps the totals but loses the direct value
  Character chi = character_reduce(f.s.group(), {1, 0});
  CohomologyProfile q = invariant_profile(f.bundle(0, 0, 0, 0, chi), f.s);
  CHECK(q.invariant[0].kind == InvStatus::Kind::bounded);
}

TEST_CASE("one open degree gets pinned, two stay bounded") {
  Fixture f;
  // E2 - 2E1 pulled back: totals (0, 6, 24), chi_S = 2, two open degrees
  CohomologyProfile p = invariant_profile(f.bundle(-2, 1, 0, 0), f.s);
  CHECK(exact_totals(p.total) == std::array<std::int64_t, 3>{0, 6, 24});
  CHECK(p.chi_s == 2);
  CHECK(p.invariant[0].provably_zero());
  CHECK(p.invariant[1] == InvStatus::bounded(0, 6));
  CHECK(p.invariant[2] == InvStatus::bounded(0, 24));

  // minus the canonical bundle: totals (0, 0, 81), one open degree
  CohomologyProfile q = invariant_profile(
      EquivariantLineBundle{f.s.classes_c().neg(f.s.canonical_c()),
                            f.s.classes_d().neg(f.s.canonical_d()),
                            trivial_character(f.s.group())},
      f.s);
  CHECK(exact_totals(q.total) == std::array<std::int64_t, 3>{0, 0, 81});
  CHECK(q.invariant[2] == InvStatus::pinned(9));
}

TEST_CASE("pigeonhole lower bound on vanishing characters") {
  CHECK(pigeonhole_zero_character(6, 9) == 3);
  CHECK(pigeonhole_zero_character(0, 9) == 9);
  CHECK(pigeonhole_zero_character(36, 9) == 0);
  CHECK_THROWS(pigeonhole_zero_character(-1, 9));
}

TEST_CASE("ext table of the standard quadruple") {
  Fixture f;
  const Character triv = trivial_character(f.s.group());
  std::vector<EquivariantLineBundle> coll{f.bundle(0, 0, 0, 0), f.bundle(-2, 1, 0, 0),
                                          f.bundle(0, 0, -2, 1), f.bundle(-2, 1, -2, 1)};
  ExtTable t = ext_table(coll, f.s);
  REQUIRE(t.n == 4);

  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.at(i, i).invariant[0] == InvStatus::known(1));
    CHECK(t.at(i, i).invariant[1].provably_zero());
    CHECK(t.at(i, i).invariant[2].provably_zero());
  }
  // every backward entry vanishes in every degree
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(t.at(i, j).invariant_all_zero());
  // the (0,3) forward entry is the concentrated one
  CHECK(t.at(0, 3).invariant[2] == InvStatus::pinned(4));
  CHECK(t.at(0, 3).invariant[0].provably_zero());
  CHECK(t.at(0, 3).invariant[1].provably_zero());
  (void)triv;
}

TEST_CASE("Euler multiplicativity of kunneth outputs") {
  Fixture f;
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b) {
      DivisorClass cc = f.c_cls(a, b);
      DivisorClass dd = f.d_cls(b, a);
      CurveCohomology hc = curve_cohomology(f.s.curve_c(), f.s.classes_c(), cc);
      CurveCohomology hd = curve_cohomology(f.s.curve_d(), f.s.classes_d(), dd);
      if (!hc.h0.is_exact() || !hc.h1.is_exact() || !hd.h0.is_exact() || !hd.h1.is_exact()) continue;
      TotalProfile t = kunneth(hc.h0, hc.h1, hd.h0, hd.h1);
      auto v = exact_totals(t);
      CHECK(v[0] - v[1] + v[2] == (hc.h0.lo - hc.h1.lo) * (hd.h0.lo - hd.h1.lo));
    }
}

TEST_CASE("Serre duality on the product: profile of L reverses for K - L") {
  Fixture f;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c) {
        EquivariantLineBundle l = f.bundle(a, b, c, a);
        EquivariantLineBundle dual{f.s.classes_c().sub(f.s.canonical_c(), l.c_class),
                                   f.s.classes_d().sub(f.s.canonical_d(), l.d_class),
                                   trivial_character(f.s.group())};
        CohomologyProfile pl = invariant_profile(l, f.s);
        CohomologyProfile pd = invariant_profile(dual, f.s);
        bool both_exact = true;
        for (int k = 0; k < 3; ++k)
          if (!pl.total[static_cast<std::size_t>(k)].is_exact() ||
              !pd.total[static_cast<std::size_t>(k)].is_exact())
            both_exact = false;
        if (!both_exact) continue;
        for (int k = 0; k < 3; ++k)
          CHECK(pl.total[static_cast<std::size_t>(k)] == pd.total[static_cast<std::size_t>(2 - k)]);
      }
}

TEST_CASE("descent consistency and monotonicity of every profile") {
  Fixture f;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c) {
        CohomologyProfile p = invariant_profile(f.bundle(a, b, c, -a), f.s);
        // |G| chi_S = chi_X when the totals are exact
        bool exact = p.total[0].is_exact() && p.total[1].is_exact() && p.total[2].is_exact();
        if (exact)
          CHECK(9 * p.chi_s == p.total[0].lo - p.total[1].lo + p.total[2].lo);
        for (int k = 0; k < 3; ++k) {
          CHECK(p.invariant[static_cast<std::size_t>(k)].hi <= p.total[static_cast<std::size_t>(k)].hi);
          CHECK(p.invariant[static_cast<std::size_t>(k)].lo >= 0);
        }
        // determined invariants respect Riemann-Roch on S
        if (p.invariant[0].determined() && p.invariant[1].determined() && p.invariant[2].determined())
          CHECK(p.invariant[0].lo - p.invariant[1].lo + p.invariant[2].lo == p.chi_s);
      }
}
