#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isoprod/homological.hpp"
#include "isoprod/presets.hpp"

using namespace isoprod;

namespace {

struct Fixture {
  ProductQuotientSurface s = make_preset("z3^2");

  EquivariantLineBundle bundle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               Character chi = {}) const {
    if (chi.weights.empty()) chi = trivial_character(s.group());
    return EquivariantLineBundle{s.classes_c().from_coeffs({a, b, 0, 0}),
                                 s.classes_d().from_coeffs({c, d, 0, 0}), chi};
  }
  std::vector<EquivariantLineBundle> quadruple() const {
    return {bundle(0, 0, 0, 0), bundle(-2, 1, 0, 0), bundle(0, 0, -2, 1), bundle(-2, 1, -2, 1)};
  }
};

}  // namespace

TEST_CASE("relative heights of the quadruple") {
  Fixture f;
  auto q = f.quadruple();
  CHECK(relative_height(q[0], q[0], f.s) == ExtInterval::exactly(ExtInt::of(0)));
  // concentrated fourth difference: first nonvanishing Ext in degree 2
  CHECK(relative_height(q[0], q[3], f.s) == ExtInterval::exactly(ExtInt::of(2)));
  // backward: everything vanishes
  CHECK(relative_height(q[1], q[0], f.s) == ExtInterval::exactly(ExtInt::inf()));
  // forward middle link: open between degree 1 and infinity
  ExtInterval e12 = relative_height(q[0], q[1], f.s);
  CHECK(e12.lo == ExtInt::of(1));
  CHECK(e12.hi == ExtInt::inf());
}

TEST_CASE("Serre wraparound heights") {
  Fixture f;
  auto q = f.quadruple();
  // O_S against itself: the shifted difference is -K with profile (0,0,9)
  CohomologyProfile minus_k = invariant_profile(
      EquivariantLineBundle{f.s.classes_c().neg(f.s.canonical_c()),
                            f.s.classes_d().neg(f.s.canonical_d()), trivial_character(f.s.group())},
      f.s);
  CHECK(minus_k.total[2] == CohStatus::exact(81));
  CHECK(minus_k.invariant[2] == InvStatus::pinned(9));
  CHECK(serre_wraparound_height(q[0], q[0], f.s) == ExtInterval::exactly(ExtInt::of(4)));

  // totally vanishing shifted difference: + infinity
  EquivariantLineBundle shifted = bundle_add(f.s, q[1], canonical_bundle(f.s));
  // e(shifted, q[1] tensor omega^{-1}) looks at (q[1] - K) - shifted = -2K + ...;
  // build a pair whose shifted difference is the (2E1 - E2) pattern instead
  EquivariantLineBundle a = f.bundle(0, 0, 0, 0);
  EquivariantLineBundle b = bundle_add(f.s, canonical_bundle(f.s), f.bundle(2, -1, 0, 0));
  CHECK(serre_wraparound_height(a, b, f.s) == ExtInterval::exactly(ExtInt::inf()));
  (void)shifted;

  // the (L1, L2) wraparound of the quadruple: statuses force exactly 4
  ExtInterval w = serre_wraparound_height(q[0], q[1], f.s);
  CHECK(w == ExtInterval::exactly(ExtInt::of(4)));
  CHECK_FALSE(w.lo.infinite);
  CHECK(w.lo.value >= 3);
}

TEST_CASE("pseudoheight of the quadruple is exactly 4") {
  Fixture f;
  ExtInterval ph = pseudoheight(f.quadruple(), f.s);
  CHECK(ph == ExtInterval::exactly(ExtInt::of(4)));

  // singleton O_S: only the wraparound chain
  std::vector<EquivariantLineBundle> single{f.bundle(0, 0, 0, 0)};
  CHECK(pseudoheight(single, f.s) == ExtInterval::exactly(ExtInt::of(4)));
}

TEST_CASE("pseudoheight lower bounds never increase when the collection grows") {
  Fixture f;
  auto q = f.quadruple();
  ExtInterval full = pseudoheight(q, f.s);
  for (std::size_t drop = 0; drop < q.size(); ++drop) {
    std::vector<EquivariantLineBundle> sub;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (i != drop) sub.push_back(q[i]);
    ExtInterval part = pseudoheight(sub, f.s);
    // chains of the subcollection survive in the full collection
    if (!part.lo.infinite) {
      REQUIRE_FALSE(full.lo.infinite);
      CHECK(full.lo.value <= part.lo.value);
    }
  }
}

TEST_CASE("hom-freeness of the anticanonically extended quadruple") {
  Fixture f;
  HomFreeResult res = hom_free_check(f.quadruple(), f.s);
  CHECK(res.verdict == CheckVerdict::pass);
  CHECK(res.hom_free);
  // evidence: every checked pair difference has a negative-degree factor
  CHECK_FALSE(res.pairs.empty());
  for (const auto& p : res.pairs) {
    CHECK(p.ext0.provably_zero());
    CHECK((p.negative_c_degree || p.negative_d_degree));
  }
}

TEST_CASE("a section between members breaks hom-freeness") {
  Fixture f;
  // O followed by O(E1): the difference is effective, Ext^0 stays open
  std::vector<EquivariantLineBundle> coll{f.bundle(0, 0, 0, 0), f.bundle(1, 0, 0, 0)};
  HomFreeResult res = hom_free_check(coll, f.s);
  CHECK_FALSE(res.hom_free);
  CHECK(res.verdict == CheckVerdict::undetermined);
}

TEST_CASE("the quadruple is not cyclically Ext1-connected") {
  Fixture f;
  CyclicExtResult res = cyclic_ext1_check(f.quadruple(), f.s);
  CHECK(res.verdict == CheckVerdict::pass);
  CHECK_FALSE(res.connected);
  REQUIRE(res.wraparounds.size() == 16);
  int relevant = 0;
  for (const auto& w : res.wraparounds) {
    if (w.chain_relevant) {
      ++relevant;
      CHECK(w.ext1.provably_zero());
    }
  }
  CHECK(relevant == 10);  // 4 singletons + 6 ordered pairs
}

TEST_CASE("cyclic check on (O, O(K)): the zero-class wraparound has no Ext1") {
  Fixture f;
  EquivariantLineBundle k = canonical_bundle(f.s);
  std::vector<EquivariantLineBundle> coll{f.bundle(0, 0, 0, 0), k};
  CyclicExtResult res = cyclic_ext1_check(coll, f.s);
  CHECK(res.verdict == CheckVerdict::pass);
  CHECK_FALSE(res.connected);
  // the (from = 0, to = 1) entry has difference class zero: profile (1,0,0)
  bool saw_zero_class = false;
  for (const auto& w : res.wraparounds)
    if (w.from == 0 && w.to == 1) {
      saw_zero_class = true;
      CHECK(w.difference == Bidegree{0, 0});
      CHECK(w.ext1.provably_zero());
    }
  CHECK(saw_zero_class);
}

TEST_CASE("height conclusion: ph = h = 4 with the hypothesis witness") {
  Fixture f;
  HeightReport rep = height_conclusion(f.quadruple(), f.s);
  CHECK(rep.exceptional_ok);
  CHECK(rep.hom_free.hom_free);
  CHECK_FALSE(rep.cyclic.connected);
  CHECK(rep.h0_two_canonical == 9);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.ph_lower_bound == 4);
  CHECK(rep.ph_upper_bound == 4);
  REQUIRE(rep.pseudoheight_value.has_value());
  REQUIRE(rep.height_value.has_value());
  CHECK(*rep.pseudoheight_value == 4);
  CHECK(*rep.height_value == 4);
  CHECK(rep.pseudoheight_enumerated == ExtInterval::exactly(ExtInt::of(4)));
  CHECK(rep.forward_at(0, 3) == ExtInterval::exactly(ExtInt::of(2)));

  CHECK(rep.restriction.status_at(0) == "isomorphism");
  CHECK(rep.restriction.status_at(2) == "isomorphism");
  CHECK(rep.restriction.status_at(3) == "monomorphism");
  CHECK(rep.restriction.status_at(4) == "unknown");
}

TEST_CASE("height conclusion without the lemma hypotheses stays an interval") {
  Fixture f;
  std::vector<EquivariantLineBundle> coll{f.bundle(0, 0, 0, 0), f.bundle(1, 0, 0, 0)};
  HeightReport rep = height_conclusion(coll, f.s);
  CHECK_FALSE(rep.exceptional_ok);  // the pair is undetermined, not verified
  CHECK_FALSE(rep.pseudoheight_value.has_value());
  CHECK_FALSE(rep.height_value.has_value());
  CHECK(rep.restriction.status_at(0) == "unknown");
}

TEST_CASE("restriction verdicts from the height") {
  RestrictionVerdict v4 = hh_restriction_verdict(ExtInt::of(4));
  CHECK(v4.iso_up_to == 2);
  CHECK(v4.mono_at == 3);
  RestrictionVerdict v2 = hh_restriction_verdict(ExtInt::of(2));
  CHECK(v2.status_at(0) == "isomorphism");
  CHECK(v2.status_at(1) == "monomorphism");
  CHECK(v2.status_at(2) == "unknown");
  RestrictionVerdict vi = hh_restriction_verdict(ExtInt::inf());
  CHECK(vi.status_at(7) == "isomorphism");
}

TEST_CASE("Hochschild homology dimensions") {
  Fixture f;
  CHECK(hkr_homology(f.s) == std::array<std::int64_t, 5>{0, 0, 4, 0, 0});
  CHECK(hkr_homology_from_b2(0) == std::array<std::int64_t, 5>{0, 0, 2, 0, 0});
  for (const std::string& label : preset_labels())
    CHECK(hkr_homology(make_preset(label)) == std::array<std::int64_t, 5>{0, 0, 4, 0, 0});
}

TEST_CASE("quasiphantom verdict for the quadruple") {
  Fixture f;
  ExceptionalCertificate cert = verify_exceptional_sequence(f.quadruple(), f.s);
  REQUIRE(cert.valid);
  HochschildReport rep = quasiphantom_verdict(cert, f.s);
  CHECK(rep.hh_total == 4);
  CHECK(rep.hh_surface == std::array<std::int64_t, 5>{0, 0, 4, 0, 0});
  CHECK(rep.hh_complement == std::array<std::int64_t, 5>{0, 0, 0, 0, 0});
  CHECK(rep.per_object_degree0 == 1);
  REQUIRE(rep.k_complement_known);
  CHECK(rep.k_complement.str() == "(Z/3)^5");
  CHECK(rep.quasiphantom);

  // additivity audit
  std::int64_t complement_total = 0;
  for (auto v : rep.hh_complement) complement_total += v;
  CHECK(rep.hh_total == static_cast<std::int64_t>(rep.collection_length) + complement_total);
}

TEST_CASE("shorter collections are not quasiphantom") {
  Fixture f;
  auto q = f.quadruple();
  q.pop_back();
  ExceptionalCertificate cert = verify_exceptional_sequence(q, f.s);
  REQUIRE(cert.valid);
  CHECK_FALSE(cert.maximal);
  HochschildReport rep = quasiphantom_verdict(cert, f.s);
  CHECK(rep.hh_complement == std::array<std::int64_t, 5>{0, 0, 1, 0, 0});
  CHECK(rep.k_complement.free_rank == 1);
  CHECK_FALSE(rep.quasiphantom);
}

TEST_CASE("quasiphantom bookkeeping on the order-25 surface") {
  // No maximal sequence of invariant pullback bundles exists there, so feed
  // the additivity bookkeeping a certificate directly.
  ProductQuotientSurface s = make_preset("z5^2");
  ExceptionalCertificate cert;
  cert.valid = true;
  cert.max_length = 4;
  cert.maximal = true;
  const Character triv = trivial_character(s.group());
  for (std::int64_t i = 0; i < 4; ++i)
    cert.collection.push_back(EquivariantLineBundle{
        s.classes_c().from_coeffs({i, 0, 0}), s.classes_d().from_coeffs({0, 0, 0}), triv});
  HochschildReport rep = quasiphantom_verdict(cert, s);
  CHECK(rep.k_complement.str() == "(Z/5)^3");
  CHECK(rep.quasiphantom);

  ExceptionalCertificate invalid;
  CHECK_THROWS(quasiphantom_verdict(invalid, s));
}

TEST_CASE("phantom pairing by coprime torsion orders") {
  PhantomVerdict beauville = phantom_pairing(243, 125);
  CHECK(beauville.phantom);
  CHECK(beauville.gcd == 1);
  CHECK(phantom_pairing(243, 64).phantom);
  CHECK(phantom_pairing(243, 5).phantom);
  PhantomVerdict same = phantom_pairing(243, 243);
  CHECK_FALSE(same.phantom);
  CHECK(same.gcd == 243);
  CHECK_THROWS(phantom_pairing(0, 5));
}

TEST_CASE("wraparound heights are twist invariant") {
  Fixture f;
  auto q = f.quadruple();
  auto chars = characters(f.s.group());
  std::vector<EquivariantLineBundle> twists{f.bundle(1, 0, -1, 1, chars[3]), f.bundle(-2, 1, 0, 0)};
  for (const auto& m : twists)
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        ExtInterval base = serre_wraparound_height(q[i], q[j], f.s);
        ExtInterval tw = serre_wraparound_height(bundle_add(f.s, q[i], m), bundle_add(f.s, q[j], m), f.s);
        CHECK(base == tw);
      }
}
