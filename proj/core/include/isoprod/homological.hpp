#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoprod/exceptional.hpp"

namespace isoprod {

/// Integer extended with +infinity (the min of an empty set of Ext degrees).
struct ExtInt {
  bool infinite = false;
  std::int64_t value = 0;

  static ExtInt inf() { return ExtInt{true, 0}; }
  static ExtInt of(std::int64_t v) { return ExtInt{false, v}; }
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.infinite || b.infinite) return inf();
    return of(checked_add(a.value, b.value));
  }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

ExtInt ext_min(const ExtInt& a, const ExtInt& b);

/// Interval of possible values for a first-nonvanishing-Ext degree.
struct ExtInterval {
  ExtInt lo;
  ExtInt hi;

  bool exact() const { return lo == hi; }
  static ExtInterval exactly(const ExtInt& v) { return ExtInterval{v, v}; }
  friend bool operator==(const ExtInterval&, const ExtInterval&) = default;
};

/// e(L1, L2) = min { k : Ext^k(L1, L2) != 0 } from the invariant profile:
/// lower bound = first degree not provably zero, upper bound = first degree
/// provably nonzero (+inf when all three are provably zero).
ExtInterval relative_height(const EquivariantLineBundle& l1, const EquivariantLineBundle& l2,
                            const ProductQuotientSurface& s);

/// 2 + e(L, L' tensor omega^{-1}): the Serre-functor wraparound term.
ExtInterval serre_wraparound_height(const EquivariantLineBundle& l, const EquivariantLineBundle& lp,
                                    const ProductQuotientSurface& s);

/// min over increasing chains of (sum of link heights + wraparound - p).
ExtInterval pseudoheight(std::span<const EquivariantLineBundle> collection,
                         const ProductQuotientSurface& s);

enum class CheckVerdict { pass, fail, undetermined };

struct HomFreePairEvidence {
  std::size_t i = 0;  // indices into the anticanonically extended collection
  std::size_t j = 0;
  Bidegree difference;
  InvStatus ext0;
  bool negative_c_degree = false;
  bool negative_d_degree = false;
};

struct HomFreeResult {
  CheckVerdict verdict = CheckVerdict::undetermined;
  bool hom_free = false;
  std::vector<HomFreePairEvidence> pairs;
};

/// Hom-freeness of the anticanonically extended collection: Ext^0(E_i, E_j)
/// provably zero for all i < j <= i + n.
HomFreeResult hom_free_check(std::span<const EquivariantLineBundle> collection,
                             const ProductQuotientSurface& s);

struct WraparoundEvidence {
  std::size_t from = 0;  // a_p
  std::size_t to = 0;    // a_0
  bool chain_relevant = false;  // to <= from, so some increasing chain uses it
  Bidegree difference;
  InvStatus ext1;
};

struct CyclicExtResult {
  CheckVerdict verdict = CheckVerdict::undetermined;
  bool connected = false;
  /// The negative certificate: every chain-closing Ext^1 provably vanishes.
  std::vector<WraparoundEvidence> wraparounds;
};

CyclicExtResult cyclic_ext1_check(std::span<const EquivariantLineBundle> collection,
                                  const ProductQuotientSurface& s);

struct RestrictionVerdict {
  ExtInt height;
  std::int64_t iso_up_to = -1;  // restriction is an isomorphism for k <= this
  std::int64_t mono_at = -1;    // and a monomorphism here (-1 when height = inf)
  std::string status_at(std::int64_t k) const;
};

/// k <= h - 2: isomorphism; k = h - 1: monomorphism.
RestrictionVerdict hh_restriction_verdict(const ExtInt& height);

struct HeightReport {
  std::vector<ExtInterval> forward;  // e(L_i, L_j) for i < j, row-major packed
  std::size_t n = 0;
  bool exceptional_ok = false;  // the lemma route needs an exceptional sequence
  ExtInterval pseudoheight_enumerated;
  HomFreeResult hom_free;
  CyclicExtResult cyclic;
  std::int64_t h0_two_canonical = 0;  // witness for H^2(S, omega^{-1}) != 0
  bool hypothesis_ok = false;
  std::optional<std::int64_t> pseudoheight_value;  // pinned by the lemma route
  std::optional<std::int64_t> height_value;
  std::int64_t ph_lower_bound = 0;
  std::int64_t ph_upper_bound = 0;  // meaningful when hypothesis_ok
  RestrictionVerdict restriction;

  const ExtInterval& forward_at(std::size_t i, std::size_t j) const;
};

/// Full height pipeline: Hom-free + not cyclically Ext^1-connected pins
/// ph >= 2 + dim S; h^0(2K_S) > 0 certifies H^2(S, omega^{-1}) != 0 which
/// gives ph <= 4; together ph = h = 4. The chain enumeration must agree.
HeightReport height_conclusion(std::span<const EquivariantLineBundle> collection,
                               const ProductQuotientSurface& s);

/// Hochschild homology dimensions HH_t(S) for t in [-2, 2] from the HKR
/// decomposition and the Hodge numbers forced by p_g = q = 0, b_2 = 2.
std::array<std::int64_t, 5> hkr_homology(const ProductQuotientSurface& s);
std::array<std::int64_t, 5> hkr_homology_from_b2(std::int64_t b2);

struct HochschildReport {
  std::array<std::int64_t, 5> hh_surface{};    // t = -2 .. 2
  std::int64_t hh_total = 0;
  std::int64_t per_object_degree0 = 1;
  std::size_t collection_length = 0;
  std::array<std::int64_t, 5> hh_complement{};
  AbGroupDescriptor k_complement;
  bool k_complement_known = false;
  bool quasiphantom = false;
};

/// Additivity bookkeeping: each exceptional object contributes C in degree
/// 0; the complement carries the rest. Quasiphantom iff the complement has
/// no Hochschild homology and a finite Grothendieck group.
HochschildReport quasiphantom_verdict(const ExceptionalCertificate& cert,
                                      const ProductQuotientSurface& s);

struct PhantomVerdict {
  std::int64_t torsion_a = 0;
  std::int64_t torsion_b = 0;
  std::int64_t gcd = 0;
  bool phantom = false;  // true: the box product is a phantom category
};

/// Coprime Picard torsion orders of two quasiphantoms make a phantom.
PhantomVerdict phantom_pairing(std::int64_t torsion_a, std::int64_t torsion_b);

}  // namespace isoprod
