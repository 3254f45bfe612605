#pragma once

#include <array>
#include <span>
#include <vector>

#include "isoprod/surface.hpp"

namespace isoprod {

/// A line bundle on S presented as equivariant data on X = C x D:
/// a pullback class from each factor plus a character twist.
struct EquivariantLineBundle {
  DivisorClass c_class;
  DivisorClass d_class;
  Character character;

  Bidegree bidegree() const { return Bidegree{c_class.degree, d_class.degree}; }
  friend bool operator==(const EquivariantLineBundle& x, const EquivariantLineBundle& y) {
    return x.c_class == y.c_class && x.d_class == y.d_class && x.character == y.character;
  }
};

EquivariantLineBundle bundle_sub(const ProductQuotientSurface& s, const EquivariantLineBundle& x,
                                 const EquivariantLineBundle& y);
EquivariantLineBundle bundle_add(const ProductQuotientSurface& s, const EquivariantLineBundle& x,
                                 const EquivariantLineBundle& y);
/// The bundle descending to omega_S: (K_C, K_D) with the reference
/// (trivial) character. Certificates involving it only use totals or
/// quantify over characters, so the linearization choice is immaterial.
EquivariantLineBundle canonical_bundle(const ProductQuotientSurface& s);

using TotalProfile = std::array<CohStatus, 3>;

/// h^k(X) of an external tensor product from the factor (h0, h1) data:
/// h0 = h0 h0', h1 = h0 h1' + h1 h0', h2 = h1 h1'. Interval inputs
/// propagate by interval arithmetic.
TotalProfile kunneth(const CohStatus& c_h0, const CohStatus& c_h1, const CohStatus& d_h0,
                     const CohStatus& d_h1);

/// What is known about one invariant (descended) cohomology dimension.
/// The only inference rules are: zero because the total vanishes, pinned by
/// Riemann-Roch on S when the other two degrees are settled, a direct value
/// for the structure sheaf (p_g = q = 0), and otherwise a bounded interval.
struct InvStatus {
  enum class Kind { known, zero_by_total, pinned, bounded };
  Kind kind = Kind::bounded;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static InvStatus known(std::int64_t n) { return {Kind::known, n, n}; }
  static InvStatus zero_by_total() { return {Kind::zero_by_total, 0, 0}; }
  static InvStatus pinned(std::int64_t n) { return {Kind::pinned, n, n}; }
  static InvStatus bounded(std::int64_t lo, std::int64_t hi) { return {Kind::bounded, lo, hi}; }

  bool provably_zero() const { return hi == 0; }
  bool provably_nonzero() const { return lo > 0; }
  bool determined() const { return lo == hi; }
  const char* rule_name() const;
  friend bool operator==(const InvStatus&, const InvStatus&) = default;
};

/// Per-degree total dimensions on X and invariant-part statuses on S.
struct CohomologyProfile {
  Bidegree bidegree;
  TotalProfile total;
  std::array<InvStatus, 3> invariant;
  std::int64_t chi_s = 0;

  bool invariant_all_zero() const {
    return invariant[0].provably_zero() && invariant[1].provably_zero() && invariant[2].provably_zero();
  }
  bool invariant_undetermined() const {
    return !invariant[0].determined() || !invariant[1].determined() || !invariant[2].determined();
  }
};

/// Total profile via Kunneth on the curve oracle, then invariant statuses.
CohomologyProfile invariant_profile(const EquivariantLineBundle& l, const ProductQuotientSurface& s);

/// Lower bound on the number of characters whose isotypic part of an
/// n-dimensional representation of G is zero: max(0, |G^| - n).
std::int64_t pigeonhole_zero_character(std::int64_t total_dim, std::int64_t dual_order);

/// Ext_S profiles for all ordered pairs of a collection; entry (i, j) is
/// the profile of Ext(L_i, L_j) = H(S, L_j - L_i).
struct ExtTable {
  std::size_t n = 0;
  std::vector<CohomologyProfile> entries;  // row-major

  const CohomologyProfile& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

ExtTable ext_table(std::span<const EquivariantLineBundle> collection, const ProductQuotientSurface& s);

}  // namespace isoprod
