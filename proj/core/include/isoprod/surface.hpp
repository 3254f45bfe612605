#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoprod/curve.hpp"

namespace isoprod {

/// Degrees of the two pullback factors of a divisor class on X = C x D.
struct Bidegree {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

Bidegree operator+(const Bidegree& x, const Bidegree& y);
Bidegree operator-(const Bidegree& x, const Bidegree& y);

/// Intersection number on S of two descended bidegree classes:
/// (a1 b2 + a2 b1) / |G|.
Rational intersection_on_s(const Bidegree& l1, const Bidegree& l2, std::int64_t group_order);
std::int64_t intersection_on_s_int(const Bidegree& l1, const Bidegree& l2, std::int64_t group_order);

/// Shape descriptor of a finitely generated abelian group.
struct AbGroupDescriptor {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion_orders;

  std::int64_t torsion_order() const;
  std::string str() const;
  friend bool operator==(const AbGroupDescriptor&, const AbGroupDescriptor&) = default;
};

struct FreenessResult {
  bool free = false;
  std::optional<GroupElement> witness;  // a non-identity common stabilizer element
};

/// The product X = C x D and its free quotient S. Construction validates
/// |G| = (g_C - 1)(g_D - 1) and freeness of the diagonal action, and builds
/// both invariant class groups (which forces genus-0 quotients).
class ProductQuotientSurface {
 public:
  ProductQuotientSurface(CurveWithAction c, CurveWithAction d);

  const CurveWithAction& curve_c() const { return c_; }
  const CurveWithAction& curve_d() const { return d_; }
  const DivisorClassGroup& classes_c() const { return ccl_; }
  const DivisorClassGroup& classes_d() const { return dcl_; }
  const DivisorClass& canonical_c() const { return kc_; }
  const DivisorClass& canonical_d() const { return kd_; }
  const FinAbGroup& group() const { return c_.group(); }
  std::int64_t group_order() const { return order_; }
  Bidegree canonical_bidegree() const;

 private:
  CurveWithAction c_;
  CurveWithAction d_;
  DivisorClassGroup ccl_;
  DivisorClassGroup dcl_;
  DivisorClass kc_;
  DivisorClass kd_;
  std::int64_t order_;
};

/// True iff no non-identity element stabilizes points on both curves.
FreenessResult freeness_check(const CurveWithAction& c, const CurveWithAction& d);

/// chi(L) = 1 + (L.L - L.K)/2 on S, all products through intersection_on_s.
std::int64_t rr_surface_chi(const Bidegree& l, const ProductQuotientSurface& s);
Rational rr_surface_chi_rational(const Bidegree& l, const Bidegree& k, std::int64_t group_order);

struct SurfaceInvariants {
  std::int64_t chi_o = 1;
  std::int64_t k_squared = 0;
  std::int64_t chi_top = 0;
  std::int64_t b2 = 0;
  std::optional<std::string> preset_group;  // one of the four known groups
  std::optional<AbGroupDescriptor> h1;
  std::optional<AbGroupDescriptor> pic;
  std::optional<AbGroupDescriptor> k_group;
};

/// Numerical invariants from Noether's identity 12 chi = K^2 + chi_top,
/// with the homology / Picard / K-group tables filled for the four known
/// group types.
SurfaceInvariants noether_invariants(const ProductQuotientSurface& s);

/// (chi_top, b2) from chi_O = 1 and K^2 alone.
std::pair<std::int64_t, std::int64_t> noether_from_k_squared(std::int64_t k_squared);

/// Pic(S) and K(S) descriptors for the four preset group types
/// ("z2^3", "z2^4", "z3^2", "z5^2"). Throws on anything else.
std::pair<AbGroupDescriptor, AbGroupDescriptor> picard_and_k_group(const std::string& label);
std::optional<std::string> preset_group_label(const FinAbGroup& g);
AbGroupDescriptor h1_descriptor(const std::string& label);

}  // namespace isoprod
