#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoprod/algebra.hpp"

namespace isoprod {

/// A set-theoretic orbit of ramification points of the G-action on a curve.
/// The stabilizer is the cyclic group generated by `stabilizer_generator`;
/// the orbit degree is |G| / |stabilizer|.
struct Orbit {
  std::string label;
  GroupElement stabilizer_generator;
  std::int64_t degree = 0;
};

/// A curve with a finite abelian group action given by its genus and branch
/// orbits. Construction validates:
///   - Riemann-Hurwitz: 2g - 2 = |G|(2g0 - 2) + sum_i deg_i (|S_i| - 1),
///   - orbit degrees: deg_i * |S_i| = |G|,
///   - the stabilizer generators sum to the identity and generate G
///     (spherical generating vector for the cover over P^1).
class CurveWithAction {
 public:
  CurveWithAction(std::string name, std::int64_t genus, FinAbGroup group,
                  std::vector<Orbit> orbits, std::int64_t quotient_genus);

  const std::string& name() const { return name_; }
  std::int64_t genus() const { return genus_; }
  const FinAbGroup& group() const { return group_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::int64_t quotient_genus() const { return quotient_genus_; }
  std::int64_t group_order() const { return group_.order(); }
  std::int64_t stabilizer_order(std::size_t orbit_index) const;

 private:
  std::string name_;
  std::int64_t genus_;
  FinAbGroup group_;
  std::vector<Orbit> orbits_;
  std::int64_t quotient_genus_;
};

/// Genus of C/H solved from Riemann-Hurwitz for a subgroup H (given as an
/// element list). Throws if the solution is not a nonnegative integer.
std::int64_t riemann_hurwitz_quotient_genus(const CurveWithAction& c,
                                            const std::vector<GroupElement>& subgroup);

/// An invariant divisor class in canonical normal form. `rep` holds
/// coefficients over the orbit generators followed by the fiber generator.
struct DivisorClass {
  std::vector<std::int64_t> rep;
  std::vector<std::int64_t> normal;
  std::int64_t degree = 0;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.normal == b.normal;
  }
};

/// Div(C)^G modulo linear equivalence, presented over the orbit generators
/// plus one generator for the fiber class of C -> C/G. Relations come from
/// two families only:
///   (a) fiber = |S_i| * E_i for every ramified orbit (full-quotient
///       pullbacks; all fibers of the quotient map are equivalent),
///   (b) O_i ~ O_j for orbits that are single unramified fibers of an
///       intermediate genus-0 quotient C -> C/H (S_i meets H trivially and
///       |S_i| |H| = |G|).
class DivisorClassGroup {
 public:
  explicit DivisorClassGroup(const CurveWithAction& c);

  const PresentedGroup& base() const { return base_; }
  const std::vector<std::int64_t>& degree_map() const { return degree_map_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  std::size_t orbit_count() const { return orbit_count_; }
  std::int64_t group_order() const { return group_order_; }

  DivisorClass fiber_class() const;
  DivisorClass zero() const;
  /// K_C, cached at construction.
  const DivisorClass& canonical() const { return canonical_; }
  /// Class of sum a_i * E_i + m * fiber.
  DivisorClass from_coeffs(std::vector<std::int64_t> orbit_coeffs, std::int64_t fiber_mult = 0) const;
  DivisorClass from_rep(std::vector<std::int64_t> rep) const;

  DivisorClass add(const DivisorClass& x, const DivisorClass& y) const;
  DivisorClass sub(const DivisorClass& x, const DivisorClass& y) const;
  DivisorClass neg(const DivisorClass& x) const;
  DivisorClass scale(std::int64_t k, const DivisorClass& x) const;
  bool is_zero(const DivisorClass& x) const;

 private:
  std::size_t orbit_count_;
  std::int64_t group_order_;
  std::vector<std::int64_t> degree_map_;
  std::vector<std::string> labels_;
  PresentedGroup base_;
  DivisorClass canonical_;
};

DivisorClassGroup build_class_group(const CurveWithAction& c);

struct EffectivityWitness {
  bool effective = false;
  /// Nonnegative coefficients over the orbit generators plus the fiber.
  std::vector<std::int64_t> combination;
};

/// Decides whether a class contains a G-invariant effective divisor, by
/// exhausting nonnegative combinations of orbits and fibers of the matching
/// degree. Sound and complete: every G-invariant effective divisor is a
/// nonnegative sum of set-theoretic orbits, and free orbits are fibers.
EffectivityWitness is_effective_class(const DivisorClassGroup& g, const DivisorClass& cls);

/// K_C = -2 * fiber + sum_i (|S_i| - 1) E_i (Hurwitz for C -> P^1).
DivisorClass canonical_class(const CurveWithAction& c, const DivisorClassGroup& g);

/// Truthful partial knowledge of a cohomology dimension: a closed interval,
/// exact when lo == hi.
struct CohStatus {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static CohStatus exact(std::int64_t n) { return CohStatus{n, n}; }
  static CohStatus range(std::int64_t lo, std::int64_t hi) { return CohStatus{lo, hi}; }
  bool is_exact() const { return lo == hi; }
  bool is_exact_value(std::int64_t n) const { return lo == n && hi == n; }
  friend bool operator==(const CohStatus&, const CohStatus&) = default;
};

struct CurveCohomology {
  CohStatus h0;
  CohStatus h1;
  const char* rule;  // which rule of the fixed decision list fired
};

/// (h^0, h^1) of an invariant class, by a fixed rule list (in this order):
///   1. deg < 0                        -> (0, g - 1 - deg)
///   2. deg > 2g - 2                   -> (deg + 1 - g, 0)
///   3. cls = 0                        -> (1, g)
///   4. cls = K                        -> (g, 1)
///   5. deg = 0, cls != 0              -> (0, g - 1)
///   6. deg = 2g - 2, cls != K         -> (g - 1, 0)
///   7. 0 < deg < 2g - 2, ineffective  -> (0, g - 1 - deg)
///      (an eigensection of the invariant class would make it effective)
///   8. otherwise Clifford:            h0 in [1, deg/2 + 1], h1 = h0 - chi.
/// Every answer satisfies h0 - h1 = deg + 1 - g.
CurveCohomology curve_cohomology(const CurveWithAction& c, const DivisorClassGroup& g,
                                 const DivisorClass& cls);

}  // namespace isoprod
