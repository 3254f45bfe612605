#include "isoprod/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isoprod {

Bidegree operator+(const Bidegree& x, const Bidegree& y) {
  return Bidegree{checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

Bidegree operator-(const Bidegree& x, const Bidegree& y) {
  return Bidegree{checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

Rational intersection_on_s(const Bidegree& l1, const Bidegree& l2, std::int64_t group_order) {
  if (group_order <= 0) throw std::invalid_argument("group order must be positive");
  return Rational(checked_add(checked_mul(l1.a, l2.b), checked_mul(l2.a, l1.b)), group_order);
}

std::int64_t intersection_on_s_int(const Bidegree& l1, const Bidegree& l2, std::int64_t group_order) {
  Rational r = intersection_on_s(l1, l2, group_order);
  if (!r.is_integer())
    throw std::domain_error("intersection number " + r.str() + " is not an integer; the class does not descend");
  return r.num();
}

std::int64_t AbGroupDescriptor::torsion_order() const {
  std::int64_t o = 1;
  for (std::int64_t t : torsion_orders) o = checked_mul(o, t);
  return o;
}

std::string AbGroupDescriptor::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  std::int64_t run_order = 0, run_len = 0;
  auto flush = [&]() {
    if (run_len == 0) return;
    if (!first) os << " + ";
    os << "(Z/" << run_order << ")";
    if (run_len > 1) os << "^" << run_len;
    first = false;
    run_len = 0;
  };
  for (std::int64_t t : torsion_orders) {
    if (t == run_order) {
      ++run_len;
    } else {
      flush();
      run_order = t;
      run_len = 1;
    }
  }
  flush();
  if (first) os << "0";
  return os.str();
}

FreenessResult freeness_check(const CurveWithAction& c, const CurveWithAction& d) {
  if (c.group() != d.group()) throw std::invalid_argument("curves carry different groups");
  std::set<GroupElement> on_c;
  for (const auto& o : c.orbits())
    for (const auto& e : subgroup_generated(c.group(), o.stabilizer_generator)) on_c.insert(e);
  for (const auto& o : d.orbits())
    for (const auto& e : subgroup_generated(d.group(), o.stabilizer_generator))
      if (!is_identity(e) && on_c.count(e)) return FreenessResult{false, e};
  return FreenessResult{true, std::nullopt};
}

ProductQuotientSurface::ProductQuotientSurface(CurveWithAction c, CurveWithAction d)
    : c_(std::move(c)),
      d_(std::move(d)),
      ccl_(c_),
      dcl_(d_),
      kc_(canonical_class(c_, ccl_)),
      kd_(canonical_class(d_, dcl_)),
      order_(c_.group_order()) {
  if (c_.group() != d_.group()) throw std::invalid_argument("curves carry different groups");
  if (checked_mul(c_.genus() - 1, d_.genus() - 1) != order_)
    throw std::invalid_argument("|G| != (g_C - 1)(g_D - 1); the quotient cannot have p_g = q = 0");
  FreenessResult fr = freeness_check(c_, d_);
  if (!fr.free) throw std::invalid_argument("the diagonal action is not free");
}

Bidegree ProductQuotientSurface::canonical_bidegree() const {
  return Bidegree{2 * c_.genus() - 2, 2 * d_.genus() - 2};
}

Rational rr_surface_chi_rational(const Bidegree& l, const Bidegree& k, std::int64_t group_order) {
  Rational ll = intersection_on_s(l, l, group_order);
  Rational lk = intersection_on_s(l, k, group_order);
  return Rational(1) + (ll - lk) / Rational(2);
}

std::int64_t rr_surface_chi(const Bidegree& l, const ProductQuotientSurface& s) {
  Rational chi = rr_surface_chi_rational(l, s.canonical_bidegree(), s.group_order());
  if (!chi.is_integer())
    throw std::domain_error("chi = " + chi.str() + " is not an integer; the class does not descend");
  return chi.num();
}

std::pair<std::int64_t, std::int64_t> noether_from_k_squared(std::int64_t k_squared) {
  const std::int64_t chi_top = 12 - k_squared;
  const std::int64_t b2 = chi_top - 2;
  if (b2 < 0) throw std::domain_error("negative b_2; invalid surface input");
  return {chi_top, b2};
}

std::optional<std::string> preset_group_label(const FinAbGroup& g) {
  std::vector<std::int64_t> o = g.cyclic_orders();
  std::sort(o.begin(), o.end());
  if (o == std::vector<std::int64_t>{2, 2, 2}) return "z2^3";
  if (o == std::vector<std::int64_t>{2, 2, 2, 2}) return "z2^4";
  if (o == std::vector<std::int64_t>{3, 3}) return "z3^2";
  if (o == std::vector<std::int64_t>{5, 5}) return "z5^2";
  return std::nullopt;
}

AbGroupDescriptor h1_descriptor(const std::string& label) {
  if (label == "z2^3") return AbGroupDescriptor{0, {2, 2, 2, 2, 4, 4}};
  if (label == "z2^4") return AbGroupDescriptor{0, {4, 4, 4, 4}};
  if (label == "z3^2") return AbGroupDescriptor{0, {3, 3, 3, 3, 3}};
  if (label == "z5^2") return AbGroupDescriptor{0, {5, 5, 5}};
  throw std::invalid_argument("unknown group label: " + label);
}

std::pair<AbGroupDescriptor, AbGroupDescriptor> picard_and_k_group(const std::string& label) {
  // Pic = H^2 = Z^b2 + Tors(H_1) and K = Z^2 + Pic for these surfaces.
  AbGroupDescriptor h1 = h1_descriptor(label);
  AbGroupDescriptor pic{2, h1.torsion_orders};
  AbGroupDescriptor k{4, h1.torsion_orders};
  return {pic, k};
}

SurfaceInvariants noether_invariants(const ProductQuotientSurface& s) {
  SurfaceInvariants inv;
  Bidegree k = s.canonical_bidegree();
  inv.k_squared = intersection_on_s_int(k, k, s.group_order());
  auto [chi_top, b2] = noether_from_k_squared(inv.k_squared);
  inv.chi_top = chi_top;
  inv.b2 = b2;
  if (auto label = preset_group_label(s.group())) {
    inv.preset_group = *label;
    inv.h1 = h1_descriptor(*label);
    auto [pic, kg] = picard_and_k_group(*label);
    inv.pic = pic;
    inv.k_group = kg;
  }
  return inv;
}

}  // namespace isoprod
