#include "isoprod/cohomology.hpp"

#include <stdexcept>

namespace isoprod {

EquivariantLineBundle bundle_sub(const ProductQuotientSurface& s, const EquivariantLineBundle& x,
                                 const EquivariantLineBundle& y) {
  return EquivariantLineBundle{s.classes_c().sub(x.c_class, y.c_class),
                               s.classes_d().sub(x.d_class, y.d_class),
                               character_sub(s.group(), x.character, y.character)};
}

EquivariantLineBundle bundle_add(const ProductQuotientSurface& s, const EquivariantLineBundle& x,
                                 const EquivariantLineBundle& y) {
  return EquivariantLineBundle{s.classes_c().add(x.c_class, y.c_class),
                               s.classes_d().add(x.d_class, y.d_class),
                               character_add(s.group(), x.character, y.character)};
}

EquivariantLineBundle canonical_bundle(const ProductQuotientSurface& s) {
  return EquivariantLineBundle{s.canonical_c(), s.canonical_d(), trivial_character(s.group())};
}

const char* InvStatus::rule_name() const {
  switch (kind) {
    case Kind::known: return "known";
    case Kind::zero_by_total: return "zero-by-total";
    case Kind::pinned: return "rr-pinned";
    case Kind::bounded: return "bounded";
  }
  return "?";
}

namespace {

CohStatus interval_mul(const CohStatus& x, const CohStatus& y) {
  // Dimensions are nonnegative, so products of interval endpoints are monotone.
  return CohStatus{checked_mul(x.lo, y.lo), checked_mul(x.hi, y.hi)};
}

CohStatus interval_add(const CohStatus& x, const CohStatus& y) {
  return CohStatus{checked_add(x.lo, y.lo), checked_add(x.hi, y.hi)};
}

}  // namespace

TotalProfile kunneth(const CohStatus& c_h0, const CohStatus& c_h1, const CohStatus& d_h0,
                     const CohStatus& d_h1) {
  return TotalProfile{interval_mul(c_h0, d_h0),
                      interval_add(interval_mul(c_h0, d_h1), interval_mul(c_h1, d_h0)),
                      interval_mul(c_h1, d_h1)};
}

CohomologyProfile invariant_profile(const EquivariantLineBundle& l, const ProductQuotientSurface& s) {
  CohomologyProfile p;
  p.bidegree = l.bidegree();

  const CurveCohomology pc = curve_cohomology(s.curve_c(), s.classes_c(), l.c_class);
  const CurveCohomology pd = curve_cohomology(s.curve_d(), s.classes_d(), l.d_class);
  p.total = kunneth(pc.h0, pc.h1, pd.h0, pd.h1);
  p.chi_s = rr_surface_chi(p.bidegree, s);

  const bool structure_sheaf = s.classes_c().is_zero(l.c_class) && s.classes_d().is_zero(l.d_class) &&
                               is_trivial(l.character);
  if (structure_sheaf) {
    // O_S itself: h0 = 1 and p_g = q = 0 on every surface in scope.
    p.invariant = {InvStatus::known(1), InvStatus::known(0), InvStatus::known(0)};
    return p;
  }

  int undetermined = 0;
  for (int k = 0; k < 3; ++k) {
    if (p.total[static_cast<std::size_t>(k)].hi == 0) {
      p.invariant[static_cast<std::size_t>(k)] = InvStatus::zero_by_total();
    } else {
      p.invariant[static_cast<std::size_t>(k)] =
          InvStatus::bounded(0, p.total[static_cast<std::size_t>(k)].hi);
      ++undetermined;
    }
  }
  if (undetermined == 1) {
    // Riemann-Roch on S pins the single open degree.
    for (int k = 0; k < 3; ++k) {
      auto& st = p.invariant[static_cast<std::size_t>(k)];
      if (st.determined()) continue;
      std::int64_t others = 0;
      for (int j = 0; j < 3; ++j)
        if (j != k) others = checked_add(others, (j % 2 == 0 ? 1 : -1) * p.invariant[static_cast<std::size_t>(j)].lo);
      std::int64_t value = (k % 2 == 0) ? p.chi_s - others : others - p.chi_s;
      if (value < 0 || value > st.hi)
        throw std::logic_error("Riemann-Roch pin out of range; inconsistent profile");
      st = InvStatus::pinned(value);
    }
  }
  return p;
}

std::int64_t pigeonhole_zero_character(std::int64_t total_dim, std::int64_t dual_order) {
  if (total_dim < 0 || dual_order <= 0) throw std::invalid_argument("bad pigeonhole input");
  return std::max<std::int64_t>(0, dual_order - total_dim);
}

ExtTable ext_table(std::span<const EquivariantLineBundle> collection, const ProductQuotientSurface& s) {
  if (collection.empty()) throw std::invalid_argument("empty collection");
  ExtTable t;
  t.n = collection.size();
  t.entries.reserve(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      t.entries.push_back(invariant_profile(bundle_sub(s, collection[j], collection[i]), s));
  return t;
}

}  // namespace isoprod
