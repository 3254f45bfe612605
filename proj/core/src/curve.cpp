#include "isoprod/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace isoprod {

CurveWithAction::CurveWithAction(std::string name, std::int64_t genus, FinAbGroup group,
                                 std::vector<Orbit> orbits, std::int64_t quotient_genus)
    : name_(std::move(name)),
      genus_(genus),
      group_(std::move(group)),
      orbits_(std::move(orbits)),
      quotient_genus_(quotient_genus) {
  if (genus_ < 0) throw std::invalid_argument("negative genus");
  if (!group_.finite()) throw std::invalid_argument("curve action needs a finite group");
  const std::int64_t n = group_.order();

  std::int64_t ram = 0;
  std::vector<GroupElement> gens;
  for (auto& o : orbits_) {
    const std::int64_t stab = static_cast<std::int64_t>(subgroup_generated(group_, o.stabilizer_generator).size());
    if (stab <= 1) throw std::invalid_argument("orbit " + o.label + " has trivial stabilizer; free orbits are fibers and are not stored");
    const std::int64_t deg = n / stab;
    if (o.degree == 0) o.degree = deg;
    if (o.degree != deg || checked_mul(o.degree, stab) != n)
      throw std::invalid_argument("orbit " + o.label + ": degree * |stabilizer| != |G|");
    ram = checked_add(ram, checked_mul(deg, stab - 1));
    gens.push_back(o.stabilizer_generator);
  }

  // Riemann-Hurwitz for C -> C/G.
  const std::int64_t lhs = 2 * genus_ - 2;
  const std::int64_t rhs = checked_add(checked_mul(n, 2 * quotient_genus_ - 2), ram);
  if (lhs != rhs)
    throw std::invalid_argument("Riemann-Hurwitz mismatch on " + name_ + ": 2g-2 = " + std::to_string(lhs) +
                                " but branch data gives " + std::to_string(rhs));

  // Spherical generating vector over P^1.
  if (quotient_genus_ == 0 && !orbits_.empty()) {
    GroupElement sum = group_identity(group_);
    for (const auto& e : gens) sum = group_add(group_, sum, e);
    if (!is_identity(sum)) throw std::invalid_argument("stabilizer generators do not sum to the identity");
    if (!generates_group(group_, gens))
      throw std::invalid_argument("stabilizer generators do not generate the group");
  }
}

std::int64_t CurveWithAction::stabilizer_order(std::size_t orbit_index) const {
  return static_cast<std::int64_t>(subgroup_generated(group_, orbits_[orbit_index].stabilizer_generator).size());
}

std::int64_t riemann_hurwitz_quotient_genus(const CurveWithAction& c,
                                            const std::vector<GroupElement>& subgroup) {
  if (subgroup.empty()) throw std::invalid_argument("subgroup must contain the identity");
  const std::int64_t h = static_cast<std::int64_t>(subgroup.size());
  std::set<GroupElement> hset(subgroup.begin(), subgroup.end());

  std::int64_t ram = 0;
  for (std::size_t i = 0; i < c.orbits().size(); ++i) {
    const auto stab = subgroup_generated(c.group(), c.orbits()[i].stabilizer_generator);
    std::int64_t meet = 0;
    for (const auto& s : stab)
      if (hset.count(s)) ++meet;
    ram = checked_add(ram, checked_mul(c.orbits()[i].degree, meet - 1));
  }
  // 2g - 2 = |H| (2g' - 2) + ram
  const std::int64_t num = 2 * c.genus() - 2 - ram;
  if (num % h != 0)
    throw std::domain_error("inconsistent branch data: quotient genus for |H|=" + std::to_string(h) +
                            " is not an integer");
  const std::int64_t twog = num / h + 2;
  if (twog % 2 != 0 || twog < 0)
    throw std::domain_error("inconsistent branch data: quotient genus for |H|=" + std::to_string(h) +
                            " is not a nonnegative integer");
  return twog / 2;
}

namespace {

std::vector<std::vector<std::int64_t>> class_group_relations(const CurveWithAction& c) {
  const std::size_t k = c.orbits().size();
  const std::size_t ngens = k + 1;  // orbits then fiber
  std::vector<std::vector<std::int64_t>> rel;

  // (a) fiber = |S_i| E_i for every orbit.
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(ngens, 0);
    row[i] = c.stabilizer_order(i);
    row[k] = -1;
    rel.push_back(std::move(row));
  }

  // (b) intermediate genus-0 quotients C -> C/H: orbits meeting H trivially
  // with |S| |H| = |G| are single unramified fibers, hence all equivalent.
  for (const auto& sub : all_subgroups(c.group())) {
    const std::int64_t h = static_cast<std::int64_t>(sub.size());
    if (h == 1) continue;
    if (riemann_hurwitz_quotient_genus(c, sub) != 0) continue;
    std::set<GroupElement> hset(sub.begin(), sub.end());
    std::vector<std::size_t> family;
    for (std::size_t i = 0; i < k; ++i) {
      const auto stab = subgroup_generated(c.group(), c.orbits()[i].stabilizer_generator);
      bool trivial_meet = true;
      for (const auto& s : stab)
        if (!is_identity(s) && hset.count(s)) trivial_meet = false;
      if (trivial_meet && checked_mul(static_cast<std::int64_t>(stab.size()), h) == c.group_order())
        family.push_back(i);
    }
    for (std::size_t t = 1; t < family.size(); ++t) {
      std::vector<std::int64_t> row(ngens, 0);
      row[family[0]] = 1;
      row[family[t]] = -1;
      rel.push_back(std::move(row));
    }
  }
  return rel;
}

}  // namespace

DivisorClassGroup::DivisorClassGroup(const CurveWithAction& c)
    : orbit_count_(c.orbits().size()),
      group_order_(c.group_order()),
      base_(static_cast<std::int64_t>(c.orbits().size()) + 1,
            IntMatrix::from_rows(class_group_relations(c))) {
  if (riemann_hurwitz_quotient_genus(c, all_elements(c.group())) != 0)
    throw std::invalid_argument("class group construction needs a genus-0 full quotient");
  for (std::size_t i = 0; i < orbit_count_; ++i) {
    degree_map_.push_back(c.orbits()[i].degree);
    labels_.push_back(c.orbits()[i].label);
  }
  degree_map_.push_back(group_order_);
  labels_.push_back("fiber");
  // Linear equivalence preserves degree: every relation row must have
  // degree zero. Violations mean the relation generator is wrong.
  const IntMatrix& rel = base_.relations();
  for (std::int64_t r = 0; r < rel.rows; ++r) {
    std::int64_t d = 0;
    for (std::int64_t j = 0; j < rel.cols; ++j)
      d = checked_add(d, checked_mul(rel.at(r, j), degree_map_[static_cast<std::size_t>(j)]));
    if (d != 0) throw std::logic_error("relation row with nonzero degree");
  }
  std::vector<std::int64_t> krep(orbit_count_ + 1, 0);
  for (std::size_t i = 0; i < orbit_count_; ++i) krep[i] = c.stabilizer_order(i) - 1;
  krep[orbit_count_] = -2;
  canonical_ = from_rep(std::move(krep));
}

DivisorClassGroup build_class_group(const CurveWithAction& c) { return DivisorClassGroup(c); }

DivisorClass DivisorClassGroup::from_rep(std::vector<std::int64_t> rep) const {
  if (rep.size() != orbit_count_ + 1) throw std::invalid_argument("coefficient length mismatch");
  DivisorClass cls;
  cls.degree = 0;
  for (std::size_t i = 0; i < rep.size(); ++i)
    cls.degree = checked_add(cls.degree, checked_mul(rep[i], degree_map_[i]));
  cls.normal = base_.normal_form(rep);
  cls.rep = std::move(rep);
  return cls;
}

DivisorClass DivisorClassGroup::from_coeffs(std::vector<std::int64_t> orbit_coeffs,
                                            std::int64_t fiber_mult) const {
  if (orbit_coeffs.size() != orbit_count_) throw std::invalid_argument("orbit coefficient length mismatch");
  orbit_coeffs.push_back(fiber_mult);
  return from_rep(std::move(orbit_coeffs));
}

DivisorClass DivisorClassGroup::fiber_class() const {
  std::vector<std::int64_t> rep(orbit_count_ + 1, 0);
  rep[orbit_count_] = 1;
  return from_rep(std::move(rep));
}

DivisorClass DivisorClassGroup::zero() const {
  return from_rep(std::vector<std::int64_t>(orbit_count_ + 1, 0));
}

DivisorClass DivisorClassGroup::add(const DivisorClass& x, const DivisorClass& y) const {
  std::vector<std::int64_t> rep(x.rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = checked_add(x.rep[i], y.rep[i]);
  return from_rep(std::move(rep));
}

DivisorClass DivisorClassGroup::sub(const DivisorClass& x, const DivisorClass& y) const {
  std::vector<std::int64_t> rep(x.rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = checked_sub(x.rep[i], y.rep[i]);
  return from_rep(std::move(rep));
}

DivisorClass DivisorClassGroup::neg(const DivisorClass& x) const {
  std::vector<std::int64_t> rep(x.rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = checked_neg(x.rep[i]);
  return from_rep(std::move(rep));
}

DivisorClass DivisorClassGroup::scale(std::int64_t k, const DivisorClass& x) const {
  std::vector<std::int64_t> rep(x.rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = checked_mul(k, x.rep[i]);
  return from_rep(std::move(rep));
}

bool DivisorClassGroup::is_zero(const DivisorClass& x) const {
  return std::all_of(x.normal.begin(), x.normal.end(), [](std::int64_t v) { return v == 0; });
}

EffectivityWitness is_effective_class(const DivisorClassGroup& g, const DivisorClass& cls) {
  EffectivityWitness w;
  if (cls.degree < 0) return w;
  const std::size_t n = g.orbit_count() + 1;
  std::vector<std::int64_t> combo(n, 0);
  // Depth-first over nonnegative combinations of exactly the right degree.
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t remaining) -> bool {
    if (idx == n) {
      if (remaining != 0) return false;
      return g.base().equal(combo, cls.rep);
    }
    const std::int64_t d = g.degree_map()[idx];
    for (std::int64_t a = 0; checked_mul(a, d) <= remaining; ++a) {
      combo[idx] = a;
      if (self(self, idx + 1, remaining - a * d)) return true;
    }
    combo[idx] = 0;
    return false;
  };
  if (rec(rec, 0, cls.degree)) {
    w.effective = true;
    w.combination = combo;
  }
  return w;
}

DivisorClass canonical_class(const CurveWithAction& c, const DivisorClassGroup& g) {
  const DivisorClass& k = g.canonical();
  if (k.degree != 2 * c.genus() - 2) throw std::logic_error("canonical class degree mismatch");
  return k;
}

CurveCohomology curve_cohomology(const CurveWithAction& c, const DivisorClassGroup& g,
                                 const DivisorClass& cls) {
  const std::int64_t genus = c.genus();
  const std::int64_t deg = cls.degree;
  const std::int64_t chi = deg + 1 - genus;

  if (deg < 0) return {CohStatus::exact(0), CohStatus::exact(genus - 1 - deg), "negative-degree"};
  if (deg > 2 * genus - 2) return {CohStatus::exact(chi), CohStatus::exact(0), "beyond-canonical"};
  if (g.is_zero(cls)) return {CohStatus::exact(1), CohStatus::exact(genus), "structure-sheaf"};
  if (cls == g.canonical()) return {CohStatus::exact(genus), CohStatus::exact(1), "canonical"};
  if (deg == 0) return {CohStatus::exact(0), CohStatus::exact(genus - 1), "degree-zero-nontrivial"};
  if (deg == 2 * genus - 2) return {CohStatus::exact(genus - 1), CohStatus::exact(0), "canonical-degree-noncanonical"};
  if (!is_effective_class(g, cls).effective)
    return {CohStatus::exact(0), CohStatus::exact(genus - 1 - deg), "ineffective-invariant"};
  // Clifford ceiling for the effective middle range; h1 rides along chi.
  const std::int64_t ceiling = deg / 2 + 1;
  return {CohStatus::range(1, ceiling),
          CohStatus::range(std::max<std::int64_t>(0, 1 - chi), ceiling - chi), "clifford-range"};
}

}  // namespace isoprod
