#include "isoprod/obstruction.hpp"

#include <sstream>
#include <stdexcept>

namespace isoprod {

Rational chi_obstruction(std::int64_t g_c, std::int64_t g_d, std::int64_t group_order,
                         std::int64_t e, std::int64_t f) {
  if (group_order <= 0) throw std::invalid_argument("group order must be positive");
  if (checked_mul(g_c - 1, g_d - 1) != group_order)
    throw std::invalid_argument("|G| != (g_C - 1)(g_D - 1)");
  const std::int64_t num = checked_sub(
      checked_sub(checked_mul(2, checked_mul(e, f)), checked_mul(e, 2 * g_d - 2)),
      checked_mul(f, 2 * g_c - 2));
  return Rational(1) + Rational(num, 2 * group_order);
}

namespace {

std::string factored_form(std::int64_t g_c, std::int64_t g_d, std::int64_t order) {
  std::ostringstream os;
  os << "(e - " << g_c - 1 << ")(f - " << g_d - 1 << ") / " << order;
  return os.str();
}

const char* kScope =
    "rules out only sequences of the stated pullback-sum shapes with character twists; "
    "it does not exclude exceptional sequences built by other constructions";

}  // namespace

NoGoReport no_go_z2_cubed(std::int64_t scan_bound) {
  if (scan_bound <= 0) throw std::invalid_argument("scan bound must be positive");
  NoGoReport rep;
  rep.label = "z2^3";
  rep.g_c = 3;
  rep.g_d = 5;
  rep.group_order = 8;
  rep.lattice = 4;
  rep.obstruction = factored_form(rep.g_c, rep.g_d, rep.group_order);
  rep.scan_bound = scan_bound;
  rep.scope = kScope;

  // Residue proof over the whole lattice (e_i, f_i in 4Z).
  // chi(e, f) = (e - 2)(f - 4)/8; e = 0 mod 4 makes e - 2 = 2 mod 4, never 0.
  bool step1 = true;
  for (std::int64_t r = 0; r < rep.lattice; ++r)
    if ((4 * r - 2) % 4 == 0) step1 = false;  // representative check of e - 2 != 0 on 4Z
  rep.residue_proof.push_back(
      {"e = 0 (mod 4) gives e - 2 = 2 (mod 4), so e - 2 is never zero", step1});
  rep.residue_proof.push_back(
      {"chi(e_i, f_i) = 0 therefore forces f_1 = f_2 = 4", step1});
  // With f_1 = f_2 = 4 the pair condition chi(e_2 - e_1, f_2 - f_1) becomes
  // (e_2 - e_1 - 2)(-4)/8 with e_2 - e_1 = 0 mod 4: the first factor is
  // 2 mod 4, the second is -4, so the product is never zero.
  bool step3 = true;
  for (std::int64_t k = -3; k <= 3; ++k) {
    Rational chi = chi_obstruction(rep.g_c, rep.g_d, rep.group_order, 4 * k, 0);
    if (chi.is_zero()) step3 = false;
  }
  rep.residue_proof.push_back(
      {"then chi(e_2 - e_1, 0) = (e_2 - e_1 - 2)(-4)/8 != 0 since e_2 - e_1 = 0 (mod 4)", step3});
  rep.unsatisfiable = step1 && step3;

  // Bounded scan over all lattice tuples (e_1, f_1, e_2, f_2).
  std::vector<std::pair<std::int64_t, std::int64_t>> stage1;
  const std::int64_t lo = -(scan_bound / rep.lattice) * rep.lattice;
  for (std::int64_t e = lo; e <= scan_bound; e += rep.lattice)
    for (std::int64_t f = lo; f <= scan_bound; f += rep.lattice) {
      ++rep.tuples_scanned;
      if (chi_obstruction(rep.g_c, rep.g_d, rep.group_order, e, f).is_zero()) stage1.emplace_back(e, f);
    }
  // tuples_scanned counts (e, f) pairs so far; the full tuple space is their square
  rep.stage1_solutions = static_cast<std::int64_t>(stage1.size());
  rep.tuples_scanned = rep.tuples_scanned * rep.tuples_scanned;
  for (const auto& [e1, f1] : stage1)
    for (const auto& [e2, f2] : stage1)
      if (chi_obstruction(rep.g_c, rep.g_d, rep.group_order, e2 - e1, f2 - f1).is_zero())
        ++rep.solutions;
  rep.scan_agrees = (rep.solutions == 0) == rep.unsatisfiable;
  return rep;
}

NoGoReport no_go_z2_fourth(std::int64_t scan_bound) {
  if (scan_bound <= 0) throw std::invalid_argument("scan bound must be positive");
  NoGoReport rep;
  rep.label = "z2^4";
  rep.g_c = 5;
  rep.g_d = 5;
  rep.group_order = 16;
  rep.lattice = 8;
  rep.obstruction = factored_form(rep.g_c, rep.g_d, rep.group_order);
  rep.scan_bound = scan_bound;
  rep.scope = kScope;

  // chi(e, f) = (e - 4)(f - 4)/16; on 8Z both factors are 4 mod 8, never 0.
  bool step = true;
  for (std::int64_t k = -3; k <= 3; ++k)
    if ((8 * k - 4) % 8 == 0) step = false;
  rep.residue_proof.push_back(
      {"e = 0 (mod 8) gives e - 4 = 4 (mod 8) != 0, and likewise f - 4 != 0", step});
  rep.residue_proof.push_back({"chi(e, f) = (e - 4)(f - 4)/16 is therefore never zero", step});
  rep.unsatisfiable = step;

  const std::int64_t lo = -(scan_bound / rep.lattice) * rep.lattice;
  for (std::int64_t e = lo; e <= scan_bound; e += rep.lattice)
    for (std::int64_t f = lo; f <= scan_bound; f += rep.lattice) {
      ++rep.tuples_scanned;
      if (chi_obstruction(rep.g_c, rep.g_d, rep.group_order, e, f).is_zero()) ++rep.solutions;
    }
  rep.stage1_solutions = rep.solutions;
  rep.scan_agrees = (rep.solutions == 0) == rep.unsatisfiable;
  return rep;
}

}  // namespace isoprod
