#pragma once

#include <string>
#include <vector>

#include "isoprod/algebra.hpp"

namespace isoprod {

/// Euler characteristic on S of the bidegree-(e, f) pullback bundle:
///   chi = 1 + (2ef - e(2g_D - 2) - f(2g_C - 2)) / (2|G|)
///       = (e - (g_C - 1)) (f - (g_D - 1)) / |G|,
/// exact rational, character twists invisible. Backward Ext conditions for
/// pullback-sum bundles evaluate this at the difference bidegrees; the
/// congruence lattices scanned below are symmetric under e -> -e, f -> -f,
/// so either orientation of the difference leads to the same verdict.
Rational chi_obstruction(std::int64_t g_c, std::int64_t g_d, std::int64_t group_order,
                         std::int64_t e, std::int64_t f);

struct ResidueStep {
  std::string statement;
  bool verified = false;
};

struct NoGoReport {
  std::string label;           // "z2^3" or "z2^4"
  std::int64_t g_c = 0;
  std::int64_t g_d = 0;
  std::int64_t group_order = 0;
  std::int64_t lattice = 0;    // orbit degrees are multiples of this
  std::string obstruction;     // factored form of the chi condition
  std::vector<ResidueStep> residue_proof;
  bool unsatisfiable = false;
  std::int64_t scan_bound = 0;
  std::int64_t tuples_scanned = 0;
  std::int64_t stage1_solutions = 0;  // tuples surviving the first vanishing conditions
  std::int64_t solutions = 0;         // tuples satisfying every condition
  bool scan_agrees = false;           // scan found none iff the residue proof says so
  std::string scope;
};

/// No length-3 sequence (O, O(E1+F1)(chi1), O(E2+F2)(chi2)) of pullback-sum
/// bundles exists for the (Z/2)^3 surfaces: on the 4Z degree lattice the
/// first two chi conditions force f1 = f2 = 4 and the third then cannot
/// vanish. Proof over the whole lattice plus a bounded scan.
NoGoReport no_go_z2_cubed(std::int64_t scan_bound = 100);

/// No pair (O, O(E+F)(chi)) works for the (Z/2)^4 surfaces: on the 8Z
/// lattice the single chi condition never vanishes.
NoGoReport no_go_z2_fourth(std::int64_t scan_bound = 200);

}  // namespace isoprod
