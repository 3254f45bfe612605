#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoprod/cohomology.hpp"

namespace isoprod {

enum class PairVerdict { vanishes, fails, undetermined };

/// Evidence for one ordered pair: the Ext profile from the later to the
/// earlier member, which must be invariant-zero in all degrees.
struct PairCheck {
  std::size_t later = 0;    // 0-based index of the source (comes later)
  std::size_t earlier = 0;  // 0-based index of the target (comes earlier)
  PairVerdict verdict = PairVerdict::undetermined;
  CohomologyProfile profile;
  bool euler_obstruction = false;          // chi_S != 0 forces a nonzero Ext
  std::optional<int> nonzero_degree;       // a degree with provably nonzero Ext
};

struct ObjectCheck {
  std::size_t index = 0;
  bool exceptional = false;
  CohomologyProfile diagonal;  // (1, 0, 0) from p_g = q = 0
};

struct ExceptionalCertificate {
  std::vector<EquivariantLineBundle> collection;
  bool valid = false;
  bool undetermined = false;
  bool maximal = false;
  std::int64_t max_length = 0;
  std::string rejection;  // set for structural rejections (repeats, overlength)
  std::vector<ObjectCheck> objects;
  std::vector<PairCheck> pairs;            // all backward pairs, scan order
  std::optional<PairCheck> failure;        // first failing pair
};

struct ExceptionalObjectResult {
  bool exceptional = false;
  CohomologyProfile diagonal;
};

/// Every line bundle on a p_g = q = 0 surface is exceptional; the evidence
/// is the diagonal profile (1, 0, 0).
ExceptionalObjectResult is_exceptional_object(const EquivariantLineBundle& l,
                                              const ProductQuotientSurface& s);

/// Maximal length of an exceptional sequence: the free rank of
/// K(S) = Z^2 + Pic(S) = Z^(2 + b2) + torsion; here always 4.
std::int64_t max_length(const ProductQuotientSurface& s);

/// Checks that every backward Ext profile is provably zero in all degrees.
/// Verdicts are three-valued: a pair fails outright when chi_S of its
/// difference is nonzero or some degree is provably nonzero; pairs whose
/// statuses stay bounded leave the collection undetermined, never passed.
ExceptionalCertificate verify_exceptional_sequence(std::span<const EquivariantLineBundle> collection,
                                                   const ProductQuotientSurface& s);

/// Finite search space: coefficient boxes for (a, b) over [E1], [E2] and
/// (c, d) over [F1], [F2]; the first member is normalized to the trivial
/// class. Characters: all-trivial, or swept over all difference choices.
struct SearchWindow {
  std::int64_t lo = -2;
  std::int64_t hi = 2;
  bool sweep_characters = false;
};

struct SearchResult {
  /// Deduplicated window bundles in canonical (lexicographic) order.
  std::vector<EquivariantLineBundle> bundles;
  std::vector<ExceptionalCertificate> found;
  /// Candidates with only bounded (undecidable) backward entries, as index
  /// quadruples into `bundles`.
  std::vector<std::array<std::int64_t, 4>> undetermined;
  std::int64_t candidates_considered = 0;
  std::int64_t distinct_bundles = 0;
  /// With sweep_characters: verdicts re-checked over all |G|^3 difference
  /// characters; true when uniform (they always are: Ext depends only on
  /// differences and the decision rules are character-free away from O_S).
  bool character_uniform = true;
};

SearchResult search_sequences(const SearchWindow& w, const ProductQuotientSurface& s);

/// Formality of the endomorphism DG-algebra of a quadruple (O, A, B, A+B)
/// with A pulled back from C and B from D: both cross differences between
/// the middle members have vanishing totals, so no composable chain of
/// three non-unit morphisms exists and all higher products vanish on a
/// strictly unital minimal model.
struct FormalityCertificate {
  bool certified = false;
  std::string reason;
  CohomologyProfile cross_ab;  // Ext(A-slot, B-slot) difference profile
  CohomologyProfile cross_ba;
  int longest_composable_chain = 0;  // over non-unit morphism spaces
  std::string statement;
};

FormalityCertificate formality_certificate(std::span<const EquivariantLineBundle> collection,
                                           const ProductQuotientSurface& s);

/// Existence-level deformation-invariance certificate: enough characters
/// kill the middle H^1s (pigeonhole), the fourth difference is (0, 0, 4)
/// for every character, and with Ext concentrated in degrees 0 and 2 the
/// algebra structure is forced (no Ext^4 on a surface).
struct DeformationCertificate {
  bool certified = false;
  std::string reason;
  std::int64_t middle_h1_total = 0;
  std::int64_t dual_order = 0;
  std::int64_t admissible_characters_per_slot = 0;
  bool fourth_difference_uniform = false;  // (0,0,4) across all characters
  std::string statement;
};

DeformationCertificate deformation_invariance_certificate(const ProductQuotientSurface& s);

}  // namespace isoprod
