#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isoprod {

/// Overflow-checked 64-bit integer arithmetic. Every throw here means the
/// input left the supported range; nothing is ever computed modulo 2^64.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b);
std::int64_t lcm_positive(std::int64_t a, std::int64_t b);

/// Exact rational number, always normalized (den > 0, gcd(num, den) = 1).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT implicit

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  std::int64_t as_integer() const;  // throws unless integral

  friend Rational operator+(const Rational&, const Rational&);
  friend Rational operator-(const Rational&, const Rational&);
  friend Rational operator*(const Rational&, const Rational&);
  friend Rational operator/(const Rational&, const Rational&);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::int64_t r, std::int64_t c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

  std::int64_t& at(std::int64_t r, std::int64_t c) { return a[static_cast<std::size_t>(r * cols + c)]; }
  std::int64_t at(std::int64_t r, std::int64_t c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

  static IntMatrix identity(std::int64_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
std::int64_t mat_det(const IntMatrix& m);  // cofactor expansion, small matrices only

/// Smith normal form of an integer matrix: left * input * right = diag.
/// The diagonal carries the divisibility chain d_1 | d_2 | ..., entries >= 0,
/// zeros (rank deficiency) at the end.
struct SmithResult {
  IntMatrix diag;
  IntMatrix left;   // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols
  std::vector<std::int64_t> diagonal;           // length min(rows, cols)
  std::vector<std::int64_t> invariant_factors;  // nonzero diagonal entries
  std::vector<std::int64_t> torsion;            // invariant factors > 1

  /// Free rank of Z^cols / rowspace(input).
  std::int64_t quotient_free_rank(std::int64_t cols) const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Transform-free variant for bulk sweeps: writes the diagonal (length
/// min(rows, cols)) into `out` using caller-owned scratch, no allocation.
void smith_diagonal_inplace(std::span<std::int64_t> scratch, std::int64_t rows,
                            std::int64_t cols, std::span<std::int64_t> out);

/// Finitely generated abelian group (Z/n_1) x ... x (Z/n_k); n_i = 0 is a
/// free factor. Elements are coordinate vectors reduced mod n_i.
class FinAbGroup {
 public:
  explicit FinAbGroup(std::vector<std::int64_t> cyclic_orders);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  bool finite() const;
  std::int64_t order() const;  // throws on free factors

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

struct GroupElement {
  std::vector<std::int64_t> coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_reduce(const FinAbGroup& g, std::vector<std::int64_t> coords);
GroupElement group_identity(const FinAbGroup& g);
GroupElement group_add(const FinAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement group_neg(const FinAbGroup& g, const GroupElement& x);
GroupElement group_scale(const FinAbGroup& g, std::int64_t k, const GroupElement& x);
bool is_identity(const GroupElement& x);
std::vector<GroupElement> all_elements(const FinAbGroup& g);  // finite groups, lexicographic

/// Cyclic subgroup generated by g, identity first.
std::vector<GroupElement> subgroup_generated(const FinAbGroup& g, const GroupElement& x);

/// All subgroups of a finite abelian group, each as a sorted element list,
/// ordered by (order, elements). Sizes here are tiny (|G| <= 25).
std::vector<std::vector<GroupElement>> all_subgroups(const FinAbGroup& g);

bool generates_group(const FinAbGroup& g, const std::vector<GroupElement>& gens);

/// Exact root of unity e^(2 pi i num / order), canonical form:
/// order >= 1, 0 <= num < order, gcd(num, order) = 1 unless num = 0 (order 1).
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t order = 1;

  static RootOfUnity make(std::int64_t num, std::int64_t order);
  bool is_one() const { return num == 0; }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b);

/// Character of a finite abelian group, stored as a weight vector mod the
/// cyclic orders. Pairing values are exact roots of unity, never floats.
struct Character {
  std::vector<std::int64_t> weights;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

Character character_reduce(const FinAbGroup& g, std::vector<std::int64_t> weights);
Character trivial_character(const FinAbGroup& g);
Character character_add(const FinAbGroup& g, const Character& a, const Character& b);
Character character_sub(const FinAbGroup& g, const Character& a, const Character& b);
Character character_neg(const FinAbGroup& g, const Character& a);
bool is_trivial(const Character& c);
RootOfUnity character_eval(const FinAbGroup& g, const Character& chi, const GroupElement& x);
std::int64_t character_order(const FinAbGroup& g, const Character& chi);

/// All |G| characters of a finite group, trivial character first,
/// lexicographic in the weight vectors. Rejects groups with free factors.
std::vector<Character> characters(const FinAbGroup& g);

/// Abelian group presented by generators and integer relation rows.
/// Element equality in the quotient is decided through the Smith normal
/// form; the transformation matrices are kept so membership reductions can
/// be replayed.
class PresentedGroup {
 public:
  PresentedGroup(std::int64_t generator_count, IntMatrix relation_rows);

  std::int64_t generator_count() const { return gens_; }
  const IntMatrix& relations() const { return relations_; }
  const SmithResult& snf() const { return snf_; }
  std::int64_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return snf_.torsion; }

  /// Canonical coordinates of a generator-space vector in the quotient.
  std::vector<std::int64_t> normal_form(std::span<const std::int64_t> x) const;
  bool is_zero(std::span<const std::int64_t> x) const;
  bool equal(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;

 private:
  std::int64_t gens_;
  IntMatrix relations_;
  SmithResult snf_;
  std::int64_t free_rank_;
};

}  // namespace isoprod
