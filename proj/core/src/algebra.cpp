#include "isoprod/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isoprod {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) {
  if (a < 0) a = checked_neg(a);
  if (b < 0) b = checked_neg(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm_positive(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm needs positive arguments");
  return checked_mul(a / gcd_nonneg(a, b), b);
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  std::int64_t g = gcd_nonneg(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::as_integer() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                  checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                  checked_mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

IntMatrix IntMatrix::identity(std::int64_t n) {
  IntMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<std::int64_t>(rows.size()), static_cast<std::int64_t>(rows[0].size()));
  for (std::int64_t r = 0; r < m.rows; ++r) {
    if (static_cast<std::int64_t>(rows[static_cast<std::size_t>(r)].size()) != m.cols)
      throw std::invalid_argument("ragged rows");
    for (std::int64_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(x.rows, y.cols);
  for (std::int64_t i = 0; i < x.rows; ++i)
    for (std::int64_t k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (std::int64_t j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, y.at(k, j)));
    }
  return r;
}

std::int64_t mat_det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const std::int64_t n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  std::int64_t det = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::int64_t r = 1; r < n; ++r) {
      std::int64_t cc = 0;
      for (std::int64_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    std::int64_t term = checked_mul(m.at(0, j), mat_det(minor));
    det = (j % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
  }
  return det;
}

namespace {

// Elimination core shared by the full and the transform-free SNF. Works on a
// row-major buffer of size rows*cols; row/col operations are mirrored into
// `left` / `right` when provided.
struct SmithWork {
  std::int64_t rows, cols;
  std::int64_t* d;
  IntMatrix* left;
  IntMatrix* right;

  std::int64_t& at(std::int64_t r, std::int64_t c) { return d[r * cols + c]; }

  void swap_rows(std::int64_t i, std::int64_t j) {
    if (i == j) return;
    for (std::int64_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    if (left)
      for (std::int64_t c = 0; c < left->cols; ++c) std::swap(left->at(i, c), left->at(j, c));
  }
  void swap_cols(std::int64_t i, std::int64_t j) {
    if (i == j) return;
    for (std::int64_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    if (right)
      for (std::int64_t r = 0; r < right->rows; ++r) std::swap(right->at(r, i), right->at(r, j));
  }
  // row i += k * row j
  void add_row(std::int64_t i, std::int64_t j, std::int64_t k) {
    for (std::int64_t c = 0; c < cols; ++c) at(i, c) = checked_add(at(i, c), checked_mul(k, at(j, c)));
    if (left)
      for (std::int64_t c = 0; c < left->cols; ++c)
        left->at(i, c) = checked_add(left->at(i, c), checked_mul(k, left->at(j, c)));
  }
  // col i += k * col j
  void add_col(std::int64_t i, std::int64_t j, std::int64_t k) {
    for (std::int64_t r = 0; r < rows; ++r) at(r, i) = checked_add(at(r, i), checked_mul(k, at(r, j)));
    if (right)
      for (std::int64_t r = 0; r < right->rows; ++r)
        right->at(r, i) = checked_add(right->at(r, i), checked_mul(k, right->at(r, j)));
  }
  void negate_row(std::int64_t i) {
    for (std::int64_t c = 0; c < cols; ++c) at(i, c) = checked_neg(at(i, c));
    if (left)
      for (std::int64_t c = 0; c < left->cols; ++c) left->at(i, c) = checked_neg(left->at(i, c));
  }

  bool pivot_is_lone(std::int64_t t) {
    for (std::int64_t r = t + 1; r < rows; ++r)
      if (at(r, t) != 0) return false;
    for (std::int64_t c = t + 1; c < cols; ++c)
      if (at(t, c) != 0) return false;
    return true;
  }

  bool find_min_nonzero(std::int64_t t, std::int64_t& br, std::int64_t& bc) {
    std::int64_t best = 0;
    bool found = false;
    for (std::int64_t r = t; r < rows; ++r)
      for (std::int64_t c = t; c < cols; ++c) {
        std::int64_t v = at(r, c) < 0 ? -at(r, c) : at(r, c);
        if (v != 0 && (!found || v < best)) {
          best = v;
          br = r;
          bc = c;
          found = true;
        }
      }
    return found;
  }

  void run() {
    const std::int64_t nmin = std::min(rows, cols);
    for (std::int64_t t = 0; t < nmin; ++t) {
      std::int64_t br, bc;
      if (!find_min_nonzero(t, br, bc)) break;  // zero block: diagonal stays 0
      swap_rows(t, br);
      swap_cols(t, bc);
      while (!pivot_is_lone(t)) {
        for (std::int64_t r = t + 1; r < rows; ++r)
          if (at(r, t) != 0) add_row(r, t, -(at(r, t) / at(t, t)));
        for (std::int64_t c = t + 1; c < cols; ++c)
          if (at(t, c) != 0) add_col(c, t, -(at(t, c) / at(t, t)));
        if (!pivot_is_lone(t)) {
          if (!find_min_nonzero(t, br, bc)) break;
          swap_rows(t, br);
          swap_cols(t, bc);
        }
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool again = true;
      while (again) {
        again = false;
        for (std::int64_t r = t + 1; r < rows && !again; ++r)
          for (std::int64_t c = t + 1; c < cols && !again; ++c)
            if (at(r, c) % at(t, t) != 0) {
              add_row(t, r, 1);
              while (!pivot_is_lone(t)) {
                for (std::int64_t rr = t + 1; rr < rows; ++rr)
                  if (at(rr, t) != 0) add_row(rr, t, -(at(rr, t) / at(t, t)));
                for (std::int64_t cc = t + 1; cc < cols; ++cc)
                  if (at(t, cc) != 0) add_col(cc, t, -(at(t, cc) / at(t, t)));
                if (!pivot_is_lone(t)) {
                  std::int64_t r2, c2;
                  find_min_nonzero(t, r2, c2);
                  swap_rows(t, r2);
                  swap_cols(t, c2);
                }
              }
              again = true;
            }
      }
      if (at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  res.diag = m;
  res.left = IntMatrix::identity(m.rows);
  res.right = IntMatrix::identity(m.cols);
  if (m.rows > 0 && m.cols > 0) {
    SmithWork w{m.rows, m.cols, res.diag.a.data(), &res.left, &res.right};
    w.run();
  }
  const std::int64_t nmin = std::min(m.rows, m.cols);
  res.diagonal.resize(static_cast<std::size_t>(nmin));
  for (std::int64_t i = 0; i < nmin; ++i) {
    res.diagonal[static_cast<std::size_t>(i)] = res.diag.at(i, i);
    if (res.diag.at(i, i) != 0) res.invariant_factors.push_back(res.diag.at(i, i));
    if (res.diag.at(i, i) > 1) res.torsion.push_back(res.diag.at(i, i));
  }
  return res;
}

std::int64_t SmithResult::quotient_free_rank(std::int64_t cols) const {
  return cols - static_cast<std::int64_t>(invariant_factors.size());
}

void smith_diagonal_inplace(std::span<std::int64_t> scratch, std::int64_t rows,
                            std::int64_t cols, std::span<std::int64_t> out) {
  const std::int64_t nmin = std::min(rows, cols);
  if (static_cast<std::int64_t>(out.size()) < nmin) throw std::invalid_argument("out too small");
  if (rows > 0 && cols > 0) {
    SmithWork w{rows, cols, scratch.data(), nullptr, nullptr};
    w.run();
  }
  for (std::int64_t i = 0; i < nmin; ++i) out[static_cast<std::size_t>(i)] = scratch[static_cast<std::size_t>(i * cols + i)];
}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (std::int64_t n : orders_)
    if (n < 0) throw std::invalid_argument("cyclic order must be >= 0");
}

bool FinAbGroup::finite() const {
  return std::all_of(orders_.begin(), orders_.end(), [](std::int64_t n) { return n > 0; });
}

std::int64_t FinAbGroup::order() const {
  if (!finite()) throw std::domain_error("group has free factors");
  std::int64_t o = 1;
  for (std::int64_t n : orders_) o = checked_mul(o, n);
  return o;
}

GroupElement group_reduce(const FinAbGroup& g, std::vector<std::int64_t> coords) {
  if (coords.size() != g.rank()) throw std::invalid_argument("coordinate length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t n = g.cyclic_orders()[i];
    if (n > 0) {
      coords[i] %= n;
      if (coords[i] < 0) coords[i] += n;
    }
  }
  return GroupElement{std::move(coords)};
}

GroupElement group_identity(const FinAbGroup& g) {
  return GroupElement{std::vector<std::int64_t>(g.rank(), 0)};
}

GroupElement group_add(const FinAbGroup& g, const GroupElement& x, const GroupElement& y) {
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(x.coords[i], y.coords[i]);
  return group_reduce(g, std::move(c));
}

GroupElement group_neg(const FinAbGroup& g, const GroupElement& x) {
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_neg(x.coords[i]);
  return group_reduce(g, std::move(c));
}

GroupElement group_scale(const FinAbGroup& g, std::int64_t k, const GroupElement& x) {
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(k, x.coords[i]);
  return group_reduce(g, std::move(c));
}

bool is_identity(const GroupElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<GroupElement> all_elements(const FinAbGroup& g) {
  if (!g.finite()) throw std::domain_error("cannot enumerate an infinite group");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  std::vector<std::int64_t> c(g.rank(), 0);
  while (true) {
    out.push_back(GroupElement{c});
    std::size_t i = 0;
    for (; i < c.size(); ++i) {
      if (++c[i] < g.cyclic_orders()[i]) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> subgroup_generated(const FinAbGroup& g, const GroupElement& x) {
  std::vector<GroupElement> out{group_identity(g)};
  GroupElement cur = x;
  while (!is_identity(cur)) {
    out.push_back(cur);
    cur = group_add(g, cur, x);
  }
  return out;
}

std::vector<std::vector<GroupElement>> all_subgroups(const FinAbGroup& g) {
  if (!g.finite()) throw std::domain_error("cannot enumerate subgroups of an infinite group");
  auto elems = all_elements(g);
  auto closure = [&](std::set<GroupElement> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<GroupElement> cur(s.begin(), s.end());
      for (const auto& a : cur)
        for (const auto& b : cur) {
          auto c = group_add(g, a, b);
          if (s.insert(c).second) grew = true;
        }
    }
    return s;
  };
  std::set<std::vector<GroupElement>> found;
  found.insert({group_identity(g)});
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (const auto& sub : snapshot)
      for (const auto& e : elems) {
        std::set<GroupElement> s(sub.begin(), sub.end());
        s.insert(e);
        auto cl = closure(std::move(s));
        std::vector<GroupElement> key(cl.begin(), cl.end());
        if (found.insert(key).second) grew = true;
      }
  }
  std::vector<std::vector<GroupElement>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool generates_group(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
  if (!g.finite()) throw std::domain_error("generation test needs a finite group");
  std::set<GroupElement> s{group_identity(g)};
  for (const auto& e : gens) s.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(group_add(g, a, b)).second) grew = true;
  }
  return static_cast<std::int64_t>(s.size()) == g.order();
}

RootOfUnity RootOfUnity::make(std::int64_t num, std::int64_t order) {
  if (order <= 0) throw std::invalid_argument("root of unity needs positive order");
  num %= order;
  if (num < 0) num += order;
  if (num == 0) return RootOfUnity{0, 1};
  std::int64_t g = gcd_nonneg(num, order);
  return RootOfUnity{num / g, order / g};
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) {
  std::int64_t l = lcm_positive(a.order, b.order);
  return RootOfUnity::make(checked_add(checked_mul(a.num, l / a.order), checked_mul(b.num, l / b.order)), l);
}

Character character_reduce(const FinAbGroup& g, std::vector<std::int64_t> weights) {
  return Character{group_reduce(g, std::move(weights)).coords};
}

Character trivial_character(const FinAbGroup& g) {
  return Character{std::vector<std::int64_t>(g.rank(), 0)};
}

Character character_add(const FinAbGroup& g, const Character& a, const Character& b) {
  return Character{group_add(g, GroupElement{a.weights}, GroupElement{b.weights}).coords};
}

Character character_sub(const FinAbGroup& g, const Character& a, const Character& b) {
  return character_add(g, a, character_neg(g, b));
}

Character character_neg(const FinAbGroup& g, const Character& a) {
  return Character{group_neg(g, GroupElement{a.weights}).coords};
}

bool is_trivial(const Character& c) {
  return std::all_of(c.weights.begin(), c.weights.end(), [](std::int64_t v) { return v == 0; });
}

RootOfUnity character_eval(const FinAbGroup& g, const Character& chi, const GroupElement& x) {
  if (!g.finite()) throw std::domain_error("character evaluation needs a finite group");
  std::int64_t l = 1;
  for (std::int64_t n : g.cyclic_orders()) l = lcm_positive(l, n);
  std::int64_t num = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t n = g.cyclic_orders()[i];
    num = checked_add(num, checked_mul(checked_mul(chi.weights[i], x.coords[i]), l / n));
  }
  return RootOfUnity::make(num, l);
}

std::int64_t character_order(const FinAbGroup& g, const Character& chi) {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t n = g.cyclic_orders()[i];
    std::int64_t w = chi.weights[i] % n;
    if (w < 0) w += n;
    if (w != 0) o = lcm_positive(o, n / gcd_nonneg(w, n));
  }
  return o;
}

std::vector<Character> characters(const FinAbGroup& g) {
  if (!g.finite()) throw std::domain_error("character group of an infinite group not supported");
  std::vector<Character> out;
  for (const auto& e : all_elements(g)) out.push_back(Character{e.coords});
  // all_elements sorts lexicographically, so the zero vector (trivial
  // character) comes first.
  return out;
}

PresentedGroup::PresentedGroup(std::int64_t generator_count, IntMatrix relation_rows)
    : gens_(generator_count), relations_(std::move(relation_rows)) {
  if (gens_ < 0) throw std::invalid_argument("negative generator count");
  if (relations_.rows == 0) relations_ = IntMatrix(0, gens_);
  if (relations_.cols != gens_) throw std::invalid_argument("relation width != generator count");
  snf_ = smith_normal_form(relations_);
  free_rank_ = snf_.quotient_free_rank(gens_);
}

std::vector<std::int64_t> PresentedGroup::normal_form(std::span<const std::int64_t> x) const {
  if (static_cast<std::int64_t>(x.size()) != gens_) throw std::invalid_argument("vector length mismatch");
  // y = x * V moves to the coordinates where relations are diagonal.
  std::vector<std::int64_t> y(static_cast<std::size_t>(gens_), 0);
  const IntMatrix& v = snf_.right;
  for (std::int64_t j = 0; j < gens_; ++j) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < gens_; ++i) acc = checked_add(acc, checked_mul(x[static_cast<std::size_t>(i)], v.at(i, j)));
    y[static_cast<std::size_t>(j)] = acc;
  }
  for (std::size_t i = 0; i < snf_.diagonal.size(); ++i) {
    std::int64_t d = snf_.diagonal[i];
    if (d > 0) {
      y[i] %= d;
      if (y[i] < 0) y[i] += d;
    }
  }
  return y;
}

bool PresentedGroup::is_zero(std::span<const std::int64_t> x) const {
  auto nf = normal_form(x);
  return std::all_of(nf.begin(), nf.end(), [](std::int64_t v) { return v == 0; });
}

bool PresentedGroup::equal(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  return normal_form(x) == normal_form(y);
}

}  // namespace isoprod
