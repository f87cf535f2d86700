#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latgb {

// Scalar and dense types. A binomial x^{v+} - x^{v-} is stored as the single
// signed difference vector v; the positive and negative parts have disjoint
// support by construction.
using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

class NotHomogeneousError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Exponents are machine-width integers; arithmetic aborts with a diagnostic
// instead of wrapping.
inline Int checkedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checkedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <typename DerivedA, typename DerivedB>
Int checkedDot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of unequal length");
  Int acc = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc = checkedAdd(acc, checkedMul(a(i), b(i)));
  return acc;
}

inline Vec checkedSum(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sum of vectors of unequal length");
  Vec r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = checkedAdd(a(i), b(i));
  return r;
}

inline Vec checkedDiff(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("difference of vectors of unequal length");
  Vec r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = checkedSub(a(i), b(i));
  return r;
}

// Componentwise decomposition v = v+ - v-. The expressions stay lazy so they
// compose with further Eigen arithmetic.
template <typename Derived>
auto positivePart(const Eigen::MatrixBase<Derived>& v) {
  return v.cwiseMax(Int{0});
}

template <typename Derived>
auto negativePart(const Eigen::MatrixBase<Derived>& v) {
  return (-v).cwiseMax(Int{0});
}

inline std::pair<Vec, Vec> decompose(const Vec& v) {
  return {positivePart(v), negativePart(v)};
}

template <typename DerivedA, typename DerivedB>
auto joinExponents(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a.cwiseMax(b);
}

template <typename DerivedA, typename DerivedB>
auto meetExponents(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a.cwiseMin(b);
}

/// Positive integer weights a_1..a_n; deg(x^m) = a . m.
struct Grading {
  Vec weights;

  Grading() = default;
  explicit Grading(Vec w) : weights(std::move(w)) {
    for (Eigen::Index i = 0; i < weights.size(); ++i)
      if (weights(i) < 1) throw Error("grading weight " + std::to_string(i + 1) + " is not positive");
  }

  Eigen::Index vars() const { return weights.size(); }
};

/// Degree of a monomial exponent vector (all entries >= 0).
inline Int monomialDegree(const Vec& m, const Grading& g) {
  if (m.size() != g.vars()) throw DimensionMismatch("monomial length does not match grading");
  return checkedDot(g.weights, m);
}

/// Degree of the binomial x^{v+} - x^{v-}; requires both monomials to have
/// equal degree under the grading.
inline Int binomialDegree(const Vec& v, const Grading& g) {
  if (v.size() != g.vars()) throw DimensionMismatch("vector length does not match grading");
  const Int plus = checkedDot(g.weights, positivePart(v));
  const Int minus = checkedDot(g.weights, negativePart(v));
  if (plus != minus) throw NotHomogeneousError("binomial is not homogeneous under the grading");
  return plus;
}

/// Every vector of B whose two monomials differ in degree; empty means B is a
/// valid homogeneous input.
inline std::vector<Vec> inhomogeneousMembers(std::span<const Vec> B, const Grading& g) {
  std::vector<Vec> bad;
  for (const Vec& v : B) {
    if (v.size() != g.vars()) throw DimensionMismatch("vector length does not match grading");
    if (checkedDot(g.weights, v) != 0) bad.push_back(v);
  }
  return bad;
}

enum class Ordering { LT, EQ, GT };

/// Comparison keys applied in sequence: the grading degree, then each weight
/// row, then a reverse-lexicographic tie break over the significance
/// sequence. The grading row always comes first, so the composite is a
/// genuine term order even when user weight rows have negative entries.
struct TermOrder {
  Mat weightRows{0, 0};
  // Variable indices, most significant first.
  std::vector<Eigen::Index> significance;

  // Plain graded reverse-lexicographic order in which the last declared
  // variable is most significant.
  static TermOrder revlex(Eigen::Index n) {
    TermOrder o;
    o.weightRows.resize(0, n);
    o.significance.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = n; i-- > 0;) o.significance.push_back(i);
    return o;
  }

  static TermOrder withRows(Mat rows, Eigen::Index n) {
    TermOrder o = revlex(n);
    o.weightRows = std::move(rows);
    return o;
  }
};

inline void validateTermOrder(const TermOrder& o, Eigen::Index n) {
  if (o.weightRows.rows() > 0 && o.weightRows.cols() != n)
    throw DimensionMismatch("weight row length does not match variable count");
  if (static_cast<Eigen::Index>(o.significance.size()) != n)
    throw Error("significance sequence length does not match variable count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Eigen::Index i : o.significance) {
    if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
      throw Error("significance sequence is not a permutation of the variables");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

/// Total order on monomials of equal degree; EQ only for identical exponent
/// vectors. The reverse-lexicographic tie break scans from the LEAST
/// significant variable upward and the smaller exponent wins, the unique
/// convention under which x < y < z gives the leading terms y^2, yz, z^2 for
/// the binomials y^2 - xz, yz - x^3, z^2 - yx^2.
inline Ordering compareMonomials(const Vec& a, const Vec& b, const Grading& g, const TermOrder& o) {
  const Eigen::Index n = g.vars();
  if (a.size() != n || b.size() != n) throw DimensionMismatch("monomial length does not match grading");
  const Int da = checkedDot(g.weights, a);
  const Int db = checkedDot(g.weights, b);
  if (da != db) return da < db ? Ordering::LT : Ordering::GT;
  for (Eigen::Index r = 0; r < o.weightRows.rows(); ++r) {
    const Int wa = checkedDot(o.weightRows.row(r).transpose(), a);
    const Int wb = checkedDot(o.weightRows.row(r).transpose(), b);
    if (wa != wb) return wa < wb ? Ordering::LT : Ordering::GT;
  }
  for (auto it = o.significance.rbegin(); it != o.significance.rend(); ++it) {
    const Eigen::Index i = *it;
    if (a(i) != b(i)) return a(i) < b(i) ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

// Folded support bitmask: bit (i mod 64) is set when entry i is positive.
// Disjoint masks imply disjoint supports, so this is a sound quick filter for
// divisibility and coprimality tests; equality of masks proves nothing.
inline std::uint64_t foldedSupportMask(const Vec& v) {
  std::uint64_t mask = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) > 0) mask |= std::uint64_t{1} << (i & 63);
  return mask;
}

/// A nonzero difference vector normalized so that x^{v+} is the leading
/// monomial under the instance order, with the leading degree and a support
/// mask cached.
struct OrientedBinomial {
  Vec vector;
  Int degree = 0;
  std::uint64_t leadMask = 0;

  friend bool operator==(const OrientedBinomial& a, const OrientedBinomial& b) {
    return a.vector == b.vector;
  }
};

inline OrientedBinomial orient(const Vec& v, const Grading& g, const TermOrder& o) {
  if (v.size() != g.vars()) throw DimensionMismatch("vector length does not match grading");
  if (v.isZero()) throw ZeroVectorError("cannot orient the zero vector");
  const Vec plus = positivePart(v);
  const Vec minus = negativePart(v);
  OrientedBinomial b;
  if (compareMonomials(plus, minus, g, o) == Ordering::GT) {
    b.vector = v;
    b.degree = checkedDot(g.weights, plus);
    b.leadMask = foldedSupportMask(plus);
  } else {
    b.vector = -v;
    b.degree = checkedDot(g.weights, minus);
    b.leadMask = foldedSupportMask(minus);
  }
  return b;
}

// x^{g+} divides x^m. Entries of g that are <= 0 impose no constraint since
// monomial exponents are nonnegative, so the whole test is one comparison.
inline bool leadDivides(const OrientedBinomial& g, const Vec& m) {
  return (g.vector.array() <= m.array()).all();
}

inline bool leadDividesMasked(const OrientedBinomial& g, const Vec& m, std::uint64_t mMask) {
  return (g.leadMask & ~mMask) == 0 && leadDivides(g, m);
}

// x^{g-} divides x^m.
inline bool tailDivides(const OrientedBinomial& g, const Vec& m) {
  return (g.vector.array() >= -m.array()).all();
}

}  // namespace latgb
