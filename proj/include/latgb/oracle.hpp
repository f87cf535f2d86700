#pragma once

#include "latgb/algebra.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace latgb {

struct OrientedBinomial;

inline constexpr std::size_t kDefaultEnumerationCeiling = 100000;

/// All monomial exponent vectors of the given degree, term-order descending.
/// Aborts with ResourceLimitError when the count exceeds the ceiling.
std::vector<Vec> enumerateMonomials(Int degree, const Grading& grading, const TermOrder& order,
                                    std::size_t ceiling = kDefaultEnumerationCeiling);

/// Degree-s monomials of the initial ideal, computed independently of any
/// division: exact fraction-free elimination of the matrix of all monomial
/// multiples of the generators at degree s, with columns sorted term-order
/// descending so that pivot columns are literally the initial monomials.
struct InitialIdealSlice {
  Int degree = 0;
  std::vector<Vec> monomials;  // term-order descending
};

std::vector<InitialIdealSlice> truncatedInitialOracle(std::span<const Vec> generators,
                                                      const Grading& grading, const TermOrder& order,
                                                      Int bound,
                                                      std::size_t ceiling = kDefaultEnumerationCeiling);

/// Degree-s monomials divisible by some leading term of the basis, in the
/// same order as the oracle slices; the two must agree below a truncation
/// bound.
std::vector<Vec> leadingTermSlice(std::span<const OrientedBinomial> basis, const Grading& grading,
                                  const TermOrder& order, Int degree,
                                  std::size_t ceiling = kDefaultEnumerationCeiling);

/// Echelonized row space of one degree slice of the ideal generated by the
/// given vectors; answers exact span-membership queries for binomials
/// x^plus - x^minus of that degree.
class SliceSpan {
 public:
  SliceSpan(std::span<const Vec> generators, const Grading& grading, const TermOrder& order, Int degree,
            std::size_t ceiling = kDefaultEnumerationCeiling);

  bool contains(const Vec& plus, const Vec& minus) const;
  Int degree() const { return degree_; }

 private:
  Int degree_ = 0;
  std::vector<Vec> columns_;
  Mat echelon_;
  std::vector<Eigen::Index> pivotColumns_;

  Eigen::Index columnIndex(const Vec& monomial) const;
};

/// Monomial map matrix for the three-way model: rows indexed by the u_{ij},
/// v_{ik}, w_{jk} variables in that block order, columns by x_{ijk} in
/// lexicographic (i, j, k) order; column (i, j, k) has ones exactly at
/// u_{ij}, v_{ik}, w_{jk}.
struct ToricMap {
  Mat matrix;
  Eigen::Index dimI = 0;
  Eigen::Index dimJ = 0;
  Eigen::Index dimK = 0;
};

ToricMap buildToricMatrix(Eigen::Index I, Eigen::Index J, Eigen::Index K);

/// True iff A v = 0, i.e. bin(v) lies in the kernel of the monomial map.
bool toricKernelContains(const ToricMap& map, const Vec& v);

/// True iff v is an integer combination of the basis vectors, decided by
/// exact integer row reduction.
bool latticeContains(std::span<const Vec> basis, const Vec& v);

}  // namespace latgb
