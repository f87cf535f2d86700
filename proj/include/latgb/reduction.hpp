#pragma once

#include "latgb/algebra.hpp"

#include <optional>
#include <span>

namespace latgb {

// Division with sat steps fused in: every subtraction of reducer vectors is
// immediately re-expressed as a saturated difference vector, so common
// monomial factors never materialize. A strict decrease of the binomial
// degree across one fused step is a "drop".
enum class ReductionPolicy {
  FullNormalForm,   // run until both monomials are irreducible
  StopAtDegreeDrop  // abandon the division at the first drop
};

struct DropTrace {
  Vec before;
  Int degreeBefore = 0;
  Int degreeAfter = 0;
};

struct ReductionResult {
  // Empty means the input reduced to zero; zero takes precedence over drop
  // reporting.
  std::optional<OrientedBinomial> normalForm;
  bool dropped = false;
  std::optional<DropTrace> firstDrop;
  bool stoppedEarly = false;

  bool isZero() const { return !normalForm.has_value(); }
};

/// First basis element (in scan order) whose leading monomial divides m.
inline std::optional<std::size_t> findReducer(const Vec& m, std::span<const OrientedBinomial> basis) {
  const std::uint64_t mask = foldedSupportMask(m);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (leadDividesMasked(basis[i], m, mask)) return i;
  return std::nullopt;
}

/// One leading-term sat-reduction step of u by g (requires g+ <= u+): returns
/// the difference vector w = u - g and whether the step strictly lowered the
/// binomial degree. A zero w reports dropped = false.
inline std::pair<Vec, bool> satReduceStep(const OrientedBinomial& u, const OrientedBinomial& g,
                                          const Grading& grading, const TermOrder& order) {
  Vec w = checkedDiff(u.vector, g.vector);
  if (w.isZero()) return {std::move(w), false};
  const Int degree = orient(w, grading, order).degree;
  return {std::move(w), degree < u.degree};
}

/// Full sat-reduction normal form of bin(v) modulo basis. Leading-term
/// reductions are preferred over tail reductions; within each, basis is
/// scanned in insertion order (nondecreasing degree) and the first match
/// wins. referenceDegree, when given, marks the result as dropped if already
/// the oriented input lies strictly below it; the engine uses this to fold
/// S-pair formation drops into the division's drop flag.
inline ReductionResult satNormalForm(const Vec& v, std::span<const OrientedBinomial> basis,
                                     const Grading& grading, const TermOrder& order,
                                     ReductionPolicy policy = ReductionPolicy::FullNormalForm,
                                     std::optional<Int> referenceDegree = std::nullopt) {
  ReductionResult result;
  if (v.isZero()) return result;
  binomialDegree(v, grading);  // rejects inhomogeneous input

  OrientedBinomial current = orient(v, grading, order);
  if (referenceDegree && current.degree < *referenceDegree) {
    result.dropped = true;
    result.firstDrop = DropTrace{v, *referenceDegree, current.degree};
    if (policy == ReductionPolicy::StopAtDegreeDrop) {
      result.normalForm = std::move(current);
      result.stoppedEarly = true;
      return result;
    }
  }

  for (;;) {
    Vec next;
    if (auto lead = findReducer(positivePart(current.vector), basis)) {
      next = checkedDiff(current.vector, basis[*lead].vector);
    } else if (auto tail = findReducer(negativePart(current.vector), basis)) {
      // Reducing the trailing monomial of bin(u) by bin(g) yields bin(u + g).
      next = checkedSum(current.vector, basis[*tail].vector);
    } else {
      break;
    }
    if (next.isZero()) {
      result.normalForm.reset();
      return result;
    }
    OrientedBinomial reduced = orient(next, grading, order);
    if (reduced.degree < current.degree) {
      if (!result.dropped) {
        result.dropped = true;
        result.firstDrop = DropTrace{current.vector, current.degree, reduced.degree};
      }
      if (policy == ReductionPolicy::StopAtDegreeDrop) {
        result.normalForm = std::move(reduced);
        result.stoppedEarly = true;
        return result;
      }
    }
    current = std::move(reduced);
  }
  result.normalForm = std::move(current);
  return result;
}

/// Ordinary (non-sat) normal form of a monomial: each step replaces x^m by
/// x^{m - g+ + g-}, which stays a monomial and strictly descends in the term
/// order. Used for ideal membership, where sat steps would change the
/// question being asked.
inline Vec monomialNormalForm(Vec m, std::span<const OrientedBinomial> basis) {
  for (;;) {
    const auto reducer = findReducer(m, basis);
    if (!reducer) return m;
    m = checkedDiff(m, basis[*reducer].vector);
  }
}

}  // namespace latgb
