#pragma once

#include "latgb/algebra.hpp"
#include "latgb/reduction.hpp"

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace latgb {

/// Critical pair: the difference vector of the two parents together with the
/// degree of the lcm of their leading monomials. The saturated content
/// bin(diff) can have strictly smaller degree than sdegree; that gap is the
/// formation drop.
struct SPair {
  Vec diff;
  Int sdegree = 0;
  std::int32_t parentOld = -1;
  std::int32_t parentNew = -1;
};

enum class Mode {
  // Input generates a lattice ideal: any degree drop during reduction means
  // the element is already covered below and is discarded immediately.
  Saturated,
  // No saturation assumption: reductions run to a full normal form and a
  // nonzero result below its extraction degree is returned as a witness.
  Check
};

struct DegreeStats {
  Int degree = 0;
  std::int64_t added = 0;
  std::int64_t pairsConsidered = 0;
  std::int64_t spairsEnqueued = 0;
  std::int64_t prunedCoprime = 0;
  std::int64_t prunedGm = 0;
  std::int64_t zeroReductions = 0;
  std::int64_t basisTotal = 0;  // cumulative basis size once the degree completes
};

struct RunStats {
  // One entry per extraction degree that saw activity, in increasing order.
  // On a witness halt the last entry is a partial snapshot of the halt
  // degree.
  std::vector<DegreeStats> perDegree;
  std::int64_t duplicatesDropped = 0;
  std::int64_t spairReductions = 0;
  std::int64_t dropDiscards = 0;
  double wallSeconds = 0.0;

  const DegreeStats* find(Int degree) const {
    for (const auto& d : perDegree)
      if (d.degree == degree) return &d;
    return nullptr;
  }
  std::int64_t totalAdded() const { return sum(&DegreeStats::added); }
  std::int64_t totalSpairsEnqueued() const { return sum(&DegreeStats::spairsEnqueued); }
  std::int64_t totalPrunedCoprime() const { return sum(&DegreeStats::prunedCoprime); }
  std::int64_t totalPrunedGm() const { return sum(&DegreeStats::prunedGm); }
  std::int64_t totalZeroReductions() const { return sum(&DegreeStats::zeroReductions); }
  std::int64_t totalPairsConsidered() const { return sum(&DegreeStats::pairsConsidered); }

 private:
  std::int64_t sum(std::int64_t DegreeStats::* field) const {
    std::int64_t total = 0;
    for (const auto& d : perDegree) total += d.*field;
    return total;
  }
};

struct CompletedGB {
  std::vector<OrientedBinomial> basis;
};

struct TruncatedGB {
  std::vector<OrientedBinomial> basis;
  Int bound = 0;
};

struct NotSaturated {
  OrientedBinomial witness;      // fully reduced, degree < extractedDegree
  Int extractedDegree = 0;
  OrientedBinomial preReduction;  // the extracted element before division
  std::vector<OrientedBinomial> basisAtHalt;
};

using RunOutcome = std::variant<CompletedGB, TruncatedGB, NotSaturated>;

const std::vector<OrientedBinomial>& basisOf(const RunOutcome& outcome);

using DegreeCallback = std::function<void(const DegreeStats&)>;

struct EngineOptions {
  Mode mode = Mode::Check;
  // Process only items of extraction degree < maxDegree; the result is a
  // minimal maxDegree-truncated basis.
  std::optional<Int> maxDegree;
  // Coprime skip plus antichain minimization of the lcm quotients. Disabling
  // enqueues every pair; the final basis is unchanged, only more S-pairs get
  // reduced.
  bool prune = true;
  DegreeCallback onDegreeComplete;
};

struct RunResult {
  RunOutcome outcome;
  RunStats stats;
};

struct PairUpdateCounts {
  std::int64_t considered = 0;
  std::int64_t enqueued = 0;
  std::int64_t prunedCoprime = 0;
  std::int64_t prunedGm = 0;
};

/// Critical pairs of the newest basis element against all older ones, pruned
/// by the coprimality criterion and by antichain minimization of the lcm
/// quotients a_i = v_i+ v v_m+ - v_m+ (the retained quotients are mutually
/// incomparable under componentwise <=).
std::vector<SPair> updateSpairs(std::span<const OrientedBinomial> basis, std::size_t newest,
                                const Grading& grading, bool prune, PairUpdateCounts& counts);

/// Degree-by-degree Buchberger driver over the merged pool of unprocessed
/// generators (keyed by binomial degree) and S-pairs (keyed by sdegree).
/// Extraction keys are nondecreasing, so whenever an item with key d is
/// extracted the basis restricted to degrees < d is a minimal d-truncated
/// basis of the input ideal.
RunResult buchberger(std::span<const Vec> generators, const Grading& grading, const TermOrder& order,
                     const EngineOptions& options = {});

using WitnessCallback = std::function<void(const NotSaturated&)>;

struct SaturationResult {
  RunOutcome finalOutcome;
  std::vector<NotSaturated> witnesses;
  std::vector<RunStats> runs;
};

/// Iterated saturation: run in check mode, append each witness to the
/// generators and restart, until a run completes. The final basis generates
/// the lattice ideal of the lattice spanned by the input vectors.
SaturationResult saturate(std::vector<Vec> generators, const Grading& grading, const TermOrder& order,
                          const EngineOptions& base = {}, const WitnessCallback& onWitness = {});

/// Tail-reduce every element of a minimal basis modulo the leading terms of
/// the others. Leading terms are untouched and the result is independent of
/// processing order.
std::vector<OrientedBinomial> interreduce(std::vector<OrientedBinomial> basis, const Grading& grading,
                                          const TermOrder& order);

/// Ideal membership of bin(v) by ordinary (non-sat) reduction of its two
/// monomials. Valid against a d-truncated basis only for degrees below d.
bool membership(const Vec& v, std::span<const OrientedBinomial> basis, const Grading& grading,
                const TermOrder& order, std::optional<Int> truncationBound = std::nullopt);

}  // namespace latgb
