/*   Copyright 2026 the fre-tools authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FRE_SOLVER_HPP
#define FRE_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fre/relation.hpp"

namespace fre {

/// Default tolerance for degree equality; inputs parsed from rounded
/// decimal text need a little slack, exact inputs do not.
inline constexpr double kDefaultTolerance = 1e-9;

/// Residuum of min on the unit interval: the largest x with min(x, a) <= b.
constexpr double min_residuum(double a, double b) noexcept {
  return a <= b ? 1.0 : b;
}

/**
 * An inverse max-min equation instance: find the single-row relation X
 * with X o system = target, where `system` is a known m-by-s relation and
 * `target` a known 1-by-s row over the same column labels.
 */
class FreProblem {
 public:
  FreProblem(FuzzyRelation system, FuzzyRelation target,
             double tolerance = kDefaultTolerance);

  const FuzzyRelation& system() const noexcept { return system_; }
  const FuzzyRelation& target() const noexcept { return target_; }
  double tolerance() const noexcept { return tolerance_; }

  /// Number of unknown components (rows of the system).
  std::size_t unknown_count() const noexcept { return system_.row_count(); }
  /// Number of simultaneous equations (columns of the system).
  std::size_t equation_count() const noexcept { return system_.col_count(); }

 private:
  FuzzyRelation system_;
  FuzzyRelation target_;
  double tolerance_;
};

/**
 * Outcome of the solvability decision.
 *
 * `violated_columns` lists every column whose target exceeds the column
 * maximum of the system; any such column already rules out a solution.
 * `residual_check_passed` records whether the residuum candidate composes
 * back to the target, which is necessary and sufficient, so `solvable`
 * always equals it.
 */
struct SolvabilityVerdict {
  bool solvable = false;
  std::vector<std::string> violated_columns;
  bool residual_check_passed = false;

  friend bool operator==(const SolvabilityVerdict&, const SolvabilityVerdict&) = default;
};

/**
 * Full characterization of the solution set of an inverse instance:
 * every solution lies between some minimal solution and the greatest one.
 * Minimal rows are sorted lexicographically by degree sequence.
 */
struct SolutionSet {
  SolvabilityVerdict verdict;
  std::optional<FuzzyRelation> greatest;
  std::vector<FuzzyRelation> minimals;

  bool solvable() const noexcept { return verdict.solvable; }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Hard bound on instance dimensions for minimal-solution enumeration;
/// the witness search is exponential in the worst case.
struct EnumerationCap {
  std::size_t max_unknowns = 12;
  std::size_t max_equations = 12;
};

/// Thrown when an instance exceeds the enumeration cap.  Never a silent
/// truncation: callers either raise the cap or give up.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * True iff the single-row relation @p row satisfies
 * |(row o system)_k - target_k| <= tolerance for every column k.
 * Row labels are not compared; column alignment is.
 */
bool is_solution(const FuzzyRelation& row, const FuzzyRelation& system,
                 const FuzzyRelation& target, double tolerance = kDefaultTolerance);

/**
 * The componentwise-greatest solution, when one exists.
 *
 * The candidate row has component j equal to the minimum over columns k of
 * min_residuum(system(j, k), target_k).  The candidate solves the system
 * iff any row does; when it fails the instance is unsolvable and
 * std::nullopt is returned.
 */
std::optional<FuzzyRelation> greatest_solution(const FreProblem& problem);

/// Decide solvability; see SolvabilityVerdict.
SolvabilityVerdict check_solvable(const FreProblem& problem);

/**
 * All minimal solutions, deduplicated and pairwise incomparable, sorted
 * lexicographically by degree sequence.  Empty when the instance is
 * unsolvable.
 *
 * Candidates are built from witness choices: for each column k with a
 * positive target, the witness set holds every row index j at which the
 * greatest solution attains the target, min(greatest_j, system(j, k)) =
 * target_k.  Each choice of one witness per column yields the candidate
 * whose component j is the largest target among columns that chose j
 * (0 when none did).  Candidates that fail to solve the system or that
 * dominate another candidate are discarded.
 *
 * Throws EnumerationCapError when the instance dimensions exceed @p cap.
 */
std::vector<FuzzyRelation> minimal_solutions(const FreProblem& problem,
                                             EnumerationCap cap = {});

/// Bundle check_solvable, greatest_solution and minimal_solutions into a
/// consistent SolutionSet.
SolutionSet solve(const FreProblem& problem, EnumerationCap cap = {});

/**
 * Result of testing a row against a solved instance.  When the row is a
 * member, the characterization places it between some reported minimal
 * and the greatest solution; both positions are reported.
 */
struct MembershipCheck {
  bool member = false;
  /// member implies the row is componentwise <= the greatest solution.
  bool within_greatest = false;
  /// Index into SolutionSet::minimals of a minimal the row dominates.
  std::optional<std::size_t> dominated_minimal;
};

/// Test @p row for membership in the solution set of @p problem and
/// report its position between the bounds of @p solset.
MembershipCheck solution_set_contains(const SolutionSet& solset, const FuzzyRelation& row,
                                      const FreProblem& problem);

}  // namespace fre

#endif  // FRE_SOLVER_HPP
