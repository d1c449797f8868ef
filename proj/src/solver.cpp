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

#include "fre/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace fre {

namespace {

std::vector<double> row_values(const FuzzyRelation& rel, std::size_t i) {
  std::vector<double> out;
  out.reserve(rel.col_count());
  for (Degree d : rel.row(i)) {
    out.push_back(d.value());
  }
  return out;
}

// out_k = max_j min(row_j, system(j, k))
std::vector<double> compose_row(const std::vector<double>& row,
                                const FuzzyRelation& system) {
  std::vector<double> out(system.col_count(), 0.0);
  for (std::size_t k = 0; k < system.col_count(); ++k) {
    double best = 0.0;
    for (std::size_t j = 0; j < system.row_count(); ++j) {
      best = std::max(best, std::min(row[j], system.at(j, k).value()));
    }
    out[k] = best;
  }
  return out;
}

bool matches_target(const std::vector<double>& composed, const FuzzyRelation& target,
                    double tolerance) {
  for (std::size_t k = 0; k < composed.size(); ++k) {
    if (std::abs(composed[k] - target.at(0, k).value()) > tolerance) {
      return false;
    }
  }
  return true;
}

std::vector<double> residuum_candidate(const FuzzyRelation& system,
                                       const FuzzyRelation& target) {
  std::vector<double> candidate(system.row_count(), 1.0);
  for (std::size_t j = 0; j < system.row_count(); ++j) {
    for (std::size_t k = 0; k < system.col_count(); ++k) {
      candidate[j] = std::min(
          candidate[j], min_residuum(system.at(j, k).value(), target.at(0, k).value()));
    }
  }
  return candidate;
}

FuzzyRelation values_as_row(const std::vector<double>& values, const FreProblem& problem) {
  std::vector<Degree> degrees;
  degrees.reserve(values.size());
  for (double v : values) {
    degrees.emplace_back(v);
  }
  return FuzzyRelation(problem.target().row_labels(), problem.system().row_labels(),
                       std::move(degrees));
}

bool componentwise_leq(std::span<const Degree> a, std::span<const Degree> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].value() > b[i].value()) {
      return false;
    }
  }
  return true;
}

void validate_row_shape(const FuzzyRelation& row, const FuzzyRelation& system) {
  if (row.row_count() != 1) {
    throw std::invalid_argument("candidate must be a single-row relation, got " +
                                std::to_string(row.row_count()) + " rows");
  }
  if (row.col_labels() != system.row_labels()) {
    throw std::invalid_argument(
        "candidate columns do not match the system's row labels");
  }
}

}  // namespace

FreProblem::FreProblem(FuzzyRelation system, FuzzyRelation target, double tolerance)
    : system_(std::move(system)), target_(std::move(target)), tolerance_(tolerance) {
  if (target_.row_count() != 1) {
    throw std::invalid_argument("target must be a single-row relation, got " +
                                std::to_string(target_.row_count()) + " rows");
  }
  if (system_.col_labels() != target_.col_labels()) {
    throw std::invalid_argument("system and target column labels differ");
  }
  if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
    throw std::invalid_argument("tolerance must be a finite non-negative number");
  }
}

bool is_solution(const FuzzyRelation& row, const FuzzyRelation& system,
                 const FuzzyRelation& target, double tolerance) {
  validate_row_shape(row, system);
  if (target.row_count() != 1 || system.col_labels() != target.col_labels()) {
    throw std::invalid_argument("system and target column labels differ");
  }
  return matches_target(compose_row(row_values(row, 0), system), target, tolerance);
}

std::optional<FuzzyRelation> greatest_solution(const FreProblem& problem) {
  const auto candidate = residuum_candidate(problem.system(), problem.target());
  if (!matches_target(compose_row(candidate, problem.system()), problem.target(),
                      problem.tolerance())) {
    return std::nullopt;
  }
  return values_as_row(candidate, problem);
}

SolvabilityVerdict check_solvable(const FreProblem& problem) {
  SolvabilityVerdict verdict;
  const auto& system = problem.system();
  const auto& target = problem.target();
  for (std::size_t k = 0; k < system.col_count(); ++k) {
    double column_max = 0.0;
    for (std::size_t j = 0; j < system.row_count(); ++j) {
      column_max = std::max(column_max, system.at(j, k).value());
    }
    if (column_max < target.at(0, k).value() - problem.tolerance()) {
      verdict.violated_columns.push_back(system.col_labels()[k]);
    }
  }
  const auto candidate = residuum_candidate(system, target);
  verdict.residual_check_passed =
      matches_target(compose_row(candidate, system), target, problem.tolerance());
  verdict.solvable = verdict.residual_check_passed;
  return verdict;
}

std::vector<FuzzyRelation> minimal_solutions(const FreProblem& problem,
                                             EnumerationCap cap) {
  const std::size_t m = problem.unknown_count();
  const std::size_t s = problem.equation_count();
  if (m > cap.max_unknowns || s > cap.max_equations) {
    throw EnumerationCapError("instance size " + std::to_string(m) + "x" +
                              std::to_string(s) + " exceeds the enumeration cap " +
                              std::to_string(cap.max_unknowns) + "x" +
                              std::to_string(cap.max_equations));
  }

  const auto greatest = residuum_candidate(problem.system(), problem.target());
  const double tol = problem.tolerance();
  if (!matches_target(compose_row(greatest, problem.system()), problem.target(), tol)) {
    return {};
  }

  // Witness sets of the constrained columns.  Columns whose target is
  // (within tolerance of) zero impose only upper bounds, which the
  // greatest solution already carries.
  struct Constraint {
    double target;
    std::vector<std::size_t> witnesses;
  };
  std::vector<Constraint> constraints;
  for (std::size_t k = 0; k < s; ++k) {
    const double target_k = problem.target().at(0, k).value();
    if (target_k <= tol) {
      continue;
    }
    Constraint c{target_k, {}};
    for (std::size_t j = 0; j < m; ++j) {
      const double attained = std::min(greatest[j], problem.system().at(j, k).value());
      if (std::abs(attained - target_k) <= tol) {
        c.witnesses.push_back(j);
      }
    }
    // The greatest solution attains every column target, so at least one
    // witness exists for each constrained column.
    constraints.push_back(std::move(c));
  }

  // One candidate per choice function, deduplicating after every column;
  // identical partial rows have identical continuations.
  std::set<std::vector<double>> candidates{std::vector<double>(m, 0.0)};
  for (const auto& c : constraints) {
    std::set<std::vector<double>> next;
    for (const auto& partial : candidates) {
      for (std::size_t j : c.witnesses) {
        auto extended = partial;
        extended[j] = std::max(extended[j], c.target);
        next.insert(std::move(extended));
      }
    }
    candidates = std::move(next);
  }

  std::vector<std::vector<double>> feasible;
  for (const auto& candidate : candidates) {
    if (matches_target(compose_row(candidate, problem.system()), problem.target(), tol)) {
      feasible.push_back(candidate);
    }
  }

  // Keep the minimal elements only.
  auto leq = [](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::vector<double>> minimal;
  for (const auto& candidate : feasible) {
    bool dominated = false;
    for (const auto& other : feasible) {
      if (other != candidate && leq(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      minimal.push_back(candidate);
    }
  }

  std::sort(minimal.begin(), minimal.end());
  std::vector<FuzzyRelation> out;
  out.reserve(minimal.size());
  for (const auto& values : minimal) {
    out.push_back(values_as_row(values, problem));
  }
  return out;
}

SolutionSet solve(const FreProblem& problem, EnumerationCap cap) {
  SolutionSet result;
  result.verdict = check_solvable(problem);
  if (result.verdict.solvable) {
    result.greatest = greatest_solution(problem);
    result.minimals = minimal_solutions(problem, cap);
  }
  return result;
}

MembershipCheck solution_set_contains(const SolutionSet& solset, const FuzzyRelation& row,
                                      const FreProblem& problem) {
  MembershipCheck check;
  check.member = is_solution(row, problem.system(), problem.target(), problem.tolerance());
  if (!check.member) {
    return check;
  }
  if (solset.greatest.has_value()) {
    check.within_greatest = componentwise_leq(row.row(0), solset.greatest->row(0));
  }
  for (std::size_t i = 0; i < solset.minimals.size(); ++i) {
    if (componentwise_leq(solset.minimals[i].row(0), row.row(0))) {
      check.dominated_minimal = i;
      break;
    }
  }
  return check;
}

}  // namespace fre
