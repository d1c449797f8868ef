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

#ifndef FRE_RELATION_HPP
#define FRE_RELATION_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fre {

/**
 * A membership degree: one value in the unit interval.
 *
 * Out-of-range values (including NaN) are rejected at construction;
 * nothing is ever clamped.
 */
class Degree {
 public:
  constexpr Degree() = default;
  explicit Degree(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

 private:
  double value_ = 0.0;
};

/**
 * An ordered set of distinct, non-empty text labels.
 *
 * Order is significant and preserved; two label sets are equal only when
 * they hold the same labels in the same order.
 */
class LabelSet {
 public:
  explicit LabelSet(std::vector<std::string> labels);
  LabelSet(std::initializer_list<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Position of @p label, or std::nullopt when absent.
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  std::vector<std::string>::const_iterator begin() const { return labels_.begin(); }
  std::vector<std::string>::const_iterator end() const { return labels_.end(); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/** A fuzzy set: one membership degree per label of a finite domain. */
class FuzzySet {
 public:
  FuzzySet(LabelSet domain, std::vector<Degree> degrees);

  /// Validating constructor from raw values.
  static FuzzySet from_values(LabelSet domain, const std::vector<double>& values);

  const LabelSet& domain() const noexcept { return domain_; }
  std::span<const Degree> degrees() const noexcept { return degrees_; }
  Degree at(std::size_t i) const;
  std::size_t size() const noexcept { return degrees_.size(); }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  LabelSet domain_;
  std::vector<Degree> degrees_;
};

/**
 * A fuzzy binary relation between two labeled finite sets, stored as a
 * row-major membership matrix.  Entries are immutable after construction.
 */
class FuzzyRelation {
 public:
  FuzzyRelation(LabelSet row_labels, LabelSet col_labels, std::vector<Degree> entries);

  /// Validating constructor from a rectangular grid of raw values.
  static FuzzyRelation from_grid(LabelSet row_labels, LabelSet col_labels,
                                 const std::vector<std::vector<double>>& grid);

  const LabelSet& row_labels() const noexcept { return row_labels_; }
  const LabelSet& col_labels() const noexcept { return col_labels_; }
  std::size_t row_count() const noexcept { return row_labels_.size(); }
  std::size_t col_count() const noexcept { return col_labels_.size(); }

  Degree at(std::size_t row, std::size_t col) const;
  std::span<const Degree> row(std::size_t i) const;
  std::span<const Degree> entries() const noexcept { return entries_; }

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  LabelSet row_labels_;
  LabelSet col_labels_;
  std::vector<Degree> entries_;
};

/**
 * Max-min composition.  The left operand's column labels must equal the
 * right operand's row labels (same labels, same order); the result entry
 * at (i, j) is the maximum over k of min(left(i, k), right(k, j)).
 *
 * Max and min only select existing entries, so composition is exact:
 * no rounding is introduced.
 */
FuzzyRelation compose_maxmin(const FuzzyRelation& left, const FuzzyRelation& right);

/// Square relation with degree 1 on the diagonal and 0 elsewhere; the
/// neutral element of max-min composition.
FuzzyRelation identity_relation(const LabelSet& labels);

/**
 * Componentwise partial order: true iff every entry of @p a is <= the
 * corresponding entry of @p b.  Both label sets must match.
 */
bool relation_leq(const FuzzyRelation& a, const FuzzyRelation& b);

/// View a fuzzy set as a single-row relation.
FuzzyRelation fuzzyset_as_row(const FuzzySet& set, std::string row_label = "M");

/// Inverse of fuzzyset_as_row; requires a relation with exactly one row.
FuzzySet row_as_fuzzyset(const FuzzyRelation& row);

}  // namespace fre

#endif  // FRE_RELATION_HPP
