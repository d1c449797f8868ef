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

#include "fre/relation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace fre {

Degree::Degree(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("membership degree " + std::to_string(value) +
                                " outside [0, 1]");
  }
}

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("label set must not be empty");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw std::invalid_argument("labels must not be empty strings");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate label '" + label + "'");
    }
  }
}

LabelSet::LabelSet(std::initializer_list<std::string> labels)
    : LabelSet(std::vector<std::string>(labels)) {}

std::optional<std::size_t> LabelSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

bool LabelSet::contains(std::string_view label) const {
  return index_of(label).has_value();
}

FuzzySet::FuzzySet(LabelSet domain, std::vector<Degree> degrees)
    : domain_(std::move(domain)), degrees_(std::move(degrees)) {
  if (degrees_.size() != domain_.size()) {
    throw std::invalid_argument("fuzzy set has " + std::to_string(degrees_.size()) +
                                " degrees for " + std::to_string(domain_.size()) +
                                " labels");
  }
}

FuzzySet FuzzySet::from_values(LabelSet domain, const std::vector<double>& values) {
  std::vector<Degree> degrees;
  degrees.reserve(values.size());
  for (double v : values) {
    degrees.emplace_back(v);
  }
  return FuzzySet(std::move(domain), std::move(degrees));
}

Degree FuzzySet::at(std::size_t i) const {
  if (i >= degrees_.size()) {
    throw std::out_of_range("fuzzy set index " + std::to_string(i) + " out of range");
  }
  return degrees_[i];
}

FuzzyRelation::FuzzyRelation(LabelSet row_labels, LabelSet col_labels,
                             std::vector<Degree> entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
  const std::size_t expected = row_labels_.size() * col_labels_.size();
  if (entries_.size() != expected) {
    throw std::invalid_argument("relation needs " + std::to_string(expected) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

FuzzyRelation FuzzyRelation::from_grid(LabelSet row_labels, LabelSet col_labels,
                                       const std::vector<std::vector<double>>& grid) {
  if (grid.size() != row_labels.size()) {
    throw std::invalid_argument("grid has " + std::to_string(grid.size()) +
                                " rows for " + std::to_string(row_labels.size()) +
                                " row labels");
  }
  std::vector<Degree> entries;
  entries.reserve(row_labels.size() * col_labels.size());
  for (const auto& grid_row : grid) {
    if (grid_row.size() != col_labels.size()) {
      throw std::invalid_argument("grid row has " + std::to_string(grid_row.size()) +
                                  " entries for " + std::to_string(col_labels.size()) +
                                  " column labels");
    }
    for (double v : grid_row) {
      entries.emplace_back(v);
    }
  }
  return FuzzyRelation(std::move(row_labels), std::move(col_labels), std::move(entries));
}

Degree FuzzyRelation::at(std::size_t row, std::size_t col) const {
  if (row >= row_count() || col >= col_count()) {
    throw std::out_of_range("relation index (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  }
  return entries_[row * col_count() + col];
}

std::span<const Degree> FuzzyRelation::row(std::size_t i) const {
  if (i >= row_count()) {
    throw std::out_of_range("relation row " + std::to_string(i) + " out of range");
  }
  return std::span<const Degree>(entries_).subspan(i * col_count(), col_count());
}

FuzzyRelation compose_maxmin(const FuzzyRelation& left, const FuzzyRelation& right) {
  if (left.col_labels() != right.row_labels()) {
    throw std::invalid_argument(
        "inner label sets differ: left columns do not match right rows");
  }
  const std::size_t rows = left.row_count();
  const std::size_t cols = right.col_count();
  const std::size_t inner = left.col_count();
  std::vector<Degree> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto left_row = left.row(i);
    for (std::size_t j = 0; j < cols; ++j) {
      double best = 0.0;
      for (std::size_t k = 0; k < inner; ++k) {
        best = std::max(best, std::min(left_row[k].value(), right.at(k, j).value()));
      }
      entries.emplace_back(best);
    }
  }
  return FuzzyRelation(left.row_labels(), right.col_labels(), std::move(entries));
}

FuzzyRelation identity_relation(const LabelSet& labels) {
  const std::size_t n = labels.size();
  std::vector<Degree> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = Degree(1.0);
  }
  return FuzzyRelation(labels, labels, std::move(entries));
}

bool relation_leq(const FuzzyRelation& a, const FuzzyRelation& b) {
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels()) {
    throw std::invalid_argument("relation_leq requires identical label sets");
  }
  const auto lhs = a.entries();
  const auto rhs = b.entries();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].value() > rhs[i].value()) {
      return false;
    }
  }
  return true;
}

FuzzyRelation fuzzyset_as_row(const FuzzySet& set, std::string row_label) {
  std::vector<Degree> entries(set.degrees().begin(), set.degrees().end());
  return FuzzyRelation(LabelSet({std::move(row_label)}), set.domain(), std::move(entries));
}

FuzzySet row_as_fuzzyset(const FuzzyRelation& row) {
  if (row.row_count() != 1) {
    throw std::invalid_argument("expected a single-row relation, got " +
                                std::to_string(row.row_count()) + " rows");
  }
  std::vector<Degree> degrees(row.row(0).begin(), row.row(0).end());
  return FuzzySet(row.col_labels(), std::move(degrees));
}

}  // namespace fre
