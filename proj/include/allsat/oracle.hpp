#ifndef ALLSAT_ORACLE_HPP
#define ALLSAT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "allsat/formula.hpp"
#include "allsat/row.hpp"

namespace allsat {

inline constexpr unsigned kDefaultOracleLimit = 24;

class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError(std::size_t t, unsigned limit)
      : std::runtime_error("oracle: " + std::to_string(t) + " variables exceed limit " +
                           std::to_string(limit)) {}
};

/// Dense set of assignments over t <= 32 variables; bit `mask` is set when
/// the assignment with packed value `mask` (bit v-1 = x_v) is a member.
class AssignmentSet {
 public:
  explicit AssignmentSet(std::size_t t);

  std::size_t num_vars() const { return t_; }
  std::uint64_t universe() const { return std::uint64_t{1} << t_; }
  bool contains(std::uint64_t mask) const { return (words_[mask >> 6] >> (mask & 63)) & 1u; }
  void insert(std::uint64_t mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
  std::uint64_t count() const;
  /// Smallest member of this set that is absent from `other`.
  std::optional<std::uint64_t> first_missing_from(const AssignmentSet& other) const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const AssignmentSet&, const AssignmentSet&) = default;

 private:
  std::size_t t_;
  std::vector<std::uint64_t> words_;
};

/// Mod(cnf) by exhaustive evaluation, split across threads by word ranges.
AssignmentSet brute_models(const Cnf& cnf, unsigned limit = kDefaultOracleLimit);
/// Single-threaded reference that evaluates through formula::eval.
AssignmentSet brute_models_serial(const Cnf& cnf, unsigned limit = kDefaultOracleLimit);

/// Members of `row` by testing every assignment in parallel.
AssignmentSet row_members(const Row& row, unsigned limit = kDefaultOracleLimit);
/// Reference: members via Row::for_each_member.
AssignmentSet row_members_serial(const Row& row, unsigned limit = kDefaultOracleLimit);

struct UnionResult {
  AssignmentSet members;
  /// First pair of rows found to overlap, if any.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
};

/// Union of the rows' members; rows are expanded in parallel and merged with
/// atomic word updates. The overlap pair is the serial reference's.
UnionResult disjoint_union(std::span<const Row> rows, std::size_t t,
                           unsigned limit = kDefaultOracleLimit);
UnionResult disjoint_union_serial(std::span<const Row> rows, std::size_t t,
                                  unsigned limit = kDefaultOracleLimit);

struct VerifyReport {
  bool disjoint = true;
  std::optional<std::pair<std::size_t, std::size_t>> overlapping_rows;
  bool covered = true;
  std::optional<std::string> missing_model;    // model of the formula not in any row
  std::optional<std::string> extra_assignment;  // row member that is not a model
  Count oracle_count = 0;
  Count solver_count = 0;

  bool passed() const { return disjoint && covered && oracle_count == solver_count; }
  std::string text() const;
  nlohmann::json to_json() const;
};

/// Checks that `rows` partition Mod(cnf) exactly.
VerifyReport check_partition(std::span<const Row> rows, const Cnf& cnf,
                             unsigned limit = kDefaultOracleLimit);

}  // namespace allsat

#endif  // ALLSAT_ORACLE_HPP
