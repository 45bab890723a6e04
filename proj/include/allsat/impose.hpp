#ifndef ALLSAT_IMPOSE_HPP
#define ALLSAT_IMPOSE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/row.hpp"

namespace allsat {

/// The part of a clause that still matters on a row: positive positions not
/// fixed to 0 and negative positions not fixed to 1.
struct Restriction {
  std::vector<Var> pos;
  std::vector<Var> neg;
  bool empty() const { return pos.empty() && neg.empty(); }
};

/// nullopt when the row fulfills the clause.
std::optional<Restriction> restrict_clause(const Row& row, const Clause& clause);

/// Trace of a position set on one wildcard group, or on the row's free (2)
/// positions when group is empty.
struct Chunk {
  std::optional<std::size_t> group;
  std::vector<Var> trace;
  std::vector<Var> remainder;

  bool is_free() const { return !group.has_value(); }
  friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// Chunks of `positions`, ordered by trace size, then by smallest trace
/// position. Every position
/// must hold 2 or a wildcard.
std::vector<Chunk> chunks(const Row& row, std::span<const Var> positions);

/// Disjoint sons covering the members of `row` with a 1 somewhere in
/// `positions`. Throws std::invalid_argument if positions is empty.
std::vector<Row> impose_positive(const Row& row, std::span<const Var> positions);
/// Dual: members with a 0 somewhere in `positions`.
std::vector<Row> impose_negative(const Row& row, std::span<const Var> positions);

/// The members of `row` with a 1 at every position of `forced`, as a single
/// row, or nullopt if there are none.
std::optional<Row> force_ones(const Row& row, std::span<const Var> forced);

/// Row decorated for display while a mixed clause is split. Type A: at least
/// one 0 on a barred position. Type B: 1s on all encircled positions and at
/// least one 1 on a starred one. Type C: starred only.
struct OverloadedRow {
  enum class Type { A, B, C };
  Type type;
  Row base;
  std::vector<Var> barred;
  std::vector<Var> encircled;
  std::vector<Var> starred;

  /// Row text with barred tokens prefixed by '~', encircled ones wrapped in
  /// parentheses and starred ones suffixed by '*'.
  std::string text() const;
};

struct ImposeResult {
  std::vector<Row> sons;
  /// Filled for mixed clauses only: the Type A row, the Type B row and, when
  /// forcing the encircled positions left members, the Type C row.
  std::vector<OverloadedRow> overloaded;
};

/// Replaces `row` by disjoint sons whose union is exactly its members that
/// satisfy `clause`. Precondition: !row.fulfills(clause), otherwise throws
/// std::invalid_argument.
ImposeResult impose_clause(const Row& row, const Clause& clause);

}  // namespace allsat

#endif  // ALLSAT_IMPOSE_HPP
