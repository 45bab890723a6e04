#ifndef ALLSAT_ROW_HPP
#define ALLSAT_ROW_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "allsat/formula.hpp"

namespace allsat {

/// Exact model counts; rows over hundreds of variables overflow 64 bits.
using Count = boost::multiprecision::cpp_int;

enum class SymbolKind : std::uint8_t { Zero, One, Two, E, N, M };

constexpr bool is_wildcard(SymbolKind k) {
  return k == SymbolKind::E || k == SymbolKind::N || k == SymbolKind::M;
}

struct Symbol {
  SymbolKind kind = SymbolKind::Two;
  /// Group index for E/N/M symbols, ignored otherwise. Inside Row::build this
  /// is an arbitrary tag; in a built Row it indexes Row::groups().
  std::uint32_t group = 0;

  static constexpr Symbol zero() { return {SymbolKind::Zero, 0}; }
  static constexpr Symbol one() { return {SymbolKind::One, 0}; }
  static constexpr Symbol two() { return {SymbolKind::Two, 0}; }
  static constexpr Symbol wild(SymbolKind k, std::uint32_t tag) { return {k, tag}; }

  bool wildcard() const { return is_wildcard(kind); }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A wildcard group: E = at least one 1, N = at least one 0, M = both.
struct Group {
  SymbolKind kind = SymbolKind::E;
  std::vector<Var> positions;  // ascending, size >= 2
  friend bool operator==(const Group&, const Group&) = default;
};

/// Plain 012-row (no wildcards).
struct Row012 {
  std::vector<SymbolKind> symbols;  // Zero, One or Two only

  Count cardinality() const;
  std::string text() const;
  friend bool operator==(const Row012&, const Row012&) = default;
};

/// A 012men-row: fixed bits, don't-cares and e/n/m wildcard groups. Groups
/// are stored ordered by their smallest position. Rows are immutable values.
class Row {
 public:
  /// (2,2,...,2); throws std::invalid_argument for t = 0.
  static Row full(std::size_t t);

  /// Normalizes a raw symbol vector whose wildcard symbols carry arbitrary
  /// tags: positions sharing a tag form one group. Size-1 groups degrade
  /// (E -> 1, N -> 0); a size-1 M group has no members and yields nullopt.
  /// Throws std::invalid_argument on a tag used with two kinds.
  static std::optional<Row> build(std::vector<Symbol> raw);

  /// Parses the canonical text form ("2 m1 e1 m1 1 n1 ...").
  static Row parse(std::string_view text);

  std::size_t width() const { return symbols_.size(); }
  const Symbol& at(Var v) const { return symbols_[v - 1]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::span<const Group> groups() const { return groups_; }
  const Group& group_of(Var v) const { return groups_[symbols_[v - 1].group]; }

  Count cardinality() const;
  bool contains(const Assignment& a) const;
  bool fulfills(const Clause& c) const;
  Cnf to_cnf() const;

  /// Calls visit for every member in lexicographic order (x_1 most
  /// significant, 0 before 1).
  void for_each_member(const std::function<void(const Assignment&)>& visit) const;
  std::vector<Assignment> members() const;

  /// Disjoint 012-rows whose union is this row.
  std::vector<Row012> expand_012() const;
  /// Number of rows expand_012() would produce, without materializing them.
  Count expand_012_count() const;

  /// Bitwise complement: 0 <-> 1, E <-> N, M and 2 fixed.
  Row complement() const;

  std::string text() const;
  /// Per-position tokens of text().
  std::vector<std::string> tokens() const;

  friend bool operator==(const Row&, const Row&) = default;

 private:
  Row() = default;
  std::vector<Symbol> symbols_;
  std::vector<Group> groups_;
};

/// Bit masks of a row of width <= 64 for fast membership tests on packed
/// assignments (bit v-1 holds x_v).
struct RowMasks {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  std::vector<std::uint64_t> e_groups;
  std::vector<std::uint64_t> n_groups;
  std::vector<std::uint64_t> m_groups;

  explicit RowMasks(const Row& row);

  bool contains(std::uint64_t x) const {
    if ((x & ones) != ones || (x & zeros) != 0) return false;
    for (std::uint64_t g : e_groups)
      if ((x & g) == 0) return false;
    for (std::uint64_t g : n_groups)
      if ((~x & g) == 0) return false;
    for (std::uint64_t g : m_groups)
      if ((x & g) == 0 || (~x & g) == 0) return false;
    return true;
  }
};

std::string kind_name(SymbolKind k);

}  // namespace allsat

#endif  // ALLSAT_ROW_HPP
