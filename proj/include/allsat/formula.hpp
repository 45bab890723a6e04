#ifndef ALLSAT_FORMULA_HPP
#define ALLSAT_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace allsat {

/// Variable index, 1-based (x_1 .. x_t).
using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  static Literal from_dimacs(long value) {
    return value > 0 ? Literal{static_cast<Var>(value), true}
                     : Literal{static_cast<Var>(-value), false};
  }
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A disjunction split into its positive and negative variables. Both sets
/// are sorted, duplicate free, disjoint, and not both empty.
struct Clause {
  std::vector<Var> pos;
  std::vector<Var> neg;

  std::size_t literal_count() const { return pos.size() + neg.size(); }
  Var max_var() const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Tautology {};
struct EmptyClause {};
using NormalizedClause = std::variant<Clause, Tautology, EmptyClause>;

NormalizedClause normalize_clause(const std::vector<Literal>& raw);

/// Convenience for tests and tools: builds a clause from signed DIMACS
/// integers. Throws std::invalid_argument on tautologies or empty input.
Clause make_clause(std::initializer_list<long> dimacs_literals);

struct Cnf {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  /// Set when the input contained an empty clause; the model set is empty.
  bool unsatisfiable = false;
  std::size_t original_clause_count = 0;
  std::size_t dropped_tautologies = 0;

  /// Appends a clause after checking its variables against num_vars.
  void add(Clause c);
};

/// Length-t bitstring; bits[i] holds the value of x_{i+1}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t t) : bits_(t, 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  /// Bit (v-1) of mask is the value of x_v.
  static Assignment from_mask(std::size_t t, std::uint64_t mask);
  /// Parses a "0101" style string.
  static Assignment from_string(std::string_view s);

  std::size_t size() const { return bits_.size(); }
  bool operator[](Var v) const { return bits_[v - 1] != 0; }
  void set(Var v, bool value) { bits_[v - 1] = value ? 1 : 0; }
  std::uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(std::string_view text);

/// DIMACS text with a leading comment carrying the original clause count and
/// the number of dropped tautologies.
std::string format_dimacs(const Cnf& cnf);

bool eval(const Clause& clause, const Assignment& a);
/// Throws std::invalid_argument when |a| differs from cnf.num_vars.
bool eval(const Cnf& cnf, const Assignment& a);

std::string to_string(const Clause& clause);

}  // namespace allsat

#endif  // ALLSAT_FORMULA_HPP
