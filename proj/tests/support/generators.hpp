#ifndef ALLSAT_TESTS_GENERATORS_HPP
#define ALLSAT_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/row.hpp"

namespace allsat::testing {

using Rng = std::mt19937_64;

/// Random valid row: every position gets a random symbol kind; wildcard
/// positions of one kind are dealt into groups of size >= 2.
inline Row random_row(Rng& rng, std::size_t t) {
  std::uniform_int_distribution<int> kind_dist(0, 5);
  std::vector<Symbol> raw(t);
  std::vector<std::vector<std::size_t>> by_kind(3);
  for (std::size_t i = 0; i < t; ++i) {
    const auto k = static_cast<SymbolKind>(kind_dist(rng));
    raw[i] = Symbol{k, 0};
    if (is_wildcard(k)) by_kind[static_cast<int>(k) - static_cast<int>(SymbolKind::E)].push_back(i);
  }
  std::uint32_t tag = 1;
  for (auto& positions : by_kind) {
    std::shuffle(positions.begin(), positions.end(), rng);
    while (!positions.empty()) {
      if (positions.size() == 1) {
        raw[positions.back()] = Symbol::two();
        break;
      }
      std::uniform_int_distribution<std::size_t> size_dist(2, positions.size());
      std::size_t n = size_dist(rng);
      if (positions.size() - n == 1) ++n;  // never leave a single straggler
      for (std::size_t j = 0; j < n; ++j) {
        raw[positions.back()].group = tag;
        positions.pop_back();
      }
      ++tag;
    }
  }
  return *Row::build(std::move(raw));
}

/// Random clause over 1..t with between 1 and max_len distinct variables.
inline Clause random_clause(Rng& rng, std::size_t t, std::size_t max_len) {
  std::vector<Var> vars(t);
  for (std::size_t i = 0; i < t; ++i) vars[i] = static_cast<Var>(i + 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::uniform_int_distribution<std::size_t> len_dist(1, std::min(max_len, t));
  std::bernoulli_distribution positive(0.5);
  std::vector<Literal> lits;
  for (std::size_t i = 0, n = len_dist(rng); i < n; ++i) lits.push_back({vars[i], positive(rng)});
  return std::get<Clause>(normalize_clause(lits));
}

inline Cnf random_cnf(Rng& rng, std::size_t t, std::size_t clauses, std::size_t max_len) {
  Cnf cnf;
  cnf.num_vars = t;
  for (std::size_t i = 0; i < clauses; ++i) cnf.add(random_clause(rng, t, max_len));
  return cnf;
}

/// Every assignment of width t, packed.
template <typename F>
void for_all_assignments(std::size_t t, F&& f) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << t); ++x) f(Assignment::from_mask(t, x));
}

/// Members of a row by testing every assignment against Row::contains.
inline std::vector<Assignment> members_by_filter(const Row& r) {
  std::vector<Assignment> out;
  for_all_assignments(r.width(), [&](const Assignment& a) {
    if (r.contains(a)) out.push_back(a);
  });
  return out;
}

inline Row row(const char* text) { return Row::parse(text); }

}  // namespace allsat::testing

#endif  // ALLSAT_TESTS_GENERATORS_HPP
