#ifndef ALLSAT_SATCHECK_HPP
#define ALLSAT_SATCHECK_HPP

#include <span>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/row.hpp"

namespace allsat {

struct SatInstance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

struct DpllOptions {
  bool pure_literals = false;
};

/// Complete DPLL: unit propagation to a fixpoint, then branching on the
/// lowest unassigned variable, true first.
bool satisfiable(const SatInstance& inst, const DpllOptions& opts = {});

/// True iff some member of `row` satisfies every clause in `remaining`.
bool feasible(const Row& row, std::span<const Clause> remaining);

}  // namespace allsat

#endif  // ALLSAT_SATCHECK_HPP
