#include "allsat/satcheck.hpp"

namespace allsat {

namespace {

enum : signed char { kFalse = 0, kTrue = 1, kUnset = -1 };

class Dpll {
 public:
  Dpll(const SatInstance& inst, const DpllOptions& opts) : inst_(inst), opts_(opts) {}

  bool solve() {
    std::vector<signed char> values(inst_.num_vars + 1, kUnset);
    return search(values);
  }

 private:
  // False on conflict.
  bool propagate(std::vector<signed char>& values) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : inst_.clauses) {
        int unset = 0;
        Var last = 0;
        bool last_positive = true;
        bool satisfied = false;
        for (Var v : c.pos) {
          if (values[v] == kTrue) { satisfied = true; break; }
          if (values[v] == kUnset) { ++unset; last = v; last_positive = true; }
        }
        if (satisfied) continue;
        for (Var v : c.neg) {
          if (values[v] == kFalse) { satisfied = true; break; }
          if (values[v] == kUnset) { ++unset; last = v; last_positive = false; }
        }
        if (satisfied) continue;
        if (unset == 0) return false;
        if (unset == 1) {
          values[last] = last_positive ? kTrue : kFalse;
          changed = true;
        }
      }
    }
    return true;
  }

  void assign_pure(std::vector<signed char>& values) const {
    std::vector<unsigned char> seen(inst_.num_vars + 1, 0);  // bit0 pos, bit1 neg
    for (const Clause& c : inst_.clauses) {
      bool satisfied = false;
      for (Var v : c.pos) satisfied |= values[v] == kTrue;
      for (Var v : c.neg) satisfied |= values[v] == kFalse;
      if (satisfied) continue;
      for (Var v : c.pos) seen[v] |= 1;
      for (Var v : c.neg) seen[v] |= 2;
    }
    for (Var v = 1; v <= inst_.num_vars; ++v) {
      if (values[v] != kUnset) continue;
      if (seen[v] == 1) values[v] = kTrue;
      if (seen[v] == 2) values[v] = kFalse;
    }
  }

  bool search(std::vector<signed char>& values) const {
    if (!propagate(values)) return false;
    if (opts_.pure_literals) assign_pure(values);
    Var branch = 0;
    for (Var v = 1; v <= inst_.num_vars; ++v) {
      if (values[v] == kUnset) {
        branch = v;
        break;
      }
    }
    if (branch == 0) return true;  // every clause satisfied after propagation
    for (signed char value : {kTrue, kFalse}) {
      std::vector<signed char> next = values;
      next[branch] = value;
      if (search(next)) return true;
    }
    return false;
  }

  const SatInstance& inst_;
  const DpllOptions& opts_;
};

}  // namespace

bool satisfiable(const SatInstance& inst, const DpllOptions& opts) {
  for (const Clause& c : inst.clauses)
    if (c.pos.empty() && c.neg.empty()) return false;
  return Dpll(inst, opts).solve();
}

bool feasible(const Row& row, std::span<const Clause> remaining) {
  Cnf sigma = row.to_cnf();
  SatInstance inst{row.width(), std::move(sigma.clauses)};
  inst.clauses.insert(inst.clauses.end(), remaining.begin(), remaining.end());
  return satisfiable(inst);
}

}  // namespace allsat
