#include "allsat/engine.hpp"

#include <span>
#include <sstream>

#include "allsat/impose.hpp"
#include "allsat/oracle.hpp"
#include "allsat/satcheck.hpp"

namespace allsat {

std::string render(const TraceEvent& e) {
  std::ostringstream out;
  switch (e.kind) {
    case TraceEvent::Kind::Push: out << "PUSH " << e.row << " next=C" << e.clause; break;
    case TraceEvent::Kind::Pop: out << "POP " << e.row; break;
    case TraceEvent::Kind::Impose:
      out << "IMPOSE C" << e.clause << " on " << e.row << ": " << e.sons << (e.sons == 1 ? " son" : " sons");
      break;
    case TraceEvent::Kind::Final: out << "FINAL " << e.row << " count=" << e.count; break;
    case TraceEvent::Kind::Prune: out << "PRUNE " << e.row << " infeasible"; break;
  }
  return out.str();
}

std::string emit_trace(const std::vector<TraceEvent>& events) {
  std::string s;
  for (const TraceEvent& e : events) s += render(e) + '\n';
  return s;
}

std::optional<std::size_t> pending(const Row& row, const Cnf& cnf, std::size_t start) {
  for (std::size_t i = start; i <= cnf.clauses.size(); ++i)
    if (!row.fulfills(cnf.clauses[i - 1])) return i;
  return std::nullopt;
}

namespace {

// Brute-force check that finals and stacked rows are disjoint, cover every
// model, and that their total size shrank since the previous check.
class InvariantChecker {
 public:
  explicit InvariantChecker(const Cnf& cnf)
      : models_(brute_models(cnf)), t_(cnf.num_vars), previous_(models_.universe()) {}

  void check(const std::vector<Row>& finals, const std::vector<WorkItem>& stack) {
    std::vector<Row> rows = finals;
    for (const WorkItem& item : stack) rows.push_back(item.row);
    const UnionResult u = disjoint_union(rows, t_);
    if (u.overlap) throw std::logic_error("engine invariant: overlapping rows");
    if (models_.first_missing_from(u.members))
      throw std::logic_error("engine invariant: a model is no longer covered");
    const std::uint64_t total = u.members.count();
    if (total >= previous_)
      throw std::logic_error("engine invariant: imposition did not shrink the covered set");
    previous_ = total;
  }

 private:
  AssignmentSet models_;
  std::size_t t_;
  std::uint64_t previous_;
};

}  // namespace

Stats solve_streaming(const Cnf& cnf, const Options& opts, const Sinks& sinks) {
  Stats stats;
  if (cnf.unsatisfiable) return stats;
  if (cnf.num_vars == 0) throw std::invalid_argument("solve: formula has no variables");

  const bool tracing = opts.trace && sinks.on_event;
  auto emit = [&](const TraceEvent& e) { sinks.on_event(e); };
  std::optional<InvariantChecker> checker;
  std::vector<Row> finals_seen;  // kept only for the invariant check
  if (opts.check_invariants) checker.emplace(cnf);

  std::vector<WorkItem> stack;
  stack.push_back({Row::full(cnf.num_vars), 1});
  if (tracing) emit({TraceEvent::Kind::Push, stack.back().row.text(), 1});
  stats.max_stack = 1;

  const std::span<const Clause> clauses(cnf.clauses);
  while (!stack.empty()) {
    WorkItem item = std::move(stack.back());
    stack.pop_back();
    if (tracing) emit({TraceEvent::Kind::Pop, item.row.text()});

    const std::optional<std::size_t> p = pending(item.row, cnf, item.next);
    if (!p) {
      if (opts.max_rows && stats.final_rows >= *opts.max_rows) throw RowLimitExceeded(Solution{});
      ++stats.final_rows;
      if (tracing) emit({TraceEvent::Kind::Final, item.row.text(), 0, 0, item.row.cardinality()});
      if (sinks.on_final) sinks.on_final(item.row);
      if (checker) finals_seen.push_back(std::move(item.row));
      continue;
    }

    ImposeResult result = impose_clause(item.row, clauses[*p - 1]);
    ++stats.impositions;
    stats.rows_produced += result.sons.size();
    if (tracing) emit({TraceEvent::Kind::Impose, item.row.text(), *p, result.sons.size()});

    const std::span<const Clause> remaining = clauses.subspan(*p);
    std::vector<Row> survivors;
    for (Row& son : result.sons) {
      if (opts.prune) {
        ++stats.prune_calls;
        if (!feasible(son, remaining)) {
          ++stats.prune_hits;
          if (tracing) emit({TraceEvent::Kind::Prune, son.text()});
          continue;
        }
      }
      survivors.push_back(std::move(son));
    }
    // Reverse order so the first son is popped first.
    for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
      if (tracing) emit({TraceEvent::Kind::Push, it->text(), *p + 1});
      stack.push_back({std::move(*it), *p + 1});
    }
    stats.max_stack = std::max(stats.max_stack, stack.size());
    if (checker) checker->check(finals_seen, stack);
  }
  return stats;
}

Solution solve(const Cnf& cnf, const Options& opts) {
  Solution sol;
  Sinks sinks;
  sinks.on_final = [&](const Row& r) {
    sol.model_count += r.cardinality();
    sol.final_rows.push_back(r);
  };
  sinks.on_event = [&](const TraceEvent& e) { sol.trace.push_back(e); };
  try {
    sol.stats = solve_streaming(cnf, opts, sinks);
  } catch (const RowLimitExceeded&) {
    sol.stats.final_rows = sol.final_rows.size();
    throw RowLimitExceeded(std::move(sol));
  }
  return sol;
}

}  // namespace allsat
