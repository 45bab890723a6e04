#ifndef ALLSAT_ENGINE_HPP
#define ALLSAT_ENGINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/row.hpp"

namespace allsat {

/// A stacked row and the clause index (1-based) its pending scan starts at.
struct WorkItem {
  Row row;
  std::size_t next = 1;
};

struct Options {
  /// Drop sons that contain no model of the remaining clauses.
  bool prune = true;
  /// Abort with RowLimitExceeded once more final rows would be emitted.
  std::optional<std::size_t> max_rows;
  bool trace = false;
  /// Brute-force check of the partition invariant after every imposition
  /// (t <= oracle limit only; slow).
  bool check_invariants = false;
};

struct Stats {
  std::size_t final_rows = 0;
  std::size_t rows_produced = 0;  // sons created by impositions
  std::size_t impositions = 0;
  std::size_t prune_calls = 0;
  std::size_t prune_hits = 0;
  std::size_t max_stack = 0;
};

struct TraceEvent {
  enum class Kind { Push, Pop, Impose, Final, Prune };
  Kind kind;
  std::string row;          // canonical text
  std::size_t clause = 0;   // 1-based; 0 when not applicable
  std::size_t sons = 0;     // Impose only
  Count count = 0;          // Final only
};

/// One line per event, e.g. "FINAL m1 m1 m1 count=30".
std::string render(const TraceEvent& event);
std::string emit_trace(const std::vector<TraceEvent>& events);

struct Solution {
  std::vector<Row> final_rows;
  Count model_count = 0;
  Stats stats;
  std::vector<TraceEvent> trace;
};

class RowLimitExceeded : public std::runtime_error {
 public:
  explicit RowLimitExceeded(Solution partial)
      : std::runtime_error("row limit exceeded"), partial_(std::move(partial)) {}
  const Solution& partial() const { return partial_; }

 private:
  Solution partial_;
};

/// Smallest index i >= start (1-based) whose clause the row does not fulfill.
std::optional<std::size_t> pending(const Row& row, const Cnf& cnf, std::size_t start = 1);

struct Sinks {
  std::function<void(const Row&)> on_final;
  std::function<void(const TraceEvent&)> on_event;
};

/// Streaming driver: final rows go to sinks.on_final as they are found and are
/// not retained. Returns the run statistics; throws RowLimitExceeded (with an
/// empty row list) when opts.max_rows is exceeded.
Stats solve_streaming(const Cnf& cnf, const Options& opts, const Sinks& sinks);

/// Collects the final rows, their exact model count and (if opts.trace) the
/// trace events.
Solution solve(const Cnf& cnf, const Options& opts = {});

}  // namespace allsat

#endif  // ALLSAT_ENGINE_HPP
