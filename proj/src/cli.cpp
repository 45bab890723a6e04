#include "allsat/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "allsat/engine.hpp"
#include "allsat/formula.hpp"
#include "allsat/json_io.hpp"
#include "allsat/oracle.hpp"

namespace allsat::cli {

namespace {

struct Flags {
  std::string input = "-";
  bool no_prune = false;
  bool trace = false;
  std::string format = "text";
  std::size_t max_rows = 0;  // 0 = unlimited
  unsigned oracle_limit = kDefaultOracleLimit;

  bool json() const { return format == "json"; }
  Options options() const {
    Options o;
    o.prune = !no_prune;
    o.trace = trace;
    if (max_rows) o.max_rows = max_rows;
    return o;
  }
};

Cnf load(const Flags& f, std::istream& in) {
  if (f.input == "-") return parse_dimacs(in);
  std::ifstream file(f.input);
  if (!file) throw std::runtime_error("cannot open '" + f.input + "'");
  return parse_dimacs(file);
}

std::string ratio(const Count& num, std::size_t den) {
  if (den == 0) return "0";
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << num.convert_to<long double>() / static_cast<long double>(den);
  return s.str();
}

Solution solve_traced(const Cnf& cnf, const Flags& f, std::ostream& err) {
  Solution sol = solve(cnf, f.options());
  for (const TraceEvent& e : sol.trace) err << render(e) << '\n';
  return sol;
}

int cmd_solve(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  const Solution sol = solve_traced(cnf, f, err);
  if (f.json()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& r : sol.final_rows) rows.push_back(to_json(r));
    out << nlohmann::json{{"rows", rows},
                          {"summary", {{"rows", sol.final_rows.size()}, {"models", sol.model_count.str()}}}}
               .dump(2)
        << '\n';
    return kOk;
  }
  for (const Row& r : sol.final_rows) out << r.text() << '\n';
  out << "rows=" << sol.final_rows.size() << " models=" << sol.model_count << '\n';
  return kOk;
}

int cmd_count(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  const Solution sol = solve_traced(cnf, f, err);
  if (f.json())
    out << nlohmann::json{{"rows", sol.final_rows.size()}, {"models", sol.model_count.str()}}.dump() << '\n';
  else
    out << "rows=" << sol.final_rows.size() << " models=" << sol.model_count << '\n';
  return kOk;
}

int cmd_enum(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  Sinks sinks;
  bool first = true;
  if (f.json()) out << '[';
  sinks.on_final = [&](const Row& r) {
    r.for_each_member([&](const Assignment& a) {
      if (f.json()) {
        out << (first ? "" : ",") << '"' << a.to_string() << '"';
        first = false;
      } else {
        out << a.to_string() << '\n';
      }
    });
  };
  sinks.on_event = [&](const TraceEvent& e) { err << render(e) << '\n'; };
  solve_streaming(cnf, f.options(), sinks);
  if (f.json()) out << "]\n";
  return kOk;
}

int cmd_verify(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  if (cnf.num_vars > f.oracle_limit) throw OracleLimitError(cnf.num_vars, f.oracle_limit);
  const Solution sol = solve_traced(cnf, f, err);
  const VerifyReport report = check_partition(sol.final_rows, cnf, f.oracle_limit);
  if (f.json())
    out << report.to_json().dump(2) << '\n';
  else
    out << "rows=" << sol.final_rows.size() << '\n' << report.text();
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_expand(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  const Solution sol = solve_traced(cnf, f, err);
  std::size_t n = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : sol.final_rows) {
    for (const Row012& e : r.expand_012()) {
      ++n;
      if (f.json())
        rows.push_back(e.text());
      else
        out << e.text() << '\n';
    }
  }
  if (f.json())
    out << nlohmann::json{{"rows012", rows}, {"esop_rows", n}, {"rows", sol.final_rows.size()}}.dump(2)
        << '\n';
  else
    out << "rows=" << sol.final_rows.size() << " esop_rows=" << n << '\n';
  return kOk;
}

int cmd_stats(const Cnf& cnf, const Flags& f, std::ostream& out, std::ostream& err) {
  const Solution sol = solve_traced(cnf, f, err);
  Count esop = 0;
  for (const Row& r : sol.final_rows) esop += r.expand_012_count();
  const std::size_t rows = sol.final_rows.size();
  const Stats& s = sol.stats;
  if (f.json()) {
    out << nlohmann::json{{"rows", rows},
                          {"models", sol.model_count.str()},
                          {"compression_ratio", ratio(sol.model_count, rows)},
                          {"esop_rows", esop.str()},
                          {"impositions", s.impositions},
                          {"rows_produced", s.rows_produced},
                          {"max_stack", s.max_stack},
                          {"prune_calls", s.prune_calls},
                          {"prune_hits", s.prune_hits}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "rows=" << rows << '\n'
      << "models=" << sol.model_count << '\n'
      << "compression_ratio=" << ratio(sol.model_count, rows) << '\n'
      << "esop_rows=" << esop << '\n'
      << "impositions=" << s.impositions << '\n'
      << "rows_produced=" << s.rows_produced << '\n'
      << "max_stack=" << s.max_stack << '\n'
      << "prune_calls=" << s.prune_calls << '\n'
      << "prune_hits=" << s.prune_hits << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerates all models of a CNF as disjoint e/n/m wildcard rows", "allsat"};
  app.require_subcommand(1, 1);
  Flags f;

  using Handler = int (*)(const Cnf&, const Flags&, std::ostream&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"solve", "Print the final rows and totals", cmd_solve},
      {"count", "Print row and model totals only", cmd_count},
      {"enum", "Stream every model as a 0/1 string", cmd_enum},
      {"verify", "Check the rows against a brute-force oracle", cmd_verify},
      {"expand", "Expand the rows into disjoint 012-rows (ESOP)", cmd_expand},
      {"stats", "Print run statistics as key=value lines", cmd_stats},
  };
  for (const auto& [name, desc, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("input", f.input, "DIMACS CNF file, '-' for standard input");
    sub->add_flag("--no-prune", f.no_prune, "Keep sons without models of the remaining clauses");
    sub->add_flag("--trace", f.trace, "Write stack events to the error stream");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-rows", f.max_rows, "Abort after this many final rows");
    sub->add_option("--oracle-limit", f.oracle_limit, "Largest variable count the oracle accepts");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  Cnf cnf;
  try {
    cnf = load(f, in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  for (const auto& [name, desc, handler] : commands) {
    if (!app.got_subcommand(name)) continue;
    try {
      return handler(cnf, f, out, err);
    } catch (const RowLimitExceeded& e) {
      err << "error: row limit of " << f.max_rows << " exceeded\n";
      return kResourceCap;
    } catch (const OracleLimitError& e) {
      err << "error: " << e.what() << '\n';
      return kResourceCap;
    }
  }
  return kUsage;
}

}  // namespace allsat::cli
