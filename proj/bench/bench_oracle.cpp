// Serial vs OpenMP timings for the oracle kernels.
// Usage: bench_oracle [--vars T] [--clauses M] [--reps R]

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <omp.h>

#include "allsat/engine.hpp"
#include "allsat/oracle.hpp"

using namespace allsat;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

Cnf random_cnf(std::mt19937_64& rng, std::size_t t, std::size_t m) {
  Cnf cnf;
  cnf.num_vars = t;
  std::uniform_int_distribution<std::size_t> len(3, 8);
  std::uniform_int_distribution<Var> var(1, static_cast<Var>(t));
  std::bernoulli_distribution sign(0.5);
  while (cnf.clauses.size() < m) {
    std::vector<Literal> lits;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) lits.push_back({var(rng), sign(rng)});
    const NormalizedClause n = normalize_clause(lits);
    if (const auto* c = std::get_if<Clause>(&n)) cnf.add(*c);
  }
  return cnf;
}

void line(const char* name, double serial, double parallel) {
  std::cout << std::left << std::setw(16) << name << std::right << std::fixed << std::setprecision(4)
            << " serial=" << serial << "s parallel=" << parallel << "s speedup=" << std::setprecision(2)
            << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle kernel benchmark"};
  std::size_t t = 22, m = 40;
  int reps = 3;
  app.add_option("--vars", t, "Variables")->check(CLI::Range(4, 28));
  app.add_option("--clauses", m, "Clauses");
  app.add_option("--reps", reps, "Repetitions (best time is reported)");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(7);
  const Cnf cnf = random_cnf(rng, t, m);
  const unsigned limit = static_cast<unsigned>(t);
  std::cout << "vars=" << t << " clauses=" << cnf.clauses.size() << " threads=" << omp_get_max_threads() << '\n';

  AssignmentSet a(t), b(t);
  const double ms = best_of(reps, [&] { a = brute_models_serial(cnf, limit); });
  const double mp = best_of(reps, [&] { b = brute_models(cnf, limit); });
  if (!(a == b)) {
    std::cerr << "brute_models mismatch\n";
    return 1;
  }
  line("brute_models", ms, mp);

  const Solution sol = solve(cnf);
  std::cout << "rows=" << sol.final_rows.size() << " models=" << sol.model_count << '\n';

  // Full-universe scan vs member enumeration, on the largest rows only.
  std::vector<Row> largest = sol.final_rows;
  std::sort(largest.begin(), largest.end(),
            [](const Row& x, const Row& y) { return x.cardinality() > y.cardinality(); });
  if (largest.size() > 5) largest.erase(largest.begin() + 5, largest.end());
  double rs = 0, rp = 0;
  for (const Row& r : largest) {
    rs += best_of(reps, [&] { a = row_members_serial(r, limit); });
    rp += best_of(reps, [&] { b = row_members(r, limit); });
    if (!(a == b)) {
      std::cerr << "row_members mismatch on " << r.text() << '\n';
      return 1;
    }
  }
  line("row_members", rs, rp);

  UnionResult us{AssignmentSet(t), std::nullopt}, up = us;
  const double ds = best_of(reps, [&] { us = disjoint_union_serial(sol.final_rows, t, limit); });
  const double dp = best_of(reps, [&] { up = disjoint_union(sol.final_rows, t, limit); });
  if (!(us.members == up.members) || us.overlap != up.overlap) {
    std::cerr << "disjoint_union mismatch\n";
    return 1;
  }
  line("disjoint_union", ds, dp);
  return 0;
}
