#include <doctest.h>

#include "allsat/satcheck.hpp"
#include "support/generators.hpp"

using namespace allsat;
using allsat::testing::row;

namespace {

bool brute_sat(const SatInstance& inst) {
  Cnf cnf;
  cnf.num_vars = inst.num_vars;
  cnf.clauses = inst.clauses;
  bool found = false;
  testing::for_all_assignments(inst.num_vars, [&](const Assignment& a) { found = found || eval(cnf, a); });
  return found;
}

SatInstance phi2() {
  SatInstance inst{18, {}};
  inst.clauses.push_back(make_clause({3, 4, 6, 7, 9, 14, 15, 16, 17, 18}));
  inst.clauses.push_back(make_clause({-3, -5, -8, -9, -11, -12, -13, -14, -15, -17}));
  inst.clauses.push_back(make_clause({1, 4, 5, 6, 9, 12, 14, 15, 17, 18}));
  inst.clauses.push_back(make_clause({-1, -2, -3, -8, -11, -13, -14, -16, -17, -18}));
  inst.clauses.push_back(make_clause({2, 3, 7, 8, 11, 13, 14, 16, 17, 18}));
  return inst;
}

}  // namespace

TEST_CASE("satisfiable") {
  CHECK_FALSE(satisfiable({1, {make_clause({1}), make_clause({-1})}}));
  CHECK(satisfiable({2, {make_clause({1, 2}), make_clause({-1, -2})}}));
  CHECK(satisfiable(phi2()));
  CHECK(brute_sat(phi2()));
  CHECK(satisfiable({3, {}}));
  CHECK_FALSE(satisfiable({2, {Clause{}}}));
}

TEST_CASE("feasible") {
  const std::vector<Clause> not_both{make_clause({-1, -2})};
  CHECK_FALSE(feasible(row("1 1 2"), not_both));
  CHECK(feasible(Row::full(4), std::vector<Clause>{}));
  const std::vector<Clause> not4{make_clause({-4})};
  CHECK_FALSE(feasible(row("e1 0 e1 1 e1"), not4));
  CHECK(feasible(row("e1 0 e1 2 e1"), not4));
}

TEST_CASE("DPLL agrees with brute force on random formulas") {
  testing::Rng rng(314);
  int sat = 0, unsat = 0;
  for (int iter = 0; iter < 600; ++iter) {
    const std::size_t t = 1 + iter % 14;
    std::uniform_int_distribution<std::size_t> m_dist(1, 4 * t);
    const Cnf cnf = testing::random_cnf(rng, t, m_dist(rng), 3);
    const SatInstance inst{t, cnf.clauses};
    const bool expected = brute_sat(inst);
    CHECK(satisfiable(inst) == expected);
    CHECK(satisfiable(inst, {.pure_literals = true}) == expected);
    (expected ? sat : unsat)++;
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}

TEST_CASE("feasible iff some member satisfies the remaining clauses") {
  testing::Rng rng(2718);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t t = 1 + iter % 14;
    const Row r = testing::random_row(rng, t);
    const Cnf rest = testing::random_cnf(rng, t, 1 + iter % 6, 4);
    bool expected = false;
    for (const Assignment& a : r.members()) expected = expected || eval(rest, a);
    CHECK(feasible(r, rest.clauses) == expected);
  }
}
