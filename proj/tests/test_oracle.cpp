#include <doctest.h>

#include "allsat/oracle.hpp"
#include "support/generators.hpp"

using namespace allsat;
using allsat::testing::row;

namespace {

Cnf mu(std::size_t t) {
  Cnf cnf;
  cnf.num_vars = t;
  Clause pos, neg;
  for (Var v = 1; v <= t; ++v) {
    pos.pos.push_back(v);
    neg.neg.push_back(v);
  }
  cnf.add(pos);
  cnf.add(neg);
  return cnf;
}

const char* kWorked =
    "p cnf 10 5\n-1 -2 -3 0\n4 5 6 7 0\n-8 -9 -10 0\n-2 -3 -4 -5 6 7 8 9 0\n1 -3 -4 -6 -7 0\n";

}  // namespace

TEST_CASE("brute_models") {
  const AssignmentSet m2 = brute_models(mu(2));
  CHECK(m2.count() == 2);
  CHECK(m2.contains(Assignment::from_string("01").to_mask()));
  CHECK(m2.contains(Assignment::from_string("10").to_mask()));

  // The worked example has 705 models; the ten final row sizes printed for
  // it (21+1+4+420+14+168+14+28+21+14) also add up to 705.
  CHECK(brute_models(parse_dimacs(kWorked)).count() == 705);

  const Cnf phi2 = parse_dimacs(
      "p cnf 18 5\n3 4 6 7 9 14 15 16 17 18 0\n-3 -5 -8 -9 -11 -12 -13 -14 -15 -17 0\n"
      "1 4 5 6 9 12 14 15 17 18 0\n-1 -2 -3 -8 -11 -13 -14 -16 -17 -18 0\n"
      "2 3 7 8 11 13 14 16 17 18 0\n");
  CHECK(brute_models(phi2).count() == 260928);

  Cnf wide;
  wide.num_vars = 25;
  CHECK_THROWS_AS(brute_models(wide), OracleLimitError);
  CHECK_THROWS_AS(brute_models(mu(12), 10), OracleLimitError);
}

TEST_CASE("parallel kernels match the serial references") {
  testing::Rng rng(8);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t t = 1 + iter % 16;
    const Cnf cnf = testing::random_cnf(rng, t, 1 + iter % 8, 5);
    CHECK(brute_models(cnf) == brute_models_serial(cnf));
    const Row r = testing::random_row(rng, t);
    CHECK(row_members(r) == row_members_serial(r));
    CHECK(Count(row_members(r).count()) == r.cardinality());

    // Random row sets usually overlap; both unions must agree on the pair too.
    std::vector<Row> rows;
    for (int k = 0; k < 1 + iter % 5; ++k) rows.push_back(testing::random_row(rng, t));
    const UnionResult par = disjoint_union(rows, t);
    const UnionResult ser = disjoint_union_serial(rows, t);
    CHECK(par.members == ser.members);
    CHECK(par.overlap == ser.overlap);
  }
}

TEST_CASE("check_partition") {
  Cnf either;
  either.num_vars = 2;
  either.add(make_clause({1, 2}));
  const std::vector<Row> overlapping{row("1 2"), row("2 1")};
  VerifyReport rep = check_partition(overlapping, either);
  CHECK_FALSE(rep.disjoint);
  REQUIRE(rep.overlapping_rows);
  CHECK(*rep.overlapping_rows == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(rep.covered);
  CHECK(rep.solver_count == 4);
  CHECK(rep.oracle_count == 3);
  CHECK_FALSE(rep.passed());

  const std::vector<Row> exact{row("1 2"), row("0 1")};
  CHECK(check_partition(exact, either).passed());

  const std::vector<Row> missing{row("1 2")};
  rep = check_partition(missing, either);
  CHECK_FALSE(rep.covered);
  CHECK(rep.missing_model == "01");

  const std::vector<Row> extra{row("2 2")};
  rep = check_partition(extra, either);
  CHECK(rep.extra_assignment == "00");

  Cnf unsat = either;
  unsat.unsatisfiable = true;
  rep = check_partition(std::vector<Row>{}, unsat);
  CHECK(rep.covered);
  CHECK(rep.passed());

  CHECK(rep.text().find("result=PASS") != std::string::npos);
  CHECK(rep.to_json()["passed"] == true);
}

TEST_CASE("check_partition on the worked example's final rows") {
  const std::vector<Row> rows{
      row("2 2 0 e1 e1 e1 e1 n1 n1 n1"), row("2 0 1 m1 2 m1 m1 n1 n1 n1"), row("2 0 1 0 1 0 0 n1 n1 n1"),
      row("1 0 1 1 2 1 1 n1 n1 n1"),     row("0 1 1 0 1 2 2 n1 n1 n1"),    row("0 1 1 1 0 n1 n1 n2 n2 n2"),
      row("0 1 1 0 0 e1 e1 n1 n1 n1"),   row("0 1 1 1 1 m1 m1 n1 n1 n1"), row("0 1 1 1 1 0 0 m1 m1 2"),
      row("0 1 1 1 1 0 0 1 1 0"),
  };
  const VerifyReport rep = check_partition(rows, parse_dimacs(kWorked));
  CHECK(rep.passed());
  CHECK(rep.oracle_count == 705);
}
