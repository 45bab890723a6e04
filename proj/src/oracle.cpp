#include "allsat/oracle.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <sstream>

namespace allsat {

namespace {

constexpr std::size_t kMaxDenseVars = 32;

void check_limit(std::size_t t, unsigned limit) {
  if (t > limit || t > kMaxDenseVars) throw OracleLimitError(t, limit);
}

struct ClauseMasks {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<ClauseMasks> compile(const Cnf& cnf) {
  std::vector<ClauseMasks> out;
  out.reserve(cnf.clauses.size());
  for (const Clause& c : cnf.clauses) {
    ClauseMasks m;
    for (Var v : c.pos) m.pos |= std::uint64_t{1} << (v - 1);
    for (Var v : c.neg) m.neg |= std::uint64_t{1} << (v - 1);
    out.push_back(m);
  }
  return out;
}

// Fills every word of `set` with the packed predicate values; each word is
// written by exactly one thread, so the result does not depend on scheduling.
template <typename Pred>
void fill_parallel(AssignmentSet& set, const Pred& pred) {
  const std::uint64_t universe = set.universe();
  std::span<std::uint64_t> words = set.words();
  const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < n; ++w) {
    std::uint64_t bits = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(w) << 6;
    for (std::uint64_t b = 0; b < 64 && base + b < universe; ++b)
      if (pred(base + b)) bits |= std::uint64_t{1} << b;
    words[static_cast<std::size_t>(w)] = bits;
  }
}

std::uint64_t universe_mask(std::size_t t) {
  return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
}

std::string mask_text(std::uint64_t mask, std::size_t t) {
  return Assignment::from_mask(t, mask).to_string();
}

}  // namespace

AssignmentSet::AssignmentSet(std::size_t t) : t_(t) {
  if (t > kMaxDenseVars) throw std::length_error("AssignmentSet: too many variables");
  words_.assign(std::max<std::uint64_t>(1, (std::uint64_t{1} << t) / 64), 0);
}

std::uint64_t AssignmentSet::count() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::optional<std::uint64_t> AssignmentSet::first_missing_from(const AssignmentSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] & ~other.words_[w];
    if (diff) return (static_cast<std::uint64_t>(w) << 6) + std::countr_zero(diff);
  }
  return std::nullopt;
}

AssignmentSet brute_models(const Cnf& cnf, unsigned limit) {
  check_limit(cnf.num_vars, limit);
  AssignmentSet set(cnf.num_vars);
  if (cnf.unsatisfiable) return set;
  const std::vector<ClauseMasks> masks = compile(cnf);
  fill_parallel(set, [&](std::uint64_t x) {
    for (const ClauseMasks& m : masks)
      if ((x & m.pos) == 0 && (~x & m.neg) == 0) return false;
    return true;
  });
  return set;
}

AssignmentSet brute_models_serial(const Cnf& cnf, unsigned limit) {
  check_limit(cnf.num_vars, limit);
  AssignmentSet set(cnf.num_vars);
  for (std::uint64_t x = 0; x < set.universe(); ++x)
    if (eval(cnf, Assignment::from_mask(cnf.num_vars, x))) set.insert(x);
  return set;
}

AssignmentSet row_members(const Row& row, unsigned limit) {
  check_limit(row.width(), limit);
  AssignmentSet set(row.width());
  const RowMasks masks(row);
  fill_parallel(set, [&](std::uint64_t x) { return masks.contains(x); });
  return set;
}

AssignmentSet row_members_serial(const Row& row, unsigned limit) {
  check_limit(row.width(), limit);
  AssignmentSet set(row.width());
  row.for_each_member([&](const Assignment& a) { set.insert(a.to_mask()); });
  return set;
}

UnionResult disjoint_union(std::span<const Row> rows, std::size_t t, unsigned limit) {
  check_limit(t, limit);
  for (const Row& r : rows)
    if (r.width() != t) throw std::invalid_argument("disjoint_union: row width mismatch");
  UnionResult result{AssignmentSet(t), std::nullopt};
  std::span<std::uint64_t> acc = result.members.words();
  bool clash = false;
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic) reduction(|| : clash)
  for (std::int64_t j = 0; j < n; ++j) {
    const RowMasks masks(rows[static_cast<std::size_t>(j)]);
    const std::uint64_t span = (universe_mask(t) & ~masks.ones) & ~masks.zeros;
    // Every subset of the non-fixed positions, filtered by the row test.
    std::uint64_t s = 0;
    do {
      const std::uint64_t x = masks.ones | s;
      if (masks.contains(x)) {
        const std::uint64_t bit = std::uint64_t{1} << (x & 63);
        const std::uint64_t old = std::atomic_ref<std::uint64_t>(acc[x >> 6]).fetch_or(bit);
        clash = clash || (old & bit);
      }
      s = (s - span) & span;
    } while (s != 0);
  }
  if (clash) result.overlap = disjoint_union_serial(rows, t, limit).overlap;
  return result;
}

UnionResult disjoint_union_serial(std::span<const Row> rows, std::size_t t, unsigned limit) {
  check_limit(t, limit);
  UnionResult result{AssignmentSet(t), std::nullopt};
  std::span<std::uint64_t> acc = result.members.words();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].width() != t) throw std::invalid_argument("disjoint_union: row width mismatch");
    const AssignmentSet members = row_members_serial(rows[j], limit);
    std::span<const std::uint64_t> add = members.words();
    for (std::size_t w = 0; w < acc.size(); ++w) {
      const std::uint64_t clash = acc[w] & add[w];
      if (clash && !result.overlap) {
        const std::uint64_t x = (static_cast<std::uint64_t>(w) << 6) + std::countr_zero(clash);
        for (std::size_t i = 0; i < j; ++i) {
          if (RowMasks(rows[i]).contains(x)) {
            result.overlap = {i, j};
            break;
          }
        }
      }
      acc[w] |= add[w];
    }
  }
  return result;
}

VerifyReport check_partition(std::span<const Row> rows, const Cnf& cnf, unsigned limit) {
  const AssignmentSet models = brute_models(cnf, limit);
  const UnionResult u = disjoint_union(rows, cnf.num_vars, limit);

  VerifyReport report;
  report.disjoint = !u.overlap.has_value();
  report.overlapping_rows = u.overlap;
  if (auto x = models.first_missing_from(u.members)) report.missing_model = mask_text(*x, cnf.num_vars);
  if (auto x = u.members.first_missing_from(models)) report.extra_assignment = mask_text(*x, cnf.num_vars);
  report.covered = !report.missing_model && !report.extra_assignment;
  report.oracle_count = models.count();
  for (const Row& r : rows) report.solver_count += r.cardinality();
  return report;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "disjoint=" << (disjoint ? "yes" : "no");
  if (overlapping_rows)
    out << " first_overlap=" << overlapping_rows->first + 1 << ',' << overlapping_rows->second + 1;
  out << "\ncovered=" << (covered ? "yes" : "no");
  if (missing_model) out << " missing=" << *missing_model;
  if (extra_assignment) out << " extra=" << *extra_assignment;
  out << "\noracle_count=" << oracle_count << "\nsolver_count=" << solver_count
      << "\nresult=" << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["disjoint"] = disjoint;
  j["overlapping_rows"] = overlapping_rows
                              ? nlohmann::json::array({overlapping_rows->first + 1, overlapping_rows->second + 1})
                              : nlohmann::json(nullptr);
  j["covered"] = covered;
  j["missing_model"] = missing_model ? nlohmann::json(*missing_model) : nlohmann::json(nullptr);
  j["extra_assignment"] = extra_assignment ? nlohmann::json(*extra_assignment) : nlohmann::json(nullptr);
  j["oracle_count"] = oracle_count.str();
  j["solver_count"] = solver_count.str();
  j["passed"] = passed();
  return j;
}

}  // namespace allsat
