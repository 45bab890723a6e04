#include "allsat/impose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace allsat {

namespace {

// Positive imposition asks for a 1 (hit) among the positions; the negative
// one is its exact dual.
struct Polarity {
  SymbolKind hit;
  SymbolKind miss;
  SymbolKind same;  // group kind that also asks for `hit`
  SymbolKind dual;
};
constexpr Polarity kPositive{SymbolKind::One, SymbolKind::Zero, SymbolKind::E, SymbolKind::N};
constexpr Polarity kNegative{SymbolKind::Zero, SymbolKind::One, SymbolKind::N, SymbolKind::E};

// Raw symbol vector of a son under construction. Untouched groups keep their
// index as tag; every rewritten part gets a fresh tag.
class SonBuilder {
 public:
  explicit SonBuilder(const Row& row)
      : raw_(row.symbols().begin(), row.symbols().end()),
        next_tag_(static_cast<std::uint32_t>(row.groups().size())) {}

  void fixed(std::span<const Var> positions, SymbolKind k) {
    for (Var v : positions) raw_[v - 1] = Symbol{k, 0};
  }

  // False when the requirement cannot be met (empty set, or a lone m).
  bool group(std::span<const Var> positions, SymbolKind k) {
    if (positions.empty()) return false;
    if (positions.size() == 1) {
      if (k == SymbolKind::M) return false;
      fixed(positions, k == SymbolKind::E ? SymbolKind::One : SymbolKind::Zero);
      return true;
    }
    const std::uint32_t tag = next_tag_++;
    for (Var v : positions) raw_[v - 1] = Symbol::wild(k, tag);
    return true;
  }

  std::optional<Row> finish() const { return Row::build(raw_); }

 private:
  std::vector<Symbol> raw_;
  std::uint32_t next_tag_;
};

// Members with no `hit` on the trace.
bool apply_pass(SonBuilder& b, const Row& row, const Chunk& c, const Polarity& p) {
  b.fixed(c.trace, p.miss);
  if (c.is_free()) return true;
  const SymbolKind kind = row.groups()[*c.group].kind;
  if (kind == p.dual) {
    b.fixed(c.remainder, SymbolKind::Two);
    return true;
  }
  return b.group(c.remainder, p.same);
}

// Members with at least one `hit` on the trace; one or two disjoint variants.
std::vector<SonBuilder> apply_diag(const SonBuilder& prefix, const Row& row, const Chunk& c,
                                   const Polarity& p) {
  std::vector<SonBuilder> out;
  if (c.is_free()) {
    SonBuilder b = prefix;
    b.group(c.trace, p.same);
    out.push_back(std::move(b));
    return out;
  }
  const SymbolKind kind = row.groups()[*c.group].kind;
  if (kind == p.same) {
    SonBuilder b = prefix;
    b.group(c.trace, p.same);
    b.fixed(c.remainder, SymbolKind::Two);
    out.push_back(std::move(b));
    return out;
  }
  // Dual or m group: the trace also holds a `miss`, or it is all `hit` and
  // the remainder has to supply the `miss`.
  if (c.trace.size() >= 2) {
    SonBuilder b = prefix;
    b.group(c.trace, SymbolKind::M);
    b.fixed(c.remainder, SymbolKind::Two);
    out.push_back(std::move(b));
  }
  SonBuilder b = prefix;
  b.fixed(c.trace, p.hit);
  if (b.group(c.remainder, p.dual)) out.push_back(std::move(b));
  return out;
}

std::vector<Row> impose_one_sided(const Row& row, std::span<const Var> positions, const Polarity& p) {
  if (positions.empty()) throw std::invalid_argument("impose: empty position set");
  std::vector<Row> sons;
  SonBuilder prefix(row);
  for (const Chunk& c : chunks(row, positions)) {
    for (const SonBuilder& b : apply_diag(prefix, row, c, p))
      if (auto son = b.finish()) sons.push_back(std::move(*son));
    if (!apply_pass(prefix, row, c, p)) break;
  }
  return sons;
}

}  // namespace

std::optional<Restriction> restrict_clause(const Row& row, const Clause& clause) {
  if (row.fulfills(clause)) return std::nullopt;
  Restriction r;
  for (Var v : clause.pos)
    if (row.at(v).kind != SymbolKind::Zero) r.pos.push_back(v);
  for (Var v : clause.neg)
    if (row.at(v).kind != SymbolKind::One) r.neg.push_back(v);
  return r;
}

std::vector<Chunk> chunks(const Row& row, std::span<const Var> positions) {
  std::vector<Var> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Chunk free_chunk;
  std::map<std::size_t, Chunk> by_group;
  for (Var v : sorted) {
    if (v == 0 || v > row.width()) throw std::invalid_argument("chunks: position out of range");
    const Symbol& s = row.at(v);
    if (s.kind == SymbolKind::Two) {
      free_chunk.trace.push_back(v);
    } else if (s.wildcard()) {
      Chunk& c = by_group[s.group];
      c.group = s.group;
      c.trace.push_back(v);
    } else {
      throw std::invalid_argument("chunks: position holds a fixed bit");
    }
  }

  std::vector<Chunk> out;
  if (!free_chunk.trace.empty()) out.push_back(std::move(free_chunk));
  for (auto& [g, c] : by_group) {
    const auto& members = row.groups()[g].positions;
    std::set_difference(members.begin(), members.end(), c.trace.begin(), c.trace.end(),
                        std::back_inserter(c.remainder));
    out.push_back(std::move(c));
  }
  // Smaller traces first, ties by smallest trace position.
  std::sort(out.begin(), out.end(), [](const Chunk& a, const Chunk& b) {
    if (a.trace.size() != b.trace.size()) return a.trace.size() < b.trace.size();
    return a.trace.front() < b.trace.front();
  });
  return out;
}

std::vector<Row> impose_positive(const Row& row, std::span<const Var> positions) {
  return impose_one_sided(row, positions, kPositive);
}

std::vector<Row> impose_negative(const Row& row, std::span<const Var> positions) {
  return impose_one_sided(row, positions, kNegative);
}

std::optional<Row> force_ones(const Row& row, std::span<const Var> forced) {
  SonBuilder b(row);
  std::map<std::size_t, std::vector<Var>> touched;
  for (Var v : forced) {
    const Symbol& s = row.at(v);
    if (s.kind == SymbolKind::Zero) return std::nullopt;
    if (s.wildcard()) touched[s.group].push_back(v);
  }
  b.fixed(forced, SymbolKind::One);
  for (auto& [g, part] : touched) {
    const Group& grp = row.groups()[g];
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    std::vector<Var> rest;
    std::set_difference(grp.positions.begin(), grp.positions.end(), part.begin(), part.end(),
                        std::back_inserter(rest));
    if (grp.kind == SymbolKind::E) {
      b.fixed(rest, SymbolKind::Two);
    } else if (!b.group(rest, SymbolKind::N)) {
      return std::nullopt;
    }
  }
  return b.finish();
}

std::string OverloadedRow::text() const {
  auto has = [](const std::vector<Var>& set, Var v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  std::vector<std::string> toks = base.tokens();
  std::string s;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Var v = static_cast<Var>(i + 1);
    std::string tok = toks[i];
    if (has(barred, v)) tok = "~" + tok;
    if (has(encircled, v)) tok = "(" + tok + ")";
    if (has(starred, v)) tok += "*";
    if (i) s += ' ';
    s += tok;
  }
  return s;
}

ImposeResult impose_clause(const Row& row, const Clause& clause) {
  const std::optional<Restriction> r = restrict_clause(row, clause);
  if (!r) throw std::invalid_argument("impose_clause: row already fulfills the clause");

  ImposeResult result;
  if (r->empty()) return result;
  if (r->neg.empty()) {
    result.sons = impose_positive(row, r->pos);
  } else if (r->pos.empty()) {
    result.sons = impose_negative(row, r->neg);
  } else {
    // Members with a 0 on the negative part, then members with all 1s there
    // that still need a 1 on the positive part.
    result.sons = impose_negative(row, r->neg);
    result.overloaded.push_back({OverloadedRow::Type::A, row, r->neg, {}, {}});
    result.overloaded.push_back({OverloadedRow::Type::B, row, {}, r->neg, r->pos});
    if (std::optional<Row> forced = force_ones(row, r->neg)) {
      result.overloaded.push_back({OverloadedRow::Type::C, *forced, {}, {}, r->pos});
      const std::optional<Restriction> rest = restrict_clause(*forced, Clause{r->pos, {}});
      if (!rest) {
        result.sons.push_back(std::move(*forced));
      } else if (!rest->pos.empty()) {
        for (Row& son : impose_positive(*forced, rest->pos)) result.sons.push_back(std::move(son));
      }
    }
  }
  if (result.sons.size() > clause.literal_count())
    throw std::logic_error("impose_clause: more sons than literals");
  return result;
}

}  // namespace allsat
