#include "allsat/row.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace allsat {

std::string kind_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::Zero: return "0";
    case SymbolKind::One: return "1";
    case SymbolKind::Two: return "2";
    case SymbolKind::E: return "e";
    case SymbolKind::N: return "n";
    case SymbolKind::M: return "m";
  }
  return "?";
}

Count Row012::cardinality() const {
  Count c = 1;
  for (SymbolKind k : symbols)
    if (k == SymbolKind::Two) c <<= 1;
  return c;
}

std::string Row012::text() const {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) s += ' ';
    s += kind_name(symbols[i]);
  }
  return s;
}

Row Row::full(std::size_t t) {
  if (t == 0) throw std::invalid_argument("row width must be positive");
  Row r;
  r.symbols_.assign(t, Symbol::two());
  return r;
}

std::optional<Row> Row::build(std::vector<Symbol> raw) {
  if (raw.empty()) throw std::invalid_argument("row width must be positive");
  struct Pending {
    SymbolKind kind;
    std::vector<Var> positions;
  };
  std::map<std::uint32_t, Pending> by_tag;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Symbol& s = raw[i];
    if (!s.wildcard()) continue;
    auto [it, inserted] = by_tag.try_emplace(s.group, Pending{s.kind, {}});
    if (!inserted && it->second.kind != s.kind)
      throw std::invalid_argument("wildcard tag used with two kinds");
    it->second.positions.push_back(static_cast<Var>(i + 1));
  }

  Row row;
  row.symbols_ = std::move(raw);
  std::vector<Pending*> kept;
  for (auto& [tag, p] : by_tag) {
    if (p.positions.size() == 1) {
      Symbol& s = row.symbols_[p.positions.front() - 1];
      switch (p.kind) {
        case SymbolKind::E: s = Symbol::one(); break;
        case SymbolKind::N: s = Symbol::zero(); break;
        default: return std::nullopt;  // a lone m has no members
      }
      continue;
    }
    kept.push_back(&p);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Pending* a, const Pending* b) { return a->positions.front() < b->positions.front(); });
  for (std::size_t g = 0; g < kept.size(); ++g) {
    for (Var v : kept[g]->positions) row.symbols_[v - 1].group = static_cast<std::uint32_t>(g);
    row.groups_.push_back(Group{kept[g]->kind, std::move(kept[g]->positions)});
  }
  for (Symbol& s : row.symbols_)
    if (!s.wildcard()) s.group = 0;
  return row;
}

Row Row::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Symbol> raw;
  std::map<std::uint32_t, std::size_t> sizes;
  std::string tok;
  while (in >> tok) {
    if (tok == "0") raw.push_back(Symbol::zero());
    else if (tok == "1") raw.push_back(Symbol::one());
    else if (tok == "2") raw.push_back(Symbol::two());
    else {
      SymbolKind kind;
      switch (tok[0]) {
        case 'e': kind = SymbolKind::E; break;
        case 'n': kind = SymbolKind::N; break;
        case 'm': kind = SymbolKind::M; break;
        default: throw std::invalid_argument("malformed row token '" + tok + "'");
      }
      std::uint32_t id = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), id);
      if (tok.size() < 2 || ec != std::errc{} || ptr != tok.data() + tok.size() || id == 0)
        throw std::invalid_argument("malformed row token '" + tok + "'");
      const std::uint32_t tag = (static_cast<std::uint32_t>(kind) << 24) | id;
      raw.push_back(Symbol::wild(kind, tag));
      ++sizes[tag];
    }
  }
  if (raw.empty()) throw std::invalid_argument("empty row");
  for (auto [tag, n] : sizes)
    if (n < 2) throw std::invalid_argument("wildcard group of size 1");
  return *build(std::move(raw));
}

Count Row::cardinality() const {
  Count c = 1;
  for (const Symbol& s : symbols_)
    if (s.kind == SymbolKind::Two) c <<= 1;
  for (const Group& g : groups_) {
    Count all = Count(1) << g.positions.size();
    c *= g.kind == SymbolKind::M ? all - 2 : all - 1;
  }
  return c;
}

bool Row::contains(const Assignment& a) const {
  if (a.size() != width()) throw std::invalid_argument("assignment length mismatch");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const bool bit = a[static_cast<Var>(i + 1)];
    if (symbols_[i].kind == SymbolKind::Zero && bit) return false;
    if (symbols_[i].kind == SymbolKind::One && !bit) return false;
  }
  for (const Group& g : groups_) {
    bool any_one = false, any_zero = false;
    for (Var v : g.positions) (a[v] ? any_one : any_zero) = true;
    if (g.kind != SymbolKind::N && !any_one) return false;
    if (g.kind != SymbolKind::E && !any_zero) return false;
  }
  return true;
}

bool Row::fulfills(const Clause& c) const {
  if (c.max_var() > width()) throw std::invalid_argument("clause variable exceeds row width");
  std::vector<std::uint32_t> pos_hits(groups_.size(), 0), neg_hits(groups_.size(), 0);
  for (Var v : c.pos) {
    const Symbol& s = at(v);
    if (s.kind == SymbolKind::One) return true;
    if (s.wildcard()) ++pos_hits[s.group];
  }
  for (Var v : c.neg) {
    const Symbol& s = at(v);
    if (s.kind == SymbolKind::Zero) return true;
    if (s.wildcard()) ++neg_hits[s.group];
  }
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const Group& grp = groups_[g];
    const auto size = grp.positions.size();
    if (grp.kind != SymbolKind::N && pos_hits[g] == size) return true;
    if (grp.kind != SymbolKind::E && neg_hits[g] == size) return true;
  }
  return false;
}

Cnf Row::to_cnf() const {
  Cnf cnf;
  cnf.num_vars = width();
  std::vector<bool> emitted(groups_.size(), false);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Var v = static_cast<Var>(i + 1);
    const Symbol& s = symbols_[i];
    switch (s.kind) {
      case SymbolKind::One: cnf.add(Clause{{v}, {}}); break;
      case SymbolKind::Zero: cnf.add(Clause{{}, {v}}); break;
      case SymbolKind::Two: break;
      default: {
        if (emitted[s.group]) break;
        emitted[s.group] = true;
        const Group& g = groups_[s.group];
        if (g.kind != SymbolKind::N) cnf.add(Clause{g.positions, {}});
        if (g.kind != SymbolKind::E) cnf.add(Clause{{}, g.positions});
      }
    }
  }
  return cnf;
}

void Row::for_each_member(const std::function<void(const Assignment&)>& visit) const {
  const std::size_t t = width();
  Assignment a(t);
  std::vector<std::uint32_t> ones(groups_.size(), 0), zeros(groups_.size(), 0), left(groups_.size());
  for (std::size_t g = 0; g < groups_.size(); ++g)
    left[g] = static_cast<std::uint32_t>(groups_[g].positions.size());

  // Depth-first over positions, 0 before 1, skipping values that would leave
  // a group constraint unsatisfiable.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == t) {
      visit(a);
      return;
    }
    const Var v = static_cast<Var>(i + 1);
    const Symbol& s = symbols_[i];
    if (s.kind == SymbolKind::Zero || s.kind == SymbolKind::One) {
      a.set(v, s.kind == SymbolKind::One);
      rec(i + 1);
      return;
    }
    if (s.kind == SymbolKind::Two) {
      for (bool bit : {false, true}) {
        a.set(v, bit);
        rec(i + 1);
      }
      return;
    }
    const std::uint32_t g = s.group;
    const bool last = left[g] == 1;
    const bool need_one = s.kind != SymbolKind::N && ones[g] == 0;
    const bool need_zero = s.kind != SymbolKind::E && zeros[g] == 0;
    --left[g];
    if (!(last && need_one)) {
      a.set(v, false);
      ++zeros[g];
      rec(i + 1);
      --zeros[g];
    }
    if (!(last && need_zero)) {
      a.set(v, true);
      ++ones[g];
      rec(i + 1);
      --ones[g];
    }
    ++left[g];
  };
  rec(0);
}

std::vector<Assignment> Row::members() const {
  std::vector<Assignment> out;
  for_each_member([&](const Assignment& a) { out.push_back(a); });
  return out;
}

namespace {

using Pattern = std::vector<SymbolKind>;

// Flag-of-Bosnia rows for "at least one `hit`" over k positions: prefix of
// `miss`, a diagonal `hit`, suffix of 2s.
std::vector<Pattern> triangle(std::size_t k, SymbolKind hit, SymbolKind miss) {
  std::vector<Pattern> rows;
  for (std::size_t d = 0; d < k; ++d) {
    Pattern p(k, SymbolKind::Two);
    for (std::size_t j = 0; j < d; ++j) p[j] = miss;
    p[d] = hit;
    rows.push_back(std::move(p));
  }
  return rows;
}

std::vector<Pattern> group_patterns(const Group& g) {
  const std::size_t k = g.positions.size();
  switch (g.kind) {
    case SymbolKind::E: return triangle(k, SymbolKind::One, SymbolKind::Zero);
    case SymbolKind::N: return triangle(k, SymbolKind::Zero, SymbolKind::One);
    default: {
      // 1 followed by "some 0" on the rest, then 0 followed by "some 1".
      std::vector<Pattern> rows;
      for (auto [head, hit, miss] : {std::tuple{SymbolKind::One, SymbolKind::Zero, SymbolKind::One},
                                     std::tuple{SymbolKind::Zero, SymbolKind::One, SymbolKind::Zero}}) {
        for (Pattern& tail : triangle(k - 1, hit, miss)) {
          tail.insert(tail.begin(), head);
          rows.push_back(std::move(tail));
        }
      }
      return rows;
    }
  }
}

}  // namespace

std::vector<Row012> Row::expand_012() const {
  Row012 base;
  for (const Symbol& s : symbols_) base.symbols.push_back(s.wildcard() ? SymbolKind::Two : s.kind);
  std::vector<Row012> acc{base};
  for (const Group& g : groups_) {
    const std::vector<Pattern> patterns = group_patterns(g);
    std::vector<Row012> next;
    next.reserve(acc.size() * patterns.size());
    for (const Row012& partial : acc) {
      for (const Pattern& p : patterns) {
        Row012 r = partial;
        for (std::size_t j = 0; j < p.size(); ++j) r.symbols[g.positions[j] - 1] = p[j];
        next.push_back(std::move(r));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Count Row::expand_012_count() const {
  Count c = 1;
  for (const Group& g : groups_) {
    const std::size_t k = g.positions.size();
    c *= g.kind == SymbolKind::M ? 2 * k - 2 : k;
  }
  return c;
}

Row Row::complement() const {
  Row r = *this;
  auto flip = [](SymbolKind k) {
    switch (k) {
      case SymbolKind::Zero: return SymbolKind::One;
      case SymbolKind::One: return SymbolKind::Zero;
      case SymbolKind::E: return SymbolKind::N;
      case SymbolKind::N: return SymbolKind::E;
      default: return k;
    }
  };
  for (Symbol& s : r.symbols_) s.kind = flip(s.kind);
  for (Group& g : r.groups_) g.kind = flip(g.kind);
  return r;
}

std::vector<std::string> Row::tokens() const {
  // Ids are dense per kind, numbered in order of first occurrence.
  std::vector<std::uint32_t> display(groups_.size());
  std::uint32_t next[3] = {0, 0, 0};
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const int k = static_cast<int>(groups_[g].kind) - static_cast<int>(SymbolKind::E);
    display[g] = ++next[k];
  }
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (const Symbol& s : symbols_) {
    std::string tok = kind_name(s.kind);
    if (s.wildcard()) tok += std::to_string(display[s.group]);
    out.push_back(std::move(tok));
  }
  return out;
}

std::string Row::text() const {
  std::string s;
  for (const std::string& tok : tokens()) {
    if (!s.empty()) s += ' ';
    s += tok;
  }
  return s;
}

RowMasks::RowMasks(const Row& row) {
  if (row.width() > 64) throw std::length_error("RowMasks: row wider than 64");
  for (std::size_t i = 0; i < row.width(); ++i) {
    const SymbolKind k = row.symbols()[i].kind;
    if (k == SymbolKind::One) ones |= std::uint64_t{1} << i;
    if (k == SymbolKind::Zero) zeros |= std::uint64_t{1} << i;
  }
  for (const Group& g : row.groups()) {
    std::uint64_t m = 0;
    for (Var v : g.positions) m |= std::uint64_t{1} << (v - 1);
    (g.kind == SymbolKind::E ? e_groups : g.kind == SymbolKind::N ? n_groups : m_groups).push_back(m);
  }
}

}  // namespace allsat
