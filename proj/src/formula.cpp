#include "allsat/formula.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace allsat {

Var Clause::max_var() const {
  Var m = 0;
  if (!pos.empty()) m = std::max(m, pos.back());
  if (!neg.empty()) m = std::max(m, neg.back());
  return m;
}

NormalizedClause normalize_clause(const std::vector<Literal>& raw) {
  if (raw.empty()) return EmptyClause{};
  Clause c;
  for (const Literal& lit : raw) (lit.positive ? c.pos : c.neg).push_back(lit.var);
  for (auto* side : {&c.pos, &c.neg}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  std::vector<Var> both;
  std::set_intersection(c.pos.begin(), c.pos.end(), c.neg.begin(), c.neg.end(),
                        std::back_inserter(both));
  if (!both.empty()) return Tautology{};
  return c;
}

Clause make_clause(std::initializer_list<long> dimacs_literals) {
  std::vector<Literal> raw;
  for (long v : dimacs_literals) {
    if (v == 0) throw std::invalid_argument("make_clause: literal 0");
    raw.push_back(Literal::from_dimacs(v));
  }
  NormalizedClause n = normalize_clause(raw);
  if (auto* c = std::get_if<Clause>(&n)) return *c;
  throw std::invalid_argument("make_clause: tautology or empty clause");
}

void Cnf::add(Clause c) {
  if (c.max_var() > num_vars)
    throw std::invalid_argument("clause variable exceeds variable count");
  clauses.push_back(std::move(c));
  ++original_clause_count;
}

Assignment Assignment::from_mask(std::size_t t, std::uint64_t mask) {
  Assignment a(t);
  for (std::size_t i = 0; i < t; ++i) a.bits_[i] = (mask >> i) & 1u;
  return a;
}

Assignment Assignment::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("assignment: expected 0/1");
    bits.push_back(ch == '1');
  }
  return Assignment(std::move(bits));
}

std::uint64_t Assignment::to_mask() const {
  if (bits_.size() > 64) throw std::length_error("assignment wider than 64 bits");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m |= std::uint64_t{1} << i;
  return m;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool have_header = false;
  std::vector<Literal> current;
  std::string line;
  std::size_t lineno = 0;

  auto finish_clause = [&] {
    NormalizedClause n = normalize_clause(current);
    ++cnf.original_clause_count;
    if (auto* c = std::get_if<Clause>(&n)) {
      cnf.clauses.push_back(std::move(*c));
    } else if (std::holds_alternative<Tautology>(n)) {
      ++cnf.dropped_tautologies;
    } else {
      cnf.unsatisfiable = true;
    }
    current.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "c") continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string fmt, vars, count, extra;
      ls >> fmt >> vars >> count;
      if (fmt != "cnf" || vars.empty() || count.empty() || (ls >> extra))
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      long t = parse_int(vars, lineno);
      long s = parse_int(count, lineno);
      if (t <= 0 || s < 0) throw ParseError(lineno, "malformed header counts");
      cnf.num_vars = static_cast<std::size_t>(t);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before 'p cnf' header");
    do {
      if (tok == "-0") throw ParseError(lineno, "literal index 0 inside clause");
      long v = parse_int(tok, lineno);
      if (v == 0) {
        finish_clause();
        continue;
      }
      if (static_cast<std::size_t>(v < 0 ? -v : v) > cnf.num_vars)
        throw ParseError(lineno, "variable " + std::to_string(v < 0 ? -v : v) +
                                     " exceeds declared count " + std::to_string(cnf.num_vars));
      current.push_back(Literal::from_dimacs(v));
    } while (ls >> tok);
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!current.empty()) finish_clause();  // tolerate a missing final terminator
  return cnf;
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string format_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "c original_clauses=" << cnf.original_clause_count
      << " dropped_tautologies=" << cnf.dropped_tautologies << '\n';
  const std::size_t n = cnf.clauses.size() + (cnf.unsatisfiable ? 1 : 0);
  out << "p cnf " << cnf.num_vars << ' ' << n << '\n';
  for (const Clause& c : cnf.clauses) {
    for (Var v : c.pos) out << v << ' ';
    for (Var v : c.neg) out << '-' << v << ' ';
    out << "0\n";
  }
  if (cnf.unsatisfiable) out << "0\n";
  return out.str();
}

bool eval(const Clause& clause, const Assignment& a) {
  for (Var v : clause.pos)
    if (a[v]) return true;
  for (Var v : clause.neg)
    if (!a[v]) return true;
  return false;
}

bool eval(const Cnf& cnf, const Assignment& a) {
  if (a.size() != cnf.num_vars) throw std::invalid_argument("assignment length mismatch");
  if (cnf.unsatisfiable) return false;
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const Clause& c) { return eval(c, a); });
}

std::string to_string(const Clause& clause) {
  std::string s;
  for (Var v : clause.pos) s += (s.empty() ? "" : " | ") + ("x" + std::to_string(v));
  for (Var v : clause.neg) s += (s.empty() ? "" : " | ") + ("~x" + std::to_string(v));
  return "(" + s + ")";
}

}  // namespace allsat
