#include <algorithm>
#include <cctype>
#include <sstream>

#include "hgl/scenario.hpp"

namespace hgl {

std::string ExprAst::str() const {
  if (kind == Kind::Name) return name;
  std::string s = "quotient(" + ideal + "^n";
  if (!name.empty()) s += "," + name;
  return s + ")";
}

namespace {

struct Line {
  int no = 0;
  std::string text;  // comment-stripped
};

std::string strip_comment(const std::string& raw) {
  auto pos = raw.find('#');
  std::string s = pos == std::string::npos ? raw : raw.substr(0, pos);
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.pop_back();
  return s;
}

struct LineCursor {
  const Line& line;
  size_t i = 0;

  SourcePos pos() const { return {line.no, static_cast<int>(i) + 1}; }
  void skip_ws() {
    while (i < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[i])))
      ++i;
  }
  bool done() {
    skip_ws();
    return i >= line.text.size();
  }
  std::string word() {
    skip_ws();
    size_t start = i;
    while (i < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[i])))
      ++i;
    return line.text.substr(start, i - start);
  }
  std::string rest() {
    skip_ws();
    std::string r = line.text.substr(i);
    i = line.text.size();
    return r;
  }
};

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

long long parse_ll(const std::string& s, SourcePos pos, const std::string& what) {
  if (s.empty()) throw ScenarioParseError(pos, "expected " + what);
  size_t k = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    k = 1;
  }
  if (k >= s.size()) throw ScenarioParseError(pos, "expected " + what);
  long long v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ScenarioParseError(pos, "malformed " + what + " '" + s + "'");
    v = v * 10 + (s[k] - '0');
    if (v > (1LL << 60)) throw ScenarioParseError(pos, what + " out of range");
  }
  return neg ? -v : v;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// comma-separated polynomials with source positions
std::vector<PolySrc> split_polys(const std::string& text, int line_no, int col0) {
  std::vector<PolySrc> out;
  size_t start = 0;
  for (size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == ',') {
      std::string piece = text.substr(start, k - start);
      size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead])))
        ++lead;
      PolySrc p;
      p.text = trim(piece);
      p.pos = {line_no, col0 + static_cast<int>(start + lead)};
      out.push_back(std::move(p));
      start = k + 1;
    }
  }
  return out;
}

// key=value tokens on functor/compose lines
std::pair<std::string, std::string> split_kv(const std::string& tok, SourcePos pos) {
  auto eq = tok.find('=');
  if (eq == std::string::npos)
    throw ScenarioParseError(pos, "expected key=value, got '" + tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

ExprAst parse_expr(const std::string& text, SourcePos pos) {
  ExprAst e;
  e.pos = pos;
  const std::string prefix = "quotient(";
  if (text.rfind(prefix, 0) == 0) {
    if (text.back() != ')')
      throw ScenarioParseError(pos, "unterminated quotient(...) expression");
    std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    auto caret = inner.find("^n");
    if (caret == std::string::npos)
      throw ScenarioParseError(pos, "quotient expression needs the form quotient(<ideal>^n[,<module>])");
    e.kind = ExprAst::Kind::QuotPower;
    e.ideal = trim(inner.substr(0, caret));
    std::string tail = trim(inner.substr(caret + 2));
    if (!tail.empty()) {
      if (tail[0] != ',')
        throw ScenarioParseError(pos, "expected ',' after ^n in quotient expression");
      e.name = trim(tail.substr(1));
      if (!is_identifier(e.name))
        throw ScenarioParseError(pos, "malformed module name '" + e.name + "'");
    }
    if (!is_identifier(e.ideal))
      throw ScenarioParseError(pos, "malformed ideal name '" + e.ideal + "'");
    return e;
  }
  e.kind = ExprAst::Kind::Name;
  e.name = trim(text);
  if (!is_identifier(e.name))
    throw ScenarioParseError(pos, "malformed name '" + e.name + "'");
  return e;
}

}  // namespace

ScenarioSpec parse_scenario(const std::string& text) {
  ScenarioSpec spec;
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      std::string s = strip_comment(raw);
      if (trim(s).empty()) continue;
      lines.push_back({no, s});
    }
  }
  if (lines.empty()) throw ScenarioParseError({1, 1}, "syntax error: empty scenario");

  bool seen_functor = false;
  for (const auto& line : lines) {
    LineCursor c{line};
    SourcePos at = c.pos();
    std::string head = c.word();

    if (head == "char") {
      SourcePos p = c.pos();
      long long ch = parse_ll(c.word(), p, "characteristic");
      if (ch != 0 && !is_odd_prime(ch))
        throw ScenarioParseError(p, "characteristic must be 0 or an odd prime");
      if (spec.char_set && spec.characteristic != ch)
        throw ScenarioParseError(p, "inconsistent characteristic");
      spec.characteristic = ch;
      spec.char_set = true;
    } else if (head == "ring") {
      if (!spec.ring_name.empty())
        throw ScenarioParseError(at, "duplicate ring declaration");
      spec.ring_pos = at;
      SourcePos p = c.pos();
      spec.ring_name = c.word();
      if (!is_identifier(spec.ring_name))
        throw ScenarioParseError(p, "malformed ring name");
      p = c.pos();
      if (c.word() != "vars") throw ScenarioParseError(p, "expected 'vars'");
      bool in_weights = false;
      while (!c.done()) {
        SourcePos wp = c.pos();
        std::string tok = c.word();
        if (tok == "weights") {
          in_weights = true;
          continue;
        }
        if (in_weights)
          spec.weights.push_back(static_cast<int>(parse_ll(tok, wp, "weight")));
        else {
          if (!is_identifier(tok))
            throw ScenarioParseError(wp, "malformed variable name '" + tok + "'");
          spec.vars.push_back(tok);
        }
      }
      if (spec.vars.empty()) throw ScenarioParseError(at, "ring needs variables");
    } else if (head == "rel") {
      PolySrc p;
      p.pos = c.pos();
      p.text = trim(c.rest());
      if (p.text.empty()) throw ScenarioParseError(p.pos, "empty relation");
      spec.relations.push_back(std::move(p));
    } else if (head == "ideal") {
      IdealDecl d;
      d.pos = at;
      SourcePos p = c.pos();
      d.name = c.word();
      if (!is_identifier(d.name)) throw ScenarioParseError(p, "malformed ideal name");
      p = c.pos();
      if (c.word() != "=") throw ScenarioParseError(p, "expected '='");
      c.skip_ws();
      int col0 = static_cast<int>(c.i) + 1;
      d.gens = split_polys(c.rest(), line.no, col0);
      for (const auto& g : d.gens)
        if (g.text.empty()) throw ScenarioParseError(g.pos, "empty ideal generator");
      spec.ideals.push_back(std::move(d));
    } else if (head == "module") {
      ModuleDecl d;
      d.pos = at;
      SourcePos p = c.pos();
      d.name = c.word();
      if (!is_identifier(d.name)) throw ScenarioParseError(p, "malformed module name");
      p = c.pos();
      if (c.word() != "=") throw ScenarioParseError(p, "expected '='");
      p = c.pos();
      if (c.word() != "coker") throw ScenarioParseError(p, "expected 'coker'");
      p = c.pos();
      std::string shape = c.word();
      auto x = shape.find('x');
      if (x == std::string::npos)
        throw ScenarioParseError(p, "expected <rows>x<cols>");
      d.rows = static_cast<int>(parse_ll(shape.substr(0, x), p, "row count"));
      d.cols = static_cast<int>(parse_ll(shape.substr(x + 1), p, "column count"));
      if (d.rows < 1 || d.cols < 1)
        throw ScenarioParseError(p, "matrix shape must be positive");
      std::string rest = trim(c.rest());
      if (rest.empty() || rest.front() != '[' || rest.back() != ']')
        throw ScenarioParseError(p, "expected bracketed matrix [ ... ]");
      std::string body = rest.substr(1, rest.size() - 2);
      // rows separated by ';', entries by ','
      size_t start = 0;
      for (size_t k = 0; k <= body.size(); ++k) {
        if (k == body.size() || body[k] == ';') {
          auto row = split_polys(body.substr(start, k - start), line.no, 1);
          for (auto& e : row) d.entries.push_back(std::move(e));
          start = k + 1;
        }
      }
      if (static_cast<int>(d.entries.size()) != d.rows * d.cols)
        throw ScenarioParseError(
            p, "matrix has " + std::to_string(d.entries.size()) + " entries, expected " +
                   std::to_string(d.rows * d.cols));
      spec.modules.push_back(std::move(d));
    } else if (head == "functor") {
      if (seen_functor) throw ScenarioParseError(at, "duplicate functor line");
      seen_functor = true;
      FunctorDecl f;
      f.pos = at;
      SourcePos p = c.pos();
      f.kind = c.word();
      if (f.kind != "ext" && f.kind != "tor" && f.kind != "ext-swapped" &&
          f.kind != "h0m")
        throw ScenarioParseError(p, "unknown functor kind '" + f.kind + "'");
      while (!c.done()) {
        SourcePos kp = c.pos();
        auto [key, value] = split_kv(c.word(), kp);
        if (key == "i")
          f.i = static_cast<int>(parse_ll(value, kp, "homological index"));
        else if (key == "first")
          f.first = parse_expr(value, kp);
        else if (key == "second")
          f.second = parse_expr(value, kp);
        else
          throw ScenarioParseError(kp, "unknown functor field '" + key + "'");
      }
      if (f.i < 0) throw ScenarioParseError(f.pos, "homological index must be >= 0");
      spec.functor = std::move(f);
    } else if (head == "compose") {
      if (spec.compose) throw ScenarioParseError(at, "duplicate compose line");
      ComposeDecl d;
      d.pos = at;
      SourcePos p = c.pos();
      d.kind = c.word();
      if (d.kind != "ext" && d.kind != "tor")
        throw ScenarioParseError(p, "compose kind must be ext or tor");
      while (!c.done()) {
        SourcePos kp = c.pos();
        auto [key, value] = split_kv(c.word(), kp);
        if (key == "j")
          d.j = static_cast<int>(parse_ll(value, kp, "homological index"));
        else if (key == "with")
          d.with = value;
        else
          throw ScenarioParseError(kp, "unknown compose field '" + key + "'");
      }
      if (d.j < 0) throw ScenarioParseError(d.pos, "compose index must be >= 0");
      if (d.with.empty()) throw ScenarioParseError(d.pos, "compose needs with=<module>");
      spec.compose = std::move(d);
    } else if (head == "range") {
      SourcePos p = c.pos();
      spec.n0 = parse_ll(c.word(), p, "range start");
      p = c.pos();
      spec.n1 = parse_ll(c.word(), p, "range end");
      if (spec.n0 < 1 || spec.n1 < spec.n0)
        throw ScenarioParseError(p, "range must satisfy 1 <= n0 <= n1");
      spec.has_range = true;
    } else if (head == "fit") {
      SourcePos p = c.pos();
      if (c.word() != "max_period") throw ScenarioParseError(p, "expected 'max_period'");
      p = c.pos();
      spec.max_period = static_cast<int>(parse_ll(c.word(), p, "max_period"));
      if (spec.max_period < 1)
        throw ScenarioParseError(p, "max_period must be positive");
    } else if (head == "audit") {
      bool any = false;
      while (!c.done()) {
        SourcePos p = c.pos();
        std::string tok = c.word();
        if (tok == "dim")
          spec.audit_dim = any = true;
        else if (tok == "spread")
          spec.audit_spread = any = true;
        else
          throw ScenarioParseError(p, "audit options are 'dim' and 'spread'");
      }
      if (!any) throw ScenarioParseError(at, "audit needs at least one option");
    } else if (head == "oracle") {
      SourcePos p = c.pos();
      std::string tok = c.word();
      if (tok == "on")
        spec.oracle = true;
      else if (tok == "off")
        spec.oracle = false;
      else
        throw ScenarioParseError(p, "oracle takes 'on' or 'off'");
    } else {
      throw ScenarioParseError(at, "unknown directive '" + head + "'");
    }

    if (!c.done())
      throw ScenarioParseError(c.pos(), "trailing text on line");
  }

  if (spec.ring_name.empty())
    throw ScenarioParseError({1, 1}, "scenario declares no ring");

  resolve_scenario(spec);  // full validation, including name resolution
  return spec;
}

std::string print_scenario(const ScenarioSpec& spec) {
  std::ostringstream out;
  out << "char " << spec.characteristic << "\n";
  out << "ring " << spec.ring_name << " vars";
  for (const auto& v : spec.vars) out << " " << v;
  bool default_weights =
      std::all_of(spec.weights.begin(), spec.weights.end(), [](int w) { return w == 1; });
  if (!spec.weights.empty() && !default_weights) {
    out << " weights";
    for (int w : spec.weights) out << " " << w;
  }
  out << "\n";
  for (const auto& r : spec.relations) out << "rel " << r.text << "\n";
  for (const auto& d : spec.ideals) {
    out << "ideal " << d.name << " = ";
    for (size_t k = 0; k < d.gens.size(); ++k)
      out << (k ? ", " : "") << d.gens[k].text;
    out << "\n";
  }
  for (const auto& d : spec.modules) {
    out << "module " << d.name << " = coker " << d.rows << "x" << d.cols << " [ ";
    for (int r = 0; r < d.rows; ++r) {
      if (r) out << " ; ";
      for (int c = 0; c < d.cols; ++c)
        out << (c ? ", " : "") << d.entries[r * d.cols + c].text;
    }
    out << " ]\n";
  }
  if (spec.functor) {
    out << "functor " << spec.functor->kind << " i=" << spec.functor->i;
    if (spec.functor->first) out << " first=" << spec.functor->first->str();
    if (spec.functor->second) out << " second=" << spec.functor->second->str();
    out << "\n";
  }
  if (spec.compose)
    out << "compose " << spec.compose->kind << " j=" << spec.compose->j
        << " with=" << spec.compose->with << "\n";
  if (spec.has_range) out << "range " << spec.n0 << " " << spec.n1 << "\n";
  out << "fit max_period " << spec.max_period << "\n";
  if (spec.audit_dim || spec.audit_spread) {
    out << "audit";
    if (spec.audit_dim) out << " dim";
    if (spec.audit_spread) out << " spread";
    out << "\n";
  }
  if (spec.oracle) out << "oracle on\n";
  return out.str();
}

ResolvedScenario resolve_scenario(const ScenarioSpec& spec) {
  ResolvedScenario res;
  if (spec.vars.empty())
    throw ScenarioParseError(spec.ring_pos, "ring needs variables");
  std::vector<int> weights = spec.weights;
  if (weights.empty()) weights.assign(spec.vars.size(), 1);
  if (weights.size() != spec.vars.size())
    throw ScenarioParseError(spec.ring_pos, "one weight per variable required");

  RingPtr base;
  try {
    base = Ring::make(spec.vars, spec.characteristic, weights);
  } catch (const std::invalid_argument& e) {
    throw ScenarioParseError(spec.ring_pos, e.what());
  }

  auto parse_poly = [&](const PolySrc& src, const RingPtr& ring) {
    try {
      return Polynomial::parse(ring, src.text);
    } catch (const PolyParseError& e) {
      SourcePos p{src.pos.line, src.pos.col + static_cast<int>(e.offset)};
      throw ScenarioParseError(p, e.what());
    }
  };

  std::vector<Polynomial> rels;
  for (const auto& r : spec.relations) rels.push_back(parse_poly(r, base));
  try {
    res.ring = base->with_relations(std::move(rels));
  } catch (const std::invalid_argument& e) {
    throw ScenarioParseError(spec.relations.empty() ? spec.ring_pos : spec.relations[0].pos,
                             e.what());
  }

  auto name_taken = [&](const std::string& n) {
    if (n == spec.ring_name) return true;
    if (res.ideals.count(n) || res.modules.count(n)) return true;
    return false;
  };

  for (const auto& d : spec.ideals) {
    if (name_taken(d.name))
      throw ScenarioParseError(d.pos, "name '" + d.name + "' already declared");
    std::vector<Polynomial> gens;
    for (const auto& g : d.gens) {
      Polynomial p = parse_poly(g, res.ring);
      if (p.is_zero()) throw ScenarioParseError(g.pos, "zero ideal generator");
      gens.push_back(std::move(p));
    }
    res.ideals.emplace(d.name, Ideal(res.ring, std::move(gens)));
  }

  for (const auto& d : spec.modules) {
    if (name_taken(d.name))
      throw ScenarioParseError(d.pos, "name '" + d.name + "' already declared");
    std::vector<ModuleElement> cols;
    for (int c = 0; c < d.cols; ++c) {
      ModuleElement col(res.ring, d.rows);
      for (int r = 0; r < d.rows; ++r)
        col.comp(r) = parse_poly(d.entries[r * d.cols + c], res.ring);
      cols.push_back(std::move(col));
    }
    res.modules.emplace(d.name, Submodule::cokernel(res.ring, d.rows, std::move(cols)));
  }

  auto check_expr = [&](const ExprAst& e, bool allow_quot) {
    if (e.kind == ExprAst::Kind::Name) {
      if (e.name != spec.ring_name && !res.modules.count(e.name))
        throw ScenarioParseError(e.pos, "unknown name '" + e.name + "'");
      return;
    }
    if (!allow_quot)
      throw ScenarioParseError(e.pos, "only one argument may carry the power quotient");
    if (!res.ideals.count(e.ideal))
      throw ScenarioParseError(e.pos, "unknown name '" + e.ideal + "'");
    if (!e.name.empty() && e.name != spec.ring_name && !res.modules.count(e.name))
      throw ScenarioParseError(e.pos, "unknown name '" + e.name + "'");
  };

  if (spec.functor) {
    const FunctorDecl& f = *spec.functor;
    if (f.kind == "h0m") {
      if (!f.first || f.first->kind != ExprAst::Kind::QuotPower || !f.first->name.empty())
        throw ScenarioParseError(f.pos, "h0m needs first=quotient(<ideal>^n)");
      if (f.second) throw ScenarioParseError(f.pos, "h0m takes no second argument");
      check_expr(*f.first, true);
    } else {
      if (!f.first || !f.second)
        throw ScenarioParseError(f.pos, "functor needs first= and second=");
      bool first_quot = f.first->kind == ExprAst::Kind::QuotPower;
      bool second_quot = f.second->kind == ExprAst::Kind::QuotPower;
      if (first_quot == second_quot)
        throw ScenarioParseError(f.pos,
                                 "exactly one argument must be a quotient(<ideal>^n) power");
      if (f.kind == "ext-swapped" && !second_quot)
        throw ScenarioParseError(f.pos, "ext-swapped powers the second argument");
      if ((f.kind == "ext" || f.kind == "tor") && !first_quot)
        throw ScenarioParseError(f.pos, f.kind + " powers the first argument");
      check_expr(*f.first, first_quot);
      check_expr(*f.second, second_quot);
    }
  }

  if (spec.compose) {
    if (spec.compose->with != spec.ring_name && !res.modules.count(spec.compose->with))
      throw ScenarioParseError(spec.compose->pos,
                               "unknown name '" + spec.compose->with + "'");
    if (!spec.functor)
      throw ScenarioParseError(spec.compose->pos, "compose needs a functor line");
    if (spec.functor->kind == "h0m")
      throw ScenarioParseError(spec.compose->pos, "compose does not apply to h0m");
  }

  return res;
}

}  // namespace hgl
