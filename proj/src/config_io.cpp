#include "taucrest/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace taucrest {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class LineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tiny cursor over one line.
struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw LineError(std::string("expected '") + c + "'" + (done() ? " at end of line" : " near '" + s.substr(i) + "'"));
  }
  bool peek_label() {
    skip();
    return i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_');
  }
  bool peek_number() {
    skip();
    return i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+');
  }
  std::string label() {
    skip();
    if (!peek_label()) throw LineError("expected a label" + (done() ? std::string(" at end of line") : " near '" + s.substr(i) + "'"));
    const std::size_t b = i;
    while (i < s.size() && is_label_char(s[i])) ++i;
    return s.substr(b, i - b);
  }
  std::size_t natural() {
    skip();
    const std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw LineError("expected a non-negative integer");
    return std::stoul(s.substr(b, i - b));
  }
  mpq_class rational() {
    skip();
    std::size_t b = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    std::string tok = s.substr(b, i - b);
    if (!tok.empty() && tok[0] == '+') tok = tok.substr(1);
    if (tok.empty() || tok == "-" || tok.back() == '/') throw LineError("expected a number");
    mpq_class q;
    if (q.set_str(tok, 10) != 0) throw LineError("malformed number '" + tok + "'");
    if (q.get_den() == 0) throw LineError("zero denominator in '" + tok + "'");
    q.canonicalize();
    return q;
  }
  RationalRows matrix() {
    RationalRows rows;
    expect('[');
    if (eat(']')) return rows;
    do {
      expect('[');
      std::vector<mpq_class> row;
      if (!eat(']')) {
        do row.push_back(rational());
        while (eat(','));
        expect(']');
      }
      rows.push_back(std::move(row));
    } while (eat(','));
    expect(']');
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw LineError("matrix rows have different lengths");
    }
    return rows;
  }
  void end() {
    if (!done()) throw LineError("unexpected trailing text '" + s.substr(i) + "'");
  }
};

struct RawTerm {
  mpq_class coeff;
  std::vector<std::string> labels;  // as written: b.a -> {b, a}
};
struct RawRelation {
  std::vector<RawTerm> terms;
  std::size_t line;
};

std::string where(const std::string& origin, std::size_t line) { return origin + ":" + std::to_string(line) + ": "; }

std::vector<RawTerm> parse_relation(Cursor& c) {
  std::vector<RawTerm> terms;
  bool first = true;
  for (;;) {
    mpq_class sign = 1;
    if (c.eat('-')) sign = -1;
    else if (!c.eat('+') && !first) break;
    first = false;
    RawTerm t;
    t.coeff = sign;
    if (c.peek_number()) {
      t.coeff *= c.rational();
      c.eat('*');
    }
    t.labels.push_back(c.label());
    while (c.eat('.')) t.labels.push_back(c.label());
    terms.push_back(std::move(t));
    if (c.done()) break;
    c.skip();
    if (c.s[c.i] == '=') break;
  }
  if (c.eat('=')) {
    if (c.rational() != 0) throw LineError("a relation must be of the form '... = 0'");
  }
  c.end();
  return terms;
}

std::string key_of(const std::string& line, std::string& rest) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw LineError("expected 'key = value'");
  rest = trim(line.substr(eq + 1));
  return trim(line.substr(0, eq));
}

}  // namespace

Field parse_field(const std::string& s) {
  const std::string t = trim(s);
  if (t == "Q" || t == "q" || t == "QQ") return Field::rationals();
  try {
    std::size_t pos = 0;
    const unsigned long long p = std::stoull(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing");
    return Field::prime(p);
  } catch (const std::exception&) {
    throw InputError("field must be a prime p < 2^31 or Q, got '" + t + "'");
  }
}

InputFile parse_input(const std::string& text, const std::string& origin) {
  InputFile in;
  in.origin = origin;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  std::size_t lineno = 0;
  bool have_vertices = false, have_bimodule_kind = false;
  std::vector<std::pair<Arrow, std::size_t>> arrows;
  std::vector<RawRelation> relations;
  std::optional<std::size_t> nilpotent;
  std::size_t quiver_line = 0;

  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.front() == '[') {
        if (line.back() != ']') throw LineError("malformed section header");
        section = trim(line.substr(1, line.size() - 2));
        static const std::vector<std::string> known = {"quiver", "relations", "bimodule", "enum", "module"};
        if (std::find(known.begin(), known.end(), section) == known.end()) throw LineError("unknown section [" + section + "]");
        if (section == "quiver") quiver_line = lineno;
        if (section == "bimodule") {
          in.has_bimodule = true;
          in.bimodule.line = lineno;
        }
        if (section == "module") {
          in.module.present = true;
          in.module.line = lineno;
        }
        continue;
      }
      if (section.empty()) throw LineError("content before the first section header");
      Cursor c{line};
      if (section == "quiver") {
        if (line.rfind("arrow", 0) == 0 && line.size() > 5 && std::isspace(static_cast<unsigned char>(line[5]))) {
          c.i = 5;
          Arrow a;
          a.label = c.label();
          c.expect(':');
          const std::size_t s = c.natural();
          c.expect('-');
          c.expect('>');
          const std::size_t t = c.natural();
          c.end();
          if (s == 0 || t == 0) throw LineError("vertices are numbered from 1");
          a.source = s - 1;
          a.target = t - 1;
          for (const auto& [b, l] : arrows) {
            if (b.label == a.label) throw LineError("duplicate arrow label '" + a.label + "' (first declared on line " + std::to_string(l) + ")");
          }
          arrows.push_back({a, lineno});
        } else {
          std::string rest;
          const std::string key = key_of(line, rest);
          if (key != "vertices") throw LineError("unknown quiver entry '" + key + "'");
          Cursor v{rest};
          in.presentation.quiver.vertices = v.natural();
          v.end();
          if (in.presentation.quiver.vertices == 0) throw LineError("a quiver needs at least one vertex");
          have_vertices = true;
        }
      } else if (section == "relations") {
        if (line.rfind("nilpotent", 0) == 0) {
          std::string rest;
          key_of(line, rest);
          Cursor v{rest};
          nilpotent = v.natural();
          v.end();
          if (*nilpotent < 2) throw LineError("nilpotent bound must be at least 2");
        } else {
          relations.push_back({parse_relation(c), lineno});
        }
      } else if (section == "bimodule") {
        auto& b = in.bimodule;
        if (!have_bimodule_kind) {
          have_bimodule_kind = true;
          std::istringstream ws(line);
          std::string w1, w2, extra;
          ws >> w1 >> w2;
          std::getline(ws, extra);
          if (w1 == "regular" && w2.empty()) b.kind = BimoduleSpec::Kind::Regular;
          else if (w1 == "dual" && w2.empty()) b.kind = BimoduleSpec::Kind::Dual;
          else if (w1 == "zero" && w2.empty()) b.kind = BimoduleSpec::Kind::Zero;
          else if (w1 == "custom" && w2.empty()) b.kind = BimoduleSpec::Kind::Custom;
          else if (w1 == "triangular" && w2 == "self" && trim(extra).empty()) b.kind = BimoduleSpec::Kind::TriangularSelf;
          else if (w1 == "triangular" && w2 == "dual" && trim(extra).empty()) b.kind = BimoduleSpec::Kind::TriangularDual;
          else if (w1 == "triangular" && !w2.empty()) {
            b.kind = BimoduleSpec::Kind::TriangularFile;
            b.file_ref = trim(line.substr(line.find("triangular") + 10));
          } else {
            throw LineError("unknown bimodule '" + line + "' (expected regular, dual, zero, custom, triangular self|dual|<file>)");
          }
          continue;
        }
        if (b.kind != BimoduleSpec::Kind::Custom) throw LineError("only a custom bimodule takes further lines");
        std::string rest;
        const std::string key = key_of(line, rest);
        if (key == "dim") {
          Cursor v{rest};
          b.dim = v.natural();
          v.end();
          continue;
        }
        std::istringstream ks(key);
        std::string side, what, name, extra;
        ks >> side >> what >> name >> extra;
        if ((side != "left" && side != "right") || (what != "vertex" && what != "arrow") || name.empty() || !extra.empty()) {
          throw LineError("expected 'left|right vertex|arrow <name> = [[...]]', got '" + key + "'");
        }
        Cursor v{rest};
        ActionLine a{side == "left", what == "vertex", name, v.matrix(), lineno};
        v.end();
        b.actions.push_back(std::move(a));
      } else if (section == "enum") {
        std::string rest;
        const std::string key = key_of(line, rest);
        if (key == "field") {
          try {
            parse_field(rest);
          } catch (const InputError& e) {
            throw LineError(e.what());
          }
          in.enumeration.field = rest;
        } else if (key == "max-dim") {
          Cursor v{rest};
          in.enumeration.max_dim = v.natural();
          v.end();
          if (*in.enumeration.max_dim == 0) throw LineError("max-dim must be at least 1");
        } else if (key == "seed") {
          Cursor v{rest};
          v.skip();
          std::size_t pos = 0;
          try {
            in.enumeration.seed = std::stoull(rest, &pos);
          } catch (const std::exception&) {
            throw LineError("seed must be a non-negative integer");
          }
          if (pos != rest.size()) throw LineError("seed must be a non-negative integer");
        } else {
          throw LineError("unknown [enum] key '" + key + "'");
        }
      } else if (section == "module") {
        auto& m = in.module;
        std::string rest;
        const std::string key = key_of(line, rest);
        if (key == "dims") {
          Cursor v{rest};
          const bool bracket = v.eat('[');
          do m.dims.push_back(v.natural());
          while (v.eat(',') || (!bracket && !v.done()));
          if (bracket) v.expect(']');
          v.end();
        } else if (key.rfind("arrow", 0) == 0) {
          const std::string label = trim(key.substr(5));
          if (label.empty()) throw LineError("expected 'arrow <label> = [[...]]'");
          Cursor v{rest};
          m.arrows.push_back({label, v.matrix()});
          v.end();
        } else if (key == "named") {
          Cursor v{rest};
          do {
            std::size_t mult = 1;
            if (v.peek_number()) {
              mult = v.natural();
              v.expect('*');
            }
            const std::string k = v.label();
            if (k != "P" && k != "S" && k != "I") throw LineError("named modules are P(i), S(i) or I(i), got '" + k + "'");
            v.expect('(');
            const std::size_t vert = v.natural();
            v.expect(')');
            if (vert == 0) throw LineError("vertices are numbered from 1");
            m.named.push_back({k[0], vert - 1, mult});
          } while (v.eat('+'));
          v.end();
        } else {
          throw LineError("unknown [module] key '" + key + "'");
        }
      }
    } catch (const LineError& e) {
      throw InputError(where(origin, lineno) + e.what());
    }
  }

  if (!have_vertices) throw InputError(where(origin, quiver_line ? quiver_line : 1) + "missing 'vertices = n' in [quiver]");
  auto& q = in.presentation.quiver;
  for (const auto& [a, l] : arrows) {
    if (a.source >= q.vertices || a.target >= q.vertices) {
      throw InputError(where(origin, l) + "arrow '" + a.label + "' uses a vertex outside 1.." + std::to_string(q.vertices));
    }
    q.arrows.push_back(a);
  }
  in.presentation.nilpotency_bound = nilpotent.value_or(0);
  std::size_t longest = 0;
  for (const auto& r : relations) {
    Relation rel;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& t : r.terms) {
      RelationTerm term;
      term.coeff = t.coeff;
      for (auto it = t.labels.rbegin(); it != t.labels.rend(); ++it) {
        auto idx = q.arrow_index(*it);
        if (!idx) throw InputError(where(origin, r.line) + "unknown arrow '" + *it + "'");
        if (!term.path.empty() && q.arrows[term.path.back()].target != q.arrows[*idx].source) {
          throw InputError(where(origin, r.line) + "path is not composable at '" + *it + "'");
        }
        term.path.push_back(*idx);
      }
      const std::pair<std::size_t, std::size_t> e{q.arrows[term.path.front()].source, q.arrows[term.path.back()].target};
      if (ends && *ends != e) throw InputError(where(origin, r.line) + "terms of a relation must share source and target");
      ends = e;
      longest = std::max(longest, term.path.size());
      if (sgn(term.coeff) != 0) rel.push_back(std::move(term));
    }
    if (!rel.empty()) in.presentation.relations.push_back(std::move(rel));
  }
  if (!nilpotent) {
    // Without an explicit bound the quiver must be acyclic; paths then die at length > #vertices.
    in.presentation.nilpotency_bound = std::max<std::size_t>(q.vertices + 1, std::max<std::size_t>(2, longest + 1));
    std::vector<int> state(q.vertices, 0);
    std::function<bool(std::size_t)> cyclic = [&](std::size_t v) {
      state[v] = 1;
      for (const auto& a : q.arrows) {
        if (a.source != v) continue;
        if (state[a.target] == 1 || (state[a.target] == 0 && cyclic(a.target))) return true;
      }
      state[v] = 2;
      return false;
    };
    for (std::size_t v = 0; v < q.vertices; ++v) {
      if (state[v] == 0 && cyclic(v)) throw InputError(where(origin, quiver_line) + "the quiver has an oriented cycle; give 'nilpotent = L' in [relations]");
    }
  }
  if (in.has_bimodule && !have_bimodule_kind) throw InputError(where(origin, in.bimodule.line) + "empty [bimodule] section");
  return in;
}

InputFile load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str(), path);
}

namespace {

Mat to_mat(Field f, const RationalRows& rows, std::size_t r, std::size_t c, const std::string& ctx) {
  if (rows.empty() && (r == 0 || c == 0)) return Mat(f, r, c);
  if (rows.size() != r || (r > 0 && rows.front().size() != c)) {
    throw LineError(ctx + ": matrix is " + std::to_string(rows.size()) + "x" + std::to_string(rows.empty() ? 0 : rows.front().size()) +
                    ", expected " + std::to_string(r) + "x" + std::to_string(c));
  }
  std::vector<std::vector<Scalar>> s;
  for (const auto& row : rows) {
    std::vector<Scalar> out;
    for (const auto& q : row) {
      try {
        out.emplace_back(f, q);
      } catch (const std::domain_error&) {
        throw LineError(ctx + ": entry " + q.get_str() + " has a denominator divisible by " + std::to_string(f.characteristic()));
      }
    }
    s.push_back(std::move(out));
  }
  return Mat::from_rows(f, s);
}

std::size_t vertex_number(const std::string& name, std::size_t n) {
  std::size_t pos = 0;
  std::size_t v = 0;
  try {
    v = std::stoul(name, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != name.size() || v == 0 || v > n) throw LineError("vertex '" + name + "' is not in 1.." + std::to_string(n));
  return v - 1;
}

// Generator actions of a custom section: left over `l`, right over `r`.
GeneratorActions custom_actions(const BimoduleSpec& b, const Algebra& l, const Algebra& r, const std::string& origin) {
  const Field f = l.field();
  GeneratorActions g;
  g.dim = b.dim;
  const Mat zero(f, b.dim, b.dim);
  std::vector<std::optional<Mat>> lv(l.vertex_count()), rv(r.vertex_count());
  g.left_arrow.assign(l.arrow_count(), zero);
  g.right_arrow.assign(r.arrow_count(), zero);
  for (const auto& a : b.actions) {
    try {
      const Algebra& alg = a.left ? l : r;
      const Mat m = to_mat(f, a.matrix, b.dim, b.dim, std::string(a.left ? "left" : "right") + (a.vertex ? " vertex " : " arrow ") + a.name);
      if (a.vertex) {
        (a.left ? lv : rv)[vertex_number(a.name, alg.vertex_count())] = m;
      } else {
        auto idx = alg.quiver().arrow_index(a.name);
        if (!idx) throw LineError("unknown arrow '" + a.name + "'");
        (a.left ? g.left_arrow : g.right_arrow)[*idx] = m;
      }
    } catch (const LineError& e) {
      throw InputError(where(origin, a.line) + e.what());
    }
  }
  for (std::size_t v = 0; v < lv.size(); ++v) {
    if (!lv[v]) throw InputError(where(origin, b.line) + "custom bimodule: missing 'left vertex " + std::to_string(v + 1) + "'");
    g.left_vertex.push_back(*lv[v]);
  }
  for (std::size_t v = 0; v < rv.size(); ++v) {
    if (!rv[v]) throw InputError(where(origin, b.line) + "custom bimodule: missing 'right vertex " + std::to_string(v + 1) + "'");
    g.right_vertex.push_back(*rv[v]);
  }
  return g;
}

Algebra build_algebra(const InputFile& in, Field field) {
  try {
    return Algebra::build(in.presentation, field);
  } catch (const std::invalid_argument& e) {
    throw InputError(in.origin + ": " + e.what());
  }
}

}  // namespace

Configuration instantiate(const InputFile& in, Field field) {
  Configuration c;
  c.base = build_algebra(in, field);
  c.algebra = c.base;
  using K = BimoduleSpec::Kind;
  const auto& b = in.bimodule;
  try {
    switch (in.has_bimodule ? b.kind : K::Zero) {
      case K::Regular: c.bimodule = regular_bimodule(c.base); break;
      case K::Dual: c.bimodule = dual_bimodule(c.base); break;
      case K::Zero: c.bimodule = zero_bimodule(c.base); break;
      case K::Custom: c.bimodule = custom_bimodule(c.base, custom_actions(b, c.base, c.base, in.origin)); break;
      case K::TriangularSelf:
      case K::TriangularDual: {
        TriangularSetup t = b.kind == K::TriangularSelf ? triangular_self(c.base) : triangular_dual(c.base);
        c.algebra = t.algebra;
        c.bimodule = t.bimodule;
        break;
      }
      case K::TriangularFile: {
        std::filesystem::path ref(b.file_ref);
        if (ref.is_relative()) ref = std::filesystem::path(in.origin).parent_path() / ref;
        InputFile sf;
        try {
          sf = load_input(ref.string());
        } catch (const InputError& e) {
          throw InputError(where(in.origin, b.line) + "triangular reference: " + e.what());
        }
        if (!sf.has_bimodule || sf.bimodule.kind != K::Custom) {
          throw InputError(where(in.origin, b.line) + "triangular reference " + ref.string() + " must define a custom bimodule");
        }
        const Algebra s = build_algebra(sf, field);
        TriangularSetup t = triangular_bimodule(c.base, s, custom_actions(sf.bimodule, s, c.base, sf.origin));
        c.algebra = t.algebra;
        c.bimodule = t.bimodule;
        break;
      }
    }
  } catch (const AlgebraError& e) {
    throw InputError(where(in.origin, b.line) + e.what());
  }
  c.ext = TrivialExtension::create(c.bimodule);

  if (in.module.present) {
    const auto& m = in.module;
    const Algebra& a = c.algebra;
    try {
      if (!m.named.empty()) {
        if (!m.dims.empty() || !m.arrows.empty()) throw LineError("[module] takes either 'named' or 'dims'/'arrow' lines");
        std::vector<Rep> parts;
        for (const auto& nm : m.named) {
          if (nm.vertex >= a.vertex_count()) throw LineError("vertex " + std::to_string(nm.vertex + 1) + " out of range");
          const Rep r = nm.kind == 'P' ? projective_module(a, nm.vertex) : nm.kind == 'S' ? simple_module(a, nm.vertex) : injective_module(a, nm.vertex);
          for (std::size_t k = 0; k < nm.multiplicity; ++k) parts.push_back(r);
        }
        c.module = direct_sum(a, parts).sum;
      } else {
        if (m.dims.size() != a.vertex_count()) {
          throw LineError("'dims' needs " + std::to_string(a.vertex_count()) + " entries, got " + std::to_string(m.dims.size()));
        }
        std::vector<std::optional<Mat>> arrows(a.arrow_count());
        for (const auto& [label, rows] : m.arrows) {
          auto idx = a.quiver().arrow_index(label);
          if (!idx) throw LineError("unknown arrow '" + label + "'");
          const auto& arr = a.quiver().arrows[*idx];
          arrows[*idx] = to_mat(field, rows, m.dims[arr.target], m.dims[arr.source], "arrow " + label);
        }
        std::vector<Mat> mats;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
          const auto& arr = a.quiver().arrows[k];
          mats.push_back(arrows[k] ? *arrows[k] : Mat(field, m.dims[arr.target], m.dims[arr.source]));
        }
        c.module = Rep::make(a, m.dims, std::move(mats));
      }
    } catch (const LineError& e) {
      throw InputError(where(in.origin, m.line) + e.what());
    } catch (const RepError& e) {
      throw InputError(where(in.origin, m.line) + e.what());
    }
  }

  std::ostringstream d;
  d << "A: " << c.algebra.vertex_count() << " vertices, " << c.algebra.arrow_count() << " arrows, dim " << c.algebra.dim()
    << " over " << field.name() << "; M: " << c.bimodule.summary();
  c.description = d.str();
  return c;
}

namespace {

const std::map<std::string, std::string>& builtins() {
  static const std::map<std::string, std::string> m = {
      {"a2_dual",
       "# A = K(1 -> 2) and M = D(A); the trivial extension is the\n"
       "# Nakayama algebra on the 2-cycle with paths of length 3 zero.\n"
       "[quiver]\n"
       "vertices = 2\n"
       "arrow a: 1 -> 2\n"
       "\n"
       "[relations]\n"
       "nilpotent = 2\n"
       "\n"
       "[bimodule]\n"
       "dual\n"
       "\n"
       "[enum]\n"
       "field = 2\n"
       "max-dim = 4\n"
       "seed = 1\n"},
      {"a2_lower_triangular",
       "# The lower triangular matrix algebra [[A, 0], [A, A]] with A = K(1 -> 2),\n"
       "# viewed as the trivial extension of A x A by the bimodule A.\n"
       "# Vertices 1, 2 belong to the first factor, 3, 4 to the second.\n"
       "[quiver]\n"
       "vertices = 2\n"
       "arrow a: 1 -> 2\n"
       "\n"
       "[relations]\n"
       "nilpotent = 2\n"
       "\n"
       "[bimodule]\n"
       "triangular self\n"
       "\n"
       "[enum]\n"
       "field = 2\n"
       "max-dim = 4\n"
       "seed = 1\n"},
  };
  return m;
}

}  // namespace

const std::string& builtin_input(const std::string& name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw InputError("no built-in configuration '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_names() { return {"a2_dual", "a2_lower_triangular"}; }

}  // namespace taucrest
