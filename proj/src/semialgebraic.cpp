// Copyright 2026 The Linkfold Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linkfold/semialgebraic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>

#include "linkfold/errors.hpp"

namespace linkfold {

std::string variable_name(Variable v) { return (v % 2 == 0 ? "x" : "y") + std::to_string(v / 2); }

// ---------------------------------------------------------------- polynomial

Polynomial::Polynomial(Rational constant) { add_term({}, constant); }

Polynomial Polynomial::variable(Variable v) {
  Polynomial p;
  p.add_term({v}, Rational(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (Variable v : m) {
      if (v >= values.size()) throw InputError("assignment is missing " + variable_name(v));
      t *= values[v];
    }
    sum += t;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return Polynomial(s) * p; }

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

// ------------------------------------------------------------------- formula

Formula Formula::truth(bool value) {
  Formula f;
  f.kind = value ? Kind::kTrue : Kind::kFalse;
  return f;
}

namespace {

bool holds(const Rational& v, Relation r) {
  const int s = sgn(v);
  switch (r) {
    case Relation::kEq:
      return s == 0;
    case Relation::kLt:
      return s < 0;
    case Relation::kLe:
      return s <= 0;
    case Relation::kGt:
      return s > 0;
    case Relation::kGe:
      return s >= 0;
  }
  return false;
}

}  // namespace

Formula Formula::make_atom(Polynomial p, Relation r) {
  if (p.is_constant()) return truth(holds(p.constant_term(), r));
  Formula f;
  f.kind = Kind::kAtom;
  f.atom = Atom{std::move(p), r};
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (Formula& f : parts) {
    if (f.kind == Kind::kFalse) return truth(false);
    if (f.kind != Kind::kTrue) kept.push_back(std::move(f));
  }
  if (kept.empty()) return truth(true);
  if (kept.size() == 1) return std::move(kept.front());
  Formula f;
  f.kind = Kind::kAnd;
  f.children = std::move(kept);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (Formula& f : parts) {
    if (f.kind == Kind::kTrue) return truth(true);
    if (f.kind != Kind::kFalse) kept.push_back(std::move(f));
  }
  if (kept.empty()) return truth(false);
  if (kept.size() == 1) return std::move(kept.front());
  Formula f;
  f.kind = Kind::kOr;
  f.children = std::move(kept);
  return f;
}

Formula Formula::negation(Formula inner) {
  if (inner.kind == Kind::kTrue) return truth(false);
  if (inner.kind == Kind::kFalse) return truth(true);
  Formula f;
  f.kind = Kind::kNot;
  f.children.push_back(std::move(inner));
  return f;
}

bool Formula::evaluate(std::span<const Rational> values) const {
  switch (kind) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAtom:
      return holds(atom.polynomial.evaluate(values), atom.relation);
    case Kind::kAnd:
      return std::all_of(children.begin(), children.end(), [&](const Formula& f) { return f.evaluate(values); });
    case Kind::kOr:
      return std::any_of(children.begin(), children.end(), [&](const Formula& f) { return f.evaluate(values); });
    case Kind::kNot:
      return !children.front().evaluate(values);
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Formula::Kind::kAtom) {
    return a.atom.relation == b.atom.relation && a.atom.polynomial == b.atom.polynomial;
  }
  return a.children == b.children;
}

// ------------------------------------------------------------------ emission

namespace {

Polynomial X(VertexId v) { return Polynomial::variable(x_var(v)); }
Polynomial Y(VertexId v) { return Polynomial::variable(y_var(v)); }

Polynomial squared_length(VertexId a, VertexId b) {
  const Polynomial dx = X(a) - X(b);
  const Polynomial dy = Y(a) - Y(b);
  return dx * dx + dy * dy;
}

// cross(b - a, d - c)
Polynomial cross_poly(VertexId a, VertexId b, VertexId c, VertexId d) {
  return (X(b) - X(a)) * (Y(d) - Y(c)) - (Y(b) - Y(a)) * (X(d) - X(c));
}

// dot(b - a, d - c)
Polynomial dot_poly(VertexId a, VertexId b, VertexId c, VertexId d) {
  return (X(b) - X(a)) * (X(d) - X(c)) + (Y(b) - Y(a)) * (Y(d) - Y(c));
}

Polynomial orient(VertexId p, VertexId q, VertexId r) { return cross_poly(p, q, p, r); }

Formula atom(Polynomial p, Relation r) { return Formula::make_atom(std::move(p), r); }

Formula coincide(VertexId a, VertexId b) {
  if (a == b) return Formula::truth(true);
  return atom(squared_length(a, b), Relation::kEq);
}

std::string edge_name(EdgeId e) { return "e" + std::to_string(e); }
std::string vertex_name(VertexId v) { return "v" + std::to_string(v); }

// Both endpoints of segment (r, s) strictly on one side of line (p, q).
Formula strict_same_side(VertexId p, VertexId q, VertexId r, VertexId s) {
  return Formula::disjunction(
      {Formula::conjunction({atom(orient(p, q, r), Relation::kGt), atom(orient(p, q, s), Relation::kGt)}),
       Formula::conjunction({atom(orient(p, q, r), Relation::kLt), atom(orient(p, q, s), Relation::kLt)})});
}

// All four points collinear and (r, s) strictly beyond one end of (p, q).
Formula collinear_disjoint(VertexId p, VertexId q, VertexId r, VertexId s) {
  return Formula::conjunction(
      {atom(orient(p, q, r), Relation::kEq), atom(orient(p, q, s), Relation::kEq),
       Formula::disjunction(
           {Formula::conjunction({atom(dot_poly(p, q, p, r), Relation::kLt), atom(dot_poly(p, q, p, s), Relation::kLt)}),
            Formula::conjunction({atom(dot_poly(q, p, q, r), Relation::kLt), atom(dot_poly(q, p, q, s), Relation::kLt)})})});
}

// Shared endpoint a = b with the bars leaving it in different directions.
Formula endpoint_touch(VertexId a, VertexId a2, VertexId b, VertexId b2) {
  return Formula::conjunction(
      {coincide(a, b), Formula::disjunction({Formula::negation(atom(cross_poly(a, a2, b, b2), Relation::kEq)),
                                             atom(dot_poly(a, a2, b, b2), Relation::kLt)})});
}

struct PathSearch {
  std::vector<std::vector<EdgeId>> paths;
  bool capped = false;
};

PathSearch zero_paths(const Linkage& linkage, const std::vector<bool>& small, VertexId from, VertexId to) {
  PathSearch out;
  std::vector<bool> on_path(linkage.vertex_count(), false);
  std::vector<EdgeId> path;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (out.capped) return;
    if (v == to) {
      if (out.paths.size() == kMaxZeroPaths) {
        out.capped = true;
        return;
      }
      out.paths.push_back(path);
      return;
    }
    on_path[v] = true;
    for (EdgeId e : linkage.incident_edges(v)) {
      if (!small[e]) continue;
      const VertexId w = linkage.edge(e).other(v);
      if (on_path[w]) continue;
      path.push_back(e);
      dfs(w);
      path.pop_back();
      if (out.capped) break;
    }
    on_path[v] = false;
  };
  dfs(from);
  if (out.capped) {
    // fewest-edge path only
    std::vector<std::optional<EdgeId>> via(linkage.vertex_count());
    std::vector<bool> seen(linkage.vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : linkage.incident_edges(v)) {
        const VertexId w = linkage.edge(e).other(v);
        if (!small[e] || seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
    std::vector<EdgeId> p;
    for (VertexId v = to; v != from; v = linkage.edge(*via[v]).other(v)) p.push_back(*via[v]);
    std::reverse(p.begin(), p.end());
    out.paths = {p};
  }
  return out;
}

}  // namespace

ConstraintSystem emit_conf(const Linkage& linkage, const Rational& epsilon) {
  if (sgn(epsilon) < 0) throw InputError("epsilon must be nonnegative");
  ConstraintSystem s;
  s.kind = "conf";
  s.epsilon = epsilon;
  s.vertex_count = linkage.vertex_count();
  for (const Edge& e : linkage.edges()) {
    const Polynomial len2 = squared_length(e.tail, e.head);
    if (sgn(epsilon) == 0) {
      s.assertions.push_back(
          {"bar-length", edge_name(e.id), atom(len2 - Polynomial(e.rest_length * e.rest_length), Relation::kEq)});
      continue;
    }
    const Rational upper = e.rest_length + epsilon;
    s.assertions.push_back({"bar-upper", edge_name(e.id), atom(len2 - Polynomial(upper * upper), Relation::kLe)});
    if (e.rest_length >= epsilon) {
      const Rational lower = e.rest_length - epsilon;
      s.assertions.push_back({"bar-lower", edge_name(e.id), atom(len2 - Polynomial(lower * lower), Relation::kGe)});
    }
  }
  return s;
}

ConstraintSystem emit_nconf(const Linkage& linkage, const Rational& epsilon) {
  ConstraintSystem s = emit_conf(linkage, epsilon);
  s.kind = "nconf";
  s.metadata["zero-distance-paths"] = "all simple paths over bars with length <= epsilon, cap " +
                                      std::to_string(kMaxZeroPaths) + ", fewest-edge path beyond the cap";
  s.metadata["endpoint-touch"] = "shared point is an endpoint of both bars and the bars leave it in different directions";
  const std::size_t n = linkage.vertex_count();
  const std::size_t m = linkage.edge_count();
  std::vector<bool> small(m);
  for (EdgeId e = 0; e < m; ++e) small[e] = linkage.edge(e).rest_length <= epsilon;

  std::vector<std::string> capped_pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const PathSearch search = zero_paths(linkage, small, u, v);
      if (search.capped) capped_pairs.push_back(vertex_name(u) + " " + vertex_name(v));
      std::vector<Formula> options{Formula::negation(atom(squared_length(u, v), Relation::kEq))};
      for (const auto& path : search.paths) {
        Polynomial sum;
        for (EdgeId e : path) sum += squared_length(linkage.edge(e).tail, linkage.edge(e).head);
        options.push_back(atom(std::move(sum), Relation::kEq));
      }
      s.assertions.push_back({"vertex-separation", vertex_name(u) + " " + vertex_name(v),
                              Formula::disjunction(std::move(options))});
    }
  }
  if (!capped_pairs.empty()) {
    std::string joined;
    for (const auto& p : capped_pairs) joined += (joined.empty() ? "" : ", ") + p;
    s.metadata["zero-distance-paths-capped"] = joined;
  }

  for (EdgeId i = 0; i < m; ++i) {
    const Edge& e = linkage.edge(i);
    for (EdgeId j = i + 1; j < m; ++j) {
      const Edge& f = linkage.edge(j);
      std::vector<Formula> options;
      if (small[i]) options.push_back(atom(squared_length(e.tail, e.head), Relation::kEq));
      if (small[j]) options.push_back(atom(squared_length(f.tail, f.head), Relation::kEq));
      options.push_back(strict_same_side(e.tail, e.head, f.tail, f.head));
      options.push_back(strict_same_side(f.tail, f.head, e.tail, e.head));
      options.push_back(collinear_disjoint(e.tail, e.head, f.tail, f.head));
      for (VertexId a : {e.tail, e.head}) {
        for (VertexId b : {f.tail, f.head}) options.push_back(endpoint_touch(a, e.other(a), b, f.other(b)));
      }
      s.assertions.push_back({"bar-pair", edge_name(i) + " " + edge_name(j), Formula::disjunction(std::move(options))});
    }
  }

  for (VertexId w = 0; w < n; ++w) {
    for (const Edge& e : linkage.edges()) {
      if (e.tail == w || e.head == w) continue;
      Formula inside = Formula::conjunction({atom(orient(e.tail, e.head, w), Relation::kEq),
                                             atom(dot_poly(e.tail, w, e.tail, e.head), Relation::kGt),
                                             atom(dot_poly(e.head, w, e.head, e.tail), Relation::kGt)});
      s.assertions.push_back({"vertex-off-bar", vertex_name(w) + " " + edge_name(e.id), Formula::negation(std::move(inside))});
    }
  }
  return s;
}

// ------------------------------------------------------------- serialization

namespace {

std::string literal(const Rational& q) {
  const Integer num = abs(q.get_num());
  std::string body = q.get_den() == 1 ? num.get_str() + ".0"
                                      : "(/ " + num.get_str() + ".0 " + q.get_den().get_str() + ".0)";
  return sgn(q) < 0 ? "(- " + body + ")" : body;
}

std::string term(const Polynomial::Monomial& m, const Rational& c) {
  if (m.empty()) return literal(c);
  std::string out;
  std::size_t factors = m.size();
  if (c != 1) {
    out += literal(c);
    ++factors;
  }
  for (Variable v : m) out += (out.empty() ? "" : " ") + variable_name(v);
  return factors == 1 ? out : "(* " + out + ")";
}

std::string polynomial_text(const Polynomial& p) {
  if (p.terms().empty()) return "0.0";
  std::vector<std::string> parts;
  // higher degree first, then monomial order
  std::vector<std::pair<Polynomial::Monomial, Rational>> sorted(p.terms().begin(), p.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  for (const auto& [m, c] : sorted) parts.push_back(term(m, c));
  if (parts.size() == 1) return parts.front();
  std::string out = "(+";
  for (const auto& t : parts) out += " " + t;
  return out + ")";
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::kEq:
      return "=";
    case Relation::kLt:
      return "<";
    case Relation::kLe:
      return "<=";
    case Relation::kGt:
      return ">";
    case Relation::kGe:
      return ">=";
  }
  return "?";
}

void formula_text(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::kTrue:
      out += "true";
      return;
    case Formula::Kind::kFalse:
      out += "false";
      return;
    case Formula::Kind::kAtom:
      out += "(";
      out += relation_text(f.atom.relation);
      out += " " + polynomial_text(f.atom.polynomial) + " 0.0)";
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kNot:
      out += f.kind == Formula::Kind::kAnd ? "(and" : f.kind == Formula::Kind::kOr ? "(or" : "(not";
      for (const Formula& c : f.children) {
        out += " ";
        formula_text(c, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

std::string serialize(const ConstraintSystem& system) {
  std::string out;
  out += "; linkfold constraint system\n";
  out += "; kind: " + system.kind + "\n";
  out += "; epsilon: " + to_string(system.epsilon) + "\n";
  out += "; vertices: " + std::to_string(system.vertex_count) + "\n";
  for (const auto& [k, v] : system.metadata) out += "; meta " + k + ": " + v + "\n";
  out += "(set-logic QF_NRA)\n";
  for (VertexId v = 0; v < system.vertex_count; ++v) {
    out += "(declare-const " + variable_name(x_var(v)) + " Real)\n";
    out += "(declare-const " + variable_name(y_var(v)) + " Real)\n";
  }
  for (const Assertion& a : system.assertions) {
    out += "; family: " + a.family + (a.subject.empty() ? "" : " " + a.subject) + "\n";
    out += "(assert ";
    formula_text(a.formula, out);
    out += ")\n";
  }
  out += "(check-sat)\n";
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw InputError("unexpected end of input");
    SExpr e;
    if (text_[pos_] == '(') {
      ++pos_;
      e.is_list = true;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw InputError("unbalanced parenthesis");
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (text_[pos_] == ')') throw InputError("unexpected ')' at offset " + std::to_string(pos_));
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != ';') {
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::string& head(const SExpr& e) {
  static const std::string empty;
  if (!e.is_list || e.items.empty() || e.items.front().is_list) return empty;
  return e.items.front().atom;
}

std::optional<Variable> parse_variable(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) return std::nullopt;
  if (!std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  const std::size_t v = std::stoul(s.substr(1));
  return s[0] == 'x' ? x_var(v) : y_var(v);
}

Polynomial parse_polynomial(const SExpr& e) {
  if (!e.is_list) {
    if (auto v = parse_variable(e.atom)) return Polynomial::variable(*v);
    try {
      return Polynomial(parse_rational(e.atom));
    } catch (const std::invalid_argument&) {
      throw InputError("unknown term '" + e.atom + "'");
    }
  }
  const std::string& op = head(e);
  if (e.items.size() < 2) throw InputError("empty term");
  if (op == "+" || op == "*") {
    Polynomial acc = parse_polynomial(e.items[1]);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      acc = op == "+" ? acc + parse_polynomial(e.items[i]) : acc * parse_polynomial(e.items[i]);
    }
    return acc;
  }
  if (op == "-") {
    Polynomial acc = parse_polynomial(e.items[1]);
    if (e.items.size() == 2) return -acc;
    for (std::size_t i = 2; i < e.items.size(); ++i) acc -= parse_polynomial(e.items[i]);
    return acc;
  }
  if (op == "/" && e.items.size() == 3) {
    const Polynomial num = parse_polynomial(e.items[1]);
    const Polynomial den = parse_polynomial(e.items[2]);
    if (!den.is_constant() || sgn(den.constant_term()) == 0) throw InputError("division by a non-constant or zero");
    return Rational(1 / den.constant_term()) * num;
  }
  throw InputError("unknown operator '" + op + "'");
}

Formula parse_formula(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "true") return Formula::truth(true);
    if (e.atom == "false") return Formula::truth(false);
    throw InputError("unexpected atom '" + e.atom + "' in formula");
  }
  const std::string& op = head(e);
  Formula f;
  if (op == "and" || op == "or" || op == "not") {
    f.kind = op == "and" ? Formula::Kind::kAnd : op == "or" ? Formula::Kind::kOr : Formula::Kind::kNot;
    for (std::size_t i = 1; i < e.items.size(); ++i) f.children.push_back(parse_formula(e.items[i]));
    if (f.kind == Formula::Kind::kNot && f.children.size() != 1) throw InputError("not takes one argument");
    return f;
  }
  static const std::map<std::string, Relation> relations{
      {"=", Relation::kEq}, {"<", Relation::kLt}, {"<=", Relation::kLe}, {">", Relation::kGt}, {">=", Relation::kGe}};
  auto it = relations.find(op);
  if (it == relations.end() || e.items.size() != 3) throw InputError("malformed atom '" + op + "'");
  f.kind = Formula::Kind::kAtom;
  f.atom = Atom{parse_polynomial(e.items[1]) - parse_polynomial(e.items[2]), it->second};
  return f;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

ConstraintSystem parse_system(std::string_view text) {
  ConstraintSystem s;
  std::vector<std::pair<std::string, std::string>> families;  // per assert, in order

  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(";", 0) != 0) continue;
    const std::string body = trim(std::string_view(line).substr(1));
    auto value_of = [&](const std::string& key) { return trim(std::string_view(body).substr(key.size())); };
    if (body.rfind("kind:", 0) == 0) {
      s.kind = value_of("kind:");
    } else if (body.rfind("epsilon:", 0) == 0) {
      s.epsilon = parse_rational(value_of("epsilon:"));
    } else if (body.rfind("vertices:", 0) == 0) {
      s.vertex_count = std::stoul(value_of("vertices:"));
    } else if (body.rfind("meta ", 0) == 0) {
      const std::string rest = value_of("meta ");
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw InputError("malformed metadata line");
      s.metadata[rest.substr(0, colon)] = trim(std::string_view(rest).substr(colon + 1));
    } else if (body.rfind("family:", 0) == 0) {
      const std::string rest = value_of("family:");
      const std::size_t space = rest.find(' ');
      families.emplace_back(rest.substr(0, space), space == std::string::npos ? "" : rest.substr(space + 1));
    }
  }

  Reader reader(text);
  std::size_t declared = 0;
  std::size_t index = 0;
  while (!reader.at_end()) {
    const SExpr e = reader.read();
    const std::string& op = head(e);
    if (op == "set-logic" || op == "check-sat") continue;
    if (op == "declare-const") {
      if (e.items.size() != 3 || !parse_variable(e.items[1].atom)) throw InputError("malformed declare-const");
      ++declared;
      continue;
    }
    if (op != "assert" || e.items.size() != 2) throw InputError("unexpected command '" + op + "'");
    Assertion a;
    if (index < families.size()) {
      a.family = families[index].first;
      a.subject = families[index].second;
    }
    ++index;
    a.formula = parse_formula(e.items[1]);
    s.assertions.push_back(std::move(a));
  }
  if (declared != 2 * s.vertex_count) throw InputError("declared variables do not match the vertex count");
  return s;
}

bool eval(const ConstraintSystem& system, std::span<const Point> placement) {
  if (placement.size() < system.vertex_count) {
    throw InputError("assignment covers " + std::to_string(placement.size()) + " of " +
                     std::to_string(system.vertex_count) + " vertices");
  }
  std::vector<Rational> values;
  values.reserve(2 * placement.size());
  for (const Point& p : placement) {
    values.push_back(p.x);
    values.push_back(p.y);
  }
  return std::all_of(system.assertions.begin(), system.assertions.end(),
                     [&](const Assertion& a) { return a.formula.evaluate(values); });
}

}  // namespace linkfold
