#include "bsk/control.hpp"

#include "bsk/zk.hpp"  // InputError

#include <algorithm>
#include <cctype>
#include <set>

namespace bsk {

bool ControlExpr::operator==(const ControlExpr& o) const {
  if (kind != o.kind || sym != o.sym || children.size() != o.children.size()) return false;
  for (size_t i = 0; i < children.size(); ++i)
    if (!(children[i] == o.children[i])) return false;
  return true;
}

ControlExpr ce_empty() { return ControlExpr{}; }

ControlExpr ce_eps() {
  ControlExpr e;
  e.kind = ControlExpr::Eps;
  return e;
}

ControlExpr ce_sym(std::string id) {
  ControlExpr e;
  e.kind = ControlExpr::Sym;
  e.sym = std::move(id);
  return e;
}

ControlExpr ce_cat(std::vector<ControlExpr> parts) {
  std::vector<ControlExpr> flat;
  for (auto& p : parts) {
    if (p.kind == ControlExpr::Empty) return ce_empty();
    if (p.kind == ControlExpr::Eps) continue;
    if (p.kind == ControlExpr::Cat) {
      for (auto& c : p.children) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return ce_eps();
  if (flat.size() == 1) return std::move(flat[0]);
  ControlExpr e;
  e.kind = ControlExpr::Cat;
  e.children = std::move(flat);
  return e;
}

ControlExpr ce_union(std::vector<ControlExpr> parts) {
  std::vector<ControlExpr> flat;
  for (auto& p : parts) {
    if (p.kind == ControlExpr::Empty) continue;
    if (p.kind == ControlExpr::Union) {
      for (auto& c : p.children) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  // Deduplicate (cheap structural scan; skipped for very wide unions).
  if (flat.size() <= 64) {
    std::vector<ControlExpr> uniq;
    for (auto& p : flat) {
      bool seen = false;
      for (auto& q : uniq)
        if (q == p) {
          seen = true;
          break;
        }
      if (!seen) uniq.push_back(std::move(p));
    }
    flat = std::move(uniq);
  }
  if (flat.empty()) return ce_empty();
  if (flat.size() == 1) return std::move(flat[0]);
  ControlExpr e;
  e.kind = ControlExpr::Union;
  e.children = std::move(flat);
  return e;
}

ControlExpr ce_star(ControlExpr e) {
  if (e.kind == ControlExpr::Empty || e.kind == ControlExpr::Eps) return ce_eps();
  if (e.kind == ControlExpr::Star) return e;
  if (e.kind == ControlExpr::Plus) {
    ControlExpr s;
    s.kind = ControlExpr::Star;
    s.children.push_back(std::move(e.children[0]));
    return s;
  }
  ControlExpr s;
  s.kind = ControlExpr::Star;
  s.children.push_back(std::move(e));
  return s;
}

ControlExpr ce_plus(ControlExpr e) {
  if (e.kind == ControlExpr::Empty || e.kind == ControlExpr::Eps) return e;
  if (e.kind == ControlExpr::Star || e.kind == ControlExpr::Plus) return e;
  ControlExpr s;
  s.kind = ControlExpr::Plus;
  s.children.push_back(std::move(e));
  return s;
}

ControlExpr ce_diff(ControlExpr a, ControlExpr b) {
  if (a.kind == ControlExpr::Empty) return ce_empty();
  if (b.kind == ControlExpr::Empty) return a;
  if (a == b) return ce_empty();
  ControlExpr e;
  e.kind = ControlExpr::Diff;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

ControlExpr ce_pow(const ControlExpr& e, int n) {
  std::vector<ControlExpr> parts;
  for (int i = 0; i < n; ++i) parts.push_back(e);
  return ce_cat(std::move(parts));
}

namespace {

int prec(const ControlExpr& e) {
  switch (e.kind) {
    case ControlExpr::Union: return 0;
    case ControlExpr::Diff: return 1;
    case ControlExpr::Cat: return 2;
    case ControlExpr::Star:
    case ControlExpr::Plus: return 3;
    default: return 4;
  }
}

void print(const ControlExpr& e, int required, std::string& out) {
  bool wrap = prec(e) < required;
  if (wrap) out += '(';
  switch (e.kind) {
    case ControlExpr::Empty:
      out += "()\\()";  // eps minus eps: the empty set
      break;
    case ControlExpr::Eps:
      out += "()";
      break;
    case ControlExpr::Sym:
      out += e.sym;
      break;
    case ControlExpr::Cat:
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ' ';
        print(e.children[i], 2, out);
      }
      break;
    case ControlExpr::Union:
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += '|';
        print(e.children[i], 1, out);
      }
      break;
    case ControlExpr::Diff:
      print(e.children[0], 1, out);
      out += '\\';
      print(e.children[1], 2, out);
      break;
    case ControlExpr::Star:
      print(e.children[0], 3, out);
      out += '*';
      break;
    case ControlExpr::Plus:
      print(e.children[0], 3, out);
      out += '+';
      break;
  }
  if (wrap) out += ')';
}

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Parser {
  const std::string& text;
  size_t i = 0;

  explicit Parser(const std::string& t) : text(t) { skip(); }

  void skip() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eof() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  bool starts_atom() const {
    return !eof() && (is_id_char(peek()) || peek() == '(');
  }

  ControlExpr parse_alt() {
    std::vector<ControlExpr> parts;
    parts.push_back(parse_diff());
    while (!eof() && peek() == '|') {
      ++i;
      skip();
      parts.push_back(parse_diff());
    }
    return ce_union(std::move(parts));
  }

  ControlExpr parse_diff() {
    ControlExpr left = parse_cat();
    while (!eof() && peek() == '\\') {
      ++i;
      skip();
      left = ce_diff(std::move(left), parse_cat());
    }
    return left;
  }

  ControlExpr parse_cat() {
    if (!starts_atom())
      throw InputError("expected table id or '(' in control expression", static_cast<long>(i));
    std::vector<ControlExpr> parts;
    while (starts_atom()) parts.push_back(parse_postfix());
    return ce_cat(std::move(parts));
  }

  ControlExpr parse_postfix() {
    ControlExpr e = parse_atom();
    while (!eof() && (peek() == '*' || peek() == '+')) {
      e = peek() == '*' ? ce_star(std::move(e)) : ce_plus(std::move(e));
      ++i;
      skip();
    }
    return e;
  }

  ControlExpr parse_atom() {
    if (is_id_char(peek())) {
      size_t start = i;
      while (i < text.size() && is_id_char(text[i])) ++i;
      std::string id = text.substr(start, i - start);
      skip();
      return ce_sym(std::move(id));
    }
    if (peek() == '(') {
      ++i;
      skip();
      if (!eof() && peek() == ')') {
        ++i;
        skip();
        return ce_eps();
      }
      ControlExpr e = parse_alt();
      if (eof() || peek() != ')')
        throw InputError("unbalanced '(' in control expression", static_cast<long>(i));
      ++i;
      skip();
      return e;
    }
    throw InputError("unexpected character in control expression", static_cast<long>(i));
  }
};

}  // namespace

std::string control_to_string(const ControlExpr& e) {
  if (e.kind == ControlExpr::Empty) return "";
  std::string out;
  print(e, 0, out);
  return out;
}

ControlExpr parse_control(const std::string& text) {
  Parser p(text);
  if (p.eof()) return ce_empty();
  ControlExpr e = p.parse_alt();
  if (!p.eof())
    throw InputError("trailing characters in control expression", static_cast<long>(p.i));
  return e;
}

namespace {

void collect_symbols(const ControlExpr& e, std::set<std::string>& out) {
  if (e.kind == ControlExpr::Sym) out.insert(e.sym);
  for (const auto& c : e.children) collect_symbols(c, out);
}

struct NfaBuilder {
  Nfa n;
  std::map<std::string, int> sym_index;

  std::pair<int, int> build(const ControlExpr& e) {
    switch (e.kind) {
      case ControlExpr::Empty: {
        int s = n.add_state(), f = n.add_state();
        return {s, f};
      }
      case ControlExpr::Eps: {
        int s = n.add_state(), f = n.add_state();
        n.add_edge(s, -1, f);
        return {s, f};
      }
      case ControlExpr::Sym: {
        auto it = sym_index.find(e.sym);
        if (it == sym_index.end())
          throw InputError("control expression uses unknown table id '" + e.sym + "'");
        int s = n.add_state(), f = n.add_state();
        n.add_edge(s, it->second, f);
        return {s, f};
      }
      case ControlExpr::Cat: {
        auto [s, f] = build(e.children[0]);
        for (size_t i = 1; i < e.children.size(); ++i) {
          auto [s2, f2] = build(e.children[i]);
          n.add_edge(f, -1, s2);
          f = f2;
        }
        return {s, f};
      }
      case ControlExpr::Union: {
        int s = n.add_state(), f = n.add_state();
        for (const auto& c : e.children) {
          auto [cs, cf] = build(c);
          n.add_edge(s, -1, cs);
          n.add_edge(cf, -1, f);
        }
        return {s, f};
      }
      case ControlExpr::Star:
      case ControlExpr::Plus: {
        int s = n.add_state(), f = n.add_state();
        auto [cs, cf] = build(e.children[0]);
        n.add_edge(s, -1, cs);
        n.add_edge(cf, -1, cs);
        n.add_edge(cf, -1, f);
        if (e.kind == ControlExpr::Star) n.add_edge(s, -1, f);
        return {s, f};
      }
      case ControlExpr::Diff: {
        Nfa a = control_to_nfa(e.children[0], n.symbols);
        Nfa b = control_to_nfa(e.children[1], n.symbols);
        Nfa d = nfa_difference(a, b);
        int off = n.num_states();
        for (int q = 0; q < d.num_states(); ++q) n.add_state();
        for (int q = 0; q < d.num_states(); ++q)
          for (auto [sym, dst] : d.edges[q]) n.add_edge(off + q, sym, off + dst);
        int s = n.add_state(), f = n.add_state();
        n.add_edge(s, -1, off + d.start);
        for (int q = 0; q < d.num_states(); ++q)
          if (d.accept[q]) n.add_edge(off + q, -1, f);
        return {s, f};
      }
    }
    throw std::logic_error("unreachable");
  }
};

}  // namespace

std::vector<std::string> control_symbols(const ControlExpr& e) {
  std::set<std::string> s;
  collect_symbols(e, s);
  return {s.begin(), s.end()};
}

Nfa control_to_nfa(const ControlExpr& e, const std::vector<std::string>& symset) {
  NfaBuilder b;
  b.n.symbols = symset;
  for (size_t i = 0; i < symset.size(); ++i) b.sym_index[symset[i]] = static_cast<int>(i);
  auto [s, f] = b.build(e);
  b.n.start = s;
  b.n.accept[f] = true;
  return b.n;
}

ControlExpr nfa_to_regex(const Nfa& n) {
  int N = n.num_states();
  // Generalized NFA over states 0..N-1 plus synthetic start N and final N+1.
  std::vector<std::vector<ControlExpr>> R(N + 2, std::vector<ControlExpr>(N + 2, ce_empty()));
  auto add = [&](int i, int j, ControlExpr e) {
    R[i][j] = ce_union({std::move(R[i][j]), std::move(e)});
  };
  for (int q = 0; q < N; ++q)
    for (auto [sym, dst] : n.edges[q]) add(q, dst, sym < 0 ? ce_eps() : ce_sym(n.symbols[sym]));
  add(N, n.start, ce_eps());
  for (int q = 0; q < N; ++q)
    if (n.accept[q]) add(q, N + 1, ce_eps());

  std::vector<bool> gone(N + 2, false);
  for (int round = 0; round < N; ++round) {
    // Eliminate the state with the fewest incident expressions first.
    int best = -1;
    long best_score = -1;
    for (int s = 0; s < N; ++s) {
      if (gone[s]) continue;
      long in = 0, out = 0;
      for (int i = 0; i < N + 2; ++i) {
        if (gone[i] || i == s) continue;
        if (R[i][s].kind != ControlExpr::Empty) ++in;
        if (R[s][i].kind != ControlExpr::Empty) ++out;
      }
      long score = in * out;
      if (best < 0 || score < best_score) {
        best = s;
        best_score = score;
      }
    }
    int s = best;
    gone[s] = true;
    ControlExpr loop = ce_star(R[s][s]);
    for (int i = 0; i < N + 2; ++i) {
      if (gone[i] || i == s || R[i][s].kind == ControlExpr::Empty) continue;
      for (int j = 0; j < N + 2; ++j) {
        if (gone[j] || j == s || R[s][j].kind == ControlExpr::Empty) continue;
        add(i, j, ce_cat({R[i][s], loop, R[s][j]}));
      }
    }
    for (int i = 0; i < N + 2; ++i) {
      R[i][s] = ce_empty();
      R[s][i] = ce_empty();
    }
  }
  return R[N][N + 1];
}

ControlExpr control_rename(const ControlExpr& e, const std::map<std::string, std::string>& ren) {
  ControlExpr out = e;
  if (out.kind == ControlExpr::Sym) {
    auto it = ren.find(out.sym);
    if (it != ren.end()) out.sym = it->second;
  }
  for (auto& c : out.children) c = control_rename(c, ren);
  return out;
}

}  // namespace bsk
