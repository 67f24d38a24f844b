#include "bsk/nfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace bsk {

namespace {

std::set<int> eps_closure(const Nfa& n, std::set<int> states) {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (auto [sym, dst] : n.edges[q])
      if (sym < 0 && states.insert(dst).second) stack.push_back(dst);
  }
  return states;
}

}  // namespace

bool Nfa::accepts(const std::vector<int>& word) const {
  std::set<int> cur = eps_closure(*this, {start});
  for (int sym : word) {
    std::set<int> next;
    for (int q : cur)
      for (auto [s, dst] : edges[q])
        if (s == sym) next.insert(dst);
    cur = eps_closure(*this, std::move(next));
    if (cur.empty()) return false;
  }
  for (int q : cur)
    if (accept[q]) return true;
  return false;
}

void Dfa::compute_dead() {
  int n = num_states();
  // Reverse reachability from accepting states.
  std::vector<std::vector<int>> rev(n);
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < static_cast<int>(symbols.size()); ++s) rev[trans[q][s]].push_back(q);
  std::vector<bool> alive(n, false);
  std::queue<int> bfs;
  for (int q = 0; q < n; ++q)
    if (accept[q]) {
      alive[q] = true;
      bfs.push(q);
    }
  while (!bfs.empty()) {
    int q = bfs.front();
    bfs.pop();
    for (int p : rev[q])
      if (!alive[p]) {
        alive[p] = true;
        bfs.push(p);
      }
  }
  dead.assign(n, false);
  for (int q = 0; q < n; ++q) dead[q] = !alive[q];
}

bool Dfa::accepts(const std::vector<int>& word) const {
  int q = start;
  for (int sym : word) q = trans[q][sym];
  return accept[q];
}

Dfa determinize(const Nfa& n) {
  Dfa d;
  d.symbols = n.symbols;
  int ns = static_cast<int>(n.symbols.size());
  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> sets;
  auto get = [&](std::set<int> s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(sets.size());
    index.emplace(s, id);
    sets.push_back(std::move(s));
    d.accept.push_back(false);
    d.trans.emplace_back(ns, -1);
    return id;
  };
  d.start = get(eps_closure(n, {n.start}));
  for (size_t qi = 0; qi < sets.size(); ++qi) {
    std::set<int> cur = sets[qi];  // copy: sets grows below
    bool acc = false;
    for (int q : cur) acc = acc || n.accept[q];
    d.accept[qi] = acc;
    for (int sym = 0; sym < ns; ++sym) {
      std::set<int> next;
      for (int q : cur)
        for (auto [s, dst] : n.edges[q])
          if (s == sym) next.insert(dst);
      d.trans[qi][sym] = get(eps_closure(n, std::move(next)));
    }
  }
  d.compute_dead();
  return d;
}

Dfa complement(Dfa d) {
  for (size_t q = 0; q < d.accept.size(); ++q) d.accept[q] = !d.accept[q];
  d.compute_dead();
  return d;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.symbols != b.symbols) throw std::logic_error("intersect: mismatched symbol tables");
  int ns = static_cast<int>(a.symbols.size());
  Dfa d;
  d.symbols = a.symbols;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto get = [&](int x, int y) {
    auto key = std::make_pair(x, y);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(pairs.size());
    index.emplace(key, id);
    pairs.push_back(key);
    d.accept.push_back(a.accept[x] && b.accept[y]);
    d.trans.emplace_back(ns, -1);
    return id;
  };
  d.start = get(a.start, b.start);
  for (size_t qi = 0; qi < pairs.size(); ++qi) {
    auto [x, y] = pairs[qi];
    for (int sym = 0; sym < ns; ++sym) d.trans[qi][sym] = get(a.trans[x][sym], b.trans[y][sym]);
  }
  d.compute_dead();
  return d;
}

Nfa dfa_to_nfa(const Dfa& d) {
  Nfa n;
  n.symbols = d.symbols;
  for (int q = 0; q < d.num_states(); ++q) {
    n.add_state();
    n.accept[q] = d.accept[q];
  }
  n.start = d.start;
  for (int q = 0; q < d.num_states(); ++q)
    for (int sym = 0; sym < static_cast<int>(d.symbols.size()); ++sym)
      n.add_edge(q, sym, d.trans[q][sym]);
  return n;
}

Nfa nfa_difference(const Nfa& a, const Nfa& b) {
  if (a.symbols != b.symbols) throw std::logic_error("difference: mismatched symbol tables");
  return dfa_to_nfa(intersect(determinize(a), complement(determinize(b))));
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  if (a.symbols != b.symbols) throw std::logic_error("union: mismatched symbol tables");
  Nfa n;
  n.symbols = a.symbols;
  int s = n.add_state();
  n.start = s;
  int off_a = n.num_states();
  for (int q = 0; q < a.num_states(); ++q) {
    n.add_state();
    n.accept[off_a + q] = a.accept[q];
  }
  for (int q = 0; q < a.num_states(); ++q)
    for (auto [sym, dst] : a.edges[q]) n.add_edge(off_a + q, sym, off_a + dst);
  int off_b = n.num_states();
  for (int q = 0; q < b.num_states(); ++q) {
    n.add_state();
    n.accept[off_b + q] = b.accept[q];
  }
  for (int q = 0; q < b.num_states(); ++q)
    for (auto [sym, dst] : b.edges[q]) n.add_edge(off_b + q, sym, off_b + dst);
  n.add_edge(s, -1, off_a + a.start);
  n.add_edge(s, -1, off_b + b.start);
  return n;
}

}  // namespace bsk
