#pragma once

// Small generic automaton layer.  Symbols are dense ints with a parallel
// name table; epsilon edges use symbol -1.  This backs the rational-control
// compiler (symbols = table ids), the NF-word recognizer (symbols = letters),
// and the regular-language system constructions.

#include <string>
#include <utility>
#include <vector>

namespace bsk {

struct Nfa {
  std::vector<std::string> symbols;
  int start = 0;
  std::vector<bool> accept;
  std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (symbol, dst)

  int add_state() {
    accept.push_back(false);
    edges.emplace_back();
    return static_cast<int>(accept.size()) - 1;
  }
  void add_edge(int from, int sym, int to) { edges[from].emplace_back(sym, to); }
  int num_states() const { return static_cast<int>(accept.size()); }

  bool accepts(const std::vector<int>& word) const;
};

// Complete DFA (every state has a transition on every symbol; subset
// construction introduces the empty-set sink).
struct Dfa {
  std::vector<std::string> symbols;
  int start = 0;
  std::vector<bool> accept;
  std::vector<std::vector<int>> trans;  // [state][symbol]
  // States from which no accepting state is reachable; useful to cut search.
  std::vector<bool> dead;

  int num_states() const { return static_cast<int>(accept.size()); }
  void compute_dead();
  bool accepts(const std::vector<int>& word) const;
};

Dfa determinize(const Nfa& n);
Dfa complement(Dfa d);                          // in place on a complete DFA
Dfa intersect(const Dfa& a, const Dfa& b);      // product; symbol tables must match
Nfa dfa_to_nfa(const Dfa& d);
Nfa nfa_difference(const Nfa& a, const Nfa& b); // L(a) \ L(b)

// Single-accept-state normal form used when splicing automata together.
Nfa nfa_union(const Nfa& a, const Nfa& b);

}  // namespace bsk
