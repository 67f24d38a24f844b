#pragma once

// Language operations on controlled ET0L systems that stay inside the class:
// union, concatenation, and homomorphic image, plus embeddings of regular
// and context-free languages.  Inputs are fully renamed apart and dedicated
// decode tables restore the original terminal names at the end of the
// control, so the two operands can never interfere.  Renamed copies of
// operand terminals remain flagged as terminals: the control's trailing
// decode step keeps them out of the output language, while the flag keeps
// length-bounded enumeration of the combined system exhaustive.  All three
// operations preserve determinism.

#include "bsk/lsystem.hpp"

#include <map>
#include <string>
#include <vector>

namespace bsk {

Et0lSystem et0l_union(const Et0lSystem& a, const Et0lSystem& b);
Et0lSystem et0l_concat(const Et0lSystem& a, const Et0lSystem& b);

// Letter-to-word substitution on terminal names; names absent from the map
// are kept as themselves.  Image words are given as token lists.
Et0lSystem et0l_hom_image(const Et0lSystem& a,
                          const std::map<std::string, std::vector<std::string>>& hom);

// EDT0L system for the regular language of the automaton; the automaton's
// symbols become the terminals.
Et0lSystem regular_to_edt0l(const Nfa& nfa, int k = 0);

struct Cfg {
  std::vector<std::string> terminals;
  std::vector<std::string> variables;
  std::string start;
  std::vector<std::pair<std::string, std::vector<std::string>>> productions;
};

// ET0L system (one table per variable, Kleene-starred union control) with
// the same language as the grammar.
Et0lSystem cfg_to_et0l(const Cfg& g);

}  // namespace bsk
