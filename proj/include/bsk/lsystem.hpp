#pragma once

// ET0L systems with rational control.  A table maps letters to finite
// nonempty image sets (letters without an entry are left fixed); applying a
// table rewrites every occurrence in parallel, choosing an image per
// occurrence independently.  The language is the set of all-terminal words
// derivable from the axiom by a table sequence the control language accepts.

#include "bsk/control.hpp"
#include "bsk/nfa.hpp"
#include "bsk/zk.hpp"

#include <map>
#include <string>
#include <vector>

namespace bsk {

// Letters are interned to bytes; a word is a byte string (not NUL-terminated
// text -- letter 0 is a valid byte).
using Letter = unsigned char;
using Word = std::string;

inline Word rep(Letter l, long n) { return Word(static_cast<size_t>(n), static_cast<char>(l)); }

struct Table {
  std::string id;
  std::map<Letter, std::vector<Word>> rules;

  void add(Letter l, Word image) { rules[l].push_back(std::move(image)); }
  bool lists(Letter l) const { return rules.count(l) != 0; }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  bool deterministic = true;          // every listed letter has exactly one image
  bool terminal_nondecreasing = true; // no application can lower the terminal count
  bool terminal_inert = true;         // no table rewrites any terminal
};

struct Et0lSystem {
  int k = 0;  // group parameter carried for display/CLI purposes; 0 = none
  std::vector<std::string> letter_names;
  std::map<std::string, Letter> letter_index;
  std::vector<bool> terminal;
  Word axiom;
  std::vector<Table> tables;
  ControlExpr control;

  Letter add_letter(const std::string& name, bool is_terminal);
  bool has_letter(const std::string& name) const { return letter_index.count(name) != 0; }
  Letter letter(const std::string& name) const;
  int num_letters() const { return static_cast<int>(letter_names.size()); }

  Table& table(const std::string& id);  // creates the table if absent
  const Table* find_table(const std::string& id) const;
  std::vector<std::string> table_ids() const;

  // Words as text: space-separated tokens when any letter name has more than
  // one character, otherwise plain concatenation.
  bool multi_char_names() const;
  std::string display(const Word& w) const;
  Word parse_word(const std::string& text) const;

  long terminal_count(const Word& w) const;
  bool all_terminal(const Word& w) const;

  ValidationReport validate() const;
};

// All words obtainable by one application of the table (cartesian product
// over the occurrences of listed letters).
std::vector<Word> apply_table(const Et0lSystem& sys, const Table& t, const Word& w);

// The system's control compiled to a complete DFA whose symbol order matches
// sys.tables order, with dead states marked.
struct ControlAutomaton {
  Dfa dfa;
  int start() const { return dfa.start; }
  int next(int state, int table) const { return dfa.trans[state][static_cast<size_t>(table)]; }
  bool accepting(int state) const { return dfa.accept[static_cast<size_t>(state)]; }
  bool dead(int state) const { return dfa.dead[static_cast<size_t>(state)]; }
};
ControlAutomaton compile_control(const Et0lSystem& sys);

}  // namespace bsk
