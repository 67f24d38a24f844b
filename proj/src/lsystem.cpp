#include "bsk/lsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsk {

Letter Et0lSystem::add_letter(const std::string& name, bool is_terminal) {
  auto it = letter_index.find(name);
  if (it != letter_index.end()) {
    if (terminal[it->second] != is_terminal)
      throw InputError("letter '" + name + "' added twice with different terminal status");
    return it->second;
  }
  if (name.empty()) throw InputError("letter name must be nonempty");
  if (letter_names.size() >= 255) throw InputError("alphabet limit of 255 letters exceeded");
  Letter id = static_cast<Letter>(letter_names.size());
  letter_names.push_back(name);
  letter_index[name] = id;
  terminal.push_back(is_terminal);
  return id;
}

Letter Et0lSystem::letter(const std::string& name) const {
  auto it = letter_index.find(name);
  if (it == letter_index.end()) throw InputError("unknown letter '" + name + "'");
  return it->second;
}

Table& Et0lSystem::table(const std::string& id) {
  for (auto& t : tables)
    if (t.id == id) return t;
  tables.push_back(Table{id, {}});
  return tables.back();
}

const Table* Et0lSystem::find_table(const std::string& id) const {
  for (auto& t : tables)
    if (t.id == id) return &t;
  return nullptr;
}

std::vector<std::string> Et0lSystem::table_ids() const {
  std::vector<std::string> ids;
  ids.reserve(tables.size());
  for (auto& t : tables) ids.push_back(t.id);
  return ids;
}

bool Et0lSystem::multi_char_names() const {
  for (auto& n : letter_names)
    if (n.size() > 1) return true;
  return false;
}

std::string Et0lSystem::display(const Word& w) const {
  bool multi = multi_char_names();
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    Letter l = static_cast<Letter>(w[i]);
    if (l >= letter_names.size()) throw InputError("word contains an out-of-range letter");
    if (multi && i) out += ' ';
    out += letter_names[l];
  }
  return out;
}

Word Et0lSystem::parse_word(const std::string& text) const {
  Word w;
  if (multi_char_names()) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w += static_cast<char>(letter(tok));
  } else {
    for (size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      auto it = letter_index.find(std::string(1, text[i]));
      if (it == letter_index.end())
        throw InputError("unknown letter '" + std::string(1, text[i]) + "'",
                         static_cast<long>(i));
      w += static_cast<char>(it->second);
    }
  }
  return w;
}

long Et0lSystem::terminal_count(const Word& w) const {
  long c = 0;
  for (char ch : w) c += terminal[static_cast<Letter>(ch)] ? 1 : 0;
  return c;
}

bool Et0lSystem::all_terminal(const Word& w) const {
  for (char ch : w)
    if (!terminal[static_cast<Letter>(ch)]) return false;
  return true;
}

ValidationReport Et0lSystem::validate() const {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.errors.push_back(msg);
  };
  if (letter_names.size() != terminal.size()) fail("terminal flags out of sync with alphabet");
  {
    std::set<std::string> seen;
    for (auto& n : letter_names)
      if (!seen.insert(n).second) fail("duplicate letter name '" + n + "'");
  }
  for (char ch : axiom)
    if (static_cast<Letter>(ch) >= letter_names.size()) fail("axiom uses an unknown letter");
  std::set<std::string> ids;
  for (auto& t : tables) {
    if (!ids.insert(t.id).second) fail("duplicate table id '" + t.id + "'");
    for (auto& [l, images] : t.rules) {
      if (l >= letter_names.size()) {
        fail("table '" + t.id + "' lists an unknown letter");
        continue;
      }
      if (images.empty()) fail("table '" + t.id + "' lists '" + letter_names[l] +
                               "' with no images");
      if (images.size() > 1) rep.deterministic = false;
      bool identity_only = images.size() == 1 && images[0] == Word(1, static_cast<char>(l));
      if (terminal[l] && !identity_only) rep.terminal_inert = false;
      for (auto& im : images) {
        for (char ch : im)
          if (static_cast<Letter>(ch) >= letter_names.size())
            fail("table '" + t.id + "' has an image with an unknown letter");
        if (terminal[l] && terminal_count(im) < 1) rep.terminal_nondecreasing = false;
      }
    }
  }
  for (auto& sym : control_symbols(control))
    if (std::find_if(tables.begin(), tables.end(),
                     [&](const Table& t) { return t.id == sym; }) == tables.end())
      fail("control uses unknown table id '" + sym + "'");
  if (!rep.ok) {
    rep.deterministic = false;
    rep.terminal_nondecreasing = false;
    rep.terminal_inert = false;
  }
  return rep;
}

std::vector<Word> apply_table(const Et0lSystem& sys, const Table& t, const Word& w) {
  (void)sys;
  // Collect per-position image choices, then expand the cartesian product.
  std::vector<const std::vector<Word>*> choices;
  std::vector<size_t> nd_positions;
  bool any = false;
  for (size_t i = 0; i < w.size(); ++i) {
    auto it = t.rules.find(static_cast<Letter>(w[i]));
    if (it == t.rules.end()) {
      choices.push_back(nullptr);
    } else {
      choices.push_back(&it->second);
      if (it->second.size() > 1) nd_positions.push_back(i);
      any = true;
    }
  }
  (void)any;
  std::vector<Word> out;
  std::vector<size_t> pick(nd_positions.size(), 0);
  for (;;) {
    Word res;
    size_t nd = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (!choices[i]) {
        res += w[i];
      } else if (choices[i]->size() == 1) {
        res += (*choices[i])[0];
      } else {
        res += (*choices[i])[pick[nd++]];
      }
    }
    out.push_back(std::move(res));
    size_t j = 0;
    for (; j < pick.size(); ++j) {
      if (++pick[j] < choices[nd_positions[j]]->size()) break;
      pick[j] = 0;
    }
    if (j == pick.size()) break;
  }
  return out;
}

ControlAutomaton compile_control(const Et0lSystem& sys) {
  Nfa n = control_to_nfa(sys.control, sys.table_ids());
  ControlAutomaton ca;
  ca.dfa = determinize(n);
  ca.dfa.compute_dead();
  return ca;
}

}  // namespace bsk
