#include "bsk/combinators.hpp"

#include <algorithm>
#include <functional>

namespace bsk {

namespace {

// A prefix no existing name starts with; everything the combinator invents
// begins with it, so invented names can never collide with operand names.
std::string fresh_prefix(const std::vector<const std::vector<std::string>*>& name_sets) {
  for (int n = 1;; ++n) {
    std::string p = "g" + std::to_string(n) + "_";
    bool clash = false;
    for (auto* set : name_sets) {
      for (auto& s : *set)
        if (s.rfind(p, 0) == 0) {
          clash = true;
          break;
        }
      if (clash) break;
    }
    if (!clash) return p;
  }
}

// Copies src into dst with every letter renamed prefix+name and every table
// renamed prefix+id.  Renamed copies of terminals keep their terminal flag:
// they can never reach the output (the control always ends with a decode
// step and only decoded words are all-terminal at an accepting state), but
// counting them keeps the enumerator's terminal-count prune exact, so
// bounded enumeration of combined systems stays provably exhaustive.
// `keep_terminal` can demote individual letters (erasing homomorphisms).
struct Imported {
  Word axiom;
  ControlExpr control;
  std::vector<Letter> renamed;
};

Imported import_renamed(Et0lSystem& dst, const Et0lSystem& src, const std::string& prefix,
                        const std::function<bool(int)>& keep_terminal = nullptr) {
  Imported im;
  im.renamed.resize(static_cast<size_t>(src.num_letters()));
  for (int l = 0; l < src.num_letters(); ++l) {
    bool term = src.terminal[static_cast<size_t>(l)] && (!keep_terminal || keep_terminal(l));
    im.renamed[static_cast<size_t>(l)] =
        dst.add_letter(prefix + src.letter_names[static_cast<size_t>(l)], term);
  }
  auto rename_word = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (char ch : w) out += static_cast<char>(im.renamed[static_cast<Letter>(ch)]);
    return out;
  };
  im.axiom = rename_word(src.axiom);
  std::map<std::string, std::string> table_ren;
  for (const auto& t : src.tables) {
    table_ren[t.id] = prefix + t.id;
    Table& nt = dst.table(prefix + t.id);
    for (const auto& [l, images] : t.rules)
      for (const auto& img : images) nt.add(im.renamed[l], rename_word(img));
  }
  im.control = control_rename(src.control, table_ren);
  return im;
}

// Decode table: renamed copies of the source's terminals map back to the
// original terminal letters (which are added to dst as true terminals).
void add_decode_rules(Et0lSystem& dst, const Et0lSystem& src, const Imported& im, Table& dec) {
  for (int l = 0; l < src.num_letters(); ++l) {
    if (!src.terminal[static_cast<size_t>(l)]) continue;
    Letter orig = dst.add_letter(src.letter_names[static_cast<size_t>(l)], true);
    dec.add(im.renamed[static_cast<size_t>(l)], Word(1, static_cast<char>(orig)));
  }
}

std::vector<const std::vector<std::string>*> operand_names(const Et0lSystem& a,
                                                           const Et0lSystem& b) {
  return {&a.letter_names, &b.letter_names};
}

}  // namespace

Et0lSystem et0l_union(const Et0lSystem& a, const Et0lSystem& b) {
  Et0lSystem out;
  out.k = a.k == b.k ? a.k : 0;
  std::string p = fresh_prefix(operand_names(a, b));
  Letter s0 = out.add_letter(p + "S", false);
  Imported ia = import_renamed(out, a, p + "1_");
  Imported ib = import_renamed(out, b, p + "2_");
  out.axiom = Word(1, static_cast<char>(s0));
  Table& sel1 = out.table(p + "sel1");
  sel1.add(s0, ia.axiom);
  Table& sel2 = out.table(p + "sel2");
  sel2.add(s0, ib.axiom);
  add_decode_rules(out, a, ia, out.table(p + "dec1"));
  add_decode_rules(out, b, ib, out.table(p + "dec2"));
  out.control = ce_union(
      {ce_cat({ce_sym(p + "sel1"), ia.control, ce_sym(p + "dec1")}),
       ce_cat({ce_sym(p + "sel2"), ib.control, ce_sym(p + "dec2")})});
  return out;
}

Et0lSystem et0l_concat(const Et0lSystem& a, const Et0lSystem& b) {
  Et0lSystem out;
  out.k = a.k == b.k ? a.k : 0;
  std::string p = fresh_prefix(operand_names(a, b));
  Imported ia = import_renamed(out, a, p + "1_");
  Imported ib = import_renamed(out, b, p + "2_");
  out.axiom = ia.axiom + ib.axiom;
  Table& dec = out.table(p + "dec");
  add_decode_rules(out, a, ia, dec);
  add_decode_rules(out, b, ib, dec);
  out.control = ce_cat({ia.control, ib.control, ce_sym(p + "dec")});
  return out;
}

Et0lSystem et0l_hom_image(const Et0lSystem& a,
                          const std::map<std::string, std::vector<std::string>>& hom) {
  std::vector<std::string> image_names;
  for (auto& [from, to] : hom) {
    (void)from;
    for (auto& n : to) image_names.push_back(n);
  }
  Et0lSystem out;
  out.k = a.k;
  std::string p = fresh_prefix({&a.letter_names, &image_names});
  // Letters the homomorphism erases must not count as terminals while the
  // operand derivation runs; everything else keeps its flag (see above).
  auto erased = [&](int l) {
    auto it = hom.find(a.letter_names[static_cast<size_t>(l)]);
    return it != hom.end() && it->second.empty();
  };
  Imported ia = import_renamed(out, a, p + "1_", [&](int l) { return !erased(l); });
  out.axiom = ia.axiom;
  Table& h = out.table(p + "hom");
  for (int l = 0; l < a.num_letters(); ++l) {
    if (!a.terminal[static_cast<size_t>(l)]) continue;
    const std::string& name = a.letter_names[static_cast<size_t>(l)];
    auto it = hom.find(name);
    Word img;
    if (it == hom.end()) {
      img += static_cast<char>(out.add_letter(name, true));
    } else {
      for (auto& tok : it->second) img += static_cast<char>(out.add_letter(tok, true));
    }
    h.add(ia.renamed[static_cast<size_t>(l)], img);
  }
  out.control = ce_cat({ia.control, ce_sym(p + "hom")});
  return out;
}

Et0lSystem regular_to_edt0l(const Nfa& nfa, int k) {
  Et0lSystem out;
  out.k = k;
  std::string sname = "S";
  while (std::find(nfa.symbols.begin(), nfa.symbols.end(), sname) != nfa.symbols.end())
    sname += "_";
  Letter S = out.add_letter(sname, false);
  out.axiom = Word(1, static_cast<char>(S));
  std::map<std::string, std::string> ren;
  for (const auto& sym : nfa.symbols) {
    Letter l = out.add_letter(sym, true);
    std::string tid = "t_" + sym;
    ren[sym] = tid;
    Word img;
    img += static_cast<char>(l);
    img += static_cast<char>(S);
    out.table(tid).add(S, img);
  }
  out.table("del").add(S, Word());
  out.control = ce_cat({control_rename(nfa_to_regex(nfa), ren), ce_sym("del")});
  return out;
}

Et0lSystem cfg_to_et0l(const Cfg& g) {
  Et0lSystem out;
  for (auto& t : g.terminals) out.add_letter(t, true);
  for (auto& v : g.variables) out.add_letter(v, false);
  out.axiom = Word(1, static_cast<char>(out.letter(g.start)));
  if (out.terminal[out.letter(g.start)]) throw InputError("grammar start symbol is a terminal");
  std::vector<ControlExpr> alts;
  for (auto& v : g.variables) {
    Letter lv = out.letter(v);
    Table& t = out.table("r_" + v);
    for (auto& [head, rhs] : g.productions) {
      if (head != v) continue;
      Word img;
      for (auto& tok : rhs) img += static_cast<char>(out.letter(tok));
      t.add(lv, img);
    }
    t.add(lv, Word(1, static_cast<char>(lv)));  // leave occurrences in place
    alts.push_back(ce_sym("r_" + v));
  }
  out.control = ce_star(ce_union(std::move(alts)));
  return out;
}

}  // namespace bsk
