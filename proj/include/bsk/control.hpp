#pragma once

// Rational control: regular expressions over table identifiers.
//
// Text grammar (canonical form is what the printer emits):
//   ids            maximal runs of [A-Za-z0-9_]; juxtaposed ids are
//                  whitespace-separated
//   operators      |  (union, lowest)   \  (difference)   juxtaposition
//                  (concatenation)      * +  (postfix, highest)
//   "()"           the empty word; an empty/blank string is the empty set
//
// Difference is compiled exactly (determinize + complement + product).

#include "bsk/nfa.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bsk {

struct ControlExpr {
  enum Kind { Empty, Eps, Sym, Cat, Union, Star, Plus, Diff };
  Kind kind = Empty;
  std::string sym;                     // Kind::Sym
  std::vector<ControlExpr> children;   // Cat/Union: >= 2; Star/Plus: 1; Diff: 2

  bool operator==(const ControlExpr& o) const;
};

ControlExpr ce_empty();
ControlExpr ce_eps();
ControlExpr ce_sym(std::string id);
ControlExpr ce_cat(std::vector<ControlExpr> parts);    // flattens, drops eps
ControlExpr ce_union(std::vector<ControlExpr> parts);  // flattens, drops empty
ControlExpr ce_star(ControlExpr e);
ControlExpr ce_plus(ControlExpr e);
ControlExpr ce_diff(ControlExpr a, ControlExpr b);
// e^n (n >= 0) as explicit concatenation.
ControlExpr ce_pow(const ControlExpr& e, int n);

std::string control_to_string(const ControlExpr& e);
ControlExpr parse_control(const std::string& text);

// All symbol ids appearing in the expression.
std::vector<std::string> control_symbols(const ControlExpr& e);

// Thompson construction; `symset` fixes the symbol table (ids not in it are
// rejected), so automata built from different expressions stay compatible.
Nfa control_to_nfa(const ControlExpr& e, const std::vector<std::string>& symset);

// Exact regular expression for L(n) by state elimination, with algebraic
// simplification so the result stays readable.
ControlExpr nfa_to_regex(const Nfa& n);

// Rewrite every symbol through the given map (ids absent from the map keep
// their name).
ControlExpr control_rename(const ControlExpr& e, const std::map<std::string, std::string>& ren);

}  // namespace bsk
