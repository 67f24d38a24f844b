#pragma once

// The two canonical word forms for BS(1,k) elements and conversions between
// them and the fractional representation (r, u).
//
// NF word (over a A b B):     b^t x^{i_m} B x^{i_{m-1}} B ... x^{i_1} B x^s
// with x in {a, A} uniform, t = r + m; for t < 0 the b-block is empty and
// the word instead starts with |t| letters B (zero components).
//
// Fractional form (over b B + - . digits):  beta^{|r|} sign i_m...i_1 . s_0...s_p
// i.e. the base-k digits of |u| written lowest place value first, split at
// the radix point into the fractional block and the integer block.

#include "bsk/zk.hpp"

#include <string>
#include <vector>

namespace bsk {

struct Nfa;  // see bsk/nfa.hpp

// t, the canonical component digits i_m..i_1, the integer tail s, and the
// letter sign of the a-run letters.  Reassembles to the exact NF word.
struct Decomposition {
  std::int64_t t = 0;
  std::vector<int> components;  // i_m..i_1 (empty when u has no fractional part)
  BigInt s = 0;
  int alpha_sign = 1;  // +1 => 'a', -1 => 'A'; +1 when u = 0
};

// Symbolic fractional form; the string encoding below requires k <= 10.
struct FracForm {
  std::int64_t r = 0;
  int sign = 1;                 // +1 / -1; +1 when u = 0
  std::vector<int> frac_digits; // i_m..i_1, i_m != 0 when nonempty
  std::vector<int> int_digits;  // s_0..s_p, s_p != 0 when nonempty
};

std::string nf_of(const GroupElement& g);
std::string frac_of(const GroupElement& g);
FracForm frac_form_of(const GroupElement& g);
std::string frac_form_to_string(const FracForm& f, int k);

GroupElement parse_nf(int k, const std::string& word);
GroupElement parse_frac(int k, const std::string& word);
FracForm parse_frac_form(int k, const std::string& word);

bool is_nf(int k, const std::string& word);
bool is_frac(int k, const std::string& word);

Decomposition decompose(int k, const std::string& nf_word);
std::string reassemble(int k, const Decomposition& d);

// NFA over the letters a A b B accepting exactly { nf_of(g) : g in BS(1,k) }.
Nfa nf_recognizer(int k);

}  // namespace bsk
