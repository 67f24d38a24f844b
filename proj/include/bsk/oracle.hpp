#pragma once

// Brute-force reference languages.  Everything here is computed directly
// from the group arithmetic (never from the generated systems), bounded by
// word length or digit counts, so generated systems can be checked against
// an independent source of truth.

#include "bsk/normal_form.hpp"
#include "bsk/zk.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bsk {

struct Dfa;

// All words of the automaton's language up to the length bound, shortlex
// sorted.  Letter names are concatenated (meant for single-char alphabets).
std::vector<std::string> enum_dfa_words(const Dfa& d, long max_len);

// All valid normal-form words of length <= max_len, shortlex sorted, and
// the corresponding group elements.
std::vector<std::string> enum_nf_words(int k, long max_len);
std::vector<GroupElement> enum_nf_elements(int k, long max_len);

// All elements with |r| <= r_bound whose fractional form has at most
// digit_bound digit positions in total (fractional plus integer block).
std::vector<GroupElement> enum_elements_by_digits(int k, long r_bound, long digit_bound);

// { nf(g) : g has b-exponent r, |nf(g)| <= max_len }
std::vector<std::string> oracle_nf_fixed_r(int k, long r, long max_len);

// { nf(x) : x g = g x, |nf(x)| <= max_len }
std::vector<std::string> oracle_centralizer(const GroupElement& g, long max_len);

// { nf(x) : x h = g x, |nf(x)| <= max_len }
std::vector<std::string> oracle_conjugators(const GroupElement& g, const GroupElement& h,
                                            long max_len);

// { a # nf(u) # nf(a u) : u = b^t a^s or b^t A^s with t, s >= 0,
//   total displayed length <= max_len }
std::vector<std::string> oracle_left_mult_a(int k, long max_len);

// { nf(x) # nf(y) # nf(z) } with z = x y (mult) or z = (x y)^-1 (inv),
// where x and y range over all elements whose NF word length is <= part_len
// (z is unrestricted; it is determined by x and y).
std::vector<std::string> oracle_mult_nf_triples(int k, long part_len);
std::vector<std::string> oracle_inv_nf_triples(int k, long part_len);

// All canonical fractional-form words of display length <= max_len together
// with the elements they denote, shortlex sorted by word.
std::vector<std::pair<std::string, GroupElement>> enum_frac_words(int k, long max_len);

// { x # y # z in fractional form : z = x y (mult) or z = (x y)^-1 (inv),
//   total displayed length <= max_triple_len }, optionally restricted to
// triples of elements the predicate accepts.
using TripleFilter =
    std::function<bool(const GroupElement&, const GroupElement&, const GroupElement&)>;
std::vector<std::string> oracle_mult_frac_triples(int k, long max_triple_len,
                                                  const TripleFilter& keep = {});
std::vector<std::string> oracle_inv_frac_triples(int k, long max_triple_len,
                                                 const TripleFilter& keep = {});

// Disk cache: looks the word list up under (id, params) and computes+stores
// it on a miss.  An empty cache_dir disables caching.  Reads the
// BSK_CACHE_DIR environment variable.
std::string default_cache_dir();
std::vector<std::string> cached_words(const std::string& cache_dir, const std::string& id,
                                      const std::string& params,
                                      const std::function<std::vector<std::string>()>& compute);

// Shortlex, the output order used everywhere.
void sort_shortlex(std::vector<std::string>& words);

// Candidate non-EDT0L family: { b^r a # b^{rn} a^e : 0 <= r <= r_max,
// 0 <= n <= n_max } where e is the a-exponent of (b^r a)^n, i.e.
// (k^{rn}-1)/(k^r-1), read as n when r = 0.
std::vector<std::string> conjecture_set(int k, long r_max, long n_max);

// Set comparison between a system enumeration and an oracle word list.
// Enumerated words are compared with display spacing stripped, so systems
// with renamed (multi-char) letters diff cleanly against plain oracle
// strings.  Extra words always fail; missing words fail only when the
// enumeration claims exhaustiveness (otherwise the run is inconclusive).
struct EnumerationResult;

enum class DiffVerdict { equal, inconclusive, failed };

struct DiffReport {
  std::vector<std::string> missing;  // in oracle, not produced
  std::vector<std::string> extra;    // produced, not in oracle
  long max_word_len = 0;
  bool exhaustive = false;
  DiffVerdict verdict = DiffVerdict::failed;
};

DiffReport diff(const EnumerationResult& system_enum, const std::vector<std::string>& oracle_set,
                long max_word_len);

}  // namespace bsk
