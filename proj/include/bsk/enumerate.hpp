#pragma once

// Breadth-first exploration of an ET0L system: bounded language enumeration
// and word membership.  Search states are pairs (control DFA state,
// sentential form), deduplicated.  Pruning:
//   - forms whose terminal count exceeds the word-length bound are dropped
//     silently (terminal counts never matter past the bound);
//   - forms are also dropped silently when an exact lower bound proves every
//     accepted continuation yields a word over the bound: per (control
//     state, letter), the least terminal contribution over all control paths
//     to acceptance is precomputed as a min-plus fixpoint, and a form whose
//     letters sum past the bound cannot recover (this catches nonterminal
//     populations that grow geometrically under emission-free table loops
//     before they hit the length cap);
//   - forms longer than slack * bound + slack are dropped, and if their
//     terminal count was still within the bound this marks the run
//     non-exhaustive;
//   - hitting the control-depth cap with a nonempty frontier marks the run
//     non-exhaustive.
// exhaustive_up_to_len is true iff no marking prune fired and the frontier
// drained, i.e. the reported set is provably the whole language up to the
// bound.

#include "bsk/lsystem.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bsk {

struct EnumerationParams {
  long max_word_len = 12;
  long max_control_depth = 64;
  long slack = 4;
};

struct EnumerationResult {
  std::vector<std::string> words;  // display forms, shortlex order
  std::map<std::string, std::vector<std::string>> witnesses;  // word -> control word
  bool exhaustive_up_to_len = true;
  std::uint64_t states_explored = 0;
};

EnumerationResult enumerate_system(const Et0lSystem& sys, const EnumerationParams& p);

struct MembershipResult {
  bool member = false;
  std::vector<std::string> witness;  // control word, when member
  bool exhaustive = true;            // when !member: true = definitive no
  std::uint64_t states_explored = 0;
};

// Searches with the word-length bound |target|.  For terminal-inert systems
// an ordered-factor embedding check against the target prunes hopeless
// branches early.
MembershipResult check_membership(const Et0lSystem& sys, const Word& target,
                                  const EnumerationParams& p);

// Applies the given table sequence to the axiom (breadth over image choices,
// same caps as check_membership) and reports whether it derives the target
// with the control automaton accepting.
bool replay_witness(const Et0lSystem& sys, const std::vector<std::string>& control_word,
                    const Word& target, long slack = 4);

}  // namespace bsk
