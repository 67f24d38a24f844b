#include "bsk/lsystem.hpp"

#include "bsk/enumerate.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace bsk;

namespace {

// S -> a S b | eps under control t1* t2: the language { a^n b^n }.
Et0lSystem anbn() {
  Et0lSystem sys;
  Letter S = sys.add_letter("S", false);
  Letter a = sys.add_letter("a", true);
  Letter b = sys.add_letter("b", true);
  sys.axiom = Word(1, static_cast<char>(S));
  Word img;
  img += static_cast<char>(a);
  img += static_cast<char>(S);
  img += static_cast<char>(b);
  sys.table("t1").add(S, img);
  sys.table("t2").add(S, Word());
  sys.control = ce_cat({ce_star(ce_sym("t1")), ce_sym("t2")});
  return sys;
}

std::set<std::string> word_set(const EnumerationResult& r) {
  return {r.words.begin(), r.words.end()};
}

}  // namespace

TEST_SUITE("lsystem") {
  TEST_CASE("apply_table expands the cartesian product") {
    Et0lSystem sys;
    Letter S = sys.add_letter("S", false);
    Letter a = sys.add_letter("a", true);
    Letter b = sys.add_letter("b", true);
    Table& t = sys.table("t");
    t.add(S, Word(1, static_cast<char>(a)));
    t.add(S, Word(1, static_cast<char>(b)));
    Word w(2, static_cast<char>(S));
    auto out = apply_table(sys, t, w);
    REQUIRE(out.size() == 4);
    std::set<std::string> disp;
    for (auto& o : out) disp.insert(sys.display(o));
    CHECK(disp == std::set<std::string>{"aa", "ab", "ba", "bb"});
    // unlisted letters stay fixed
    Word wa;
    wa += static_cast<char>(a);
    wa += static_cast<char>(S);
    out = apply_table(sys, t, wa);
    disp.clear();
    for (auto& o : out) disp.insert(sys.display(o));
    CHECK(disp == std::set<std::string>{"aa", "ab"});
  }

  TEST_CASE("display and parse, single and multi char names") {
    Et0lSystem sys;
    sys.add_letter("a", true);
    sys.add_letter("b", true);
    Word w = sys.parse_word("abba");
    CHECK(sys.display(w) == "abba");
    CHECK(sys.parse_word("") == Word());

    Et0lSystem multi;
    multi.add_letter("Xt", false);
    multi.add_letter("a", true);
    Word m = multi.parse_word("Xt a Xt");
    CHECK(m.size() == 3);
    CHECK(multi.display(m) == "Xt a Xt");
    CHECK_THROWS_AS(multi.parse_word("Xt q"), InputError);
  }

  TEST_CASE("validation classifies systems") {
    Et0lSystem sys = anbn();
    auto rep = sys.validate();
    CHECK(rep.ok);
    CHECK(rep.deterministic);
    CHECK(rep.terminal_inert);
    CHECK(rep.terminal_nondecreasing);

    // rewriting a terminal breaks inertness but can keep monotonicity
    Et0lSystem grow = anbn();
    grow.table("t1").add(grow.letter("a"), grow.parse_word("aa"));
    rep = grow.validate();
    CHECK(rep.ok);
    CHECK(!rep.terminal_inert);
    CHECK(rep.terminal_nondecreasing);
    CHECK(rep.deterministic);  // one image per listed letter throughout

    Et0lSystem del = anbn();
    del.table("t1").add(del.letter("a"), Word());
    rep = del.validate();
    CHECK(!rep.terminal_nondecreasing);

    Et0lSystem bad = anbn();
    bad.control = parse_control("t1 missing");
    CHECK(!bad.validate().ok);
  }

  TEST_CASE("enumerate a^n b^n") {
    Et0lSystem sys = anbn();
    EnumerationParams p;
    p.max_word_len = 8;
    auto r = enumerate_system(sys, p);
    CHECK(r.exhaustive_up_to_len);
    CHECK(word_set(r) == std::set<std::string>{"", "ab", "aabb", "aaabbb", "aaaabbbb"});
    CHECK(r.words.front() == "");  // shortlex order
    REQUIRE(r.witnesses.count("aabb"));
    CHECK(r.witnesses.at("aabb") == std::vector<std::string>{"t1", "t1", "t2"});
    CHECK(replay_witness(sys, {"t1", "t1", "t2"}, sys.parse_word("aabb")));
    CHECK(!replay_witness(sys, {"t1", "t2"}, sys.parse_word("aabb")));
    CHECK(!replay_witness(sys, {"t1", "t1"}, sys.parse_word("aaSbb")));  // control must accept
  }

  TEST_CASE("enumerate with nondeterministic tables") {
    Et0lSystem sys;
    Letter S = sys.add_letter("S", false);
    Letter a = sys.add_letter("a", true);
    Table& t = sys.table("t");
    t.add(S, Word(1, static_cast<char>(a)));
    Word as;
    as += static_cast<char>(a);
    as += static_cast<char>(S);
    t.add(S, as);
    sys.axiom = Word(1, static_cast<char>(S));
    sys.control = ce_plus(ce_sym("t"));
    EnumerationParams p;
    p.max_word_len = 5;
    auto r = enumerate_system(sys, p);
    CHECK(r.exhaustive_up_to_len);
    CHECK(word_set(r) == std::set<std::string>{"a", "aa", "aaa", "aaaa", "aaaaa"});
  }

  TEST_CASE("pruning is reported honestly") {
    // S -> S S with no terminal outcome: S has no terminal future at any
    // control state, so the language is provably empty and the run stays
    // exhaustive without ever materializing the blowup.
    Et0lSystem sys;
    Letter S = sys.add_letter("S", false);
    sys.add_letter("a", true);
    sys.axiom = Word(1, static_cast<char>(S));
    sys.table("t").add(S, Word(2, static_cast<char>(S)));
    sys.control = ce_star(ce_sym("t"));
    EnumerationParams p;
    p.max_word_len = 3;
    auto r = enumerate_system(sys, p);
    CHECK(r.exhaustive_up_to_len);
    CHECK(r.words.empty());
    CHECK(r.states_explored <= 1);

    // Same blowup but with an erase/emit escape: every doubled form still
    // has in-bound completions, so cutting one for length must clear the
    // exhaustiveness flag.
    Et0lSystem esys;
    Letter Se = esys.add_letter("S", false);
    Letter ae = esys.add_letter("a", true);
    esys.axiom = Word(1, static_cast<char>(Se));
    esys.table("t").add(Se, Word(2, static_cast<char>(Se)));
    esys.table("f").add(Se, Word(1, static_cast<char>(ae)));
    esys.table("f").add(Se, Word());
    esys.control = ce_star(ce_union({ce_sym("t"), ce_sym("f")}));
    EnumerationParams pe;
    pe.max_word_len = 1;
    auto re = enumerate_system(esys, pe);
    CHECK(!re.exhaustive_up_to_len);
    CHECK(word_set(re) == std::set<std::string>{"", "a"});

    // identity rewriting dead-ends into already-seen states: provably done
    Et0lSystem idsys;
    Letter T = idsys.add_letter("T", false);
    idsys.axiom = Word(1, static_cast<char>(T));
    idsys.table("t").add(T, Word(1, static_cast<char>(T)));
    idsys.control = ce_star(ce_sym("t"));
    r = enumerate_system(idsys, p);
    CHECK(r.exhaustive_up_to_len);
    CHECK(r.words.empty());

    // terminal-count prune is silent: words past the bound exist but
    // everything up to the bound is still provably complete
    Et0lSystem sys2 = anbn();
    p.max_word_len = 5;
    auto r2 = enumerate_system(sys2, p);
    CHECK(r2.exhaustive_up_to_len);
    CHECK(word_set(r2) == std::set<std::string>{"", "ab", "aabb"});
  }

  TEST_CASE("membership") {
    Et0lSystem sys = anbn();
    EnumerationParams p;
    auto m = check_membership(sys, sys.parse_word("aaabbb"), p);
    CHECK(m.member);
    CHECK(m.witness == std::vector<std::string>{"t1", "t1", "t1", "t2"});
    m = check_membership(sys, sys.parse_word("aab"), p);
    CHECK(!m.member);
    CHECK(m.exhaustive);  // definitive rejection
    m = check_membership(sys, Word(), p);
    CHECK(m.member);
    CHECK(m.witness == std::vector<std::string>{"t2"});
  }

  TEST_CASE("control automaton transitions") {
    Et0lSystem sys = anbn();
    ControlAutomaton ca = compile_control(sys);
    int q = ca.start();
    CHECK(!ca.accepting(q));
    int q1 = ca.next(q, 0);  // t1
    CHECK(!ca.accepting(q1));
    int q2 = ca.next(q1, 1);  // t2
    CHECK(ca.accepting(q2));
    int q3 = ca.next(q2, 0);  // t1 after t2: dead
    CHECK(ca.dead(q3));
  }
}
