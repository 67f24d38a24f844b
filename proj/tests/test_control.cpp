#include "bsk/control.hpp"

#include "bsk/oracle.hpp"
#include "bsk/normal_form.hpp"

#include "doctest.h"

using namespace bsk;

namespace {

ControlExpr s(const char* id) { return ce_sym(id); }

bool accepts(const Nfa& n, std::initializer_list<const char*> word) {
  std::vector<int> w;
  for (const char* id : word) {
    int idx = -1;
    for (size_t i = 0; i < n.symbols.size(); ++i)
      if (n.symbols[i] == id) idx = static_cast<int>(i);
    REQUIRE(idx >= 0);
    w.push_back(idx);
  }
  return n.accepts(w);
}

const std::vector<std::string> T3 = {"t1", "t2", "t3"};

}  // namespace

TEST_SUITE("control") {
  TEST_CASE("builders simplify") {
    CHECK(ce_cat({s("a"), ce_eps(), s("b")}) == ce_cat({s("a"), s("b")}));
    CHECK(ce_cat({s("a"), ce_empty(), s("b")}) == ce_empty());
    CHECK(ce_cat({}) == ce_eps());
    CHECK(ce_union({s("a"), s("a")}) == s("a"));
    CHECK(ce_union({ce_empty(), s("a")}) == s("a"));
    CHECK(ce_union({}) == ce_empty());
    CHECK(ce_star(ce_star(s("a"))) == ce_star(s("a")));
    CHECK(ce_star(ce_plus(s("a"))) == ce_star(s("a")));
    CHECK(ce_star(ce_empty()) == ce_eps());
    CHECK(ce_plus(ce_star(s("a"))) == ce_star(s("a")));
    CHECK(ce_diff(s("a"), ce_empty()) == s("a"));
    CHECK(ce_diff(s("a"), s("a")) == ce_empty());
    CHECK(ce_pow(s("a"), 0) == ce_eps());
    CHECK(ce_pow(s("a"), 3) == ce_cat({s("a"), s("a"), s("a")}));
    CHECK(ce_cat({ce_cat({s("a"), s("b")}), s("c")}) ==
          ce_cat({s("a"), ce_cat({s("b"), s("c")})}));
  }

  TEST_CASE("parse and print") {
    CHECK(control_to_string(parse_control("a b c")) == "a b c");
    CHECK(control_to_string(parse_control("a|b c*")) == "a|b c*");
    CHECK(control_to_string(parse_control("(a|b)*")) == "(a|b)*");
    CHECK(control_to_string(parse_control("()")) == "()");
    CHECK(control_to_string(parse_control("")) == "");
    CHECK(control_to_string(parse_control("   ")) == "");
    CHECK(control_to_string(parse_control("a\\b|c")) == "a\\b|c");
    CHECK(control_to_string(parse_control("a\\b\\c")) == "a\\b\\c");
    CHECK(control_to_string(parse_control("a (b|c) d")) == "a (b|c) d");
    CHECK(control_to_string(parse_control("x+ y*")) == "x+ y*");
    CHECK(parse_control("ab") == s("ab"));
    CHECK(parse_control("a_1 a_2") == ce_cat({s("a_1"), s("a_2")}));
    CHECK(parse_control("a\\b\\c") == ce_diff(ce_diff(s("a"), s("b")), s("c")));
    CHECK(parse_control("(t1 (t2)* )+") == ce_plus(ce_cat({s("t1"), ce_star(s("t2"))})));
    // the printer's output always parses back to the same tree
    for (const char* txt : {"a b c", "a|b c*", "(a|b)*", "a\\b|c", "t1 (t2|t3)+ t1*",
                            "(a\\b)*", "()", "()\\()", "(a|())*"}) {
      ControlExpr e = parse_control(txt);
      CHECK(parse_control(control_to_string(e)) == e);
    }
    CHECK_THROWS_AS(parse_control("a |"), InputError);
    CHECK_THROWS_AS(parse_control("(a"), InputError);
    CHECK_THROWS_AS(parse_control("a)"), InputError);
    CHECK_THROWS_AS(parse_control("*a"), InputError);
    CHECK_THROWS_AS(parse_control("a \\ "), InputError);
  }

  TEST_CASE("compiled semantics") {
    Nfa n = control_to_nfa(parse_control("(t1|t2)* t3"), T3);
    CHECK(accepts(n, {"t3"}));
    CHECK(accepts(n, {"t1", "t3"}));
    CHECK(accepts(n, {"t2", "t1", "t1", "t3"}));
    CHECK(!accepts(n, {"t3", "t1"}));
    CHECK(!accepts(n, {}));
    CHECK(!accepts(n, {"t1"}));

    n = control_to_nfa(parse_control("t1 t1* \\ t1 t1 t1*"), T3);  // exactly one t1
    CHECK(accepts(n, {"t1"}));
    CHECK(!accepts(n, {}));
    CHECK(!accepts(n, {"t1", "t1"}));

    n = control_to_nfa(parse_control("(t1|t2)*\\t1*"), T3);  // needs at least one t2
    CHECK(accepts(n, {"t2"}));
    CHECK(accepts(n, {"t1", "t2", "t1"}));
    CHECK(!accepts(n, {}));
    CHECK(!accepts(n, {"t1", "t1"}));

    n = control_to_nfa(parse_control("t1+"), T3);
    CHECK(!accepts(n, {}));
    CHECK(accepts(n, {"t1"}));
    CHECK(accepts(n, {"t1", "t1"}));

    n = control_to_nfa(ce_empty(), T3);
    CHECK(!accepts(n, {}));
    CHECK(!accepts(n, {"t1"}));

    CHECK_THROWS_AS(control_to_nfa(parse_control("t9"), T3), InputError);
  }

  TEST_CASE("state elimination recovers the language") {
    auto language = [](const Nfa& n, long len) { return enum_dfa_words(determinize(n), len); };
    const char* exprs[] = {"(t1|t2)* t3", "t1 (t2 t3)+ \\ t1 t2 t3", "(t1 t1)*",
                           "t1* t2* t3*", "(t1|t2 t3)* \\ (t1 t1)*"};
    for (const char* txt : exprs) {
      CAPTURE(txt);
      Nfa orig = control_to_nfa(parse_control(txt), T3);
      ControlExpr back = nfa_to_regex(orig);
      Nfa again = control_to_nfa(back, T3);
      CHECK(language(orig, 6) == language(again, 6));
    }
    // word-shaped automaton round trip on a real recognizer
    Nfa rec = nf_recognizer(2);
    Nfa again = control_to_nfa(nfa_to_regex(rec), rec.symbols);
    CHECK(language(rec, 7) == language(again, 7));
  }

  TEST_CASE("symbols and renaming") {
    ControlExpr e = parse_control("t1 (t2|t1)* \\ t3");
    CHECK(control_symbols(e) == std::vector<std::string>{"t1", "t2", "t3"});
    std::map<std::string, std::string> ren{{"t1", "u1"}, {"t3", "u3"}};
    CHECK(control_to_string(control_rename(e, ren)) == "u1 (t2|u1)*\\u3");
  }
}
