#include <filesystem>
#include <fstream>

#include "bsk/json_io.hpp"
#include "doctest.h"

using namespace bsk;

namespace {

// a^n b^n with single-character letter names.
Et0lSystem anbn() {
  Et0lSystem s;
  Letter a = s.add_letter("a", true);
  Letter b = s.add_letter("b", true);
  Letter S = s.add_letter("S", false);
  s.axiom = Word(1, static_cast<char>(S));
  Word img;
  img += static_cast<char>(a);
  img += static_cast<char>(S);
  img += static_cast<char>(b);
  s.table("t1").add(S, img);
  s.table("t2").add(S, Word());
  s.control = ce_cat({ce_star(ce_sym("t1")), ce_sym("t2")});
  return s;
}

// A system whose letter names force the space-separated word syntax.
Et0lSystem multi() {
  Et0lSystem s;
  s.k = 3;
  Letter xt = s.add_letter("Xt", false);
  Letter hash = s.add_letter("#", true);
  Letter a = s.add_letter("a", true);
  s.axiom = Word{static_cast<char>(xt), static_cast<char>(hash), static_cast<char>(xt)};
  Word img;
  img += static_cast<char>(a);
  img += static_cast<char>(xt);
  s.table("grow").add(xt, img);
  s.table("grow").add(xt, Word(1, static_cast<char>(a)));  // second image: nondeterministic
  s.table("done").add(xt, Word());
  s.control = ce_cat({ce_star(ce_sym("grow")), ce_sym("done")});
  return s;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("export/import round trip is bit-exact") {
  for (const Et0lSystem& s : {anbn(), multi()}) {
    std::string j1 = system_to_json(s);
    Et0lSystem back = system_from_json(j1);
    std::string j2 = system_to_json(back);
    CHECK(j1 == j2);
    // And the reimported system behaves identically on a quick probe.
    CHECK(back.num_letters() == s.num_letters());
    CHECK(back.display(back.axiom) == s.display(s.axiom));
    CHECK(control_to_string(back.control) == control_to_string(s.control));
  }
}

TEST_CASE("k field appears only when set") {
  std::string with_k = system_to_json(multi());
  CHECK(with_k.find("\"k\": 3") != std::string::npos);
  std::string without_k = system_to_json(anbn());
  CHECK(without_k.find("\"k\"") == std::string::npos);
  Et0lSystem back = system_from_json(without_k);
  CHECK(back.k == 0);
}

TEST_CASE("words use spaces exactly when a letter name has several characters") {
  std::string j = system_to_json(multi());
  CHECK(j.find("\"Xt # Xt\"") != std::string::npos);  // axiom, space-joined
  CHECK(j.find("\"a Xt\"") != std::string::npos);     // rule image
  std::string j2 = system_to_json(anbn());
  CHECK(j2.find("\"aSb\"") != std::string::npos);  // concatenated
}

TEST_CASE("rule and table order is canonical") {
  // Tables in insertion order, rule keys in letter-intern order.
  Et0lSystem s;
  Letter z = s.add_letter("z", true);
  Letter y = s.add_letter("y", false);
  s.axiom = Word(1, static_cast<char>(y));
  Table& t = s.table("beta");
  t.add(y, Word(1, static_cast<char>(z)));
  t.add(z, Word(1, static_cast<char>(z)));
  s.table("alpha").add(y, Word());
  s.control = ce_union({ce_sym("beta"), ce_sym("alpha")});
  std::string j = system_to_json(s);
  CHECK(j.find("\"beta\"") < j.find("\"alpha\""));  // insertion order kept
  // Inside beta, letter "z" was interned first, so its rule prints first.
  auto beta_pos = j.find("\"beta\"");
  auto zpos = j.find("\"z\"", beta_pos);
  auto ypos = j.find("\"y\"", beta_pos);
  CHECK(zpos < ypos);
  std::string j2 = system_to_json(system_from_json(j));
  CHECK(j == j2);
}

TEST_CASE("import rejects malformed input") {
  CHECK_THROWS_AS(system_from_json("not json at all"), InputError);
  CHECK_THROWS_AS(system_from_json("{}"), InputError);  // everything missing
  std::string good = system_to_json(anbn());
  {
    std::string bad = good;
    auto pos = bad.find("\"axiom\"");
    bad.replace(pos, 7, "\"axiok\"");
    CHECK_THROWS_AS(system_from_json(bad), InputError);
  }
  {
    std::string bad = good;
    auto pos = bad.find("\"aSb\"");
    bad.replace(pos, 5, "\"aQb\"");  // unknown letter in an image
    CHECK_THROWS_AS(system_from_json(bad), InputError);
  }
  {
    std::string bad = good;
    auto pos = bad.find("t1* t2");
    bad.replace(pos, 6, "t1* (t2");  // unbalanced control expression
    CHECK_THROWS_AS(system_from_json(bad), InputError);
  }
}

TEST_CASE("save and load through a file") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "bsk_json_io_test.json";
  Et0lSystem s = multi();
  save_system(s, p.string());
  Et0lSystem back = load_system(p.string());
  CHECK(system_to_json(back) == system_to_json(s));
  fs::remove(p);
  CHECK_THROWS_AS(load_system(p.string()), InputError);  // missing file
}

}  // TEST_SUITE
