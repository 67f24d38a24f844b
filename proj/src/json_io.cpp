#include "bsk/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <set>

namespace bsk {

using ordered_json = nlohmann::ordered_json;

std::string system_to_json(const Et0lSystem& sys) {
  ordered_json j;
  if (sys.k != 0) j["k"] = sys.k;
  j["alphabet"] = sys.letter_names;
  std::vector<std::string> terms;
  for (int l = 0; l < sys.num_letters(); ++l)
    if (sys.terminal[static_cast<size_t>(l)])
      terms.push_back(sys.letter_names[static_cast<size_t>(l)]);
  j["terminals"] = terms;
  j["axiom"] = sys.display(sys.axiom);
  ordered_json tables = ordered_json::object();
  for (const auto& t : sys.tables) {
    ordered_json rules = ordered_json::object();
    for (const auto& [l, images] : t.rules) {
      ordered_json imgs = ordered_json::array();
      for (const auto& img : images) imgs.push_back(sys.display(img));
      rules[sys.letter_names[l]] = imgs;
    }
    tables[t.id] = rules;
  }
  j["tables"] = tables;
  j["control"] = control_to_string(sys.control);
  return j.dump(2) + "\n";
}

Et0lSystem system_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("bad system JSON: ") + e.what());
  }
  auto need = [&](const char* field) -> const ordered_json& {
    auto it = j.find(field);
    if (it == j.end()) throw InputError(std::string("system JSON lacks \"") + field + "\"");
    return *it;
  };
  Et0lSystem sys;
  if (j.contains("k")) sys.k = j["k"].get<int>();
  std::set<std::string> term_set;
  for (const auto& t : need("terminals")) term_set.insert(t.get<std::string>());
  for (const auto& n : need("alphabet")) {
    std::string name = n.get<std::string>();
    sys.add_letter(name, term_set.count(name) != 0);
  }
  sys.axiom = sys.parse_word(need("axiom").get<std::string>());
  for (auto it = need("tables").begin(); it != need("tables").end(); ++it) {
    Table& t = sys.table(it.key());
    for (auto r = it.value().begin(); r != it.value().end(); ++r) {
      Letter l = sys.letter(r.key());
      for (const auto& img : r.value()) t.add(l, sys.parse_word(img.get<std::string>()));
    }
  }
  sys.control = parse_control(need("control").get<std::string>());
  return sys;
}

void save_system(const Et0lSystem& sys, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << system_to_json(sys);
}

Et0lSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return system_from_json(text);
}

}  // namespace bsk
