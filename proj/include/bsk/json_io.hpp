#pragma once

// Canonical JSON encoding of a system:
//   { "k"?: int, "alphabet": [names], "terminals": [names], "axiom": word,
//     "tables": { id: { letter: [images] } }, "control": regex-string }
// Words are plain concatenations of letter names, or space-separated tokens
// when any name has more than one character.  Export order is canonical
// (alphabet in interning order, tables in insertion order, rules per table
// in letter order), so export(import(s)) == s byte for byte.

#include "bsk/lsystem.hpp"

#include <string>

namespace bsk {

std::string system_to_json(const Et0lSystem& sys);
Et0lSystem system_from_json(const std::string& text);

void save_system(const Et0lSystem& sys, const std::string& path);
Et0lSystem load_system(const std::string& path);

}  // namespace bsk
