#pragma once

#include <string>
#include <string_view>

#include "faclang/automata.hpp"

namespace faclang {

// Interchange format:
//   {"alphabet":["a","b"],"states":N,"initial":[..],"accepting":[..],
//    "transitions":[[from,"a",to],...]}
// States are 0-based. Writing always emits the canonical DFA, so
// write(read(write(x))) reproduces the same bytes.
std::string write_automaton_json(const Automaton& a);
std::string write_language_json(const Language& x);

// Throws std::invalid_argument on malformed documents.
Automaton read_automaton_json(std::string_view text);
Language read_language_json(std::string_view text);

}  // namespace faclang
