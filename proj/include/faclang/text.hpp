#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "faclang/decomposition.hpp"

namespace faclang {

// Splits "F1 . F2 . F3" into trimmed factor sources.
std::vector<std::string> split_decomposition(std::string_view text);

// A language given either as an expression or as "@path" naming a JSON
// automaton file. File alphabets must equal sigma.
Language load_language(std::string_view source, const Alphabet& sigma);

// Letters needed to read `source`: the expression's letters or the file's
// alphabet.
Alphabet alphabet_of_source(std::string_view source);

// Each factor must denote a factorial language; factors equal to some Γ* are
// attested as verified, the rest receive `claim`.
Decomposition parse_decomposition(std::string_view text, const Alphabet& sigma, const Attestation& claim);

// "a*" / "{a,b}*" for verified Γ*, else the source expression, else a
// synthesized expression.
std::string format_factor(const Factor& f);
std::string format_language(const FactorialLanguage& l);
std::string format_decomposition(const Decomposition& d);

}  // namespace faclang
