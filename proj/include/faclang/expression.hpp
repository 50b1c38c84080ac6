#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faclang/automata.hpp"

namespace faclang {

// Expression syntax:
//   expr   := term ('+' term)*          '+' is union
//   term   := factor+                   juxtaposition is catenation
//   factor := atom ('*' | '^' INT)*
//   atom   := LETTER | 'eps' | 'empty' | '(' expr ')' | 'Fac(' expr ')'
//           | '{' word (',' word)* '}'
// Letters are single alphanumeric characters; whitespace is insignificant.
// The keywords eps, empty and Fac take precedence over letters.
struct ExpressionAst {
    enum class Kind { Letter, Empty, Epsilon, Union, Concat, Star, Power, Fac, WordSet };

    Kind kind = Kind::Empty;
    Symbol letter = 0;
    std::vector<ExpressionAst> children;
    unsigned exponent = 0;
    std::vector<Word> words;

    // Structural rendering, e.g. "Concat(Star(a),Star(b))".
    std::string to_string() const;
};

// With sigma == nullopt any alphanumeric letter is accepted.
// Throws ParseError (syntax) or AlphabetError (letter outside sigma).
ExpressionAst parse_expression(std::string_view src, const std::optional<Alphabet>& sigma);

// Letters occurring anywhere in the expression.
Alphabet letters_of(const ExpressionAst& ast);

// Minimal complete DFA of the denoted language over sigma.
Language build(const ExpressionAst& ast, const Alphabet& sigma);

// A parseable expression denoting x, obtained by state elimination on the
// canonical DFA. Deterministic for equal languages.
std::string synthesize_expression(const Language& x);

}  // namespace faclang
