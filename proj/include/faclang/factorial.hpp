#pragma once

#include "faclang/automata.hpp"

namespace faclang {

// A nonempty factor-closed regular language. Every instance contains the
// empty word; {λ} is the smallest one.
class FactorialLanguage {
public:
    // Verifies factoriality; throws EmptyLanguageError or NotFactorialError.
    static FactorialLanguage from_language(Language lang);
    static FactorialLanguage unit(const Alphabet& sigma);

    const Language& language() const noexcept { return lang_; }
    const Alphabet& alphabet() const noexcept { return lang_.alphabet(); }
    bool is_unit() const;

    friend bool operator==(const FactorialLanguage&, const FactorialLanguage&) = default;

private:
    explicit FactorialLanguage(Language lang) : lang_(std::move(lang)) {}
    friend FactorialLanguage assume_factorial(Language lang);

    Language lang_;
};

// Wraps a language already known to be factorial (e.g. a catenation or
// intersection of factorial languages) without re-checking it.
FactorialLanguage assume_factorial(Language lang);

// Fac(x). Throws EmptyLanguageError on the empty language.
FactorialLanguage factorial_closure(const Language& x);
bool is_factorial(const Language& x);

// Π(L) = {a : La ⊆ L}, the letters every member can be extended by on the right.
Alphabet pi_alphabet(const FactorialLanguage& l);
// Δ(L) = {a : aL ⊆ L}, the left-hand counterpart.
Alphabet delta_alphabet(const FactorialLanguage& l);

// R_Δ(A) = Fac(A \ AΔ): members ending outside Δ, closed under factors.
FactorialLanguage r_delta(const FactorialLanguage& a, const Alphabet& delta);
// L_Π(B) = Fac(B \ ΠB): members starting outside Π, closed under factors.
FactorialLanguage l_pi(const FactorialLanguage& b, const Alphabet& pi);

FactorialLanguage concat(const FactorialLanguage& x, const FactorialLanguage& y);

}  // namespace faclang
