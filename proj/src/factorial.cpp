#include "faclang/factorial.hpp"

#include <string>

#include "faclang/error.hpp"

namespace faclang {

FactorialLanguage assume_factorial(Language lang) { return FactorialLanguage(std::move(lang)); }

FactorialLanguage FactorialLanguage::from_language(Language lang) {
    if (lang.is_empty()) throw EmptyLanguageError("the empty language is not a factorial language");
    if (!is_factorial(lang)) throw NotFactorialError("language is not closed under taking factors");
    return FactorialLanguage(std::move(lang));
}

FactorialLanguage FactorialLanguage::unit(const Alphabet& sigma) {
    return FactorialLanguage(Language::epsilon(sigma));
}

bool FactorialLanguage::is_unit() const { return lang_ == Language::epsilon(lang_.alphabet()); }

FactorialLanguage factorial_closure(const Language& x) {
    if (x.is_empty()) throw EmptyLanguageError("factorial closure of the empty language");
    return assume_factorial(infix_closure(x));
}

bool is_factorial(const Language& x) { return !x.is_empty() && x == infix_closure(x); }

Alphabet pi_alphabet(const FactorialLanguage& l) {
    // La ⊆ L iff every accepting state moves to an accepting state on a;
    // every state of the canonical DFA is reachable.
    const Language& lang = l.language();
    std::string out;
    for (std::size_t a = 0; a < lang.alphabet().size(); ++a) {
        bool closed = true;
        for (State s = 0; s < lang.state_count() && closed; ++s) {
            if (lang.is_accepting(s) && !lang.is_accepting(lang.next(s, a))) closed = false;
        }
        if (closed) out += lang.alphabet()[a];
    }
    return Alphabet(out);
}

Alphabet delta_alphabet(const FactorialLanguage& l) {
    return pi_alphabet(assume_factorial(reverse(l.language())));
}

FactorialLanguage r_delta(const FactorialLanguage& a, const Alphabet& delta) {
    const Language& lang = a.language();
    if (delta.empty()) return a;
    if (is_subset(lang, Language::star_of(lang.alphabet(), delta))) return FactorialLanguage::unit(lang.alphabet());
    Language ends_in_delta = concat(lang, Language::letters(lang.alphabet(), delta));
    return factorial_closure(difference(lang, ends_in_delta));
}

FactorialLanguage l_pi(const FactorialLanguage& b, const Alphabet& pi) {
    const Language& lang = b.language();
    if (pi.empty()) return b;
    if (is_subset(lang, Language::star_of(lang.alphabet(), pi))) return FactorialLanguage::unit(lang.alphabet());
    Language starts_in_pi = concat(Language::letters(lang.alphabet(), pi), lang);
    return factorial_closure(difference(lang, starts_in_pi));
}

FactorialLanguage concat(const FactorialLanguage& x, const FactorialLanguage& y) {
    return assume_factorial(concat(x.language(), y.language()));
}

}  // namespace faclang
