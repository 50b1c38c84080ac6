#pragma once

// Shared helpers for the test suites. The word-set routines here are the
// bounded oracles: they work on explicit sets of short words and never call
// the automata engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "faclang/automata.hpp"
#include "faclang/catalog.hpp"
#include "faclang/decomposition.hpp"
#include "faclang/expression.hpp"
#include "faclang/factorial.hpp"
#include "faclang/oracle.hpp"

namespace faclang::testing {

using WordSet = std::set<Word>;

// Σ^{<=n}.
inline WordSet all_words(const Alphabet& sigma, std::size_t n) {
    WordSet out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Symbol c : sigma) next.push_back(w + c);
        }
        out.insert(next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

inline WordSet words_where(const Alphabet& sigma, std::size_t n, const std::function<bool(const Word&)>& pred) {
    WordSet out;
    for (const auto& w : all_words(sigma, n)) {
        if (pred(w)) out.insert(w);
    }
    return out;
}

inline bool contains_factor(const Word& w, const Word& u) { return w.find(u) != Word::npos; }

inline WordSet factors_of(const WordSet& words, std::size_t n) {
    WordSet out;
    for (const auto& w : words) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            for (std::size_t len = 0; i + len <= w.size() && len <= n; ++len) out.insert(w.substr(i, len));
        }
    }
    return out;
}

inline WordSet catenate(const WordSet& x, const WordSet& y, std::size_t n) {
    WordSet out;
    for (const auto& u : x) {
        for (const auto& v : y) {
            if (u.size() + v.size() <= n) out.insert(u + v);
        }
    }
    return out;
}

// Words of length <= n formed by gluing generators, i.e. the slice of W*.
inline WordSet star_slice(const WordSet& generators, std::size_t n) {
    WordSet out{Word{}};
    WordSet frontier{Word{}};
    while (!frontier.empty()) {
        WordSet next;
        for (const auto& u : frontier) {
            for (const auto& g : generators) {
                if (!g.empty() && u.size() + g.size() <= n && out.insert(u + g).second) next.insert(u + g);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline WordSet slice(const Language& l, std::size_t n) {
    const auto words = enumerate_up_to(l, n);
    return {words.begin(), words.end()};
}
inline WordSet slice(const FactorialLanguage& l, std::size_t n) { return slice(l.language(), n); }

inline Language lang(const std::string& expr, const Alphabet& sigma) {
    return build(parse_expression(expr, sigma), sigma);
}

inline FactorialLanguage fac(const std::string& expr, const Alphabet& sigma) {
    return FactorialLanguage::from_language(lang(expr, sigma));
}

inline Factor asserted(const std::string& expr, const Alphabet& sigma) {
    return Factor::attest(fac(expr, sigma), Attestation::asserted("test"), expr);
}

inline Factor asserted(const FactorialLanguage& l) {
    return Factor::attest(l, Attestation::asserted("test"));
}

inline Decomposition decomp(const std::vector<std::string>& exprs, const Alphabet& sigma) {
    std::vector<Factor> factors;
    for (const auto& e : exprs) factors.push_back(asserted(e, sigma));
    return Decomposition(std::move(factors));
}

// Random NFA over sigma with up to max_states states; may denote any regular
// language, including the empty one.
inline Automaton random_automaton(std::mt19937_64& rng, const Alphabet& sigma, std::size_t max_states,
                                  double density) {
    std::uniform_int_distribution<std::size_t> count(1, max_states);
    std::bernoulli_distribution edge(density), coin(0.4);
    Automaton a;
    a.alphabet = sigma;
    a.state_count = count(rng);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(a.state_count - 1));
    a.initial = {0};
    if (coin(rng)) a.initial.push_back(pick(rng));
    for (State s = 0; s < a.state_count; ++s) {
        for (Symbol c : sigma) {
            if (edge(rng)) a.transitions.push_back({s, c, pick(rng)});
            if (coin(rng) && edge(rng)) a.transitions.push_back({s, c, pick(rng)});
        }
        if (coin(rng)) a.accepting.push_back(s);
    }
    return a;
}

inline Language random_language(std::mt19937_64& rng, const Alphabet& sigma, std::size_t max_states = 4,
                                double density = 0.5) {
    return Language::from_automaton(random_automaton(rng, sigma, max_states, density));
}

inline FactorialLanguage random_fac(std::uint64_t seed, const Alphabet& sigma, std::size_t max_states = 5,
                                    double density = 0.6) {
    return random_factorial({sigma, max_states, density, seed});
}

// Random Fac(W*) factor: W has 1-3 words of length 1-3 over sigma. Such
// languages are the factor sets of recurrent infinite words, hence
// indecomposable, so they are valid canonical inputs.
inline Factor random_word_star(std::mt19937_64& rng, const Alphabet& sigma) {
    std::uniform_int_distribution<int> count(1, 3), len(1, 3);
    std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
    std::vector<Word> words;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        for (int j = len(rng); j > 0; --j) w += sigma[letter(rng)];
        words.push_back(w);
    }
    return fac_word_star(sigma, words);
}

// Canonical decomposition of a catenation of 1-4 random Fac(W*) factors,
// assembled with the combiner.
inline Decomposition random_canonical(std::mt19937_64& rng, const Alphabet& sigma) {
    std::uniform_int_distribution<int> parts(1, 4);
    Decomposition d({random_word_star(rng, sigma)});
    for (int i = parts(rng); i > 1; --i) d = catenate_canonical(d, Decomposition({random_word_star(rng, sigma)}));
    return d;
}

// Necessary condition for indecomposability: X = Π(X)* or R_{Π(X)}(X) = X,
// and X = Δ(X)* or L_{Δ(X)}(X) = X. A failure exhibits X = X'·Π(X)* or
// X = Δ(X)*·X' with a proper factor, so X is decomposable.
inline bool passes_boundary_screen(const FactorialLanguage& x) {
    const Alphabet pi = pi_alphabet(x), delta = delta_alphabet(x);
    const bool right = x.language() == Language::star_of(x.alphabet(), pi) || r_delta(x, pi) == x;
    const bool left = x.language() == Language::star_of(x.alphabet(), delta) || l_pi(x, delta) == x;
    return right && left;
}

inline std::vector<Alphabet> subalphabets(const Alphabet& sigma) {
    std::vector<Alphabet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << sigma.size()); ++mask) {
        std::string s;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (mask & (std::size_t{1} << i)) s += sigma[i];
        }
        out.emplace_back(s);
    }
    return out;
}

}  // namespace faclang::testing
