#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "faclang/decomposition.hpp"

namespace faclang {

// The length-<= bound slice of a language.
struct TruncatedLanguage {
    std::size_t bound;
    std::vector<Word> words;  // length-then-lexicographic order

    friend bool operator==(const TruncatedLanguage&, const TruncatedLanguage&) = default;
};

TruncatedLanguage truncate(const FactorialLanguage& l, std::size_t n);

// Compares the <= n slice of product(d) with that of l. The product slice is
// assembled from the factors' slices as word sets, without automata.
bool bounded_product_equal(const Decomposition& d, const FactorialLanguage& l, std::size_t n);

// Every factorial L' ⊊ L omits some word w, and then L' lies inside
// Exclude(L, w) = L ∩ complement(Σ* w Σ*), the largest factorial subset of L
// avoiding w.
Language exclude_word(const Language& l, const Word& w);

struct SearchWitness {
    std::size_t position;  // 1-based
    Word word;             // excluded word
};

// Tries Exclude(L_i, w) for every position i and every nonempty w of length
// <= n in L_i, in that order, and reports the first one that keeps the exact
// product unchanged.
std::optional<SearchWitness> bounded_minimality_search(const Decomposition& d, std::size_t n);

struct GeneratorConfig {
    Alphabet alphabet;
    std::size_t max_states = 5;
    double transition_density = 0.6;
    std::uint64_t seed = 0;
};

// Random trimmed acceptor, factor-closed; retried while empty. Deterministic
// for a given config. Throws ResourceError after 100 empty attempts.
FactorialLanguage random_factorial(const GeneratorConfig& cfg);

}  // namespace faclang
