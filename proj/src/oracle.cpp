#include "faclang/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "faclang/error.hpp"

namespace faclang {

TruncatedLanguage truncate(const FactorialLanguage& l, std::size_t n) {
    return {n, enumerate_up_to(l.language(), n)};
}

bool bounded_product_equal(const Decomposition& d, const FactorialLanguage& l, std::size_t n) {
    std::set<Word> slice{Word{}};
    for (const auto& f : d.factors()) {
        const auto part = enumerate_up_to(f.lang.language(), n);
        std::set<Word> next;
        for (const auto& u : slice) {
            for (const auto& v : part) {
                if (u.size() + v.size() <= n) next.insert(u + v);
            }
        }
        slice = std::move(next);
    }
    const auto expected = enumerate_up_to(l.language(), n);
    return slice == std::set<Word>(expected.begin(), expected.end());
}

Language exclude_word(const Language& l, const Word& w) {
    const Language all = Language::star_of(l.alphabet(), l.alphabet());
    const Language containing = concat(concat(all, Language::word(l.alphabet(), w)), all);
    return difference(l, containing);
}

std::optional<SearchWitness> bounded_minimality_search(const Decomposition& d, std::size_t n) {
    const Language whole = product(d).language();
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (const auto& w : enumerate_up_to(d[i].lang.language(), n)) {
            if (w.empty()) continue;
            Language candidate = exclude_word(d[i].lang.language(), w);
            Language p = Language::epsilon(d.alphabet());
            for (std::size_t j = 0; j < d.size(); ++j) p = concat(p, j == i ? candidate : d[j].lang.language());
            if (p == whole) return SearchWitness{i + 1, w};
        }
    }
    return std::nullopt;
}

FactorialLanguage random_factorial(const GeneratorConfig& cfg) {
    if (cfg.max_states < 1) throw std::invalid_argument("max_states must be at least 1");
    if (cfg.alphabet.empty()) throw std::invalid_argument("generator alphabet is empty");
    std::mt19937_64 rng(cfg.seed);
    auto below = [&rng](std::uint64_t bound) { return static_cast<std::uint64_t>(rng() % bound); };
    auto chance = [&rng](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

    for (int attempt = 0; attempt < 100; ++attempt) {
        Automaton a;
        a.alphabet = cfg.alphabet;
        a.state_count = 1 + below(cfg.max_states);
        a.initial = {0};
        for (State s = 0; s < a.state_count; ++s) {
            for (Symbol c : cfg.alphabet) {
                if (chance(cfg.transition_density)) a.transitions.push_back({s, c, static_cast<State>(below(a.state_count))});
            }
            if (chance(0.5)) a.accepting.push_back(s);
        }
        Language lang = Language::from_automaton(a);
        if (!lang.is_empty()) return factorial_closure(lang);
    }
    throw ResourceError("random_factorial: 100 attempts produced only the empty language");
}

}  // namespace faclang
