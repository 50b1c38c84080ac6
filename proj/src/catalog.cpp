#include "faclang/catalog.hpp"

#include <stdexcept>

#include "faclang/error.hpp"

namespace faclang {

namespace {

std::string star_expression(const Alphabet& gamma) {
    if (gamma.size() == 1) return std::string(1, gamma[0]) + "*";
    return gamma.to_string() + "*";
}

std::string word_set_expression(const std::vector<Word>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out += ',';
        out += words[i].empty() ? "eps" : words[i];
    }
    return out + "}";
}

Decomposition of(std::vector<Factor> factors) { return Decomposition(std::move(factors)); }

// a*+b*, the repeated factor of example 5.
Factor a_or_b_star(const Alphabet& sigma) {
    Language lang = unite(Language::star_of(sigma, Alphabet("a")), Language::star_of(sigma, Alphabet("b")));
    return Factor{assume_factorial(std::move(lang)), Attestation::asserted("alternating-star fixture"), "a*+b*"};
}

}  // namespace

Factor sigma_star(const Alphabet& sigma, const Alphabet& gamma) {
    if (gamma.empty()) throw PreconditionError("Γ* needs a nonempty Γ; {λ} is not a standalone factor");
    if (!gamma.is_subset_of(sigma)) {
        throw AlphabetError(gamma.to_string() + " is not a subalphabet of " + sigma.to_string());
    }
    return Factor{assume_factorial(Language::star_of(sigma, gamma)), Attestation::verified(), star_expression(gamma)};
}

Factor fac_word_star(const Alphabet& sigma, const std::vector<Word>& words) {
    if (words.empty()) throw PreconditionError("Fac(W*) needs a nonempty word set");
    Language generators = Language::empty(sigma);
    for (const auto& w : words) generators = unite(generators, Language::word(sigma, w));
    return Factor::attest(factorial_closure(star(generators)), Attestation::asserted("Fac(W*) class"),
                          "Fac(" + word_set_expression(words) + "*)");
}

Fixture example_fixture(int n, int k) {
    const Alphabet ab("ab");
    const Alphabet abc("abc");
    switch (n) {
        case 1:
            return {"example1", of({sigma_star(abc, Alphabet("ab"))}), of({sigma_star(abc, Alphabet("ac"))}),
                    of({sigma_star(abc, Alphabet("ab")), sigma_star(abc, Alphabet("ac"))}), 1};
        case 2: {
            Factor a = fac_word_star(abc, {"a", "ab"});
            Factor b = fac_word_star(abc, {"a", "ac"});
            return {"example2", of({a}), of({b}), of({a, b}), 2};
        }
        case 3: {
            Factor b = fac_word_star(ab, {"a", "ab"});
            return {"example3", of({sigma_star(ab, Alphabet("a"))}), of({b}), of({b}), 3};
        }
        case 4: {
            Factor a = sigma_star(ab, Alphabet("a"));
            Factor b = sigma_star(ab, Alphabet("b"));
            return {"example4", of({a, b}), of({b, a}), of({a, b, a}), 3};
        }
        case 5: {
            if (k < 1) throw std::invalid_argument("example 5 needs k >= 1");
            Factor a = sigma_star(ab, Alphabet("a"));
            Factor b = sigma_star(ab, Alphabet("b"));
            std::vector<Factor> left(static_cast<std::size_t>(2 * k), a_or_b_star(ab));
            std::vector<Factor> expected;
            for (int i = 0; i < k; ++i) {
                expected.push_back(a);
                expected.push_back(b);
            }
            expected.push_back(a);
            return {"example5", of(std::move(left)), of({a}), of(std::move(expected)), 4};
        }
        default: throw std::out_of_range("fixture number must be in 1..5, got " + std::to_string(n));
    }
}

}  // namespace faclang
