// Randomized property suites over canonical inputs built from Fac(W*)
// factors, plus the lemma identities on arbitrary factorial languages.

#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace faclang;
using namespace faclang::testing;

namespace {

const Alphabet kAB("ab");
const Alphabet kABC("abc");

Decomposition slice_of(const Decomposition& d, std::size_t from, std::size_t to) {
    if (from >= to) return Decomposition::unit(d.alphabet());
    return Decomposition(std::vector<Factor>(d.factors().begin() + static_cast<std::ptrdiff_t>(from),
                                             d.factors().begin() + static_cast<std::ptrdiff_t>(to)));
}

TEST(Properties, RandomCanonicalInputsAreMinimal) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        std::mt19937_64 rng(seed);
        const auto d = random_canonical(rng, kABC);
        EXPECT_TRUE(audit_minimality(d).minimal) << seed;
        EXPECT_FALSE(bounded_minimality_search(d, 3)) << seed;
        for (const auto& f : d.factors()) EXPECT_TRUE(passes_boundary_screen(f.lang)) << seed;
    }
}

TEST(Properties, CombinerSoundOnCanonicalInputs) {
    std::map<int, int> cases;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(1000 + seed);
        const auto a = random_canonical(rng, kABC);
        const auto b = random_canonical(rng, kABC);
        const auto c = combine(a, b);
        ++cases[case_number(c.rule)];
        EXPECT_EQ(product(c.result), concat(product(a), product(b))) << seed;
        EXPECT_TRUE(audit_minimality(c.result).minimal) << seed;
        EXPECT_TRUE(begins_with(c.result, a) || ends_with(c.result, b)) << seed;
        EXPECT_TRUE(bounded_product_equal(c.result, concat(product(a), product(b)), 6)) << seed;
    }
    for (int n = 1; n <= 4; ++n) EXPECT_GT(cases[n], 0) << "case " << n << " never exercised";
}

TEST(Properties, CombinerSoundOnScreenedRandomLanguages) {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 150; seed += 2) {
        const auto a = random_fac(5000 + seed, kABC), b = random_fac(5001 + seed, kABC);
        if (!passes_boundary_screen(a) || !passes_boundary_screen(b)) continue;
        ++checked;
        const auto c = combine(Decomposition({asserted(a)}), Decomposition({asserted(b)}));
        EXPECT_EQ(product(c.result), concat(a, b)) << seed;
        EXPECT_TRUE(audit_minimality(c.result).minimal) << seed;
    }
}

TEST(Properties, BoundaryScreenRejectsObviousProducts) {
    EXPECT_FALSE(passes_boundary_screen(fac("a*b*", kAB)));
    EXPECT_FALSE(passes_boundary_screen(fac("b*(a+eps)", kAB)));
    EXPECT_TRUE(passes_boundary_screen(fac("{a,b}*", kAB)));
    EXPECT_TRUE(passes_boundary_screen(fac("Fac({a,ab}*)", kAB)));
}

TEST(Properties, BoundaryAlphabetsOfProduct) {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300 && checked < 120; ++seed) {
        std::mt19937_64 rng(2000 + seed);
        const auto d = random_canonical(rng, kABC);
        if (d.size() < 2) continue;
        ++checked;
        const auto p = product(d);
        EXPECT_EQ(pi_alphabet(p), pi_alphabet(d.back().lang)) << seed;
        EXPECT_EQ(delta_alphabet(p), delta_alphabet(d.front().lang)) << seed;
    }
    EXPECT_GE(checked, 100);
}

TEST(Properties, BoundaryResidualOfCanonicalProduct) {
    int dropped = 0, kept = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        std::mt19937_64 rng(3000 + seed);
        Decomposition d = random_canonical(rng, kABC);
        if (seed % 2 == 0) {
            // Put a Γ* in front with Γ = Δ(X_1) so the drop branch is reached.
            const Alphabet gamma = delta_alphabet(d.front().lang);
            if (!gamma.empty()) d = catenate_canonical(Decomposition({sigma_star(kABC, gamma)}), d);
        }
        const auto x = product(d);
        const Alphabet delta = delta_alphabet(x), pi = pi_alphabet(x);
        const bool first_is = d.front().lang.language() == Language::star_of(kABC, delta);
        const bool last_is = d.back().lang.language() == Language::star_of(kABC, pi);
        (first_is ? dropped : kept)++;
        EXPECT_EQ(l_pi(x, delta), first_is ? product(slice_of(d, 1, d.size())) : x) << seed;
        EXPECT_EQ(r_delta(x, pi), last_is ? product(slice_of(d, 0, d.size() - 1)) : x) << seed;
    }
    EXPECT_GE(dropped, 100);
    EXPECT_GE(kept, 100);
}

TEST(Properties, TwoSidedReduction) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto a = random_fac(2 * seed, kABC), b = random_fac(2 * seed + 1, kABC);
        const auto ab = concat(a, b);
        const auto a1 = minimal_left_factor(a, b);
        EXPECT_EQ(concat(a1, minimal_right_factor(a1, b)), ab) << seed;
        const auto b1 = minimal_right_factor(a, b);
        EXPECT_EQ(concat(minimal_left_factor(a, b1), b1), ab) << seed;
    }
}

TEST(Properties, MinimalFactorBelowPerturbedAlternatives) {
    int alternatives = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        std::mt19937_64 rng(seed);
        const auto a = random_fac(rng(), kAB), b = random_fac(rng(), kAB);
        const auto target = concat(a, b).language();
        const auto left = minimal_left_factor(a, b).language();
        const auto right = minimal_right_factor(a, b).language();
        for (int t = 0; t < 20; ++t) {
            // Alternatives: the operand widened by a random word's factors,
            // or narrowed by excluding one of its short words.
            Word w;
            for (std::size_t len = rng() % 4; len > 0; --len) w += kAB[rng() % 2];
            const auto grow = infix_closure(Language::word(kAB, w));
            for (const auto& alt : {unite(a.language(), grow), exclude_word(a.language(), w)}) {
                if (alt.is_empty() || concat(alt, b.language()) != target) continue;
                ++alternatives;
                EXPECT_TRUE(is_subset(left, alt)) << seed;
            }
            for (const auto& alt : {unite(b.language(), grow), exclude_word(b.language(), w)}) {
                if (alt.is_empty() || concat(a.language(), alt) != target) continue;
                ++alternatives;
                EXPECT_TRUE(is_subset(right, alt)) << seed;
            }
        }
    }
    EXPECT_GT(alternatives, 100);
}

TEST(Properties, CaseThreeSymmetry) {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300 && checked < 50; ++seed) {
        std::mt19937_64 rng(4000 + seed);
        const auto gamma_f = random_word_star(rng, kABC);
        const auto gamma = as_sigma_star(gamma_f.lang);
        const Alphabet g = gamma ? *gamma : pi_alphabet(gamma_f.lang);
        if (g.empty()) continue;
        const auto a = catenate_canonical(random_canonical(rng, kABC), Decomposition({sigma_star(kABC, g)}));
        const auto b = catenate_canonical(Decomposition({sigma_star(kABC, g)}), random_canonical(rng, kABC));
        if (!(a.back().lang.language() == Language::star_of(kABC, g)) ||
            !(b.front().lang.language() == Language::star_of(kABC, g)) || pi_alphabet(a.back().lang) != g ||
            delta_alphabet(b.front().lang) != g) {
            continue;
        }
        ++checked;
        const auto c = combine(a, b);
        EXPECT_EQ(c.rule, CombineRule::EqualDropLeft);
        std::vector<Factor> right(a.factors());
        right.insert(right.end(), b.factors().begin() + 1, b.factors().end());
        const Decomposition drop_right(std::move(right));
        EXPECT_EQ(product(drop_right), product(c.result));
        EXPECT_TRUE(audit_minimality(drop_right).minimal);
    }
    EXPECT_GE(checked, 20);
}

TEST(Properties, ChainsOnCanonicalInputs) {
    const auto subs = subalphabets(kABC);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        std::mt19937_64 rng(6000 + seed);
        const auto d = random_canonical(rng, kABC);
        const auto& sub = subs[rng() % subs.size()];
        const auto r = r_delta_chain(d, sub);
        const auto l = l_pi_chain(d, sub);
        EXPECT_EQ(product(r.decomposition), r_delta(product(d), sub)) << seed;
        EXPECT_EQ(product(l.decomposition), l_pi(product(d), sub)) << seed;
        EXPECT_TRUE(audit_minimality(r.decomposition).minimal) << seed;
        EXPECT_TRUE(audit_minimality(l.decomposition).minimal) << seed;
        for (std::size_t i = 1; i < r.trace.steps.size(); ++i) {
            EXPECT_LT(r.trace.steps[i].index, r.trace.steps[i - 1].index);
        }
        for (std::size_t i = 1; i < l.trace.steps.size(); ++i) {
            EXPECT_GT(l.trace.steps[i].index, l.trace.steps[i - 1].index);
        }
        for (const auto& step : r.trace.steps) {
            if (step.collapsed) EXPECT_TRUE(step.factor.is_unit());
        }
    }
}

TEST(Properties, AuditAgreesWithSearch) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        std::mt19937_64 rng(7000 + seed);
        std::vector<Factor> factors;
        const std::size_t n = 1 + rng() % 3;
        while (factors.size() < n) {
            const auto f = random_fac(rng(), kAB, 4);
            if (!f.is_unit()) factors.push_back(asserted(f));
        }
        const Decomposition d(std::move(factors));
        const auto audit = audit_minimality(d);
        if (bounded_minimality_search(d, 4)) EXPECT_FALSE(audit.minimal) << seed;
        if (audit.minimal) continue;
        const auto& w = *audit.witness;
        Language p = Language::epsilon(kAB);
        for (std::size_t j = 0; j < d.size(); ++j) {
            p = concat(p, j + 1 == w.position ? w.candidate.language() : d[j].lang.language());
        }
        EXPECT_EQ(p, product(d).language()) << seed;
        EXPECT_TRUE(is_proper_subset(w.candidate.language(), d[w.position - 1].lang.language())) << seed;
    }
}

}  // namespace
