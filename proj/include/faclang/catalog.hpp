#pragma once

#include <string>
#include <vector>

#include "faclang/decomposition.hpp"

namespace faclang {

// Γ*, verified indecomposable. Throws PreconditionError on an empty Γ.
Factor sigma_star(const Alphabet& sigma, const Alphabet& gamma);

// Fac(W*) for a nonempty finite word set W, carried as an asserted factor.
Factor fac_word_star(const Alphabet& sigma, const std::vector<Word>& words);

struct Fixture {
    std::string name;
    Decomposition a;
    Decomposition b;
    Decomposition expected;
    int case_id;
};

// The five worked catenations: example1 .. example5. `k` is the repetition
// count of example 5 (A = (a*b*)^k + (b*a*)^k) and is ignored otherwise.
// Throws std::out_of_range for n outside 1..5 and std::invalid_argument for k < 1.
Fixture example_fixture(int n, int k = 2);

}  // namespace faclang
