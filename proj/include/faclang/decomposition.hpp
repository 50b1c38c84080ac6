#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "faclang/factorial.hpp"

namespace faclang {

// Why a factor is believed indecomposable. Only languages of the form Γ*
// can be machine-verified; everything else is either asserted by whoever
// supplied it or unknown.
struct Attestation {
    enum class Kind { VerifiedSigmaStar, Asserted, Unverified };

    Kind kind = Kind::Unverified;
    std::string source;

    static Attestation verified() { return {Kind::VerifiedSigmaStar, {}}; }
    static Attestation asserted(std::string source) { return {Kind::Asserted, std::move(source)}; }
    static Attestation unverified() { return {Kind::Unverified, {}}; }

    std::string to_string() const;

    friend bool operator==(const Attestation&, const Attestation&) = default;
};

// Returns Γ when l = Γ* for its own nonempty letter set Γ.
std::optional<Alphabet> as_sigma_star(const FactorialLanguage& l);

struct Factor {
    FactorialLanguage lang;
    Attestation attestation;
    // Source text the factor was built from; empty when synthesized.
    std::string expression;

    // Upgrades to VerifiedSigmaStar when lang is some Γ*, otherwise keeps
    // `otherwise`.
    static Factor attest(FactorialLanguage lang, Attestation otherwise, std::string expression = {});
};

// A word over the alphabet of indecomposable factorial languages: a nonempty
// factor sequence over one session alphabet in which {λ} only appears as the
// sole entry of the unit decomposition [{λ}].
class Decomposition {
public:
    // Throws PreconditionError / AlphabetError when the invariants fail.
    explicit Decomposition(std::vector<Factor> factors);
    static Decomposition unit(const Alphabet& sigma);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    const Factor& operator[](std::size_t i) const { return factors_[i]; }
    const Factor& front() const { return factors_.front(); }
    const Factor& back() const { return factors_.back(); }
    const Alphabet& alphabet() const { return factors_.front().lang.alphabet(); }
    bool is_unit() const { return factors_.size() == 1 && factors_.front().lang.is_unit(); }

    // True when some factor carries an Unverified attestation: the sequence
    // is still exactly minimal, but canonicity rests on unproven claims.
    bool canonicity_conditional() const;

private:
    std::vector<Factor> factors_;
};

FactorialLanguage product(const Decomposition& d);

// Component-wise language equality; attestations and source text ignored.
bool decomp_equal(const Decomposition& x, const Decomposition& y);
bool begins_with(const Decomposition& d, const Decomposition& prefix);
bool ends_with(const Decomposition& d, const Decomposition& suffix);

// The least factorial Y with Y·b = a·b, namely R_{Δ(b)}(a).
FactorialLanguage minimal_left_factor(const FactorialLanguage& a, const FactorialLanguage& b);
// The least factorial Y with a·Y = a·b, namely L_{Π(a)}(b).
FactorialLanguage minimal_right_factor(const FactorialLanguage& a, const FactorialLanguage& b);

enum class ChainDirection { RightResidual, LeftResidual };

struct ChainStep {
    std::size_t index;  // 1-based position in the input decomposition
    Alphabet subalphabet;  // Δ_i (right residual) or Π_j (left residual) used at this step
    FactorialLanguage factor;
    bool collapsed;  // the input factor lay inside subalphabet*, factor is {λ}
};

struct ChainTrace {
    ChainDirection direction;
    std::vector<ChainStep> steps;
};

struct ChainResult {
    Decomposition decomposition;
    ChainTrace trace;
};

// Decomposition of R_Δ(product(a)) computed factor by factor from the right:
// Δ_k = Δ, A_i' = R_{Δ_i}(A_i) and Δ_{i-1} = Δ(A_i') unless A_i ⊆ Δ_i*, in
// which case A_i' = {λ} and the subalphabet carries over. {λ} entries are
// dropped; if all collapse the result is [{λ}].
ChainResult r_delta_chain(const Decomposition& a, const Alphabet& delta);
// Mirror image: scans left to right computing L_Π(product(b)).
ChainResult l_pi_chain(const Decomposition& b, const Alphabet& pi);

enum class CombineRule {
    UnitOperand,          // one side is [{λ}]
    Incomparable,         // Δ\Π and Π\Δ both nonempty
    EqualKeepBoth,        // Π = Δ, neither boundary factor is Δ*
    EqualDropLeft,        // Π = Δ and A_k = Δ*
    EqualDropRight,       // Π = Δ and B_1 = Δ* (A_k ≠ Δ*)
    ResidualLeftOperand,  // Π ⊊ Δ: R_Δ chain over A
    ResidualRightOperand  // Δ ⊊ Π: L_Π chain over B
};

// Numbering 1-4 of the combiner cases; UnitOperand is 0.
int case_number(CombineRule rule);
std::string describe(CombineRule rule);

struct Combination {
    Decomposition result;
    CombineRule rule;
    Alphabet pi;     // Π of the left operand
    Alphabet delta;  // Δ of the right operand
    std::optional<ChainTrace> trace;
};

// Canonical decomposition of the catenation of two canonical decompositions.
// Throws PreconditionError if either operand fails audit_minimality.
Combination combine(const Decomposition& a, const Decomposition& b);
inline Decomposition catenate_canonical(const Decomposition& a, const Decomposition& b) {
    return combine(a, b).result;
}

struct MinimalityWitness {
    std::size_t position;         // 1-based
    FactorialLanguage candidate;  // proper factorial subset of the factor preserving the product
};

struct AuditResult {
    bool minimal;
    std::optional<MinimalityWitness> witness;
};

// Exact minimality decision. For position i with prefix product P and suffix
// product S, M_i = L_{Π(P)}(R_{Δ(S)}(L_i)) is the least factorial language
// that can replace L_i; the decomposition is minimal iff M_i = L_i for all i.
// The witness names the rightmost position that can shrink.
AuditResult audit_minimality(const Decomposition& d);

}  // namespace faclang
