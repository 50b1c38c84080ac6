#include "faclang/decomposition.hpp"

#include <algorithm>

#include "faclang/error.hpp"

namespace faclang {

std::string Attestation::to_string() const {
    switch (kind) {
        case Kind::VerifiedSigmaStar: return "verified";
        case Kind::Asserted: return source.empty() ? "asserted" : "asserted (" + source + ")";
        case Kind::Unverified: return "unverified";
    }
    return "unverified";
}

std::optional<Alphabet> as_sigma_star(const FactorialLanguage& l) {
    Alphabet gamma = l.language().symbols_used();
    if (gamma.empty()) return std::nullopt;
    if (l.language() != Language::star_of(l.alphabet(), gamma)) return std::nullopt;
    return gamma;
}

Factor Factor::attest(FactorialLanguage lang, Attestation otherwise, std::string expression) {
    Attestation att = as_sigma_star(lang) ? Attestation::verified() : std::move(otherwise);
    return Factor{std::move(lang), std::move(att), std::move(expression)};
}

// ----------------------------------------------------------- Decomposition

Decomposition::Decomposition(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw PreconditionError("a decomposition has at least one factor");
    for (const auto& f : factors_) {
        if (f.lang.alphabet() != factors_.front().lang.alphabet()) {
            throw AlphabetError("decomposition factors over different alphabets");
        }
        if (factors_.size() > 1 && f.lang.is_unit()) {
            throw PreconditionError("{λ} may only appear as the sole factor of a decomposition");
        }
    }
}

Decomposition Decomposition::unit(const Alphabet& sigma) {
    return Decomposition({Factor{FactorialLanguage::unit(sigma), Attestation::verified(), "eps"}});
}

bool Decomposition::canonicity_conditional() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.attestation.kind == Attestation::Kind::Unverified; });
}

FactorialLanguage product(const Decomposition& d) {
    FactorialLanguage out = d.front().lang;
    for (std::size_t i = 1; i < d.size(); ++i) out = concat(out, d[i].lang);
    return out;
}

bool decomp_equal(const Decomposition& x, const Decomposition& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].lang != y[i].lang) return false;
    }
    return true;
}

bool begins_with(const Decomposition& d, const Decomposition& prefix) {
    if (prefix.size() > d.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (d[i].lang != prefix[i].lang) return false;
    }
    return true;
}

bool ends_with(const Decomposition& d, const Decomposition& suffix) {
    if (suffix.size() > d.size()) return false;
    const std::size_t shift = d.size() - suffix.size();
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        if (d[shift + i].lang != suffix[i].lang) return false;
    }
    return true;
}

FactorialLanguage minimal_left_factor(const FactorialLanguage& a, const FactorialLanguage& b) {
    return r_delta(a, delta_alphabet(b));
}

FactorialLanguage minimal_right_factor(const FactorialLanguage& a, const FactorialLanguage& b) {
    return l_pi(b, pi_alphabet(a));
}

// ------------------------------------------------------------------ chains

namespace {

Decomposition from_survivors(std::vector<Factor> survivors, const Alphabet& sigma) {
    if (survivors.empty()) return Decomposition::unit(sigma);
    return Decomposition(std::move(survivors));
}

// One chain step: residual of `input` by `sub`, or a collapse when
// input ⊆ sub*. Returns the surviving factor, if any.
template <typename Residual>
std::optional<Factor> chain_step(const Factor& input, const Alphabet& sub, std::size_t index, Residual residual,
                                 ChainTrace& trace) {
    const Alphabet& sigma = input.lang.alphabet();
    if (is_subset(input.lang.language(), Language::star_of(sigma, sub))) {
        trace.steps.push_back({index, sub, FactorialLanguage::unit(sigma), true});
        return std::nullopt;
    }
    FactorialLanguage shrunk = residual(input.lang, sub);
    trace.steps.push_back({index, sub, shrunk, shrunk.is_unit()});
    if (shrunk.is_unit()) return std::nullopt;
    if (shrunk == input.lang) return input;
    return Factor::attest(std::move(shrunk), Attestation::unverified());
}

}  // namespace

ChainResult r_delta_chain(const Decomposition& a, const Alphabet& delta) {
    ChainTrace trace{ChainDirection::RightResidual, {}};
    std::vector<Factor> survivors;
    Alphabet current = delta;
    for (std::size_t i = a.size(); i-- > 0;) {
        auto kept = chain_step(a[i], current, i + 1, r_delta, trace);
        if (kept) {
            current = delta_alphabet(kept->lang);
            survivors.push_back(std::move(*kept));
        }
    }
    std::reverse(survivors.begin(), survivors.end());
    return {from_survivors(std::move(survivors), a.alphabet()), std::move(trace)};
}

ChainResult l_pi_chain(const Decomposition& b, const Alphabet& pi) {
    ChainTrace trace{ChainDirection::LeftResidual, {}};
    std::vector<Factor> survivors;
    Alphabet current = pi;
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto kept = chain_step(b[j], current, j + 1, l_pi, trace);
        if (kept) {
            current = pi_alphabet(kept->lang);
            survivors.push_back(std::move(*kept));
        }
    }
    return {from_survivors(std::move(survivors), b.alphabet()), std::move(trace)};
}

// ----------------------------------------------------------------- combine

int case_number(CombineRule rule) {
    switch (rule) {
        case CombineRule::UnitOperand: return 0;
        case CombineRule::Incomparable: return 1;
        case CombineRule::EqualKeepBoth: return 2;
        case CombineRule::EqualDropLeft:
        case CombineRule::EqualDropRight: return 3;
        case CombineRule::ResidualLeftOperand:
        case CombineRule::ResidualRightOperand: return 4;
    }
    return 0;
}

std::string describe(CombineRule rule) {
    switch (rule) {
        case CombineRule::UnitOperand: return "one operand is {eps}";
        case CombineRule::Incomparable: return "pi and delta incomparable";
        case CombineRule::EqualKeepBoth: return "pi = delta, boundary factors kept";
        case CombineRule::EqualDropLeft: return "pi = delta, left boundary factor delta* dropped";
        case CombineRule::EqualDropRight: return "pi = delta, right boundary factor delta* dropped";
        case CombineRule::ResidualLeftOperand: return "pi proper subset of delta, right residual chain over left operand";
        case CombineRule::ResidualRightOperand: return "delta proper subset of pi, left residual chain over right operand";
    }
    return {};
}

namespace {

Decomposition joined(const Decomposition& left, std::size_t left_keep, const Decomposition& right,
                     std::size_t right_skip) {
    std::vector<Factor> out(left.factors().begin(), left.factors().begin() + static_cast<std::ptrdiff_t>(left_keep));
    out.insert(out.end(), right.factors().begin() + static_cast<std::ptrdiff_t>(right_skip), right.factors().end());
    return Decomposition(std::move(out));
}

void require_minimal(const Decomposition& d, const char* side) {
    auto audit = audit_minimality(d);
    if (!audit.minimal) {
        throw PreconditionError(std::string(side) + " operand is not a minimal decomposition (factor " +
                                std::to_string(audit.witness->position) + " can shrink)");
    }
}

}  // namespace

Combination combine(const Decomposition& a, const Decomposition& b) {
    if (a.alphabet() != b.alphabet()) {
        throw AlphabetError("alphabet mismatch: " + a.alphabet().to_string() + " vs " + b.alphabet().to_string());
    }
    require_minimal(a, "left");
    require_minimal(b, "right");

    Alphabet pi = pi_alphabet(a.back().lang);
    Alphabet delta = delta_alphabet(b.front().lang);
    if (a.is_unit()) return {b, CombineRule::UnitOperand, pi, delta, std::nullopt};
    if (b.is_unit()) return {a, CombineRule::UnitOperand, pi, delta, std::nullopt};

    if (pi == delta) {
        const Language boundary = Language::star_of(a.alphabet(), delta);
        if (a.back().lang.language() == boundary) {
            if (a.size() == 1) return {b, CombineRule::EqualDropLeft, pi, delta, std::nullopt};
            return {joined(a, a.size() - 1, b, 0), CombineRule::EqualDropLeft, pi, delta, std::nullopt};
        }
        if (b.front().lang.language() == boundary) {
            if (b.size() == 1) return {a, CombineRule::EqualDropRight, pi, delta, std::nullopt};
            return {joined(a, a.size(), b, 1), CombineRule::EqualDropRight, pi, delta, std::nullopt};
        }
        return {joined(a, a.size(), b, 0), CombineRule::EqualKeepBoth, pi, delta, std::nullopt};
    }
    if (pi.is_proper_subset_of(delta)) {
        auto chain = r_delta_chain(a, delta);
        Decomposition result = chain.decomposition.is_unit()
                                   ? b
                                   : joined(chain.decomposition, chain.decomposition.size(), b, 0);
        return {std::move(result), CombineRule::ResidualLeftOperand, pi, delta, std::move(chain.trace)};
    }
    if (delta.is_proper_subset_of(pi)) {
        auto chain = l_pi_chain(b, pi);
        Decomposition result = chain.decomposition.is_unit() ? a : joined(a, a.size(), chain.decomposition, 0);
        return {std::move(result), CombineRule::ResidualRightOperand, pi, delta, std::move(chain.trace)};
    }
    return {joined(a, a.size(), b, 0), CombineRule::Incomparable, pi, delta, std::nullopt};
}

// ------------------------------------------------------------------- audit

AuditResult audit_minimality(const Decomposition& d) {
    if (d.is_unit()) return {true, std::nullopt};
    const std::size_t n = d.size();
    const FactorialLanguage unit = FactorialLanguage::unit(d.alphabet());

    std::vector<FactorialLanguage> prefix{unit};  // prefix[i] = L_1..L_i
    for (std::size_t i = 0; i < n; ++i) prefix.push_back(concat(prefix.back(), d[i].lang));
    std::vector<FactorialLanguage> suffix(n + 1, unit);  // suffix[i] = L_{i+1}..L_n
    for (std::size_t i = n; i-- > 0;) suffix[i] = concat(d[i].lang, suffix[i + 1]);

    const Language& whole = prefix[n].language();
    for (std::size_t i = n; i-- > 0;) {
        const FactorialLanguage& before = prefix[i];
        const FactorialLanguage& after = suffix[i + 1];
        FactorialLanguage least = l_pi(r_delta(d[i].lang, delta_alphabet(after)), pi_alphabet(before));
        if (least == d[i].lang) continue;
        if (concat(concat(before, least), after).language() == whole) {
            return {false, MinimalityWitness{i + 1, std::move(least)}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace faclang
