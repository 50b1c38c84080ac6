#include "faclang/text.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "faclang/automaton_json.hpp"
#include "faclang/error.hpp"
#include "faclang/expression.hpp"

namespace faclang {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\n\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\n\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open automaton file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string star_text(const Alphabet& gamma) {
    if (gamma.size() == 1) return std::string(1, gamma[0]) + "*";
    return gamma.to_string() + "*";
}

}  // namespace

std::vector<std::string> split_decomposition(std::string_view text) {
    // Inside an "@path" factor only a dot next to whitespace separates, so
    // file names keep their extensions.
    auto spaced = [text](std::size_t i) {
        auto space = [](char c) { return c == ' ' || c == '\t'; };
        return (i > 0 && space(text[i - 1])) || (i + 1 < text.size() && space(text[i + 1]));
    };
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size()) {
            if (text[i] != '.') continue;
            const bool file = trim(text.substr(start, i - start)).starts_with("@");
            if (file && !spaced(i)) continue;
        }
        out.push_back(trim(text.substr(start, i - start)));
        start = i + 1;
    }
    return out;
}

Language load_language(std::string_view source, const Alphabet& sigma) {
    const std::string src = trim(source);
    if (!src.empty() && src[0] == '@') {
        Language lang = read_language_json(read_file(src.substr(1)));
        if (lang.alphabet() != sigma) {
            throw AlphabetError("automaton file alphabet " + lang.alphabet().to_string() + " differs from " +
                                sigma.to_string());
        }
        return lang;
    }
    return build(parse_expression(src, sigma), sigma);
}

Alphabet alphabet_of_source(std::string_view source) {
    const std::string src = trim(source);
    if (!src.empty() && src[0] == '@') return read_automaton_json(read_file(src.substr(1))).alphabet;
    return letters_of(parse_expression(src, std::nullopt));
}

Decomposition parse_decomposition(std::string_view text, const Alphabet& sigma, const Attestation& claim) {
    std::vector<Factor> factors;
    for (auto& src : split_decomposition(text)) {
        if (src.empty()) throw ParseError("empty factor in decomposition", 0);
        Language lang = load_language(src, sigma);
        if (lang.is_empty()) throw EmptyLanguageError("factor '" + src + "' denotes the empty language");
        if (!is_factorial(lang)) throw NotFactorialError("factor '" + src + "' is not a factorial language");
        factors.push_back(Factor::attest(FactorialLanguage::from_language(std::move(lang)), claim, src));
    }
    return Decomposition(std::move(factors));
}

std::string format_language(const FactorialLanguage& l) {
    if (auto gamma = as_sigma_star(l)) return star_text(*gamma);
    return synthesize_expression(l.language());
}

std::string format_factor(const Factor& f) {
    if (f.attestation.kind == Attestation::Kind::VerifiedSigmaStar) {
        if (auto gamma = as_sigma_star(f.lang)) return star_text(*gamma);
    }
    if (!f.expression.empty()) return f.expression;
    return format_language(f.lang);
}

std::string format_decomposition(const Decomposition& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) out += " . ";
        out += format_factor(d[i]);
    }
    return out;
}

}  // namespace faclang
