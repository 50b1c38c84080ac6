#include "faclang/automaton_json.hpp"

#include <stdexcept>

#include "json.hpp"

namespace faclang {

using ordered_json = nlohmann::ordered_json;

namespace {

Symbol symbol_of(const ordered_json& j) {
    const auto s = j.get<std::string>();
    if (s.size() != 1) throw std::invalid_argument("symbol must be a one-character string, got \"" + s + "\"");
    return s[0];
}

}  // namespace

std::string write_automaton_json(const Automaton& a) {
    ordered_json doc;
    doc["alphabet"] = ordered_json::array();
    for (Symbol c : a.alphabet) doc["alphabet"].push_back(std::string(1, c));
    doc["states"] = a.state_count;
    doc["initial"] = a.initial;
    doc["accepting"] = a.accepting;
    doc["transitions"] = ordered_json::array();
    for (const auto& t : a.transitions) {
        doc["transitions"].push_back(ordered_json::array({t.from, std::string(1, t.symbol), t.to}));
    }
    return doc.dump();
}

std::string write_language_json(const Language& x) { return write_automaton_json(x.to_automaton()); }

Automaton read_automaton_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    }
    try {
        Automaton a;
        std::string symbols;
        for (const auto& s : doc.at("alphabet")) symbols += symbol_of(s);
        a.alphabet = Alphabet(symbols);
        if (a.alphabet.size() != symbols.size()) throw std::invalid_argument("duplicate alphabet symbol");
        a.state_count = doc.at("states").get<std::size_t>();
        a.initial = doc.at("initial").get<std::vector<State>>();
        a.accepting = doc.at("accepting").get<std::vector<State>>();
        for (const auto& t : doc.at("transitions")) {
            if (!t.is_array() || t.size() != 3) throw std::invalid_argument("transition must be [from, symbol, to]");
            a.transitions.push_back({t[0].get<State>(), symbol_of(t[1]), t[2].get<State>()});
        }
        a.validate();
        return a;
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    }
}

Language read_language_json(std::string_view text) { return Language::from_automaton(read_automaton_json(text)); }

}  // namespace faclang
