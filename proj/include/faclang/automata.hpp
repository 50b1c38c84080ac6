#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace faclang {

using Symbol = char;

// A word is a finite sequence of symbols; the empty string is the empty word.
using Word = std::string;

// Duplicate-free, sorted set of symbols. Used both for the session alphabet
// and for the extension subalphabets computed by the factorial layer.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);
    Alphabet(std::initializer_list<Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    bool contains(Symbol c) const noexcept;
    // Position of c in sorted order; c must be a member.
    std::size_t index_of(Symbol c) const;
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::string& symbols() const noexcept { return symbols_; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    bool is_subset_of(const Alphabet& other) const;
    bool is_proper_subset_of(const Alphabet& other) const;

    Alphabet united(const Alphabet& other) const;
    Alphabet intersected(const Alphabet& other) const;
    Alphabet without(const Alphabet& other) const;

    // "{a,b}"; the empty set prints as "{}".
    std::string to_string() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

using State = std::uint32_t;

struct Transition {
    State from;
    Symbol symbol;
    State to;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Nondeterministic acceptor without epsilon moves. This is the interchange
// form: every language operation builds one of these and hands it to
// Language::from_automaton for determinization and minimization.
struct Automaton {
    Alphabet alphabet;
    std::size_t state_count = 0;
    std::vector<Transition> transitions;
    std::vector<State> initial;
    std::vector<State> accepting;

    // Throws AlphabetError / std::invalid_argument on malformed content.
    void validate() const;
};

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// A regular language held as its minimal complete DFA over a fixed session
// alphabet. States are numbered breadth-first from the initial state (0),
// visiting successors in alphabet order, so two Language values denote the
// same set iff they compare equal with ==.
class Language {
public:
    // Subset construction followed by minimization. Throws ResourceError if
    // the subset construction would exceed state_cap states.
    static Language from_automaton(const Automaton& nfa, std::size_t state_cap = kDefaultStateCap);

    static Language empty(const Alphabet& sigma);
    static Language epsilon(const Alphabet& sigma);
    static Language word(const Alphabet& sigma, std::string_view w);
    // The finite language of one-letter words drawn from `letters`.
    static Language letters(const Alphabet& sigma, const Alphabet& letters);
    // letters(...)*, i.e. Γ* for a subalphabet Γ.
    static Language star_of(const Alphabet& sigma, const Alphabet& letters);

    const Alphabet& alphabet() const noexcept { return sigma_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    State next(State s, std::size_t symbol_index) const {
        return table_[s * sigma_.size() + symbol_index];
    }
    bool is_accepting(State s) const { return accepting_[s] != 0; }

    bool accepts(std::string_view w) const;
    bool is_empty() const;
    bool contains_epsilon() const { return is_accepting(0); }

    // Letters that occur in at least one member word.
    Alphabet symbols_used() const;

    // States from which some accepting state is reachable.
    std::vector<bool> live_states() const;

    // The canonical DFA rendered as an Automaton (complete, sink included).
    Automaton to_automaton() const;

    friend bool operator==(const Language&, const Language&) = default;

private:
    Language() = default;
    static Language canonical(const Alphabet& sigma, std::vector<State> table,
                              std::vector<std::uint8_t> accepting);

    Alphabet sigma_;
    std::vector<State> table_;
    std::vector<std::uint8_t> accepting_;
};

enum class BooleanOp { Union, Intersection, Difference };

Language boolean(BooleanOp op, const Language& x, const Language& y);
Language complement(const Language& x);
inline Language unite(const Language& x, const Language& y) { return boolean(BooleanOp::Union, x, y); }
inline Language intersect(const Language& x, const Language& y) { return boolean(BooleanOp::Intersection, x, y); }
inline Language difference(const Language& x, const Language& y) { return boolean(BooleanOp::Difference, x, y); }

Language concat(const Language& x, const Language& y);
Language star(const Language& x);
Language reverse(const Language& x);

// All factors of all members. Empty in, empty out; the factorial layer
// wraps this with its nonemptiness contract.
Language infix_closure(const Language& x);

enum class Relation { Equal, Subset, ProperSubset };

bool compare(Relation rel, const Language& x, const Language& y);
inline bool is_subset(const Language& x, const Language& y) { return compare(Relation::Subset, x, y); }
inline bool is_proper_subset(const Language& x, const Language& y) { return compare(Relation::ProperSubset, x, y); }

// Members of length <= n in length-then-lexicographic order (lexicographic
// with respect to the alphabet order).
std::vector<Word> enumerate_up_to(const Language& x, std::size_t n);

// Throws AlphabetError unless x and y share a session alphabet.
void require_same_alphabet(const Language& x, const Language& y);

}  // namespace faclang
