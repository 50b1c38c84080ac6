#include "faclang/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "faclang/error.hpp"

namespace faclang {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

Alphabet::Alphabet(std::initializer_list<Symbol> symbols)
    : Alphabet(std::string_view(symbols.begin(), symbols.size())) {}

bool Alphabet::contains(Symbol c) const noexcept {
    return std::binary_search(symbols_.begin(), symbols_.end(), c);
}

std::size_t Alphabet::index_of(Symbol c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) {
        throw AlphabetError(std::string("symbol '") + c + "' is not in alphabet " + to_string());
    }
    return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
    return std::includes(other.symbols_.begin(), other.symbols_.end(), symbols_.begin(), symbols_.end());
}

bool Alphabet::is_proper_subset_of(const Alphabet& other) const {
    return size() < other.size() && is_subset_of(other);
}

Alphabet Alphabet::united(const Alphabet& other) const {
    std::string out;
    std::set_union(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                   std::back_inserter(out));
    return Alphabet(out);
}

Alphabet Alphabet::intersected(const Alphabet& other) const {
    std::string out;
    std::set_intersection(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                          std::back_inserter(out));
    return Alphabet(out);
}

Alphabet Alphabet::without(const Alphabet& other) const {
    std::string out;
    std::set_difference(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                        std::back_inserter(out));
    return Alphabet(out);
}

std::string Alphabet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out += ',';
        out += symbols_[i];
    }
    out += '}';
    return out;
}

// --------------------------------------------------------------- Automaton

void Automaton::validate() const {
    auto check_state = [this](State s) {
        if (s >= state_count) {
            throw std::invalid_argument("state " + std::to_string(s) + " out of range (state count " +
                                        std::to_string(state_count) + ")");
        }
    };
    for (const auto& t : transitions) {
        check_state(t.from);
        check_state(t.to);
        if (!alphabet.contains(t.symbol)) {
            throw AlphabetError(std::string("transition symbol '") + t.symbol + "' is not in alphabet " +
                                alphabet.to_string());
        }
    }
    for (State s : initial) check_state(s);
    for (State s : accepting) check_state(s);
}

// ---------------------------------------------------------------- Language

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State s : v) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Transitions of x restricted to live states, shifted by `offset`.
std::vector<Transition> live_transitions(const Language& x, State offset) {
    std::vector<Transition> out;
    const auto live = x.live_states();
    const auto& sigma = x.alphabet();
    for (State s = 0; s < x.state_count(); ++s) {
        if (!live[s]) continue;
        for (std::size_t a = 0; a < sigma.size(); ++a) {
            State t = x.next(s, a);
            if (live[t]) out.push_back({s + offset, sigma[a], t + offset});
        }
    }
    return out;
}

}  // namespace

Language Language::from_automaton(const Automaton& nfa, std::size_t state_cap) {
    nfa.validate();
    const Alphabet& sigma = nfa.alphabet;
    const std::size_t k = sigma.size();

    std::vector<std::vector<State>> successors(nfa.state_count * k);
    for (const auto& t : nfa.transitions) {
        successors[t.from * k + sigma.index_of(t.symbol)].push_back(t.to);
    }
    std::vector<bool> is_final(nfa.state_count, false);
    for (State s : nfa.accepting) is_final[s] = true;

    std::vector<State> start(nfa.initial);
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());

    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<State> table;
    std::vector<std::uint8_t> accepting;

    auto intern = [&](std::vector<State> subset) -> State {
        auto [it, inserted] = ids.try_emplace(subset, static_cast<State>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= state_cap) {
                throw ResourceError("determinization exceeded the cap of " + std::to_string(state_cap) +
                                    " states");
            }
            bool acc = std::any_of(subset.begin(), subset.end(), [&](State s) { return is_final[s]; });
            accepting.push_back(acc ? 1 : 0);
            subsets.push_back(std::move(subset));
        }
        return it->second;
    };

    intern(std::move(start));
    std::vector<State> target;
    for (std::size_t current = 0; current < subsets.size(); ++current) {
        for (std::size_t a = 0; a < k; ++a) {
            target.clear();
            for (State s : subsets[current]) {
                const auto& succ = successors[s * k + a];
                target.insert(target.end(), succ.begin(), succ.end());
            }
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            table.push_back(intern(target));
        }
    }
    return canonical(sigma, std::move(table), std::move(accepting));
}

Language Language::canonical(const Alphabet& sigma, std::vector<State> table,
                             std::vector<std::uint8_t> accepting) {
    const std::size_t n = accepting.size();
    const std::size_t k = sigma.size();

    // Moore partition refinement.
    std::vector<State> block(n);
    for (std::size_t s = 0; s < n; ++s) block[s] = accepting[s];
    std::size_t block_count = 0;
    std::vector<State> signature(k + 1);
    while (true) {
        std::map<std::vector<State>, State> refined;
        std::vector<State> next_block(n);
        for (std::size_t s = 0; s < n; ++s) {
            signature[0] = block[s];
            for (std::size_t a = 0; a < k; ++a) signature[a + 1] = block[table[s * k + a]];
            auto [it, _] = refined.try_emplace(signature, static_cast<State>(refined.size()));
            next_block[s] = it->second;
        }
        block = std::move(next_block);
        if (refined.size() == block_count) break;
        block_count = refined.size();
    }

    // Breadth-first renumbering of the quotient from the initial block.
    std::vector<State> representative(block_count, 0);
    for (std::size_t s = n; s-- > 0;) representative[block[s]] = static_cast<State>(s);

    constexpr State kUnseen = ~State{0};
    std::vector<State> order(block_count, kUnseen);
    std::vector<State> queue{block[0]};
    order[block[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State rep = representative[queue[head]];
        for (std::size_t a = 0; a < k; ++a) {
            State b = block[table[rep * k + a]];
            if (order[b] == kUnseen) {
                order[b] = static_cast<State>(queue.size());
                queue.push_back(b);
            }
        }
    }

    Language out;
    out.sigma_ = sigma;
    out.table_.resize(queue.size() * k);
    out.accepting_.resize(queue.size());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        State rep = representative[queue[i]];
        out.accepting_[i] = accepting[rep];
        for (std::size_t a = 0; a < k; ++a) out.table_[i * k + a] = order[block[table[rep * k + a]]];
    }
    return out;
}

Language Language::empty(const Alphabet& sigma) {
    return canonical(sigma, std::vector<State>(sigma.size(), 0), {0});
}

Language Language::epsilon(const Alphabet& sigma) {
    std::vector<State> table(2 * sigma.size(), 1);
    return canonical(sigma, std::move(table), {1, 0});
}

Language Language::word(const Alphabet& sigma, std::string_view w) {
    const std::size_t k = sigma.size();
    const State sink = static_cast<State>(w.size() + 1);
    std::vector<State> table((w.size() + 2) * k, sink);
    std::vector<std::uint8_t> accepting(w.size() + 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        table[i * k + sigma.index_of(w[i])] = static_cast<State>(i + 1);
    }
    accepting[w.size()] = 1;
    return canonical(sigma, std::move(table), std::move(accepting));
}

Language Language::letters(const Alphabet& sigma, const Alphabet& letters) {
    const std::size_t k = sigma.size();
    std::vector<State> table(3 * k, 2);
    for (Symbol c : letters) table[sigma.index_of(c)] = 1;
    return canonical(sigma, std::move(table), {0, 1, 0});
}

Language Language::star_of(const Alphabet& sigma, const Alphabet& letters) {
    const std::size_t k = sigma.size();
    std::vector<State> table(2 * k, 1);
    for (Symbol c : letters) table[sigma.index_of(c)] = 0;
    return canonical(sigma, std::move(table), {1, 0});
}

bool Language::accepts(std::string_view w) const {
    State s = 0;
    for (Symbol c : w) {
        if (!sigma_.contains(c)) return false;
        s = next(s, sigma_.index_of(c));
    }
    return is_accepting(s);
}

bool Language::is_empty() const {
    return std::none_of(accepting_.begin(), accepting_.end(), [](std::uint8_t a) { return a != 0; });
}

std::vector<bool> Language::live_states() const {
    const std::size_t n = state_count();
    const std::size_t k = sigma_.size();
    std::vector<std::vector<State>> predecessors(n);
    for (State s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < k; ++a) predecessors[next(s, a)].push_back(s);
    }
    std::vector<bool> live(n, false);
    std::vector<State> stack;
    for (State s = 0; s < n; ++s) {
        if (is_accepting(s)) {
            live[s] = true;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : predecessors[s]) {
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
        }
    }
    return live;
}

Alphabet Language::symbols_used() const {
    const auto live = live_states();
    std::string used;
    for (std::size_t a = 0; a < sigma_.size(); ++a) {
        for (State s = 0; s < state_count(); ++s) {
            if (live[next(s, a)]) {
                used += sigma_[a];
                break;
            }
        }
    }
    return Alphabet(used);
}

Automaton Language::to_automaton() const {
    Automaton out;
    out.alphabet = sigma_;
    out.state_count = state_count();
    out.initial = {0};
    for (State s = 0; s < state_count(); ++s) {
        if (is_accepting(s)) out.accepting.push_back(s);
        for (std::size_t a = 0; a < sigma_.size(); ++a) out.transitions.push_back({s, sigma_[a], next(s, a)});
    }
    return out;
}

// -------------------------------------------------------------- operations

void require_same_alphabet(const Language& x, const Language& y) {
    if (x.alphabet() != y.alphabet()) {
        throw AlphabetError("alphabet mismatch: " + x.alphabet().to_string() + " vs " +
                            y.alphabet().to_string());
    }
}

Language boolean(BooleanOp op, const Language& x, const Language& y) {
    require_same_alphabet(x, y);
    const std::size_t k = x.alphabet().size();
    const std::size_t ny = y.state_count();
    constexpr State kUnseen = ~State{0};
    std::vector<State> id(x.state_count() * ny, kUnseen);
    std::vector<std::pair<State, State>> pairs{{0, 0}};
    id[0] = 0;
    std::vector<State> table;
    std::vector<std::uint8_t> accepting;
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [p, q] = pairs[head];
        bool in_x = x.is_accepting(p), in_y = y.is_accepting(q);
        bool acc = false;
        switch (op) {
            case BooleanOp::Union: acc = in_x || in_y; break;
            case BooleanOp::Intersection: acc = in_x && in_y; break;
            case BooleanOp::Difference: acc = in_x && !in_y; break;
        }
        accepting.push_back(acc ? 1 : 0);
        for (std::size_t a = 0; a < k; ++a) {
            State p2 = x.next(p, a), q2 = y.next(q, a);
            State& slot = id[p2 * ny + q2];
            if (slot == kUnseen) {
                slot = static_cast<State>(pairs.size());
                pairs.emplace_back(p2, q2);
            }
            table.push_back(slot);
        }
    }
    return Language::from_automaton([&] {
        Automaton a;
        a.alphabet = x.alphabet();
        a.state_count = pairs.size();
        a.initial = {0};
        for (State s = 0; s < pairs.size(); ++s) {
            if (accepting[s]) a.accepting.push_back(s);
            for (std::size_t c = 0; c < k; ++c) a.transitions.push_back({s, x.alphabet()[c], table[s * k + c]});
        }
        return a;
    }());
}

Language complement(const Language& x) {
    Automaton a = x.to_automaton();
    std::vector<bool> acc(a.state_count, false);
    for (State s : a.accepting) acc[s] = true;
    a.accepting.clear();
    for (State s = 0; s < a.state_count; ++s) {
        if (!acc[s]) a.accepting.push_back(s);
    }
    return Language::from_automaton(a);
}

Language concat(const Language& x, const Language& y) {
    require_same_alphabet(x, y);
    const State offset = static_cast<State>(x.state_count());
    Automaton a;
    a.alphabet = x.alphabet();
    a.state_count = x.state_count() + y.state_count();
    a.transitions = live_transitions(x, 0);
    const std::size_t x_count = a.transitions.size();
    for (std::size_t i = 0; i < x_count; ++i) {
        const Transition t = a.transitions[i];
        if (x.is_accepting(t.to)) a.transitions.push_back({t.from, t.symbol, offset});
    }
    for (const auto& t : live_transitions(y, offset)) a.transitions.push_back(t);
    a.initial = {0};
    if (x.contains_epsilon()) a.initial.push_back(offset);
    for (State s = 0; s < y.state_count(); ++s) {
        if (y.is_accepting(s)) a.accepting.push_back(s + offset);
    }
    if (y.contains_epsilon()) {
        for (State s = 0; s < x.state_count(); ++s) {
            if (x.is_accepting(s)) a.accepting.push_back(s);
        }
    }
    return Language::from_automaton(a);
}

Language star(const Language& x) {
    const State fresh = static_cast<State>(x.state_count());
    Automaton a;
    a.alphabet = x.alphabet();
    a.state_count = x.state_count() + 1;
    a.transitions = live_transitions(x, 0);
    const std::size_t base = a.transitions.size();
    for (std::size_t i = 0; i < base; ++i) {
        const Transition t = a.transitions[i];
        if (t.from == 0) a.transitions.push_back({fresh, t.symbol, t.to});
    }
    const std::size_t with_fresh = a.transitions.size();
    for (std::size_t i = 0; i < with_fresh; ++i) {
        const Transition t = a.transitions[i];
        if (x.is_accepting(t.to)) a.transitions.push_back({t.from, t.symbol, 0});
    }
    a.initial = {fresh};
    a.accepting = {fresh};
    for (State s = 0; s < x.state_count(); ++s) {
        if (x.is_accepting(s)) a.accepting.push_back(s);
    }
    return Language::from_automaton(a);
}

Language reverse(const Language& x) {
    Automaton a;
    a.alphabet = x.alphabet();
    a.state_count = x.state_count();
    for (const auto& t : live_transitions(x, 0)) a.transitions.push_back({t.to, t.symbol, t.from});
    for (State s = 0; s < x.state_count(); ++s) {
        if (x.is_accepting(s)) a.initial.push_back(s);
    }
    a.accepting = {0};
    return Language::from_automaton(a);
}

Language infix_closure(const Language& x) {
    const auto live = x.live_states();
    Automaton a;
    a.alphabet = x.alphabet();
    a.state_count = x.state_count();
    a.transitions = live_transitions(x, 0);
    for (State s = 0; s < x.state_count(); ++s) {
        if (live[s]) {
            a.initial.push_back(s);
            a.accepting.push_back(s);
        }
    }
    return Language::from_automaton(a);
}

bool compare(Relation rel, const Language& x, const Language& y) {
    require_same_alphabet(x, y);
    if (rel == Relation::Equal) return x == y;
    if (rel == Relation::ProperSubset && x == y) return false;

    // x ⊆ y iff no reachable product state accepts in x but rejects in y.
    const std::size_t k = x.alphabet().size();
    const std::size_t ny = y.state_count();
    std::vector<bool> seen(x.state_count() * ny, false);
    std::vector<std::pair<State, State>> stack{{0, 0}};
    seen[0] = true;
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (x.is_accepting(p) && !y.is_accepting(q)) return false;
        for (std::size_t a = 0; a < k; ++a) {
            State p2 = x.next(p, a), q2 = y.next(q, a);
            if (!seen[p2 * ny + q2]) {
                seen[p2 * ny + q2] = true;
                stack.emplace_back(p2, q2);
            }
        }
    }
    return true;
}

std::vector<Word> enumerate_up_to(const Language& x, std::size_t n) {
    const auto live = x.live_states();
    const auto& sigma = x.alphabet();
    std::vector<Word> out;
    if (!live[0]) return out;

    std::vector<std::pair<Word, State>> layer{{Word{}, 0}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [w, s] : layer) {
            if (x.is_accepting(s)) out.push_back(w);
        }
        if (len == n) break;
        std::vector<std::pair<Word, State>> next_layer;
        for (const auto& [w, s] : layer) {
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                State t = x.next(s, a);
                if (live[t]) next_layer.emplace_back(w + sigma[a], t);
            }
        }
        if (next_layer.empty()) break;
        layer = std::move(next_layer);
    }
    return out;
}

}  // namespace faclang
