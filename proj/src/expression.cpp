#include "faclang/expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "faclang/error.hpp"

namespace faclang {

// ------------------------------------------------------------------ parser

namespace {

bool is_letter(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

ExpressionAst node(ExpressionAst::Kind kind, std::vector<ExpressionAst> children = {}) {
    ExpressionAst n;
    n.kind = kind;
    n.children = std::move(children);
    return n;
}

class Parser {
public:
    Parser(std::string_view src, const std::optional<Alphabet>& sigma) : src_(src), sigma_(sigma) {}

    ExpressionAst parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        ExpressionAst e = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() {
        skip_ws();
        return at_end() ? '\0' : src_[pos_];
    }
    bool starts_with(std::string_view kw) const { return src_.substr(pos_).substr(0, kw.size()) == kw; }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    ExpressionAst expr() {
        ExpressionAst left = term();
        while (peek() == '+') {
            ++pos_;
            left = node(ExpressionAst::Kind::Union, {std::move(left), term()});
        }
        return left;
    }

    bool starts_atom() {
        char c = peek();
        return c == '(' || c == '{' || is_letter(c);
    }

    ExpressionAst term() {
        if (!starts_atom()) {
            throw ParseError(at_end() ? "unexpected end of expression" : std::string("unexpected '") + src_[pos_] + "'",
                             pos_);
        }
        ExpressionAst left = factor();
        while (starts_atom()) left = node(ExpressionAst::Kind::Concat, {std::move(left), factor()});
        return left;
    }

    ExpressionAst factor() {
        ExpressionAst a = atom();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                a = node(ExpressionAst::Kind::Star, {std::move(a)});
            } else if (c == '^') {
                ++pos_;
                skip_ws();
                std::size_t start = pos_;
                unsigned k = 0;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    k = k * 10 + static_cast<unsigned>(src_[pos_] - '0');
                    if (k > 10000) throw ParseError("exponent too large", start);
                    ++pos_;
                }
                if (pos_ == start) throw ParseError("expected exponent after '^'", pos_);
                a = node(ExpressionAst::Kind::Power, {std::move(a)});
                a.exponent = k;
            } else {
                return a;
            }
        }
    }

    Symbol letter() {
        const std::size_t at = pos_;
        Symbol c = src_[pos_++];
        if (sigma_ && !sigma_->contains(c)) {
            throw AlphabetError(std::string("letter '") + c + "' at position " + std::to_string(at) +
                                " is not in alphabet " + sigma_->to_string());
        }
        return c;
    }

    ExpressionAst atom() {
        char c = peek();
        if (starts_with("empty")) {
            pos_ += 5;
            return node(ExpressionAst::Kind::Empty);
        }
        if (starts_with("eps")) {
            pos_ += 3;
            return node(ExpressionAst::Kind::Epsilon);
        }
        if (starts_with("Fac")) {
            const std::size_t save = pos_;
            pos_ += 3;
            if (peek() == '(') {
                ++pos_;
                ExpressionAst inner = expr();
                expect(')');
                return node(ExpressionAst::Kind::Fac, {std::move(inner)});
            }
            pos_ = save;
        }
        if (c == '(') {
            ++pos_;
            ExpressionAst inner = expr();
            expect(')');
            return inner;
        }
        if (c == '{') {
            ++pos_;
            ExpressionAst set = node(ExpressionAst::Kind::WordSet);
            while (true) {
                set.words.push_back(word());
                char d = peek();
                if (d == ',') {
                    ++pos_;
                } else if (d == '}') {
                    ++pos_;
                    return set;
                } else {
                    throw ParseError("expected ',' or '}' in word set", pos_);
                }
            }
        }
        if (is_letter(c)) {
            ExpressionAst l = node(ExpressionAst::Kind::Letter);
            l.letter = letter();
            return l;
        }
        throw ParseError(at_end() ? "unexpected end of expression" : std::string("unexpected '") + c + "'", pos_);
    }

    Word word() {
        skip_ws();
        if (starts_with("eps")) {
            pos_ += 3;
            return {};
        }
        Word w;
        while (is_letter(peek())) w += letter();
        if (w.empty()) throw ParseError("expected a word", pos_);
        return w;
    }

    std::string_view src_;
    const std::optional<Alphabet>& sigma_;
    std::size_t pos_ = 0;
};

void collect_letters(const ExpressionAst& ast, std::string& out) {
    if (ast.kind == ExpressionAst::Kind::Letter) out += ast.letter;
    for (const auto& w : ast.words) out += w;
    for (const auto& c : ast.children) collect_letters(c, out);
}

}  // namespace

std::string ExpressionAst::to_string() const {
    auto unary = [this](const char* name) { return std::string(name) + "(" + children[0].to_string() + ")"; };
    auto binary = [this](const char* name) {
        return std::string(name) + "(" + children[0].to_string() + "," + children[1].to_string() + ")";
    };
    switch (kind) {
        case Kind::Letter: return std::string(1, letter);
        case Kind::Empty: return "Empty";
        case Kind::Epsilon: return "Epsilon";
        case Kind::Union: return binary("Union");
        case Kind::Concat: return binary("Concat");
        case Kind::Star: return unary("Star");
        case Kind::Fac: return unary("Fac");
        case Kind::Power: return "Power(" + children[0].to_string() + "," + std::to_string(exponent) + ")";
        case Kind::WordSet: {
            std::string out = "WordSet{";
            for (std::size_t i = 0; i < words.size(); ++i) {
                if (i > 0) out += ',';
                out += words[i].empty() ? "eps" : words[i];
            }
            return out + "}";
        }
    }
    return {};
}

ExpressionAst parse_expression(std::string_view src, const std::optional<Alphabet>& sigma) {
    return Parser(src, sigma).parse();
}

Alphabet letters_of(const ExpressionAst& ast) {
    std::string out;
    collect_letters(ast, out);
    return Alphabet(out);
}

Language build(const ExpressionAst& ast, const Alphabet& sigma) {
    using Kind = ExpressionAst::Kind;
    switch (ast.kind) {
        case Kind::Letter: return Language::word(sigma, std::string(1, ast.letter));
        case Kind::Empty: return Language::empty(sigma);
        case Kind::Epsilon: return Language::epsilon(sigma);
        case Kind::Union: return unite(build(ast.children[0], sigma), build(ast.children[1], sigma));
        case Kind::Concat: return concat(build(ast.children[0], sigma), build(ast.children[1], sigma));
        case Kind::Star: return star(build(ast.children[0], sigma));
        case Kind::Fac: return infix_closure(build(ast.children[0], sigma));
        case Kind::Power: {
            Language base = build(ast.children[0], sigma);
            Language out = Language::epsilon(sigma);
            for (unsigned i = 0; i < ast.exponent; ++i) out = concat(out, base);
            return out;
        }
        case Kind::WordSet: {
            Language out = Language::empty(sigma);
            for (const auto& w : ast.words) out = unite(out, Language::word(sigma, w));
            return out;
        }
    }
    return Language::empty(sigma);
}

// -------------------------------------------------------- state elimination

namespace {

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
    enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star };
    Kind kind = Kind::Empty;
    Symbol letter = 0;
    std::vector<RegexPtr> parts;
    std::string text;  // printed form, computed once
};

const char* const kKeywords[] = {"eps", "empty", "Fac"};

std::size_t keyword_count(const std::string& s) {
    std::size_t n = 0;
    for (const char* kw : kKeywords) {
        for (auto at = s.find(kw); at != std::string::npos; at = s.find(kw, at + 1)) ++n;
    }
    return n;
}

// Juxtaposes two printed pieces, separating them with a space when gluing
// would spell a keyword.
std::string glue(const std::string& left, const std::string& right) {
    std::string joined = left + right;
    if (keyword_count(joined) > keyword_count(left) + keyword_count(right)) return left + " " + right;
    return joined;
}

bool is_letter_union(const Regex& r) {
    return r.kind == Regex::Kind::Union && std::all_of(r.parts.begin(), r.parts.end(), [](const RegexPtr& p) {
               return p->kind == Regex::Kind::Letter;
           });
}

Regex shell(Regex::Kind kind) {
    Regex r;
    r.kind = kind;
    return r;
}

RegexPtr make(Regex r) {
    switch (r.kind) {
        case Regex::Kind::Empty: r.text = "empty"; break;
        case Regex::Kind::Epsilon: r.text = "eps"; break;
        case Regex::Kind::Letter: r.text = std::string(1, r.letter); break;
        case Regex::Kind::Union:
            for (std::size_t i = 0; i < r.parts.size(); ++i) r.text += (i ? "+" : "") + r.parts[i]->text;
            break;
        case Regex::Kind::Concat:
            for (const auto& p : r.parts) {
                r.text = glue(r.text, p->kind == Regex::Kind::Union ? "(" + p->text + ")" : p->text);
            }
            break;
        case Regex::Kind::Star: {
            const Regex& inner = *r.parts[0];
            if (inner.kind == Regex::Kind::Letter) {
                r.text = inner.text + "*";
            } else if (is_letter_union(inner)) {
                r.text = "{";
                for (std::size_t i = 0; i < inner.parts.size(); ++i) r.text += (i ? "," : "") + inner.parts[i]->text;
                r.text += "}*";
            } else {
                r.text = "(" + inner.text + ")*";
            }
            break;
        }
    }
    return std::make_shared<const Regex>(std::move(r));
}

const RegexPtr& empty_regex() {
    static const RegexPtr r = make(shell(Regex::Kind::Empty));
    return r;
}
const RegexPtr& epsilon_regex() {
    static const RegexPtr r = make(shell(Regex::Kind::Epsilon));
    return r;
}

RegexPtr letter_regex(Symbol c) {
    Regex r = shell(Regex::Kind::Letter);
    r.letter = c;
    return make(std::move(r));
}

RegexPtr concat_regex(const std::vector<RegexPtr>& items);

RegexPtr star_regex(const RegexPtr& x) {
    if (x->kind == Regex::Kind::Empty || x->kind == Regex::Kind::Epsilon) return epsilon_regex();
    if (x->kind == Regex::Kind::Star) return x;
    RegexPtr body = x;
    if (x->kind == Regex::Kind::Union) {
        std::vector<RegexPtr> rest;
        for (const auto& p : x->parts) {
            if (p->kind != Regex::Kind::Epsilon) rest.push_back(p);
        }
        if (rest.size() != x->parts.size()) {
            if (rest.size() == 1) return star_regex(rest[0]);
            Regex u = shell(Regex::Kind::Union);
            u.parts = std::move(rest);
            body = make(std::move(u));
        }
    }
    Regex r = shell(Regex::Kind::Star);
    r.parts = {body};
    return make(std::move(r));
}

// Matches X·X* (X possibly a catenation) and returns X*.
RegexPtr as_plus_closure(const RegexPtr& r) {
    if (r->kind != Regex::Kind::Concat) return nullptr;
    const RegexPtr& last = r->parts.back();
    if (last->kind != Regex::Kind::Star) return nullptr;
    std::vector<RegexPtr> head(r->parts.begin(), r->parts.end() - 1);
    if (concat_regex(head)->text == last->parts[0]->text) return last;
    return nullptr;
}

RegexPtr union_regex(const RegexPtr& x, const RegexPtr& y) {
    std::map<std::string, RegexPtr> alternatives;
    for (const RegexPtr& side : {x, y}) {
        if (side->kind == Regex::Kind::Empty) continue;
        if (side->kind == Regex::Kind::Union) {
            for (const auto& p : side->parts) alternatives.emplace(p->text, p);
        } else {
            alternatives.emplace(side->text, side);
        }
    }
    if (alternatives.count("eps")) {
        // eps + X·X* = X*, and eps is redundant next to any starred term.
        for (auto it = alternatives.begin(); it != alternatives.end(); ++it) {
            if (auto closure = as_plus_closure(it->second)) {
                alternatives.erase(it);
                alternatives.emplace(closure->text, closure);
                break;
            }
        }
        bool nullable_other = std::any_of(alternatives.begin(), alternatives.end(), [](const auto& kv) {
            return kv.second->kind == Regex::Kind::Star;
        });
        if (nullable_other) alternatives.erase("eps");
    }
    if (alternatives.empty()) return empty_regex();
    if (alternatives.size() == 1) return alternatives.begin()->second;
    Regex u = shell(Regex::Kind::Union);
    for (auto& [_, alt] : alternatives) u.parts.push_back(alt);
    return make(std::move(u));
}

RegexPtr concat_regex(const std::vector<RegexPtr>& items) {
    std::vector<RegexPtr> parts;
    for (const auto& item : items) {
        if (item->kind == Regex::Kind::Empty) return empty_regex();
        if (item->kind == Regex::Kind::Epsilon) continue;
        if (item->kind == Regex::Kind::Concat) {
            parts.insert(parts.end(), item->parts.begin(), item->parts.end());
        } else {
            parts.push_back(item);
        }
    }
    // X*X* = X*
    parts.erase(std::unique(parts.begin(), parts.end(),
                            [](const RegexPtr& a, const RegexPtr& b) {
                                return a->kind == Regex::Kind::Star && a->text == b->text;
                            }),
                parts.end());
    if (parts.empty()) return epsilon_regex();
    if (parts.size() == 1) return parts[0];
    Regex c = shell(Regex::Kind::Concat);
    c.parts = std::move(parts);
    return make(std::move(c));
}

}  // namespace

std::string synthesize_expression(const Language& x) {
    if (x.is_empty()) return "empty";
    const auto live = x.live_states();
    std::vector<State> index(x.state_count(), 0);
    std::size_t n = 0;
    for (State s = 0; s < x.state_count(); ++s) {
        if (live[s]) index[s] = static_cast<State>(n++);
    }
    const std::size_t start = n, final = n + 1, total = n + 2;
    std::vector<std::vector<RegexPtr>> edge(total, std::vector<RegexPtr>(total, empty_regex()));
    edge[start][index[0]] = epsilon_regex();
    for (State s = 0; s < x.state_count(); ++s) {
        if (!live[s]) continue;
        if (x.is_accepting(s)) edge[index[s]][final] = epsilon_regex();
        for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
            State t = x.next(s, a);
            if (live[t]) edge[index[s]][index[t]] = union_regex(edge[index[s]][index[t]], letter_regex(x.alphabet()[a]));
        }
    }

    std::vector<bool> gone(total, false);
    for (std::size_t round = 0; round < n; ++round) {
        // Eliminate the state with the fewest in*out edges; ties go to the
        // highest index.
        std::size_t pick = n, best = ~std::size_t{0};
        for (std::size_t q = n; q-- > 0;) {
            if (gone[q]) continue;
            std::size_t in = 0, out = 0;
            for (std::size_t i = 0; i < total; ++i) {
                if (gone[i] || i == q) continue;
                if (edge[i][q]->kind != Regex::Kind::Empty) ++in;
                if (edge[q][i]->kind != Regex::Kind::Empty) ++out;
            }
            if (in * out < best) {
                best = in * out;
                pick = q;
            }
        }
        const RegexPtr loop = star_regex(edge[pick][pick]);
        for (std::size_t i = 0; i < total; ++i) {
            if (gone[i] || i == pick || edge[i][pick]->kind == Regex::Kind::Empty) continue;
            for (std::size_t j = 0; j < total; ++j) {
                if (gone[j] || j == pick || edge[pick][j]->kind == Regex::Kind::Empty) continue;
                edge[i][j] = union_regex(edge[i][j], concat_regex({edge[i][pick], loop, edge[pick][j]}));
            }
        }
        gone[pick] = true;
    }
    return edge[start][final]->text;
}

}  // namespace faclang
