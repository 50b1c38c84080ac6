#include "faclang/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "faclang/automaton_json.hpp"
#include "faclang/catalog.hpp"
#include "faclang/decomposition.hpp"
#include "faclang/error.hpp"
#include "faclang/expression.hpp"
#include "faclang/factorial.hpp"
#include "faclang/oracle.hpp"
#include "faclang/text.hpp"

namespace faclang {

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
    std::string sigma;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool json() const { return format == "json"; }
};

json alphabet_json(const Alphabet& a) {
    json out = json::array();
    for (Symbol c : a) out.push_back(std::string(1, c));
    return out;
}

Alphabet session_alphabet(const GlobalOptions& g, const std::vector<std::string>& sources) {
    if (!g.sigma.empty()) {
        for (char c : g.sigma) {
            if (!std::isalnum(static_cast<unsigned char>(c))) {
                throw AlphabetError(std::string("alphabet symbol '") + c + "' is not alphanumeric");
            }
        }
        return Alphabet(g.sigma);
    }
    Alphabet sigma;
    for (const auto& s : sources) {
        for (const auto& part : split_decomposition(s)) sigma = sigma.united(alphabet_of_source(part));
    }
    return sigma;
}

// "ab", "{a,b}", "a, b" and "" (empty set) are all accepted.
Alphabet parse_symbols(const std::string& text, const Alphabet& sigma) {
    std::string symbols;
    for (char c : text) {
        if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
        if (!sigma.contains(c)) {
            throw AlphabetError(std::string("symbol '") + c + "' is not in alphabet " + sigma.to_string());
        }
        symbols += c;
    }
    return Alphabet(symbols);
}

FactorialLanguage require_factorial(const std::string& src, const Alphabet& sigma) {
    Language lang = load_language(src, sigma);
    if (lang.is_empty()) throw EmptyLanguageError("'" + src + "' denotes the empty language");
    if (!is_factorial(lang)) throw NotFactorialError("'" + src + "' is not a factorial language");
    return FactorialLanguage::from_language(std::move(lang));
}

std::string canonicity(const Decomposition& d) {
    bool all_verified = true;
    for (const auto& f : d.factors()) {
        if (f.attestation.kind == Attestation::Kind::Unverified) {
            return "minimal; canonicity conditional on unverified factors";
        }
        all_verified = all_verified && f.attestation.kind == Attestation::Kind::VerifiedSigmaStar;
    }
    return all_verified ? "canonical (all factors verified)" : "canonical given asserted factors";
}

json decomposition_json(const Decomposition& d) {
    json out = json::array();
    for (const auto& f : d.factors()) {
        out.push_back({{"expression", format_factor(f)}, {"attestation", f.attestation.to_string()}});
    }
    return out;
}

std::string attestations_text(const Decomposition& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + d[i].attestation.to_string();
    return out;
}

struct Verification {
    bool product_exact;
    bool product_bounded;
    bool minimal;
    bool shape;
    bool ok() const { return product_exact && product_bounded && minimal && shape; }
};

Verification verify(const Decomposition& a, const Decomposition& b, const Decomposition& result, std::size_t max_len) {
    const FactorialLanguage expected = concat(product(a), product(b));
    Verification v{};
    v.product_exact = product(result) == expected;
    v.product_bounded = bounded_product_equal(result, expected, max_len);
    v.minimal = audit_minimality(result).minimal;
    v.shape = begins_with(result, a) || ends_with(result, b);
    return v;
}

// Prints a combination; returns the exit code.
int report_combination(std::ostream& out, const GlobalOptions& g, const Decomposition& a, const Decomposition& b,
                       const Combination& c, bool do_verify, std::size_t max_len, json* extra_json,
                       const std::string& text_prefix, const std::string& text_suffix, int code) {
    std::optional<Verification> v;
    if (do_verify) v = verify(a, b, c.result, max_len);
    if (v && !v->ok()) code = kExitVerification;

    if (g.json()) {
        json doc = extra_json ? *extra_json : json::object();
        doc["case"] = case_number(c.rule);
        doc["rule"] = describe(c.rule);
        doc["pi"] = alphabet_json(c.pi);
        doc["delta"] = alphabet_json(c.delta);
        doc["result"] = decomposition_json(c.result);
        doc["canonicity"] = canonicity(c.result);
        if (c.trace) {
            json chain;
            chain["direction"] = c.trace->direction == ChainDirection::RightResidual ? "right_residual" : "left_residual";
            chain["steps"] = json::array();
            for (const auto& s : c.trace->steps) {
                chain["steps"].push_back({{"index", s.index},
                                          {"subalphabet", alphabet_json(s.subalphabet)},
                                          {"factor", format_language(s.factor)},
                                          {"collapsed", s.collapsed}});
            }
            doc["chain"] = chain;
        }
        if (v) {
            doc["verify"] = {{"ok", v->ok()},
                             {"product_exact", v->product_exact},
                             {"product_bounded", v->product_bounded},
                             {"max_len", max_len},
                             {"minimal", v->minimal},
                             {"prefix_or_suffix", v->shape}};
        }
        out << doc.dump(2) << "\n";
        return code;
    }

    out << text_prefix;
    out << "case: " << case_number(c.rule) << " (" << describe(c.rule) << ")\n";
    out << "pi: " << c.pi.to_string() << "\n";
    out << "delta: " << c.delta.to_string() << "\n";
    out << "result: " << format_decomposition(c.result) << "\n";
    if (c.trace) {
        const bool right = c.trace->direction == ChainDirection::RightResidual;
        out << "chain: " << (right ? "right residual" : "left residual") << "\n";
        for (const auto& s : c.trace->steps) {
            out << "  step " << s.index << ": " << (right ? "delta" : "pi") << "=" << s.subalphabet.to_string();
            if (s.collapsed) {
                out << " collapsed\n";
            } else {
                out << " -> " << format_language(s.factor) << "\n";
            }
        }
    }
    out << "attestations: " << attestations_text(c.result) << "\n";
    out << "status: " << canonicity(c.result) << "\n";
    if (v) {
        if (v->ok()) {
            out << "verify: ok (exact product, length <= " << max_len << " slice, minimality, prefix/suffix shape)\n";
        } else {
            out << "verify: FAILED";
            if (!v->product_exact) out << " exact-product";
            if (!v->product_bounded) out << " bounded-product";
            if (!v->minimal) out << " minimality";
            if (!v->shape) out << " prefix/suffix-shape";
            out << "\n";
        }
    }
    out << text_suffix;
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical decompositions of factorial languages under catenation", "faclang"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--sigma", g.sigma, "Session alphabet, e.g. abc (default: letters of the inputs)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized commands");

    std::function<int()> action;
    auto command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    // canon EXPR
    std::string expr, expr2;
    auto* canon = command("canon", "Factorial closure plus Pi, Delta and factoriality report");
    canon->add_option("EXPR", expr)->required();
    canon->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {expr});
            const Language lang = load_language(expr, sigma);
            const bool factorial = is_factorial(lang);
            const FactorialLanguage closure = factorial_closure(lang);
            const std::string closure_text = factorial ? expr : "Fac(" + expr + ")";
            if (g.json()) {
                json doc;
                doc["expression"] = expr;
                doc["factorial"] = factorial;
                doc["closure"] = closure_text;
                doc["states"] = closure.language().state_count();
                doc["pi"] = alphabet_json(pi_alphabet(closure));
                doc["delta"] = alphabet_json(delta_alphabet(closure));
                doc["automaton"] = json::parse(write_language_json(closure.language()));
                out << doc.dump(2) << "\n";
            } else {
                out << "expression: " << expr << "\n";
                out << "factorial: " << (factorial ? "yes" : "no") << "\n";
                out << "closure: " << closure_text << "\n";
                out << "states: " << closure.language().state_count() << "\n";
                out << "pi: " << pi_alphabet(closure).to_string() << "\n";
                out << "delta: " << delta_alphabet(closure).to_string() << "\n";
            }
            return int{kExitOk};
        };
    });

    // pi EXPR / delta EXPR
    auto* pi_cmd = command("pi", "Right-extension subalphabet {a : La in L}");
    pi_cmd->add_option("EXPR", expr)->required();
    auto* delta_cmd = command("delta", "Left-extension subalphabet {a : aL in L}");
    delta_cmd->add_option("EXPR", expr)->required();
    auto extension = [&](bool right) {
        return [&, right] {
            action = [&, right] {
                const Alphabet sigma = session_alphabet(g, {expr});
                const FactorialLanguage l = require_factorial(expr, sigma);
                const Alphabet ext = right ? pi_alphabet(l) : delta_alphabet(l);
                if (g.json()) {
                    out << json{{right ? "pi" : "delta", alphabet_json(ext)}}.dump(2) << "\n";
                } else {
                    out << ext.to_string() << "\n";
                }
                return int{kExitOk};
            };
        };
    };
    pi_cmd->callback(extension(true));
    delta_cmd->callback(extension(false));

    // eq EXPR EXPR
    auto* eq = command("eq", "Decide language equality");
    eq->add_option("LEFT", expr)->required();
    eq->add_option("RIGHT", expr2)->required();
    eq->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {expr, expr2});
            const bool equal = load_language(expr, sigma) == load_language(expr2, sigma);
            if (g.json()) {
                out << json{{"equal", equal}}.dump(2) << "\n";
            } else {
                out << (equal ? "true" : "false") << "\n";
            }
            return int{kExitOk};
        };
    });

    // enum EXPR N
    std::size_t length = 0;
    auto* enum_cmd = command("enum", "List members up to a length bound");
    enum_cmd->add_option("EXPR", expr)->required();
    enum_cmd->add_option("N", length)->required();
    enum_cmd->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {expr});
            const auto words = enumerate_up_to(load_language(expr, sigma), length);
            if (g.json()) {
                out << json(words).dump(2) << "\n";
            } else {
                for (const auto& w : words) out << (w.empty() ? "eps" : w) << "\n";
            }
            return int{kExitOk};
        };
    });

    // closure EXPR
    auto* closure_cmd = command("closure", "Factorial closure Fac(L)");
    closure_cmd->add_option("EXPR", expr)->required();
    closure_cmd->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {expr});
            const FactorialLanguage c = factorial_closure(load_language(expr, sigma));
            if (g.json()) {
                out << write_language_json(c.language()) << "\n";
            } else {
                out << format_language(c) << "\n";
            }
            return int{kExitOk};
        };
    });

    // rdelta EXPR --delta SYMS / lpi EXPR --pi SYMS
    std::string symbols;
    auto* rdelta_cmd = command("rdelta", "R_Delta(L) = Fac(L \\ L.Delta)");
    rdelta_cmd->add_option("EXPR", expr)->required();
    rdelta_cmd->add_option("--delta", symbols, "Subalphabet, e.g. ab or {a,b}")->required();
    auto* lpi_cmd = command("lpi", "L_Pi(L) = Fac(L \\ Pi.L)");
    lpi_cmd->add_option("EXPR", expr)->required();
    lpi_cmd->add_option("--pi", symbols, "Subalphabet, e.g. ab or {a,b}")->required();
    auto residual = [&](bool right) {
        return [&, right] {
            action = [&, right] {
                const Alphabet sigma = session_alphabet(g, {expr});
                const FactorialLanguage l = require_factorial(expr, sigma);
                const Alphabet sub = parse_symbols(symbols, sigma);
                const FactorialLanguage r = right ? r_delta(l, sub) : l_pi(l, sub);
                if (g.json()) {
                    json doc;
                    doc["expression"] = format_language(r);
                    doc["automaton"] = json::parse(write_language_json(r.language()));
                    out << doc.dump(2) << "\n";
                } else {
                    out << format_language(r) << "\n";
                }
                return int{kExitOk};
            };
        };
    };
    rdelta_cmd->callback(residual(true));
    lpi_cmd->callback(residual(false));

    // audit "F1 . F2"
    auto* audit_cmd = command("audit", "Exact minimality audit of a decomposition");
    audit_cmd->add_option("DECOMPOSITION", expr)->required();
    audit_cmd->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {expr});
            const Decomposition d = parse_decomposition(expr, sigma, Attestation::asserted("command line"));
            const AuditResult r = audit_minimality(d);
            if (g.json()) {
                json doc;
                doc["decomposition"] = decomposition_json(d);
                doc["minimal"] = r.minimal;
                if (r.witness) {
                    doc["witness"] = {{"position", r.witness->position},
                                      {"candidate", format_language(r.witness->candidate)}};
                }
                out << doc.dump(2) << "\n";
            } else {
                out << "decomposition: " << format_decomposition(d) << "\n";
                out << "minimal: " << (r.minimal ? "yes" : "no") << "\n";
                if (r.witness) {
                    out << "witness: factor " << r.witness->position << " can shrink to "
                        << format_language(r.witness->candidate) << "\n";
                }
            }
            return int{r.minimal ? kExitOk : kExitVerification};
        };
    });

    // combine --a "F1 . F2" --b "G1 . G2"
    std::string a_text, b_text;
    bool do_verify = false;
    std::size_t max_len = 8;
    auto* combine_cmd = command("combine", "Canonical decomposition of the catenation AB");
    combine_cmd->add_option("-a,--a", a_text, "Canonical decomposition of A, factors separated by ' . '")->required();
    combine_cmd->add_option("-b,--b", b_text, "Canonical decomposition of B")->required();
    combine_cmd->add_flag("--verify", do_verify, "Check product, bounded slice, minimality and shape");
    combine_cmd->add_option("--max-len", max_len, "Slice length for --verify");
    combine_cmd->callback([&] {
        action = [&] {
            const Alphabet sigma = session_alphabet(g, {a_text, b_text});
            const Attestation claim = Attestation::asserted("command line");
            const Decomposition a = parse_decomposition(a_text, sigma, claim);
            const Decomposition b = parse_decomposition(b_text, sigma, claim);
            const Combination c = combine(a, b);
            return report_combination(out, g, a, b, c, do_verify, max_len, nullptr, "", "", kExitOk);
        };
    });

    // fixture N [--k K]
    int fixture_number = 0;
    int k = 2;
    auto* fixture_cmd = command("fixture", "Run one of the worked examples example1..example5");
    fixture_cmd->add_option("N", fixture_number, "Fixture number 1..5")->required()->check(CLI::Range(1, 5));
    fixture_cmd->add_option("--k", k, "Repetition count for example 5")->check(CLI::PositiveNumber);
    fixture_cmd->add_flag("--verify", do_verify, "Check product, bounded slice, minimality and shape");
    fixture_cmd->add_option("--max-len", max_len, "Slice length for --verify");
    fixture_cmd->callback([&] {
        action = [&] {
            const Fixture f = example_fixture(fixture_number, k);
            const Combination c = combine(f.a, f.b);
            const bool match = decomp_equal(c.result, f.expected) && case_number(c.rule) == f.case_id;
            json header;
            header["fixture"] = f.name;
            header["a"] = format_decomposition(f.a);
            header["b"] = format_decomposition(f.b);
            header["expected"] = format_decomposition(f.expected);
            header["expected_case"] = f.case_id;
            header["match"] = match;
            const std::string prefix = "fixture: " + f.name + "\na: " + format_decomposition(f.a) +
                                       "\nb: " + format_decomposition(f.b) +
                                       "\nexpected: " + format_decomposition(f.expected) + " (case " +
                                       std::to_string(f.case_id) + ")\n";
            const std::string suffix = std::string("match: ") + (match ? "yes" : "no") + "\n";
            return report_combination(out, g, f.a, f.b, c, do_verify, max_len, &header, prefix, suffix,
                                      match ? kExitOk : kExitVerification);
        };
    });

    // random: a seeded random factorial language
    std::size_t max_states = 5;
    double density = 0.6;
    auto* random_cmd = command("random", "Print a seeded random factorial language");
    random_cmd->add_option("--states", max_states, "Maximum generator states")->check(CLI::PositiveNumber);
    random_cmd->add_option("--density", density, "Transition density")->check(CLI::Range(0.0, 1.0));
    random_cmd->callback([&] {
        action = [&] {
            const Alphabet sigma = g.sigma.empty() ? Alphabet("ab") : session_alphabet(g, {});
            const FactorialLanguage l = random_factorial({sigma, max_states, density, g.seed});
            if (g.json()) {
                out << write_language_json(l.language()) << "\n";
            } else {
                out << format_language(l) << "\n";
            }
            return int{kExitOk};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action ? action() : int{kExitUsage};
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AlphabetError& e) {
        err << "alphabet error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace faclang
