#include <gtest/gtest.h>

#include <random>

#include "faclang/error.hpp"
#include "support.hpp"

using namespace faclang;
using namespace faclang::testing;

namespace {

const Alphabet kAB("ab");
const Alphabet kABC("abc");

std::string shape(const std::string& src) { return parse_expression(src, std::nullopt).to_string(); }

std::size_t error_position(const std::string& src) {
    try {
        parse_expression(src, std::nullopt);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << src;
    return 0;
}

TEST(Parse, Examples) {
    EXPECT_EQ(shape("a*b*"), "Concat(Star(a),Star(b))");
    EXPECT_EQ(shape("(a*+b*)^4"), "Power(Union(Star(a),Star(b)),4)");
    EXPECT_EQ(shape("Fac({a,ab}*)"), "Fac(Star(WordSet{a,ab}))");
}

TEST(Parse, Keywords) {
    EXPECT_EQ(shape("eps"), "Epsilon");
    EXPECT_EQ(shape("empty"), "Empty");
    EXPECT_EQ(shape("e ps"), "Concat(Concat(e,p),s)");
    EXPECT_EQ(shape(" a +\tb "), "Union(a,b)");
}

TEST(Parse, PostfixChains) {
    EXPECT_EQ(shape("a**"), "Star(Star(a))");
    EXPECT_EQ(shape("a^2*"), "Star(Power(a,2))");
    EXPECT_EQ(shape("ab*"), "Concat(a,Star(b))");
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    EXPECT_EQ(error_position("a+"), 2u);
    EXPECT_EQ(error_position("(ab"), 3u);
    EXPECT_EQ(error_position("a)"), 1u);
    EXPECT_EQ(error_position("{a,}"), 3u);
    EXPECT_EQ(error_position("a^"), 2u);
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("a#"), 1u);
}

TEST(Parse, ErrorMessageNamesPosition) {
    try {
        parse_expression("a+", std::nullopt);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("at position 2"), std::string::npos);
    }
}

TEST(Parse, LetterOutsideAlphabet) {
    EXPECT_THROW(parse_expression("a*c", kAB), AlphabetError);
    EXPECT_NO_THROW(parse_expression("a*c", kABC));
}

TEST(Parse, ExponentCap) {
    EXPECT_NO_THROW(parse_expression("a^10000", kAB));
    EXPECT_THROW(parse_expression("a^10001", kAB), ParseError);
}

TEST(LettersOf, CollectsAllLetters) {
    EXPECT_EQ(letters_of(parse_expression("Fac({a,cb}*)+eps", std::nullopt)), kABC);
    EXPECT_EQ(letters_of(parse_expression("eps", std::nullopt)), Alphabet());
}

TEST(Build, PowerAndWordSet) {
    EXPECT_EQ(slice(lang("(a+b)^2", kAB), 3), (WordSet{"aa", "ab", "ba", "bb"}));
    EXPECT_EQ(slice(lang("{ab,b}", kAB), 3), (WordSet{"ab", "b"}));
    EXPECT_EQ(lang("a^0", kAB), Language::epsilon(kAB));
    EXPECT_EQ(lang("empty", kAB), Language::empty(kAB));
    EXPECT_EQ(lang("empty*", kAB), Language::epsilon(kAB));
}

TEST(Build, FacIsFactorClosure) {
    EXPECT_EQ(slice(lang("Fac(abc)", kABC), 3), (WordSet{"", "a", "b", "c", "ab", "bc", "abc"}));
}

TEST(Synthesize, SimpleForms) {
    EXPECT_EQ(synthesize_expression(Language::empty(kAB)), "empty");
    EXPECT_EQ(synthesize_expression(Language::epsilon(kAB)), "eps");
    EXPECT_EQ(synthesize_expression(lang("(a+b)*", kAB)), "{a,b}*");
    EXPECT_EQ(synthesize_expression(lang("a*", kAB)), "a*");
}

TEST(Synthesize, DeterministicForEqualLanguages) {
    EXPECT_EQ(synthesize_expression(lang("a*b*", kAB)), synthesize_expression(lang("a*(b*)*", kAB)));
}

TEST(Synthesize, RoundTripsRandomLanguages) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_language(rng, kABC, 4);
        const auto text = synthesize_expression(x);
        EXPECT_EQ(lang(text, kABC), x) << text;
    }
}

TEST(Synthesize, KeywordSpellingIsSeparated) {
    // Letters e, p, s glued together must not read back as the keyword.
    const Alphabet eps("eps");
    const auto x = Language::word(eps, "eps");
    EXPECT_EQ(lang(synthesize_expression(x), eps), x);
    const Alphabet word("acFe");
    const auto y = concat(Language::word(word, "Fac"), Language::word(word, "e"));
    EXPECT_EQ(lang(synthesize_expression(y), word), y);
}

}  // namespace
