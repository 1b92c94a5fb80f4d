#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <defectlab/generate.hpp>
#include <defectlab/morphism.hpp>
#include <defectlab/word.hpp>

#include "oracles.hpp"

using namespace defectlab;

namespace {

Morphism fibonacci() { return Morphism::from_rules({{"0", "01"}, {"1", "0"}}); }

Morphism sigma_fib() { return Morphism::from_rules({{"0", "cabcbac"}, {"1", "d"}}); }

WordSpec fib_spec(std::int64_t length) {
    return {FixedPointSpec{fibonacci(), "0"}, length};
}

Word word_of(const std::string& text) { return Word::parse_new(text); }

}  // namespace

TEST_CASE("alphabet basics") {
    auto a = Alphabet::make({"0", "1", "2"});
    CHECK(a->size() == 3);
    CHECK(a->token(1) == "1");
    CHECK(a->find("2") == Symbol{2});
    CHECK(!a->find("3"));
    CHECK_THROWS_AS(Alphabet::make({}), error);
    CHECK_THROWS_AS(Alphabet::make({"a", "a"}), error);
}

TEST_CASE("tokenize: comma rule for multi-character symbols") {
    CHECK(tokenize("abc") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("aa,b,aa") == std::vector<std::string>{"aa", "b", "aa"});
    CHECK(tokenize("").empty());
}

TEST_CASE("word parse and str round-trip") {
    Word w = word_of("abca");
    CHECK(w.size() == 4);
    CHECK(w.str() == "abca");
    Word m = Word::parse("aa,b", Alphabet::make({"aa", "b"}));
    CHECK(m.size() == 2);
    CHECK(m.str() == "aa,b");
    CHECK_THROWS_AS(Word::parse("ax", Alphabet::make({"a"})), error);
}

TEST_CASE("reversal") {
    CHECK(word_of("").reversed().str().empty());
    CHECK(word_of("abc").reversed().str() == "cba");
    CHECK(word_of("cabc").reversed() == word_of("cbac"));
}

TEST_CASE("is_palindrome") {
    CHECK(word_of("").is_palindrome());
    CHECK(word_of("cabcbac").is_palindrome());
    CHECK(!word_of("cabc").is_palindrome());
}

TEST_CASE("reversal is involutive (random)") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Word w = word_of(oracle::random_word(rng, 1 + i % 60, 1 + i % 4));
        CHECK(w.reversed().reversed() == w);
    }
}

TEST_CASE("apply_morphism") {
    auto phi = Morphism::from_rules({{"0", "0100"}, {"1", "01011"}, {"2", "010111"}});
    CHECK(apply_morphism(phi, Word::parse("0", phi.domain())).str() == "0100");
    CHECK(apply_morphism(phi, Word::empty(phi.domain())).is_empty());
    auto fib = fibonacci();
    CHECK(apply_morphism(fib, Word::parse("010", fib.domain())).str() == "01001");
    CHECK_THROWS_AS(apply_morphism(fib, word_of("2")), error);
}

TEST_CASE("morphism flags") {
    auto fib = fibonacci();
    CHECK(fib.non_erasing());
    CHECK(fib.injective_on_letters());
    CHECK(fib.prolongable_on(0));
    CHECK(!fib.prolongable_on(1));
    auto e = Morphism(fib.domain(), fib.codomain(),
                      {Word::parse("01", fib.codomain()), Word::empty(fib.codomain())});
    CHECK(!e.non_erasing());
}

TEST_CASE("morphism distributes over concatenation (random)") {
    std::mt19937 rng(12);
    auto fib = fibonacci();
    auto alpha = fib.domain();
    std::uniform_int_distribution<int> len(0, 12), bit(0, 1);
    for (int i = 0; i < 200; ++i) {
        auto rand_word = [&] {
            std::vector<Symbol> s;
            for (int k = len(rng); k-- > 0;) s.push_back(bit(rng));
            return Word(alpha, s);
        };
        Word u = rand_word(), v = rand_word();
        CHECK(apply_morphism(fib, u + v) == apply_morphism(fib, u) + apply_morphism(fib, v));
    }
}

TEST_CASE("generate_prefix: fixed point") {
    CHECK(generate_prefix(fib_spec(10)).str() == "0100101001");
    CHECK(generate_prefix(fib_spec(1)).str() == "0");
}

TEST_CASE("generate_prefix: periodic") {
    WordSpec spec{PeriodicSpec{word_of("abcabcacbacb")}, 14};
    CHECK(generate_prefix(spec).str() == "abcabcacbacbab");
}

TEST_CASE("generate_prefix: morphic image") {
    auto inner = std::make_shared<WordSpec>(fib_spec(1));
    WordSpec spec{MorphicImageSpec{inner, sigma_fib()}, 8};
    CHECK(generate_prefix(spec).str() == "cabcbacd");
}

TEST_CASE("generate_prefix: literal truncation and bounds") {
    WordSpec spec{LiteralSpec{word_of("abcd")}, 3};
    CHECK(generate_prefix(spec).str() == "abc");
    spec.length = 5;
    CHECK_THROWS_AS(generate_prefix(spec), error);
}

TEST_CASE("generate_prefix errors") {
    // not prolongable on the start letter
    WordSpec bad{FixedPointSpec{fibonacci(), "1"}, 5};
    CHECK_THROWS_AS(generate_prefix(bad), error);
    // erasing morphism under a morphic image
    auto fib = fibonacci();
    auto erasing = Morphism(fib.domain(), fib.codomain(),
                            {Word::parse("01", fib.codomain()), Word::empty(fib.codomain())});
    WordSpec img{MorphicImageSpec{std::make_shared<WordSpec>(fib_spec(1)), erasing}, 4};
    CHECK_THROWS_AS(generate_prefix(img), error);
    // negative closure level
    WordSpec neg{ClosureSequenceSpec{-1}, 4};
    CHECK_THROWS_AS(generate_prefix(neg), error);
}

TEST_CASE("generate_prefix is deterministic") {
    auto inner = std::make_shared<WordSpec>(fib_spec(1));
    WordSpec spec{MorphicImageSpec{inner, sigma_fib()}, 512};
    CHECK(generate_prefix(spec) == generate_prefix(spec));
}

TEST_CASE("palindromic closure: pinned values") {
    CHECK(palindromic_closure(word_of("")).is_empty());
    CHECK(palindromic_closure(word_of("abab")).str() == "ababa");
    CHECK(palindromic_closure(word_of("011022")).str() == "0110220110");
}

TEST_CASE("palindromic closure matches the exhaustive oracle") {
    std::mt19937 rng(13);
    for (int i = 0; i < 400; ++i) {
        std::string s = oracle::random_word(rng, 1 + i % 20, 1 + i % 3);
        Word w = word_of(s);
        Word c = palindromic_closure(w);
        CHECK(c.is_palindrome());
        CHECK(c.starts_with(w));
        CHECK(c.str() == oracle::closure(s));
    }
}

TEST_CASE("closure_level: pinned values") {
    CHECK(closure_level(0).is_empty());
    CHECK(closure_level(1).str() == "0110220110");
    // level 2 equals eleven copies of v1 with 0 1 1 0 2 2 0 1 1 0 between
    Word v1 = closure_level(1);
    auto alpha = v1.alphabet();
    auto letter = [&](Symbol s) { return Word(alpha, {s}); };
    Word expected = v1;
    for (Symbol x : {0, 1, 1, 0, 2, 2, 0, 1, 1, 0}) expected = expected + letter(x) + v1;
    Word v2 = closure_level(2);
    CHECK(v2.size() == 120);
    CHECK(v2 == expected);
}

TEST_CASE("closure_level: prefix/suffix and length recurrence") {
    Word prev = closure_level(0);
    for (int i = 1; i <= 4; ++i) {
        Word v = closure_level(i);
        CHECK(v.size() == 11 * prev.size() + 10);
        CHECK(v.starts_with(prev));
        CHECK(v.ends_with(prev));
        CHECK(v.is_palindrome());
        prev = v;
    }
}

TEST_CASE("closure_level: budget errors name the would-be length") {
    try {
        closure_level(9, 1 << 20);
        FAIL("expected a budget error");
    } catch (const error& e) {
        CHECK(e.code() == errc::budget_exceeded);
        // level 6 is the first to blow a 2^20 budget; |v_6| = 11^6 - 1
        CHECK(std::string(e.what()).find("1771560") != std::string::npos);
    }
}

TEST_CASE("closure sequence spec raises the level to cover the length") {
    WordSpec spec{ClosureSequenceSpec{0}, 121};
    Word w = generate_prefix(spec);
    CHECK(w.size() == 121);
    CHECK(w.prefix(120) == closure_level(2));
}
