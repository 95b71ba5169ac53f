#include <doctest.h>

#include <stdexcept>

#include "reflecto/errors.hpp"
#include "reflecto/morphism.hpp"
#include "reflecto/word.hpp"

using namespace reflecto;

TEST_CASE("word text round trip and symbol display") {
    const Word w = Word::from_text("0110");
    CHECK(w.size() == 4);
    CHECK(w.text() == "0110");
    CHECK(w.at(1) == 0);
    CHECK(w.at(4) == 0);
    CHECK(w[1] == 1);

    // Letters beyond '9' use 'a'..'z'.
    const Word mixed = Word::from_text("09az");
    CHECK(mixed[1] == 9);
    CHECK(mixed[2] == 10);
    CHECK(mixed[3] == 35);
    CHECK(mixed.text() == "09az");
    CHECK(mixed.max_symbol() == 35);

    CHECK(Word().empty());
    CHECK(Word().max_symbol() == -1);
    CHECK_THROWS_AS(Word::from_text("01!"), SpecError);
    CHECK_THROWS_AS(w.at(0), std::out_of_range);
    CHECK_THROWS_AS(w.at(5), std::out_of_range);
}

TEST_CASE("reversal, palindromes, subwords") {
    const Word w = Word::from_text("00101");
    CHECK(w.reversed().text() == "10100");
    CHECK_FALSE(w.is_palindrome());
    CHECK(Word::from_text("0110").is_palindrome());
    CHECK(Word::from_text("010").is_palindrome());
    CHECK(Word().is_palindrome());
    CHECK(Word::from_text("7").is_palindrome());

    CHECK(w.subword(1, 3).text() == "010");
    CHECK(w.subword(0, 0).empty());
    CHECK(w.subword(4, 1).text() == "1");
    CHECK_THROWS_AS(w.subword(3, 3), std::out_of_range);
}

TEST_CASE("word ordering is lexicographic in display order") {
    CHECK(Word::from_text("01") < Word::from_text("10"));
    CHECK(Word::from_text("011") < Word::from_text("0110"));
    CHECK(Word::from_text("9") < Word::from_text("a"));
    CHECK(Word::from_text("010") == Word::from_text("010"));
}

TEST_CASE("append, truncate, repeat") {
    Word w = Word::from_text("01");
    w.append(Word::from_text("10"));
    CHECK(w.text() == "0110");
    w.truncate(3);
    CHECK(w.text() == "011");
    CHECK((Word::from_text("0") + Word::from_text("12")).text() == "012");
    CHECK(repeat(Word::from_text("01"), 3).text() == "010101");
    CHECK(repeat(Word::from_text("01"), 0).empty());
}

TEST_CASE("morphism application and fixed points") {
    const Morphism tm({"01", "10"});
    CHECK(tm.alphabet_size() == 2);
    CHECK(tm.image(0).text() == "01");
    CHECK_FALSE(tm.is_coding());
    CHECK(tm.is_prolongable(0));
    CHECK(tm.is_prolongable(1));

    CHECK(apply_morphism(tm, Word::from_text("011")).text() == "011010");
    CHECK(fixed_point_prefix(tm, 0, 8).text() == "01101001");
    CHECK(fixed_point_prefix(tm, 1, 8).text() == "10010110");
    CHECK(fixed_point_prefix(tm, 0, 1).text() == "0");

    const Morphism fib({"01", "0"});
    CHECK(fib.is_prolongable(0));
    CHECK_FALSE(fib.is_prolongable(1));
    CHECK(fixed_point_prefix(fib, 0, 8).text() == "01001010");

    CHECK_THROWS_AS(fixed_point_prefix(fib, 1, 8), SpecError);
    CHECK_THROWS_AS(Morphism({"01", "1!"}), SpecError);
    CHECK_THROWS_AS(tm.image(2), SpecError);
}

TEST_CASE("codings relabel letter by letter") {
    const Word w = Word::from_text("0123");
    CHECK(apply_coding({1, 1, 0, 1}, w).text() == "1101");
    CHECK(apply_coding({}, w).text() == "0123");  // identity
    CHECK_THROWS_AS(apply_coding({0, 1}, w), SpecError);

    const Morphism coding({"1", "0"});
    CHECK(coding.is_coding());
}
