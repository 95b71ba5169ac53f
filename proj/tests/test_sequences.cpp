#include <doctest.h>

#include "reflecto/errors.hpp"
#include "reflecto/sequences.hpp"
#include "reflecto/word.hpp"

using namespace reflecto;

TEST_CASE("delta and its inverse") {
    const Word w = Word::from_text("0110100");
    CHECK(delta(w).text() == "101110");
    CHECK(delta(Word::from_text("0")).empty());
    CHECK(delta_inverse(delta(w), 0) == w);
    CHECK(delta_inverse(Word::from_text("101110"), 1).text() == "1001011");
    CHECK(delta_inverse(Word(), 1).text() == "1");
}

TEST_CASE("instruction streams repeat their period") {
    const UnfoldingInstructions s(Word::from_text("10"), Word::from_text("011"));
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) == 1);
    CHECK(s.at(4) == 1);
    CHECK(s.at(5) == 0);
    CHECK(s.at(7) == 1);
    CHECK_THROWS_AS(UnfoldingInstructions(Word(), Word()), SpecError);
}

TEST_CASE("paperfolding by unfolding") {
    // Constant instruction 0 gives the regular paperfolding sequence.
    const UnfoldingInstructions regular(Word(), Word::from_text("0"));
    CHECK(paperfolding_prefix(regular, 31).text() ==
          "0010011000110110001001110011011");
    CHECK(paperfolding_prefix(regular, 3).text() == "001");
    CHECK(paperfolding_prefix(regular, 0).empty());

    // Unfolding doubles and adds one: |fold(k+1)| = 2 |fold(k)| + 1, and the
    // first half is always a prefix of the next word.
    const Word a = paperfolding_prefix(regular, 15);
    const Word b = paperfolding_prefix(regular, 31);
    CHECK(b.subword(0, 15) == a);
}

TEST_CASE("running sums of paperfolding") {
    const UnfoldingInstructions classic(Word::from_text("0"), Word::from_text("01"));
    CHECK(golay_shapiro_prefix(classic, 20).text() == "00100100001110100010");
    // The running sum inverts delta: consecutive output letters differ by
    // the next paperfolding letter, so delta(gs)(i) = pf(i+1).
    const Word gs = golay_shapiro_prefix(classic, 64);
    const Word pf = paperfolding_prefix(classic, 64);
    const Word d = delta(gs);
    REQUIRE(d.size() == 63);
    for (std::uint64_t i = 1; i <= 63; ++i) {
        CHECK(d.at(i) == pf.at(i + 1));
    }
}

TEST_CASE("standard words from directives") {
    // The all-ones directive builds the Fibonacci word.
    const SturmianDirective ones({}, {1});
    CHECK(sturmian_prefix(ones, 8).text() == "01001010");
    CHECK(sturmian_prefix(ones, 20).text() == "01001010010010100101");

    const SturmianDirective d211({2}, {1});
    CHECK(sturmian_prefix(d211, 6).text() == "001000");

    CHECK_THROWS_AS(SturmianDirective({}, {}), SpecError);
    CHECK_THROWS_AS(SturmianDirective({0}, {1}), SpecError);
    CHECK_THROWS_AS(SturmianDirective({1}, {1, 0}), SpecError);
}

TEST_CASE("palindromic closure steps of the half-complexity example") {
    CHECK(halffactor_prefix(2).text() == "01");
    CHECK(halffactor_prefix(14).text() == "01011001011010");
    // x_{k+1} = x_k 01 x_k^R keeps x_k as a prefix.
    const Word x3 = halffactor_prefix(14);
    const Word x4 = halffactor_prefix(30);
    CHECK(x4.subword(0, 14) == x3);
    CHECK(x4.subword(14, 2).text() == "01");
    CHECK(x4.subword(16, 14) == x3.reversed());
}
