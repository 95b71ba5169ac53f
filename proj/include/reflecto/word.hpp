#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reflecto {

// Alphabet letters are small integer ids.  Display form maps 0..9 to '0'..'9'
// and 10..35 to 'a'..'z'; every alphabet in this project is far smaller.
using Symbol = std::uint8_t;

inline constexpr Symbol kMaxSymbol = 35;

char symbol_to_char(Symbol s);
Symbol symbol_from_char(char c);

// A finite word.  Positions are 1-based in the public API (at(1) is the first
// letter) to match the indexing used everywhere in the accompanying math;
// iteration and span access stay 0-based for ordinary C++ code.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    // Parses display form, e.g. "0110" or "reward".
    static Word from_text(std::string_view text);

    std::string text() const;

    std::uint64_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    // 1-based access; throws std::out_of_range when off the end.
    Symbol at(std::uint64_t position) const;

    Symbol operator[](std::uint64_t index0) const { return symbols_[index0]; }

    std::span<const Symbol> symbols() const { return symbols_; }
    const Symbol* data() const { return symbols_.data(); }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    void push_back(Symbol s) { symbols_.push_back(s); }
    void append(const Word& other);
    void reserve(std::uint64_t n) { symbols_.reserve(n); }
    void truncate(std::uint64_t length);

    Word reversed() const;
    bool is_palindrome() const;

    Word subword(std::uint64_t index0, std::uint64_t length) const;

    // Largest letter id present, or -1 for the empty word.
    int max_symbol() const;

    friend Word operator+(const Word& a, const Word& b);
    bool operator==(const Word&) const = default;
    // Lexicographic by letter id, which matches display order.
    auto operator<=>(const Word& other) const {
        return symbols_ <=> other.symbols_;
    }

  private:
    std::vector<Symbol> symbols_;
};

// Word repeated k times; repeat(w, 0) is the empty word.
Word repeat(const Word& w, std::uint64_t times);

}  // namespace reflecto
