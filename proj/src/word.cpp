#include "reflecto/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "reflecto/errors.hpp"

namespace reflecto {

char symbol_to_char(Symbol s) {
    if (s <= 9) return static_cast<char>('0' + s);
    if (s <= kMaxSymbol) return static_cast<char>('a' + (s - 10));
    throw SpecError("symbol id " + std::to_string(s) + " has no display form");
}

Symbol symbol_from_char(char c) {
    if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + (c - 'a'));
    throw SpecError(std::string("invalid letter '") + c +
                    "' (expected 0-9 or a-z)");
}

Word Word::from_text(std::string_view text) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(symbol_from_char(c));
    return Word(std::move(symbols));
}

std::string Word::text() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(symbol_to_char(s));
    return out;
}

Symbol Word::at(std::uint64_t position) const {
    if (position == 0 || position > symbols_.size())
        throw std::out_of_range("word position " + std::to_string(position) +
                                " out of range 1.." +
                                std::to_string(symbols_.size()));
    return symbols_[position - 1];
}

void Word::append(const Word& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(),
                    other.symbols_.end());
}

void Word::truncate(std::uint64_t length) {
    if (length < symbols_.size()) symbols_.resize(length);
}

Word Word::reversed() const {
    std::vector<Symbol> symbols(symbols_.rbegin(), symbols_.rend());
    return Word(std::move(symbols));
}

bool Word::is_palindrome() const {
    return std::equal(symbols_.begin(),
                      symbols_.begin() + symbols_.size() / 2,
                      symbols_.rbegin());
}

Word Word::subword(std::uint64_t index0, std::uint64_t length) const {
    if (index0 + length > symbols_.size())
        throw std::out_of_range("subword range out of bounds");
    return Word(std::vector<Symbol>(symbols_.begin() + index0,
                                    symbols_.begin() + index0 + length));
}

int Word::max_symbol() const {
    int m = -1;
    for (Symbol s : symbols_) m = std::max(m, static_cast<int>(s));
    return m;
}

Word operator+(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

Word repeat(const Word& w, std::uint64_t times) {
    Word out;
    out.reserve(w.size() * times);
    for (std::uint64_t i = 0; i < times; ++i) out.append(w);
    return out;
}

}  // namespace reflecto
