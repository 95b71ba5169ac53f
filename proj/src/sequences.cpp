#include "reflecto/sequences.hpp"

#include <string>

#include "reflecto/errors.hpp"

namespace reflecto {

namespace {

void require_binary(const Word& w, const char* what) {
    if (w.max_symbol() > 1)
        throw SpecError(std::string(what) + " must be binary, got '" +
                        w.text() + "'");
}

}  // namespace

Word delta(const Word& w) {
    if (w.empty()) throw SpecError("delta needs a nonempty word");
    require_binary(w, "delta input");
    Word out;
    if (w.size() == 1) return out;
    out.reserve(w.size() - 1);
    for (std::uint64_t i = 0; i + 1 < w.size(); ++i)
        out.push_back(static_cast<Symbol>(w[i] ^ w[i + 1]));
    return out;
}

Word delta_inverse(const Word& u, Symbol initial) {
    require_binary(u, "delta_inverse input");
    if (initial > 1) throw SpecError("delta_inverse initial letter must be 0 or 1");
    Word out;
    out.reserve(u.size() + 1);
    Symbol cur = initial;
    out.push_back(cur);
    for (Symbol s : u) {
        cur = static_cast<Symbol>(cur ^ s);
        out.push_back(cur);
    }
    return out;
}

UnfoldingInstructions::UnfoldingInstructions(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    require_binary(preperiod_, "unfolding preperiod");
    require_binary(period_, "unfolding period");
    if (period_.empty())
        throw SpecError("unfolding instructions need a nonempty period");
}

Symbol UnfoldingInstructions::at(std::uint64_t index0) const {
    if (index0 < preperiod_.size()) return preperiod_[index0];
    return period_[(index0 - preperiod_.size()) % period_.size()];
}

Word paperfolding_prefix(const UnfoldingInstructions& instructions,
                         std::uint64_t length) {
    Word w;
    // After i steps the word has length 2^i - 1, so growth is geometric.
    for (std::uint64_t step = 0; w.size() < length; ++step) {
        Word next = w;
        next.reserve(2 * w.size() + 1);
        next.push_back(instructions.at(step));
        for (std::uint64_t i = w.size(); i-- > 0;)
            next.push_back(static_cast<Symbol>(1 ^ w[i]));
        w = std::move(next);
    }
    w.truncate(length);
    return w;
}

Word golay_shapiro_prefix(const UnfoldingInstructions& instructions,
                          std::uint64_t length) {
    Word p = paperfolding_prefix(instructions, length);
    Word out;
    out.reserve(length);
    Symbol sum = 0;
    for (Symbol s : p) {
        sum = static_cast<Symbol>(sum ^ s);
        out.push_back(sum);
    }
    return out;
}

SturmianDirective::SturmianDirective(std::vector<std::uint32_t> preperiod,
                                     std::vector<std::uint32_t> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty())
        throw SpecError("sturmian directive needs a nonempty period");
    for (std::uint32_t d : preperiod_)
        if (d < 1) throw SpecError("sturmian directive entries must be >= 1");
    for (std::uint32_t d : period_)
        if (d < 1) throw SpecError("sturmian directive entries must be >= 1");
}

std::uint32_t SturmianDirective::at(std::uint64_t index0) const {
    if (index0 < preperiod_.size()) return preperiod_[index0];
    return period_[(index0 - preperiod_.size()) % period_.size()];
}

Word sturmian_prefix(const SturmianDirective& directive, std::uint64_t length) {
    Word previous = Word::from_text("1");
    Word current = Word::from_text("0");
    for (std::uint64_t k = 0; current.size() < length; ++k) {
        Word next = repeat(current, directive.at(k));
        next.append(previous);
        previous = std::move(current);
        current = std::move(next);
    }
    current.truncate(length);
    return current;
}

Word halffactor_prefix(std::uint64_t length) {
    Word w = Word::from_text("01");
    const Word glue = Word::from_text("01");
    while (w.size() < length) {
        Word next = w;
        next.reserve(2 * w.size() + 2);
        next.append(glue);
        for (std::uint64_t i = w.size(); i-- > 0;) next.push_back(w[i]);
        w = std::move(next);
    }
    w.truncate(length);
    return w;
}

}  // namespace reflecto
