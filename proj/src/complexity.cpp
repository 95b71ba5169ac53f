#include "reflecto/complexity.hpp"

#include <algorithm>
#include <sstream>

#include "reflecto/errors.hpp"
#include "window_counter.hpp"

namespace reflecto {

FactorSet::FactorSet(std::uint32_t length, std::vector<Word> words)
    : length_(length), words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (const Word& w : words_)
        if (w.size() != length_)
            throw SpecError("factor '" + w.text() + "' does not have length " +
                            std::to_string(length_));
}

bool FactorSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

FactorSet factor_set(const Word& text, std::uint32_t length) {
    if (length > text.size())
        throw BudgetError("factor length " + std::to_string(length) +
                          " exceeds prefix length " +
                          std::to_string(text.size()));
    std::vector<Word> words;
    if (length == 0) {
        words.push_back(Word());
    } else {
        for (std::uint64_t i = 0; i + length <= text.size(); ++i)
            words.push_back(text.subword(i, length));
    }
    return FactorSet(length, std::move(words));
}

Word canonical_class(const Word& w) {
    Word rev = w.reversed();
    return std::min(w, rev);
}

ReflectionClassSet::ReflectionClassSet(std::uint32_t length,
                                       std::vector<ReflectionClass> classes)
    : length_(length), classes_(std::move(classes)) {
    std::sort(classes_.begin(), classes_.end(),
              [](const ReflectionClass& a, const ReflectionClass& b) {
                  return a.representative < b.representative;
              });
}

std::uint64_t ReflectionClassSet::factor_count() const {
    std::uint64_t total = 0;
    for (const ReflectionClass& c : classes_) total += c.members;
    return total;
}

std::uint64_t ReflectionClassSet::palindrome_count() const {
    std::uint64_t total = 0;
    for (const ReflectionClass& c : classes_) total += c.palindromic ? 1 : 0;
    return total;
}

std::uint64_t ReflectionClassSet::reflected_count() const {
    std::uint64_t total = 0;
    for (const ReflectionClass& c : classes_)
        if (!c.unreflected) total += c.members;
    return total;
}

std::uint64_t ReflectionClassSet::unreflected_count() const {
    std::uint64_t total = 0;
    for (const ReflectionClass& c : classes_)
        if (c.unreflected) total += c.members;
    return total;
}

ReflectionClassSet classify_factors(const FactorSet& factors) {
    std::vector<ReflectionClass> classes;
    for (const Word& w : factors.words()) {
        Word rev = w.reversed();
        if (rev == w) {
            classes.push_back({w, true, false, 1});
        } else if (factors.contains(rev)) {
            if (w < rev) classes.push_back({w, false, false, 2});
        } else {
            classes.push_back({w, false, true, 1});
        }
    }
    return ReflectionClassSet(factors.length(), std::move(classes));
}

ComplexityProfile::ComplexityProfile(std::vector<ProfileRow> rows,
                                     std::uint64_t prefix_length,
                                     std::uint32_t stability)
    : rows_(std::move(rows)),
      prefix_length_(prefix_length),
      stability_(stability) {
    if (rows_.empty()) throw SpecError("profile needs at least the n = 0 row");
}

const ProfileRow& ComplexityProfile::row(std::uint32_t n) const {
    if (n >= rows_.size())
        throw std::out_of_range("profile has no row for n = " +
                                std::to_string(n));
    return rows_[n];
}

bool ComplexityProfile::all_stable() const {
    for (const ProfileRow& row : rows_)
        if (!row.stable) return false;
    return true;
}

std::string ComplexityProfile::to_csv() const {
    std::ostringstream out;
    out << "n,rho,pal,refl,unr,r,stable\n";
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        const ProfileRow& row = rows_[n];
        out << n << ',' << row.rho << ',' << row.pal << ',' << row.refl << ','
            << row.unr << ',' << row.r << ',' << (row.stable ? 1 : 0) << '\n';
    }
    return out.str();
}

nlohmann::ordered_json ComplexityProfile::to_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        const ProfileRow& row = rows_[n];
        rows.push_back({{"n", n},
                        {"rho", row.rho},
                        {"pal", row.pal},
                        {"refl", row.refl},
                        {"unr", row.unr},
                        {"r", row.r},
                        {"stable", row.stable}});
    }
    return {{"prefix_length", prefix_length_},
            {"stability", stability_},
            {"rows", std::move(rows)}};
}

ComplexityProfile profile_word(const Word& text, std::uint32_t n_max) {
    if (text.size() < std::uint64_t{n_max} + 1)
        throw BudgetError("prefix of length " + std::to_string(text.size()) +
                          " is too short for n_max " + std::to_string(n_max) +
                          " (need n_max + 1)");
    detail::WindowCounter counter(text.symbols());
    std::vector<ProfileRow> rows(n_max + 1);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        detail::RawCounts c = counter.count(n);
        rows[n] = {c.rho, c.pal, c.refl, c.unr, c.r, true};
    }
    return ComplexityProfile(std::move(rows), text.size(), 1);
}

ComplexityProfile profile_generated(
    const std::function<Word(std::uint64_t)>& generate,
    const PrefixBudget& budget, std::uint32_t n_max) {
    if (budget.stability < 1)
        throw SpecError("stability factor must be at least 1");
    if (budget.length < std::uint64_t{n_max} + 1)
        throw BudgetError("prefix budget " + std::to_string(budget.length) +
                          " is too small for n_max " + std::to_string(n_max) +
                          " (need n_max + 1)");
    ComplexityProfile base = profile_word(generate(budget.length), n_max);
    if (budget.stability == 1) return base;

    ComplexityProfile wide =
        profile_word(generate(budget.length * budget.stability), n_max);
    std::vector<ProfileRow> rows;
    rows.reserve(n_max + 1);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        ProfileRow row = base.row(n);
        row.stable = row.same_counts(wide.row(n));
        rows.push_back(row);
    }
    return ComplexityProfile(std::move(rows), budget.length, budget.stability);
}

ComplexityProfile profile(const SequenceSpec& spec, const PrefixBudget& budget,
                          std::uint32_t n_max) {
    validate(spec);
    return profile_generated(
        [&spec](std::uint64_t length) { return prefix(spec, length); }, budget,
        n_max);
}

std::optional<std::uint32_t> periodicity_witness(
    const ComplexityProfile& profile) {
    for (std::uint32_t n = 1; n <= profile.n_max(); ++n) {
        if (!profile.stable(n))
            throw BudgetError(
                "periodicity witness needs stable counts; length " +
                std::to_string(n) + " is not");
        if (profile.r(n) <= (n + 1) / 2) return n;
    }
    return std::nullopt;
}

SturmianTest sturmian_test(const ComplexityProfile& profile) {
    if (profile.n_max() < 10)
        throw BudgetError("sturmian test needs a profile up to n_max >= 10");
    SturmianTest result{true, std::nullopt};
    for (std::uint32_t n = 1; n <= profile.n_max(); ++n) {
        if (!profile.stable(n))
            throw BudgetError("sturmian test needs stable counts; length " +
                              std::to_string(n) + " is not");
        if (profile.r(n) != 1 + (std::uint64_t{n} + 1) / 2) {
            result.matches = false;
            result.counterexample = n;
            break;
        }
    }
    return result;
}

}  // namespace reflecto
