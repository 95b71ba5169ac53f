#include "reflecto/catalog.hpp"

#include <algorithm>

#include "reflecto/errors.hpp"

namespace reflecto {

namespace {

std::function<Word(std::uint64_t)> generator_for(SequenceSpec spec) {
    return [spec = std::move(spec)](std::uint64_t length) { return prefix(spec, length); };
}

CatalogEntry spec_entry(std::string name, std::string summary, SequenceSpec spec,
                        std::uint64_t budget_length, bool eventually_periodic,
                        bool uniformly_recurrent) {
    CatalogEntry entry;
    entry.name = std::move(name);
    entry.summary = std::move(summary);
    entry.generate = generator_for(spec);
    entry.spec = std::move(spec);
    entry.default_budget = PrefixBudget{budget_length, 2};
    entry.eventually_periodic = eventually_periodic;
    entry.uniformly_recurrent = uniformly_recurrent;
    return entry;
}

// The quasi-Sturmian entry maps the Fibonacci sequence through 0 -> 01,
// 1 -> 011.  The directive-based generator cannot express it (images of
// different lengths), so it exists only as a closure.
Word quasi_sturmian_prefix(std::uint64_t length) {
    const Morphism expand({"01", "011"});
    std::uint64_t source = length / 2 + 2;
    for (;;) {
        Word base = prefix(builtin_spec("fibonacci"), source);
        Word image = apply_morphism(expand, base);
        if (image.size() >= length) {
            image.truncate(length);
            return image;
        }
        source *= 2;
    }
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> entries;

    entries.push_back(spec_entry(
        "thue_morse", "fixed point of 0->01, 1->10",
        builtin_spec("thue_morse"), 4096, false, true));
    entries.push_back(spec_entry(
        "fibonacci", "fixed point of 0->01, 1->0",
        builtin_spec("fibonacci"), 4096, false, true));
    entries.push_back(spec_entry(
        "tribonacci", "fixed point of 0->01, 1->02, 2->0",
        builtin_spec("tribonacci"), 4096, false, true));
    entries.push_back(spec_entry(
        "period_doubling", "fixed point of 0->01, 1->00",
        builtin_spec("period_doubling"), 4096, false, true));
    entries.push_back(spec_entry(
        "chacon", "fixed point of 0->0010, 1->1",
        builtin_spec("chacon"), 16384, false, true));
    entries.push_back(spec_entry(
        "a039982", "coded fixed point with r(n+1) < r(n) at odd n >= 3",
        builtin_spec("a039982"), 8192, false, false));
    entries.push_back(spec_entry(
        "t3", "count of 1 bits mod 3",
        builtin_spec("t3"), 8192, false, true));
    entries.push_back(spec_entry(
        "baum_sweet", "1 iff the binary expansion has no odd block of zeros",
        builtin_spec("baum_sweet"), 32768, false, false));
    entries.push_back(spec_entry(
        "rs_classic", "running sum of the paperfolding word with instructions 0 01 01 ...",
        builtin_spec("rs_classic"), 16384, false, true));
    entries.push_back(spec_entry(
        "example_pal_one", "morphic word with exactly one palindrome per length > 1",
        builtin_spec("example_pal_one"), 16384, false, false));
    entries.push_back(spec_entry(
        "example_unref_linear", "coded morphic word with linearly many unreflected factors",
        builtin_spec("example_unref_linear"), 16384, false, false));

    entries.push_back(spec_entry(
        "halffactor", "limit of x -> x 01 reverse(x) from 01",
        SequenceSpec(HalfFactorSpec{}), 16384, false, true));
    entries.push_back(spec_entry(
        "paperfolding_regular", "paperfolding word with constant-0 instructions",
        SequenceSpec(PaperfoldingSpec{Word(), Word::from_text("0")}), 16384, false, true));
    entries.push_back(spec_entry(
        "sturmian_d211", "directive sequence 2, 1, 1, 1, ...",
        SequenceSpec(SturmianSpec{{2}, {1}}), 4096, false, true));
    entries.push_back(spec_entry(
        "rote_fibonacci", "partial sums mod 2 of the Fibonacci word, from 0",
        SequenceSpec(RoteSpec{{}, {1}, 0}), 4096, false, true));

    {
        CatalogEntry entry;
        entry.name = "quasi_sturmian_fib";
        entry.summary = "image of the Fibonacci word under 0->01, 1->011";
        entry.generate = quasi_sturmian_prefix;
        entry.default_budget = PrefixBudget{8192, 2};
        entry.eventually_periodic = false;
        entry.uniformly_recurrent = true;
        entries.push_back(std::move(entry));
    }

    entries.push_back(spec_entry(
        "periodic_01", "the periodic word 010101...",
        SequenceSpec(PeriodicSpec{Word(), Word::from_text("01")}), 256, true, true));
    entries.push_back(spec_entry(
        "periodic_011", "the periodic word 011011...",
        SequenceSpec(PeriodicSpec{Word(), Word::from_text("011")}), 256, true, true));

    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const CatalogEntry& entry : catalog()) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

ComplexityProfile catalog_profile(const CatalogEntry& entry, std::uint32_t n_max) {
    return profile_generated(entry.generate, entry.default_budget, n_max);
}

}  // namespace reflecto
