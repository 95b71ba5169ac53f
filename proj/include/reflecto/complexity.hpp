#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reflecto/seq_spec.hpp"
#include "reflecto/word.hpp"

namespace reflecto {

// The distinct length-n factors of a finite word, sorted lexicographically.
class FactorSet {
  public:
    FactorSet(std::uint32_t length, std::vector<Word> words);

    std::uint32_t length() const { return length_; }
    const std::vector<Word>& words() const { return words_; }
    std::uint64_t size() const { return words_.size(); }
    bool contains(const Word& w) const;

  private:
    std::uint32_t length_;
    std::vector<Word> words_;
};

// Factors of length n occurring in `text`; requires n <= |text|.
FactorSet factor_set(const Word& text, std::uint32_t length);

// Representative of the reversal class of w: the lexicographically smaller
// of w and its reversal.
Word canonical_class(const Word& w);

struct ReflectionClass {
    Word representative;  // smallest member of the class
    bool palindromic = false;
    bool unreflected = false;  // reversal absent from the factor set
    std::uint32_t members = 1;

    bool operator==(const ReflectionClass&) const = default;
};

// Partition of a factor set under w ~ reverse(w), sorted by representative.
class ReflectionClassSet {
  public:
    ReflectionClassSet(std::uint32_t length,
                       std::vector<ReflectionClass> classes);

    std::uint32_t length() const { return length_; }
    const std::vector<ReflectionClass>& classes() const { return classes_; }
    std::uint64_t size() const { return classes_.size(); }

    std::uint64_t factor_count() const;       // sum of class sizes
    std::uint64_t palindrome_count() const;
    std::uint64_t reflected_count() const;    // factors whose reversal occurs
    std::uint64_t unreflected_count() const;

  private:
    std::uint32_t length_;
    std::vector<ReflectionClass> classes_;
};

ReflectionClassSet classify_factors(const FactorSet& factors);

struct ProfileRow {
    std::uint64_t rho = 0;   // distinct factors
    std::uint64_t pal = 0;   // palindromic factors
    std::uint64_t refl = 0;  // factors whose reversal is also a factor
    std::uint64_t unr = 0;   // rho - refl
    std::uint64_t r = 0;     // reversal classes
    bool stable = true;      // unchanged when recomputed on the longer prefix

    bool same_counts(const ProfileRow& other) const {
        return rho == other.rho && pal == other.pal && refl == other.refl &&
               unr == other.unr && r == other.r;
    }
};

// Per-length counts computed from a finite prefix.  All values are counts in
// the prefix and hence lower bounds for the infinite sequence; the stable
// flag records that doubling the prefix did not change the row.
class ComplexityProfile {
  public:
    ComplexityProfile(std::vector<ProfileRow> rows, std::uint64_t prefix_length,
                      std::uint32_t stability);

    std::uint32_t n_max() const {
        return static_cast<std::uint32_t>(rows_.size() - 1);
    }
    const ProfileRow& row(std::uint32_t n) const;

    std::uint64_t rho(std::uint32_t n) const { return row(n).rho; }
    std::uint64_t pal(std::uint32_t n) const { return row(n).pal; }
    std::uint64_t refl(std::uint32_t n) const { return row(n).refl; }
    std::uint64_t unr(std::uint32_t n) const { return row(n).unr; }
    std::uint64_t r(std::uint32_t n) const { return row(n).r; }
    bool stable(std::uint32_t n) const { return row(n).stable; }

    bool all_stable() const;
    std::uint64_t prefix_length() const { return prefix_length_; }
    std::uint32_t stability() const { return stability_; }

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;

  private:
    std::vector<ProfileRow> rows_;
    std::uint64_t prefix_length_;
    std::uint32_t stability_;
};

// Counts for every n in [0, n_max] from the budgeted prefix.  Requires
// budget.length >= n_max + 1.  Each n costs one sweep over the prefix, and
// different n are independent, so the profile may also be computed over a
// shared immutable prefix concurrently.
ComplexityProfile profile(const SequenceSpec& spec, const PrefixBudget& budget,
                          std::uint32_t n_max);

// Same, for sequences given as an explicit prefix generator (length -> word).
ComplexityProfile profile_generated(
    const std::function<Word(std::uint64_t)>& generate,
    const PrefixBudget& budget, std::uint32_t n_max);

// Single-prefix variant used by both entry points.
ComplexityProfile profile_word(const Word& text, std::uint32_t n_max);

// Smallest n >= 1 with r(n) <= floor((n+1)/2), if any: by the sparseness
// criterion such an n exists exactly for eventually periodic sequences.
// Requires every row of the profile to be stable.
std::optional<std::uint32_t> periodicity_witness(
    const ComplexityProfile& profile);

struct SturmianTest {
    bool matches = false;
    std::optional<std::uint32_t> counterexample;  // first failing n
};

// Tests r(n) == 1 + floor((n+1)/2) for 1 <= n <= n_max, the value profile
// shared by all Sturmian sequences.  Requires a stable profile with
// n_max >= 10.
SturmianTest sturmian_test(const ComplexityProfile& profile);

}  // namespace reflecto
