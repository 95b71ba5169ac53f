#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reflecto/seq_spec.hpp"

namespace reflecto {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

// Optional overrides for a registry run.  Each check has its own default
// range; `n_hi` moves the upper end (checks clamp it to the smallest range
// that still exercises the relation), and `budget` replaces the per-sequence
// catalog budgets.
struct CheckParams {
    std::optional<std::uint32_t> n_hi;
    std::optional<PrefixBudget> budget;
};

struct CheckReport {
    std::string id;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> sequences;
    std::uint32_t n_lo = 0;
    std::uint32_t n_hi = 0;
    std::uint64_t prefix_length = 0;  // largest prefix consumed
    std::uint32_t stability = 2;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
};

// Registered check ids, sorted; every id is accepted by run_check.
const std::vector<std::string>& check_ids();

CheckReport run_check(const std::string& id, const CheckParams& params = {});

// Runs the whole registry, reports ordered by id.
std::vector<CheckReport> run_all_checks(const CheckParams& params = {});

// Empirical survey of the open growth questions on one catalog sequence:
// occurrences of r(n) = r(n+2), the largest first difference of r, and the
// trend of r/rho.  Always inconclusive; the scanned statements are open and
// are never asserted.
CheckReport conjecture_scan(const std::string& catalog_name, std::uint32_t n_max);

}  // namespace reflecto
