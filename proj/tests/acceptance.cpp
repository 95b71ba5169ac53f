// Acceptance gate: seventeen pinned criteria, one line of output each.
// Exit status 0 only when every criterion holds.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "reflecto/catalog.hpp"
#include "reflecto/checks.hpp"
#include "reflecto/complexity.hpp"
#include "reflecto/graphs.hpp"
#include "reflecto/linrep.hpp"
#include "reflecto/seq_spec.hpp"

using namespace reflecto;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << "C" << (number < 10 ? "0" : "") << number << " "
              << (ok ? "PASS" : "FAIL") << " " << title << note << "\n";
}

bool check_passes(const std::string& id, CheckParams params = {}) {
    return run_check(id, params).verdict == Verdict::pass;
}

}  // namespace

int main() {
    criterion(1, "thue_morse r values for n <= 14", [] {
        const ComplexityProfile p =
            profile(builtin_spec("thue_morse"), PrefixBudget{4096, 2}, 14);
        const std::vector<std::uint64_t> expected = {1, 2, 3, 4, 6, 6, 10, 10,
                                                     13, 12, 16, 16, 20, 20, 22};
        for (std::uint32_t n = 0; n <= 14; ++n) {
            if (!p.stable(n) || p.r(n) != expected[n]) return false;
        }
        return true;
    });

    criterion(2, "rank-9 representation matches brute force for n <= 200", [] {
        const LinearRepresentation rep = thue_morse_r_rep();
        const ComplexityProfile p =
            profile(builtin_spec("thue_morse"), PrefixBudget{12800, 2}, 200);
        for (std::uint32_t n = 0; n <= 200; ++n) {
            if (!p.stable(n)) return false;
            if (linrep_eval(rep, n) != Rational(p.r(n))) return false;
        }
        return true;
    });

    criterion(3, "thue_morse doubling relations for n <= 128", [] {
        return check_passes("TM_RELATION", CheckParams{128, {}});
    });

    criterion(4, "Sturmian value profile; fibonacci r(6) = 4", [] {
        if (!check_passes("STURMIAN_VALUE", CheckParams{100, {}})) return false;
        const ComplexityProfile p =
            profile(builtin_spec("fibonacci"), PrefixBudget{4096, 2}, 6);
        return p.r(6) == 4 && p.r(5) == 4;
    });

    criterion(5, "tribonacci r(n) = 2 floor((n+1)/2) + 1 for n <= 100", [] {
        return check_passes("EPISTURMIAN_VALUE", CheckParams{100, {}});
    });

    criterion(6, "rote word from the fibonacci directive: r(n) = n + 1, closed", [] {
        return check_passes("ROTE_VALUE", CheckParams{60, {}});
    });

    criterion(7, "period_doubling odd and even relations up to half-range 64", [] {
        return check_passes("PD_RELATION", CheckParams{130, {}});
    });

    criterion(8, "no reflected length-14 factor in any of the 128 unfoldings", [] {
        const CheckReport report = run_check("PF_NO_REFLECT");
        return report.verdict == Verdict::pass &&
               report.details["per_word_factor_count"] == 56;
    });

    criterion(9, "golay_shapiro values across six streams from 2408-prefixes", [] {
        return check_passes("GS_VALUES", CheckParams{61, PrefixBudget{2408, 2}});
    });

    criterion(10, "baum_sweet complexity tables and bounded differences to 1000", [] {
        return check_passes("BS_VALUES", CheckParams{1001, {}});
    });

    criterion(11, "chacon complexity values and equality from 13 on", [] {
        return check_passes("CHACON", CheckParams{40, {}});
    });

    criterion(12, "alternating formula for the a039982 word, n <= 60", [] {
        return check_passes("A039982_VALUE", CheckParams{60, {}});
    });

    criterion(13, "inequality suite across the whole catalog, n <= 60", [] {
        return check_passes("PAL_DIFF_BOUND", CheckParams{60, {}});
    });

    criterion(14, "graph suite: fused graphs carry the class counts, n <= 20", [] {
        for (const char* name : {"thue_morse", "fibonacci", "baum_sweet"}) {
            const SequenceSpec spec = builtin_spec(name);
            const Word text = prefix(spec, 8192);
            const ComplexityProfile p = profile(spec, PrefixBudget{8192, 2}, 21);
            for (std::uint32_t n = 1; n <= 20; ++n) {
                if (!p.stable(n) || !p.stable(n + 1)) return false;
                const FactorGraph gamma =
                    build_gamma(factor_set(text, n), factor_set(text, n + 1));
                const FactorGraph lambda = build_lambda(gamma);
                const FactorGraph k = build_k(lambda);
                if (gamma.vertices.size() != p.rho(n)) return false;
                if (gamma.edges.size() != p.rho(n + 1)) return false;
                if (lambda.vertices.size() != p.r(n)) return false;
                if (lambda.edges.size() != p.rho(n + 1)) return false;
                if (k.vertices.size() != p.r(n)) return false;
                if (k.edges.size() != p.r(n + 1)) return false;
                if (!is_connected(k)) return false;
            }
        }
        return true;
    });

    criterion(15, "rich identity on fibonacci/tribonacci; thue_morse breaks at 3", [] {
        const CheckReport report = run_check("RICH_CHAR", CheckParams{50, {}});
        return report.verdict == Verdict::pass &&
               report.details["thue_morse_first_break"] == 3;
    });

    criterion(16, "t3 equality r = rho for 3 <= n <= 60", [] {
        return check_passes("T3_EQUALITY", CheckParams{60, {}});
    });

    criterion(17, "periodic words: parity tails constant, witnesses 2 and 3", [] {
        const CheckReport report = run_check("MH_ANALOG", CheckParams{40, {}});
        if (report.verdict != Verdict::pass) return false;
        const auto& tails = report.details["parity_tails"];
        return tails["periodic_01"]["witness"] == 2 &&
               tails["periodic_011"]["witness"] == 3 &&
               tails["periodic_01"]["tails_equal"] == false &&
               tails["periodic_011"]["tails_equal"] == true;
    });

    if (failures == 0) {
        std::cout << "all 17 criteria hold\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
