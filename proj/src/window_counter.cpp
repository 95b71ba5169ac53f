#include "window_counter.hpp"

#include <cstring>
#include <string>

#include "reflecto/errors.hpp"

namespace reflecto::detail {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 0x2545F4914F6CDD1Dull % kMod;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    __uint128_t t = static_cast<__uint128_t>(a) * b;
    std::uint64_t s = (static_cast<std::uint64_t>(t) & kMod) +
                      static_cast<std::uint64_t>(t >> 61);
    s = (s & kMod) + (s >> 61);
    return s >= kMod ? s - kMod : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kMod - b;
}

std::uint64_t bucket_of(std::uint64_t hash) {
    // Fibonacci scrambling; the polynomial hash is already well mixed in the
    // low bits but cheap extra scrambling avoids probe clustering.
    return hash * 0x9E3779B97F4A7C15ull >> 13;
}

}  // namespace

WindowCounter::WindowCounter(std::span<const Symbol> text) : text_(text) {
    const std::uint64_t n = text.size();
    powers_.resize(n + 1);
    forward_.resize(n + 1);
    backward_.resize(n + 1);
    powers_[0] = 1;
    forward_[0] = 0;
    backward_[0] = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        powers_[i + 1] = mulmod(powers_[i], kBase);
        std::uint64_t f = mulmod(forward_[i], kBase) + text_[i] + 1;
        forward_[i + 1] = f >= kMod ? f - kMod : f;
        std::uint64_t b = mulmod(backward_[i], kBase) + text_[n - 1 - i] + 1;
        backward_[i + 1] = b >= kMod ? b - kMod : b;
    }
    slots_.resize(std::uint64_t{1} << 12);
    mask_ = slots_.size() - 1;
}

std::uint64_t WindowCounter::window_hash(std::uint64_t pos,
                                         std::uint32_t n) const {
    return submod(forward_[pos + n], mulmod(forward_[pos], powers_[n]));
}

std::uint64_t WindowCounter::reverse_window_hash(std::uint64_t pos,
                                                 std::uint32_t n) const {
    // The reversal of text[pos, pos+n) sits at [L-pos-n, L-pos) in the
    // reversed text.
    const std::uint64_t L = text_.size();
    return submod(backward_[L - pos],
                  mulmod(backward_[L - pos - n], powers_[n]));
}

bool WindowCounter::window_equal(std::uint64_t a, std::uint64_t b,
                                 std::uint32_t n) const {
    return std::memcmp(text_.data() + a, text_.data() + b, n) == 0;
}

bool WindowCounter::window_equal_reversed(std::uint64_t a, std::uint64_t b,
                                          std::uint32_t n) const {
    // window at a == reversal of window at b
    for (std::uint32_t j = 0; j < n; ++j)
        if (text_[a + j] != text_[b + n - 1 - j]) return false;
    return true;
}

bool WindowCounter::find(std::uint64_t hash, std::uint64_t pos, std::uint32_t n,
                         bool reversed) const {
    for (std::uint64_t idx = bucket_of(hash) & mask_;;
         idx = (idx + 1) & mask_) {
        const Slot& slot = slots_[idx];
        if (slot.epoch != epoch_) return false;
        if (slot.hash == hash) {
            bool same = reversed ? window_equal_reversed(slot.pos, pos, n)
                                 : window_equal(slot.pos, pos, n);
            if (same) return true;
        }
    }
}

void WindowCounter::grow() {
    std::vector<Slot> bigger(slots_.size() * 2);
    const std::uint64_t mask = bigger.size() - 1;
    for (const Slot& slot : slots_) {
        if (slot.epoch != epoch_) continue;
        std::uint64_t idx = bucket_of(slot.hash) & mask;
        while (bigger[idx].epoch == epoch_) idx = (idx + 1) & mask;
        bigger[idx] = slot;
    }
    slots_ = std::move(bigger);
    mask_ = mask;
}

RawCounts WindowCounter::count(std::uint32_t n) {
    if (n == 0) return {1, 1, 1, 0, 1};
    if (n > text_.size())
        throw BudgetError("window length " + std::to_string(n) +
                          " exceeds prefix length " +
                          std::to_string(text_.size()));

    ++epoch_;
    firsts_.clear();
    const std::uint64_t windows = text_.size() - n + 1;

    for (std::uint64_t i = 0; i < windows; ++i) {
        const std::uint64_t hash = window_hash(i, n);
        std::uint64_t idx = bucket_of(hash) & mask_;
        for (;; idx = (idx + 1) & mask_) {
            Slot& slot = slots_[idx];
            if (slot.epoch != epoch_) {
                slot = {hash, static_cast<std::uint32_t>(i), epoch_};
                firsts_.push_back(static_cast<std::uint32_t>(i));
                if (firsts_.size() * 2 > slots_.size()) grow();
                break;
            }
            if (slot.hash == hash && window_equal(slot.pos, i, n)) break;
        }
    }

    RawCounts counts;
    counts.rho = firsts_.size();
    for (std::uint32_t pos : firsts_) {
        bool palindrome = true;
        for (std::uint32_t j = 0; j < n / 2; ++j) {
            if (text_[pos + j] != text_[pos + n - 1 - j]) {
                palindrome = false;
                break;
            }
        }
        if (palindrome) {
            ++counts.pal;
            ++counts.refl;
            ++counts.r;
            continue;
        }
        if (find(reverse_window_hash(pos, n), pos, n, /*reversed=*/true)) {
            ++counts.refl;
            // Count the two-element class once, at its smaller member.
            for (std::uint32_t j = 0; j < n; ++j) {
                if (text_[pos + j] != text_[pos + n - 1 - j]) {
                    if (text_[pos + j] < text_[pos + n - 1 - j]) ++counts.r;
                    break;
                }
            }
        } else {
            ++counts.r;
        }
    }
    counts.unr = counts.rho - counts.refl;

    if ((counts.refl - counts.pal) % 2 != 0)
        throw CorruptionError(
            "reflected minus palindromic count is odd at length " +
            std::to_string(n));
    if (counts.r != counts.unr + (counts.refl - counts.pal) / 2 + counts.pal)
        throw CorruptionError(
            "class count disagrees with the count identity at length " +
            std::to_string(n));
    return counts;
}

}  // namespace reflecto::detail
