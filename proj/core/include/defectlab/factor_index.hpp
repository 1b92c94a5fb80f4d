#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "defectlab/detail/span_map.hpp"
#include "defectlab/word.hpp"

namespace defectlab {

/// Distinct factors of each length up to a bound, with occurrence counts and
/// the left/right extension letters observed at interior occurrences.
/// A boundary occurrence (no neighbor on the needed side) contributes no
/// extension. Alphabets up to 64 letters.
class FactorIndex {
public:
    FactorIndex(const Word& w, std::int64_t n_max);
    FactorIndex(const FactorIndex&) = delete;
    FactorIndex& operator=(const FactorIndex&) = delete;

    const Word& source() const noexcept { return source_; }
    std::int64_t n_max() const noexcept { return n_max_; }

    struct Entry {
        std::int32_t first_pos = 0;
        std::int64_t occurrences = 0;
        std::int64_t interior = 0;  // occurrences with both neighbors present
        std::uint64_t left_mask = 0;
        std::uint64_t right_mask = 0;

        bool left_special() const noexcept { return __builtin_popcountll(left_mask) >= 2; }
        bool right_special() const noexcept { return __builtin_popcountll(right_mask) >= 2; }
        bool bispecial() const noexcept { return left_special() && right_special(); }
    };

    /// C(n): number of distinct factors of length n; C(0) = 1.
    std::int64_t count(std::int64_t n) const;
    const std::vector<Entry>& entries(std::int64_t n) const;
    Word factor(std::int64_t n, std::size_t id) const;
    const Entry* find(std::span<const Symbol> f) const;
    bool contains(std::span<const Symbol> f) const { return find(f) != nullptr; }

private:
    Word source_;
    std::int64_t n_max_;
    std::vector<detail::SpanMap<std::size_t>> maps_;  // per length 1..n_max
    std::vector<std::vector<Entry>> entries_;         // per length 0..n_max
};

std::vector<std::int64_t> factor_complexity(const Word& w, std::int64_t n_max);

struct SpecialFactorReport {
    Word factor;
    std::vector<Symbol> left_extensions;
    std::vector<Symbol> right_extensions;
    bool left_special = false;
    bool right_special = false;
    bool bispecial = false;
    /// #awb - #aw - #wb + 1; unset when no occurrence has both neighbors.
    std::optional<std::int64_t> bilateral_order;
    /// Letters a with a.f.a in the window; set only for palindromic f.
    std::optional<std::vector<Symbol>> palindromic_extensions;
};

SpecialFactorReport special_report(const Word& w, const Word& f);

struct EqualityResidual {
    std::int64_t n = 0;
    /// C(n+1) - C(n) + 2 - P(n) - P(n+1).
    std::int64_t residual = 0;
};

struct Eq1Profile {
    std::vector<EqualityResidual> residuals;
    /// Largest n whose counts the window can be trusted for (recurrence-based);
    /// -1 when not even n = 0 qualifies.
    std::int64_t trusted_n = -1;
};

Eq1Profile eq1_profile(const Word& w, std::int64_t n_max);

/// Least N <= n_max with residual(n) = 0 for all N <= n <= n_max, provided the
/// zero run is at least max(8, n_max/4) long; nullopt otherwise.
std::optional<std::int64_t> find_N(const Word& w, std::int64_t n_max);

struct BispecialOffender {
    Word factor;
    bool palindromic = false;
    std::int64_t bilateral_order = 0;
    std::int64_t pext_count = 0;
};

struct RichnessBispecialReport {
    bool pass = true;
    std::vector<BispecialOffender> offenders;
    std::int64_t n_max = 0;
};

/// Checks every bispecial factor of length <= n_max against the richness
/// conditions: b(w) = 0 when non-palindromic, b(w) = #Pext(w) - 1 otherwise.
RichnessBispecialReport richness_via_bispecials(const Word& w, std::int64_t n_max);

/// Factors of length <= n_max whose reversal does not occur in w.
std::vector<Word> reversal_closure_check(const Word& w, std::int64_t n_max);

}  // namespace defectlab
