#pragma once

#include <cstdint>
#include <vector>

#include "defectlab/generate.hpp"
#include "defectlab/word.hpp"

namespace defectlab {

/// Defect profile of a finite word. defect = |w| + 1 - #distinct palindromic
/// factors (empty word included); equals the number of lazy prefixes, i.e.
/// prefixes whose longest palindromic suffix is not unioccurrent.
struct DefectReport {
    std::int64_t defect = 0;
    /// per_prefix[n-1] = defect of the length-n prefix; non-decreasing.
    std::vector<std::int32_t> per_prefix;
    /// Least prefix length at which the final value is attained.
    std::int64_t saturation_length = 0;
    std::vector<std::int32_t> lazy_prefixes;
};

/// Defect evaluated on a schedule of growing prefixes of a generated word.
struct WindowedDefectReport {
    std::vector<std::int64_t> schedule;
    std::vector<std::int64_t> defects;
    std::int64_t final_defect = 0;
    /// Last two scheduled prefixes agree.
    bool stabilized = false;
    /// Strictly increasing across the whole schedule; an infinite defect can
    /// never be certified from a window, this marker is the honest signal.
    bool infinite_suspected = false;
    std::int64_t saturation_length = 0;
};

/// Palindromic tree (eertree) over a word: every distinct palindromic factor,
/// per-prefix longest palindromic suffixes and palindrome counts.
/// Construction is O(n * alphabet); queries never mutate.
class PalindromeIndex {
public:
    explicit PalindromeIndex(const Word& w);

    const Word& source() const noexcept { return source_; }

    /// Number of distinct non-empty palindromic factors.
    std::int64_t distinct_palindromes() const noexcept { return node_count_ - 2; }
    /// Distinct non-empty palindromic factors of the length-n prefix.
    std::int32_t palcount_at(std::int64_t prefix_len) const;

    /// Longest palindromic suffix of the length-n prefix (n >= 1).
    Word lps(std::int64_t prefix_len) const;
    /// (start, length) of the lps of the length-n prefix.
    std::pair<std::int32_t, std::int32_t> lps_span(std::int64_t prefix_len) const;
    /// True iff the lps of the length-n prefix occurs exactly once in it.
    bool lps_unioccurrent(std::int64_t prefix_len) const;

    struct Entry {
        std::int32_t start = 0;  // first occurrence
        std::int32_t length = 0;
        std::int64_t occurrences = 0;
    };
    /// Distinct palindromic factors in creation (first-occurrence) order.
    const std::vector<Entry>& registry() const noexcept { return registry_; }
    Word palindrome(std::size_t registry_id) const;

    /// P(n) for 0 <= n <= n_max; P(0) = 1 counts the empty word.
    std::vector<std::int64_t> palindromic_complexity(std::int64_t n_max) const;

    /// End positions of every occurrence, per registry entry, ascending.
    /// Costs O(total palindrome occurrences); call only on bounded windows.
    std::vector<std::vector<std::int32_t>> occurrence_ends() const;

    DefectReport defect_report() const;

private:
    struct Node {
        std::int32_t len;
        std::int32_t slink;
        std::int32_t first_end;
        std::vector<std::pair<Symbol, std::int32_t>> next;
    };
    std::int32_t transition(std::int32_t v, Symbol c) const;
    std::int32_t extend_link(std::int32_t v, std::int64_t pos) const;

    Word source_;
    std::vector<Node> nodes_;
    std::int64_t node_count_ = 2;
    std::vector<std::int32_t> lps_node_;     // per position
    std::vector<bool> created_;              // per position: new palindrome here
    std::vector<std::int32_t> palcount_;     // per position, cumulative
    std::vector<Entry> registry_;
};

PalindromeIndex build_index(const Word& w);

DefectReport defect(const Word& w);
std::vector<std::int64_t> palindromic_complexity(const Word& w, std::int64_t n_max);
bool is_rich(const Word& w);

/// Least H such that every prefix of length >= H has a unioccurrent longest
/// palindromic suffix; 0 when the word is rich. A window estimate.
std::int64_t estimate_H(const Word& w);
std::int64_t estimate_H(const PalindromeIndex& idx);

WindowedDefectReport windowed_defect(const WordSpec& spec, std::vector<std::int64_t> schedule,
                                     std::int64_t budget = kDefaultBudget);
WindowedDefectReport windowed_defect(const Word& w, std::vector<std::int64_t> schedule);

}  // namespace defectlab
