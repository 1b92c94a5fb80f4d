#pragma once

#include <cstdint>
#include <vector>

#include "defectlab/word.hpp"

namespace defectlab {

struct OccurrenceList {
    Word factor;
    std::vector<std::int32_t> positions;  // strictly increasing starts
};

/// All start offsets of f in w, overlaps allowed. The empty factor occurs at
/// every boundary (|w| + 1 positions).
OccurrenceList occurrences(const Word& w, const Word& f);

struct CompleteReturn {
    Word word;
    std::int64_t multiplicity = 0;
    bool palindrome = false;
};

struct ReturnReport {
    Word factor;
    /// Distinct complete returns in lexicographic order.
    std::vector<CompleteReturn> complete_returns;
    /// The same with the trailing factor copy removed.
    std::vector<Word> return_words;
    /// The window ends inside a pending return (a final occurrence with no
    /// successor); that partial return is not emitted.
    bool censored_tail = false;
};

/// Complete returns of f: one per adjacent occurrence pair, from the first
/// occurrence through the end of the second.
ReturnReport complete_returns(const Word& w, const Word& f);

struct OddityPair {
    Word canonical;  // lexicographically smaller of {v, reverse(v)}
    Word reversed;
    Word witness_palindrome;
};

struct OdditySet {
    std::vector<OddityPair> pairs;  // deduplicated as unordered pairs
    std::int64_t p_max = 0;
    std::int64_t palindromes_scanned = 0;
};

/// Non-palindromic complete returns of palindromic factors of length <= p_max
/// (p_max <= 0 scans every palindrome), as unordered reversal pairs.
OdditySet oddities(const Word& w, std::int64_t p_max = 0);

/// Least K such that every observed complete return of every palindromic
/// factor of length >= K is a palindrome; 0 when all returns are palindromic.
/// A window estimate.
std::int64_t estimate_K(const Word& w);

struct RecurrenceProfile {
    /// r[n] = least L such that every length-L window of the source contains
    /// every observed factor of length n; a window estimate.
    std::vector<std::int64_t> r;
    std::int64_t k_estimate = 0;
};

RecurrenceProfile recurrence_function(const Word& w, std::int64_t n_max);

struct AlternationVerdict {
    bool alternating = false;      // f and reverse(f) interleave strictly
    bool gaps_palindromic = false; // every f..reverse(f) gap factor is a palindrome
    bool ok = false;
};

/// Checks that occurrences of a non-palindromic f alternate with those of its
/// reversal, and that the minimal bridging factors are palindromes.
AlternationVerdict alternation_check(const Word& w, const Word& f);

struct PeriodicSplit {
    bool finite_defect = false;
    Word p, q;  // witness split, period = p.q with both palindromic
};

/// Finite-defect criterion for (period)^omega: some split of the minimal
/// period into two palindromes exists. Rejects non-minimal periods.
PeriodicSplit periodic_defect_criterion(const Word& period);

}  // namespace defectlab
