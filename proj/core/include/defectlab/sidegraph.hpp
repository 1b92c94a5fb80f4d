#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "defectlab/word.hpp"

namespace defectlab {

/// Unordered pair {w, reverse(w)} represented by its lexicographically
/// smaller member.
struct ReversalClass {
    Word representative;
    bool palindromic = false;
};

/// A maximal run between two consecutive special-factor occurrences: a factor
/// of length >= n+1 whose only special length-n factors are its prefix and
/// suffix. Stored canonically (lex-min of path and its reversal).
struct SimplePathEdge {
    Word path;
    std::int32_t u = 0;  // vertex indices
    std::int32_t v = 0;
    bool loop = false;
    bool palindrome = false;
    std::int64_t window_occurrences = 0;
};

/// Graph on reversal classes of special length-n factors, connected by
/// reversal classes of n-simple paths. Multiple edges and loops allowed.
struct SideGraph {
    std::int32_t n = 0;
    std::vector<ReversalClass> vertices;
    std::vector<SimplePathEdge> edges;  // distinct path classes
    /// No special factor of length n in the window (periodic tails).
    bool no_specials = false;
    bool tree = false;
    bool palindromic_loops = false;
};

/// Sweeps the window once, left to right, emitting one path per consecutive
/// pair of special occurrences; partial paths at the window edges are dropped.
SideGraph build_sidegraph(const Word& w, std::int32_t n);

/// (tree after removing loops, every loop path palindromic).
std::pair<bool, bool> lemma_tree_verdict(const SideGraph& g);

void export_dot(const SideGraph& g, std::ostream& os);

}  // namespace defectlab
