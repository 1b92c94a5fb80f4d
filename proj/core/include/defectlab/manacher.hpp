#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "defectlab/word.hpp"

namespace defectlab {

/// Maximal palindrome radii for every center; answers "is w[l, l+len) a
/// palindrome" in O(1) after an O(n) build.
class Manacher {
public:
    explicit Manacher(std::span<const Symbol> s);

    bool is_palindrome(std::size_t pos, std::size_t len) const;
    /// Length of the longest palindromic suffix of the whole input.
    std::size_t longest_palindromic_suffix() const;

private:
    std::size_t n_;
    std::vector<std::int32_t> odd_;   // radius incl. center
    std::vector<std::int32_t> even_;  // radius, center between i-1 and i
};

}  // namespace defectlab
