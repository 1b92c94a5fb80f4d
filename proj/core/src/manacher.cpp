#include "defectlab/manacher.hpp"

#include <algorithm>

namespace defectlab {

Manacher::Manacher(std::span<const Symbol> s) : n_(s.size()), odd_(n_), even_(n_) {
    const auto n = static_cast<std::int64_t>(n_);
    for (std::int64_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::int64_t k = (i > r) ? 1 : std::min<std::int64_t>(odd_[static_cast<std::size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)]) ++k;
        odd_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(k);
        if (i + k - 1 > r) { l = i - k + 1; r = i + k - 1; }
    }
    for (std::int64_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::int64_t k = (i > r) ? 0 : std::min<std::int64_t>(even_[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n && s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)]) ++k;
        even_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(k);
        if (i + k - 1 > r) { l = i - k; r = i + k - 1; }
    }
}

bool Manacher::is_palindrome(std::size_t pos, std::size_t len) const {
    if (len <= 1) return pos + len <= n_;
    if (pos + len > n_) return false;
    if (len % 2 == 1) {
        std::size_t c = pos + len / 2;
        return odd_[c] >= static_cast<std::int32_t>(len / 2 + 1);
    }
    std::size_t c = pos + len / 2;
    return even_[c] >= static_cast<std::int32_t>(len / 2);
}

std::size_t Manacher::longest_palindromic_suffix() const {
    std::size_t best = n_ > 0 ? 1 : 0;
    for (std::size_t c = 0; c < n_; ++c) {
        if (c + static_cast<std::size_t>(odd_[c]) == n_) best = std::max(best, 2 * (n_ - c) - 1);
        if (c + static_cast<std::size_t>(even_[c]) == n_) best = std::max(best, 2 * (n_ - c));
    }
    return best;
}

}  // namespace defectlab
