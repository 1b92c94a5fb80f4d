#include "defectlab/search.hpp"

namespace defectlab {

std::vector<std::int32_t> find_occurrences(std::span<const Symbol> hay,
                                           std::span<const Symbol> needle) {
    std::vector<std::int32_t> out;
    const std::size_t n = hay.size(), m = needle.size();
    if (m == 0) {
        out.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) out.push_back(static_cast<std::int32_t>(i));
        return out;
    }
    if (m > n) return out;
    std::vector<std::int32_t> fail(m, 0);
    for (std::size_t i = 1, k = 0; i < m; ++i) {
        while (k > 0 && needle[i] != needle[k]) k = static_cast<std::size_t>(fail[k - 1]);
        if (needle[i] == needle[k]) ++k;
        fail[i] = static_cast<std::int32_t>(k);
    }
    for (std::size_t i = 0, k = 0; i < n; ++i) {
        while (k > 0 && hay[i] != needle[k]) k = static_cast<std::size_t>(fail[k - 1]);
        if (hay[i] == needle[k]) ++k;
        if (k == m) {
            out.push_back(static_cast<std::int32_t>(i + 1 - m));
            k = static_cast<std::size_t>(fail[k - 1]);
        }
    }
    return out;
}

std::vector<std::int32_t> find_occurrences(const Word& w, const Word& f) {
    if (compatible(w.alphabet(), f.alphabet()))
        return find_occurrences(w.symbols(), f.symbols());
    std::vector<Symbol> mapped;
    mapped.reserve(f.size());
    for (Symbol s : f.symbols()) {
        auto t = w.alphabet()->find(f.alphabet()->token(s));
        if (!t) return {};
        mapped.push_back(*t);
    }
    return find_occurrences(w.symbols(), mapped);
}

}  // namespace defectlab
