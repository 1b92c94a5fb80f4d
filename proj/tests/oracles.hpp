// Brute-force reference implementations used only by tests. Everything here
// is deliberately naive; expected values in the suites are frozen from (or
// checked against) these.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string rev(std::string w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline bool is_pal(const std::string& w) { return w == rev(w); }

inline std::set<std::string> palindromic_factors(const std::string& w) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t l = 1; i + l <= w.size(); ++l) {
            std::string f = w.substr(i, l);
            if (is_pal(f)) out.insert(std::move(f));
        }
    return out;
}

inline std::vector<long> per_prefix_palcount(const std::string& w) {
    std::vector<long> out;
    for (std::size_t n = 1; n <= w.size(); ++n)
        out.push_back(static_cast<long>(palindromic_factors(w.substr(0, n)).size()));
    return out;
}

inline long defect(const std::string& w) {
    return static_cast<long>(w.size()) - static_cast<long>(palindromic_factors(w).size());
}

inline std::string lps(const std::string& w) {
    for (std::size_t l = w.size(); l >= 1; --l) {
        std::string s = w.substr(w.size() - l);
        if (is_pal(s)) return s;
    }
    return "";
}

// shortest palindrome with prefix w: for each candidate length the mirror
// constraints determine the extension symbols, so just look for the first
// length without a contradiction
inline std::string closure(const std::string& w) {
    if (is_pal(w)) return w;
    for (std::size_t total = w.size() + 1; total < 2 * w.size(); ++total) {
        std::string t = w;
        t.resize(total, '?');
        bool ok = true;
        for (std::size_t i = 0, j = total; i < j && ok; ++i, --j) {
            if (t[i] == '?') t[i] = t[j - 1];
            else if (t[j - 1] == '?') t[j - 1] = t[i];
            else if (t[i] != t[j - 1]) ok = false;
        }
        if (ok) return t;
    }
    return w + rev(w).substr(1);  // length 2|w|-1 always works
}

inline std::vector<long> occurrences(const std::string& w, const std::string& f) {
    std::vector<long> out;
    if (f.empty()) {
        for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(static_cast<long>(i));
        return out;
    }
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
        if (w.compare(i, f.size(), f) == 0) out.push_back(static_cast<long>(i));
    return out;
}

// complete returns with multiplicity, sorted
inline std::vector<std::string> complete_returns(const std::string& w, const std::string& f) {
    std::vector<std::string> out;
    const auto occ = occurrences(w, f);
    for (std::size_t i = 0; i + 1 < occ.size(); ++i)
        out.push_back(w.substr(static_cast<std::size_t>(occ[i]),
                               static_cast<std::size_t>(occ[i + 1] - occ[i]) + f.size()));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    if (n == 0) { out.insert(""); return out; }
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

inline long prefix_H(const std::string& w) {
    long last_bad = 0;
    for (std::size_t n = 1; n <= w.size(); ++n) {
        const std::string pre = w.substr(0, n);
        if (occurrences(pre, lps(pre)).size() > 1) last_bad = static_cast<long>(n);
    }
    return last_bad == 0 ? 0 : last_bad + 1;
}

inline long K(const std::string& w) {
    long worst = 0;
    for (const auto& p : palindromic_factors(w))
        for (const auto& r : complete_returns(w, p))
            if (!is_pal(r)) worst = std::max(worst, static_cast<long>(p.size()));
    return worst == 0 ? 0 : worst + 1;
}

inline std::set<std::pair<std::string, std::string>> oddity_pairs(const std::string& w) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : palindromic_factors(w))
        for (const auto& r : complete_returns(w, p))
            if (!is_pal(r)) out.emplace(std::min(r, rev(r)), std::max(r, rev(r)));
    return out;
}

inline std::string random_word(std::mt19937& rng, std::size_t len, int sigma) {
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w += static_cast<char>('a' + d(rng));
    return w;
}

}  // namespace oracle
