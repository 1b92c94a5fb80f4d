#include "defectlab/factor_index.hpp"

#include <algorithm>
#include <cstring>

#include "defectlab/palindrome_index.hpp"
#include "defectlab/returns.hpp"
#include "defectlab/search.hpp"

namespace defectlab {

FactorIndex::FactorIndex(const Word& w, std::int64_t n_max) : source_(w), n_max_(n_max) {
    const auto n = static_cast<std::int64_t>(w.size());
    if (n_max < 0 || n_max > n) throw error(errc::out_of_range, "factor length bound out of range");
    if (w.alphabet()->size() > 64)
        throw error(errc::invalid_argument, "factor index supports alphabets up to 64 letters");

    maps_.resize(static_cast<std::size_t>(n_max) + 1);
    entries_.resize(static_cast<std::size_t>(n_max) + 1);

    const Symbol* base = w.symbols().data();
    // the empty factor occurs at every boundary
    {
        Entry eps;
        eps.first_pos = 0;
        eps.occurrences = n + 1;
        eps.interior = n > 0 ? n - 1 : 0;
        for (std::int64_t i = 0; i < n; ++i) {
            eps.left_mask |= 1ull << w[static_cast<std::size_t>(i)];   // w[i] eps at i+1
            eps.right_mask |= 1ull << w[static_cast<std::size_t>(i)];  // eps at i, w[i]
        }
        entries_[0].push_back(eps);
    }
    for (std::int64_t len = 1; len <= n_max; ++len) {
        auto& map = maps_[static_cast<std::size_t>(len)];
        auto& ents = entries_[static_cast<std::size_t>(len)];
        for (std::int64_t pos = 0; pos + len <= n; ++pos) {
            detail::SpanKey key{base + pos, static_cast<std::int32_t>(len)};
            auto [it, inserted] = map.emplace(key, ents.size());
            if (inserted) {
                Entry e;
                e.first_pos = static_cast<std::int32_t>(pos);
                ents.push_back(e);
            }
            Entry& e = ents[it->second];
            e.occurrences += 1;
            const bool has_left = pos > 0;
            const bool has_right = pos + len < n;
            if (has_left) e.left_mask |= 1ull << w[static_cast<std::size_t>(pos - 1)];
            if (has_right) e.right_mask |= 1ull << w[static_cast<std::size_t>(pos + len)];
            if (has_left && has_right) e.interior += 1;
        }
    }
}

std::int64_t FactorIndex::count(std::int64_t n) const {
    if (n < 0 || n > n_max_) throw error(errc::out_of_range, "factor length out of range");
    return static_cast<std::int64_t>(entries_[static_cast<std::size_t>(n)].size());
}

const std::vector<FactorIndex::Entry>& FactorIndex::entries(std::int64_t n) const {
    if (n < 0 || n > n_max_) throw error(errc::out_of_range, "factor length out of range");
    return entries_[static_cast<std::size_t>(n)];
}

Word FactorIndex::factor(std::int64_t n, std::size_t id) const {
    const Entry& e = entries(n).at(id);
    return source_.sub(static_cast<std::size_t>(e.first_pos), static_cast<std::size_t>(n));
}

const FactorIndex::Entry* FactorIndex::find(std::span<const Symbol> f) const {
    const auto len = static_cast<std::int64_t>(f.size());
    if (len < 0 || len > n_max_) throw error(errc::out_of_range, "factor length out of range");
    if (len == 0) return &entries_[0][0];
    const auto& map = maps_[static_cast<std::size_t>(len)];
    auto it = map.find(detail::SpanKey{f.data(), static_cast<std::int32_t>(len)});
    if (it == map.end()) return nullptr;
    return &entries_[static_cast<std::size_t>(len)][it->second];
}

std::vector<std::int64_t> factor_complexity(const Word& w, std::int64_t n_max) {
    FactorIndex idx(w, n_max);
    std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) c[static_cast<std::size_t>(n)] = idx.count(n);
    return c;
}

namespace {

std::vector<Symbol> mask_letters(std::uint64_t mask) {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < 64; ++s)
        if (mask & (1ull << s)) out.push_back(s);
    return out;
}

}  // namespace

SpecialFactorReport special_report(const Word& w, const Word& f) {
    const auto occ = find_occurrences(w, f);
    if (occ.empty()) throw error(errc::not_a_factor, "factor does not occur in the window");
    const auto n = static_cast<std::int64_t>(w.size());
    const auto m = static_cast<std::int64_t>(f.size());

    SpecialFactorReport rep;
    rep.factor = f;
    std::uint64_t left = 0, right = 0;
    std::uint64_t pair_seen[64] = {};  // per left letter, mask of right letters
    std::uint64_t pext = 0;
    bool any_interior = false;
    for (std::int32_t pos : occ) {
        const bool has_left = pos > 0;
        const bool has_right = pos + m < n;
        if (has_left) left |= 1ull << w[static_cast<std::size_t>(pos - 1)];
        if (has_right) right |= 1ull << w[static_cast<std::size_t>(pos + m)];
        if (has_left && has_right) {
            any_interior = true;
            const Symbol a = w[static_cast<std::size_t>(pos - 1)];
            const Symbol b = w[static_cast<std::size_t>(pos + m)];
            pair_seen[a] |= 1ull << b;
            if (a == b) pext |= 1ull << a;
        }
    }
    rep.left_extensions = mask_letters(left);
    rep.right_extensions = mask_letters(right);
    rep.left_special = rep.left_extensions.size() >= 2;
    rep.right_special = rep.right_extensions.size() >= 2;
    rep.bispecial = rep.left_special && rep.right_special;
    if (any_interior) {
        std::int64_t pairs = 0;
        for (int a = 0; a < 64; ++a) pairs += __builtin_popcountll(pair_seen[a]);
        rep.bilateral_order = pairs - static_cast<std::int64_t>(rep.left_extensions.size()) -
                              static_cast<std::int64_t>(rep.right_extensions.size()) + 1;
    }
    if (f.is_palindrome()) rep.palindromic_extensions = mask_letters(pext);
    return rep;
}

Eq1Profile eq1_profile(const Word& w, std::int64_t n_max) {
    if (n_max < 0 || n_max + 1 > static_cast<std::int64_t>(w.size()))
        throw error(errc::out_of_range, "eq1 profile bound out of range");
    FactorIndex fi(w, n_max + 1);
    PalindromeIndex pi(w);
    const auto p = pi.palindromic_complexity(n_max + 1);

    Eq1Profile out;
    out.residuals.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::int64_t r = fi.count(n + 1) - fi.count(n) + 2 - p[static_cast<std::size_t>(n)] -
                               p[static_cast<std::size_t>(n + 1)];
        out.residuals.push_back({n, r});
    }
    // trust the window for length n while its own recurrence estimate at n+1
    // still fits in half the window
    const auto rec = recurrence_function(w, std::min<std::int64_t>(
                                                n_max + 1, static_cast<std::int64_t>(w.size()) - 1));
    out.trusted_n = -1;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n + 1 >= static_cast<std::int64_t>(rec.r.size())) break;
        if (rec.r[static_cast<std::size_t>(n + 1)] * 2 <= static_cast<std::int64_t>(w.size()))
            out.trusted_n = n;
        else
            break;
    }
    return out;
}

std::optional<std::int64_t> find_N(const Word& w, std::int64_t n_max) {
    const auto prof = eq1_profile(w, n_max);
    std::int64_t first_bad_from_top = -1;
    for (std::int64_t n = n_max; n >= 0; --n) {
        if (prof.residuals[static_cast<std::size_t>(n)].residual != 0) {
            first_bad_from_top = n;
            break;
        }
    }
    const std::int64_t N = first_bad_from_top + 1;
    const std::int64_t run = n_max - N + 1;
    if (run < std::max<std::int64_t>(8, n_max / 4)) return std::nullopt;
    return N;
}

RichnessBispecialReport richness_via_bispecials(const Word& w, std::int64_t n_max) {
    RichnessBispecialReport rep;
    rep.n_max = n_max;
    FactorIndex fi(w, std::min<std::int64_t>(n_max, static_cast<std::int64_t>(w.size())));
    for (std::int64_t n = 0; n <= fi.n_max(); ++n) {
        const auto& ents = fi.entries(n);
        for (std::size_t id = 0; id < ents.size(); ++id) {
            if (!ents[id].bispecial()) continue;
            const Word f = fi.factor(n, id);
            const auto sp = special_report(w, f);
            if (!sp.bilateral_order) continue;  // boundary-only, no evidence
            const bool pal = f.is_palindrome();
            const std::int64_t b = *sp.bilateral_order;
            const std::int64_t pext =
                sp.palindromic_extensions
                    ? static_cast<std::int64_t>(sp.palindromic_extensions->size())
                    : 0;
            const bool ok = pal ? (b == pext - 1) : (b == 0);
            if (!ok) {
                rep.pass = false;
                rep.offenders.push_back({f, pal, b, pext});
            }
        }
    }
    return rep;
}

std::vector<Word> reversal_closure_check(const Word& w, std::int64_t n_max) {
    std::vector<Word> unmatched;
    FactorIndex fi(w, std::min<std::int64_t>(n_max, static_cast<std::int64_t>(w.size())));
    std::vector<Symbol> rev;
    for (std::int64_t n = 1; n <= fi.n_max(); ++n) {
        const auto& ents = fi.entries(n);
        for (std::size_t id = 0; id < ents.size(); ++id) {
            const Word f = fi.factor(n, id);
            rev.assign(f.symbols().rbegin(), f.symbols().rend());
            if (!fi.contains(rev)) unmatched.push_back(f);
        }
    }
    return unmatched;
}

}  // namespace defectlab
