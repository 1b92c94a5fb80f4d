#include "defectlab/returns.hpp"

#include <algorithm>
#include <map>

#include "defectlab/detail/span_map.hpp"
#include "defectlab/morphism.hpp"
#include "defectlab/manacher.hpp"
#include "defectlab/palindrome_index.hpp"
#include "defectlab/search.hpp"

namespace defectlab {

OccurrenceList occurrences(const Word& w, const Word& f) {
    return {f, find_occurrences(w, f)};
}

ReturnReport complete_returns(const Word& w, const Word& f) {
    if (f.is_empty())
        throw error(errc::invalid_argument, "complete returns need a non-empty factor");
    ReturnReport rep;
    rep.factor = f;
    try {
        rep.factor = translate(f, w.alphabet());
    } catch (const error&) {
        // a token w cannot express: no occurrences, factor echoed as given
    }
    const auto occ = find_occurrences(w, f);
    rep.censored_tail = !occ.empty();

    std::map<std::vector<Symbol>, std::int64_t> seen;  // lexicographic order
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        const auto from = static_cast<std::size_t>(occ[i]);
        const auto to = static_cast<std::size_t>(occ[i + 1]) + f.size();
        auto span = w.symbols().subspan(from, to - from);
        seen[std::vector<Symbol>(span.begin(), span.end())] += 1;
    }
    for (const auto& [syms, count] : seen) {
        Word v(w.alphabet(), syms);
        const bool pal = v.is_palindrome();
        rep.return_words.push_back(v.prefix(v.size() - f.size()));
        rep.complete_returns.push_back({std::move(v), count, pal});
    }
    return rep;
}

namespace {

struct Violation {
    std::int32_t pal_len;
    std::int32_t start;
    std::int32_t len;
    std::size_t registry_id;
};

// Non-palindromic complete returns of palindromic factors, every palindrome
// length, in deterministic (registry, position) order.
std::vector<Violation> return_violations(const PalindromeIndex& idx) {
    std::vector<Violation> out;
    const auto ends = idx.occurrence_ends();
    Manacher man(idx.source().symbols());
    const auto& reg = idx.registry();
    for (std::size_t id = 0; id < reg.size(); ++id) {
        const std::int32_t len = reg[id].length;
        const auto& e = ends[id];
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            const std::int32_t start = e[i] - len + 1;
            const std::int32_t rlen = e[i + 1] - e[i] + len;
            if (!man.is_palindrome(static_cast<std::size_t>(start),
                                   static_cast<std::size_t>(rlen)))
                out.push_back({len, start, rlen, id});
        }
    }
    return out;
}

}  // namespace

OdditySet oddities(const Word& w, std::int64_t p_max) {
    PalindromeIndex idx(w);
    OdditySet set;
    set.p_max = p_max;
    set.palindromes_scanned = 0;
    for (const auto& e : idx.registry())
        if (p_max <= 0 || e.length <= p_max) set.palindromes_scanned += 1;

    std::map<std::vector<Symbol>, OddityPair> pairs;
    for (const auto& v : return_violations(idx)) {
        if (p_max > 0 && v.pal_len > p_max) continue;
        Word ret = w.sub(static_cast<std::size_t>(v.start), static_cast<std::size_t>(v.len));
        Word rev = ret.reversed();
        const Word& canon = Word::lex_less(ret, rev) ? ret : rev;
        const Word& other = Word::lex_less(ret, rev) ? rev : ret;
        std::vector<Symbol> key(canon.symbols().begin(), canon.symbols().end());
        pairs.emplace(std::move(key), OddityPair{canon, other, idx.palindrome(v.registry_id)});
    }
    for (auto& [_, p] : pairs) set.pairs.push_back(std::move(p));
    return set;
}

std::int64_t estimate_K(const Word& w) {
    PalindromeIndex idx(w);
    std::int64_t last_violation = 0;
    for (const auto& v : return_violations(idx))
        last_violation = std::max<std::int64_t>(last_violation, v.pal_len);
    return last_violation == 0 ? 0 : last_violation + 1;
}

RecurrenceProfile recurrence_function(const Word& w, std::int64_t n_max) {
    const auto n = static_cast<std::int64_t>(w.size());
    if (n_max < 0 || n_max >= n)
        throw error(errc::out_of_range, "recurrence bound must be below the window length");
    RecurrenceProfile prof;
    prof.r.assign(static_cast<std::size_t>(n_max) + 1, 0);

    struct Track {
        std::int32_t prev;
        std::int64_t need;
    };
    const Symbol* base = w.symbols().data();
    for (std::int64_t len = 1; len <= n_max; ++len) {
        detail::SpanMap<Track> tracks;
        for (std::int64_t pos = 0; pos + len <= n; ++pos) {
            detail::SpanKey key{base + pos, static_cast<std::int32_t>(len)};
            auto [it, inserted] =
                tracks.try_emplace(key, Track{static_cast<std::int32_t>(pos), pos + len});
            if (!inserted) {
                it->second.need = std::max(it->second.need, pos - it->second.prev - 1 + len);
                it->second.prev = static_cast<std::int32_t>(pos);
            }
        }
        std::int64_t best = 0;
        for (const auto& [_, t] : tracks) best = std::max({best, t.need, n - t.prev});
        prof.r[static_cast<std::size_t>(len)] = best;
    }
    prof.k_estimate = estimate_K(w);
    return prof;
}

AlternationVerdict alternation_check(const Word& w, const Word& f) {
    if (f.is_palindrome())
        throw error(errc::invalid_argument, "alternation check needs a non-palindromic factor");
    const Word rev = f.reversed();
    const auto occ_f = find_occurrences(w, f);
    const auto occ_r = find_occurrences(w, rev);

    struct Hit {
        std::int32_t pos;
        bool is_f;
    };
    std::vector<Hit> merged;
    merged.reserve(occ_f.size() + occ_r.size());
    for (auto p : occ_f) merged.push_back({p, true});
    for (auto p : occ_r) merged.push_back({p, false});
    std::sort(merged.begin(), merged.end(),
              [](const Hit& a, const Hit& b) { return a.pos < b.pos; });

    AlternationVerdict verdict;
    verdict.alternating = true;
    verdict.gaps_palindromic = true;
    Manacher man(w.symbols());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].is_f == merged[i + 1].is_f) {
            verdict.alternating = false;
            continue;
        }
        const auto start = static_cast<std::size_t>(merged[i].pos);
        const auto len = static_cast<std::size_t>(merged[i + 1].pos) + f.size() - start;
        if (!man.is_palindrome(start, len)) verdict.gaps_palindromic = false;
    }
    verdict.ok = verdict.alternating && verdict.gaps_palindromic;
    return verdict;
}

PeriodicSplit periodic_defect_criterion(const Word& period) {
    const auto n = period.size();
    if (n == 0) throw error(errc::invalid_argument, "period must be non-empty");
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i)
            if (period[i] != period[i - d]) repeats = false;
        if (repeats)
            throw error(errc::invalid_argument,
                        "period is not minimal (repeats with period " + std::to_string(d) + ")");
    }
    Manacher man(period.symbols());
    for (std::size_t k = 0; k <= n; ++k) {
        if (man.is_palindrome(0, k) && man.is_palindrome(k, n - k))
            return {true, period.prefix(k), period.sub(k, n - k)};
    }
    return {false, Word::empty(period.alphabet()), Word::empty(period.alphabet())};
}

}  // namespace defectlab
