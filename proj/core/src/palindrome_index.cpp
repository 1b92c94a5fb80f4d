#include "defectlab/palindrome_index.hpp"

#include <algorithm>
#include <string>

namespace defectlab {

std::int32_t PalindromeIndex::transition(std::int32_t v, Symbol c) const {
    for (const auto& [sym, to] : nodes_[static_cast<std::size_t>(v)].next)
        if (sym == c) return to;
    return -1;
}

// Walk suffix links from v until s[pos - len(v) - 1] == s[pos].
std::int32_t PalindromeIndex::extend_link(std::int32_t v, std::int64_t pos) const {
    auto s = source_.symbols();
    for (;;) {
        const std::int64_t mirror = pos - nodes_[static_cast<std::size_t>(v)].len - 1;
        if (mirror >= 0 && s[static_cast<std::size_t>(mirror)] == s[static_cast<std::size_t>(pos)])
            return v;
        v = nodes_[static_cast<std::size_t>(v)].slink;
    }
}

PalindromeIndex::PalindromeIndex(const Word& w) : source_(w) {
    const std::size_t n = w.size();
    nodes_.reserve(n + 2);
    nodes_.push_back({-1, 0, -1, {}});  // imaginary root
    nodes_.push_back({0, 0, -1, {}});   // empty-word root
    lps_node_.resize(n);
    created_.resize(n);
    palcount_.resize(n);

    auto s = w.symbols();
    std::int32_t last = 1;
    std::int32_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol c = s[i];
        const std::int32_t v = extend_link(last, static_cast<std::int64_t>(i));
        std::int32_t to = transition(v, c);
        if (to < 0) {
            const std::int32_t len = nodes_[static_cast<std::size_t>(v)].len + 2;
            std::int32_t link;
            if (len == 1) {
                link = 1;
            } else {
                const std::int32_t u = extend_link(nodes_[static_cast<std::size_t>(v)].slink,
                                                   static_cast<std::int64_t>(i));
                link = transition(u, c);
                if (link < 0) throw error(errc::internal, "palindromic tree link missing");
            }
            to = static_cast<std::int32_t>(nodes_.size());
            nodes_.push_back({len, link, static_cast<std::int32_t>(i), {}});
            nodes_[static_cast<std::size_t>(v)].next.emplace_back(c, to);
            created_[i] = true;
            ++count;
        }
        last = to;
        lps_node_[i] = last;
        palcount_[i] = count;
    }
    node_count_ = static_cast<std::int64_t>(nodes_.size());

    registry_.resize(static_cast<std::size_t>(node_count_ - 2));
    for (std::int64_t id = 2; id < node_count_; ++id) {
        const Node& nd = nodes_[static_cast<std::size_t>(id)];
        registry_[static_cast<std::size_t>(id - 2)] = {nd.first_end - nd.len + 1, nd.len, 0};
    }
    // occurrence totals: count suffix-chain hits, then push along suffix links
    std::vector<std::int64_t> occ(nodes_.size(), 0);
    for (std::size_t i = 0; i < n; ++i) occ[static_cast<std::size_t>(lps_node_[i])] += 1;
    for (std::size_t id = nodes_.size(); id-- > 2;)
        occ[static_cast<std::size_t>(nodes_[id].slink)] += occ[id];
    for (std::int64_t id = 2; id < node_count_; ++id)
        registry_[static_cast<std::size_t>(id - 2)].occurrences = occ[static_cast<std::size_t>(id)];
}

std::int32_t PalindromeIndex::palcount_at(std::int64_t prefix_len) const {
    if (prefix_len < 0 || prefix_len > static_cast<std::int64_t>(source_.size()))
        throw error(errc::out_of_range, "prefix length out of range");
    if (prefix_len == 0) return 0;
    return palcount_[static_cast<std::size_t>(prefix_len - 1)];
}

std::pair<std::int32_t, std::int32_t> PalindromeIndex::lps_span(std::int64_t prefix_len) const {
    if (prefix_len < 1 || prefix_len > static_cast<std::int64_t>(source_.size()))
        throw error(errc::out_of_range, "prefix length out of range");
    const std::int32_t node = lps_node_[static_cast<std::size_t>(prefix_len - 1)];
    const std::int32_t len = nodes_[static_cast<std::size_t>(node)].len;
    return {static_cast<std::int32_t>(prefix_len) - len, len};
}

Word PalindromeIndex::lps(std::int64_t prefix_len) const {
    auto [start, len] = lps_span(prefix_len);
    return source_.sub(static_cast<std::size_t>(start), static_cast<std::size_t>(len));
}

bool PalindromeIndex::lps_unioccurrent(std::int64_t prefix_len) const {
    if (prefix_len < 1 || prefix_len > static_cast<std::int64_t>(source_.size()))
        throw error(errc::out_of_range, "prefix length out of range");
    return created_[static_cast<std::size_t>(prefix_len - 1)];
}

Word PalindromeIndex::palindrome(std::size_t registry_id) const {
    const Entry& e = registry_.at(registry_id);
    return source_.sub(static_cast<std::size_t>(e.start), static_cast<std::size_t>(e.length));
}

std::vector<std::int64_t> PalindromeIndex::palindromic_complexity(std::int64_t n_max) const {
    if (n_max < 0 || n_max > static_cast<std::int64_t>(source_.size()))
        throw error(errc::out_of_range, "palindromic complexity bound out of range");
    std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (const Entry& e : registry_)
        if (e.length <= n_max) p[static_cast<std::size_t>(e.length)] += 1;
    return p;
}

std::vector<std::vector<std::int32_t>> PalindromeIndex::occurrence_ends() const {
    std::vector<std::vector<std::int32_t>> ends(registry_.size());
    for (std::size_t id = 2; id < nodes_.size(); ++id)
        ends[id - 2].reserve(static_cast<std::size_t>(registry_[id - 2].occurrences));
    for (std::size_t i = 0; i < source_.size(); ++i) {
        std::int32_t v = lps_node_[i];
        while (nodes_[static_cast<std::size_t>(v)].len > 0) {
            ends[static_cast<std::size_t>(v) - 2].push_back(static_cast<std::int32_t>(i));
            v = nodes_[static_cast<std::size_t>(v)].slink;
        }
    }
    return ends;
}

DefectReport PalindromeIndex::defect_report() const {
    const std::size_t n = source_.size();
    DefectReport rep;
    rep.per_prefix.resize(n);
    std::int64_t lazy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!created_[i]) rep.lazy_prefixes.push_back(static_cast<std::int32_t>(i + 1));
        const auto d = static_cast<std::int64_t>(i + 1) - palcount_[i];
        rep.per_prefix[i] = static_cast<std::int32_t>(d);
    }
    lazy = static_cast<std::int64_t>(rep.lazy_prefixes.size());
    rep.defect = n == 0 ? 0 : rep.per_prefix.back();
    if (rep.defect != lazy)
        throw error(errc::internal, "defect formulas disagree: " + std::to_string(rep.defect) +
                                        " vs " + std::to_string(lazy) + " lazy prefixes");
    rep.saturation_length = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.per_prefix[i] == rep.defect) {
            rep.saturation_length = static_cast<std::int64_t>(i + 1);
            break;
        }
    }
    if (rep.defect == 0) rep.saturation_length = 0;
    return rep;
}

PalindromeIndex build_index(const Word& w) { return PalindromeIndex(w); }

DefectReport defect(const Word& w) { return PalindromeIndex(w).defect_report(); }

std::vector<std::int64_t> palindromic_complexity(const Word& w, std::int64_t n_max) {
    return PalindromeIndex(w).palindromic_complexity(n_max);
}

bool is_rich(const Word& w) {
    PalindromeIndex idx(w);
    const bool by_defect = idx.defect_report().defect == 0;
    bool by_lps = true;
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(w.size()); ++n)
        if (!idx.lps_unioccurrent(n)) { by_lps = false; break; }
    if (by_defect != by_lps)
        throw error(errc::internal, "richness criteria disagree");
    return by_defect;
}

std::int64_t estimate_H(const PalindromeIndex& idx) {
    const auto rep = idx.defect_report();
    if (rep.lazy_prefixes.empty()) return 0;
    return static_cast<std::int64_t>(rep.lazy_prefixes.back()) + 1;
}

std::int64_t estimate_H(const Word& w) { return estimate_H(PalindromeIndex(w)); }

WindowedDefectReport windowed_defect(const Word& w, std::vector<std::int64_t> schedule) {
    if (schedule.empty())
        throw error(errc::invalid_argument, "schedule must be non-empty");
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
        if (schedule[i] >= schedule[i + 1])
            throw error(errc::invalid_argument, "schedule must be strictly increasing");
    if (schedule.back() > static_cast<std::int64_t>(w.size()))
        throw error(errc::out_of_range, "schedule exceeds the window");

    PalindromeIndex idx(w.prefix(static_cast<std::size_t>(schedule.back())));
    const DefectReport rep = idx.defect_report();

    WindowedDefectReport out;
    out.schedule = std::move(schedule);
    for (std::int64_t len : out.schedule)
        out.defects.push_back(len == 0 ? 0 : rep.per_prefix[static_cast<std::size_t>(len - 1)]);
    out.final_defect = out.defects.back();
    out.stabilized = out.defects.size() >= 2 &&
                     out.defects[out.defects.size() - 1] == out.defects[out.defects.size() - 2];
    out.infinite_suspected = out.defects.size() >= 2;
    for (std::size_t i = 0; i + 1 < out.defects.size(); ++i)
        if (out.defects[i] >= out.defects[i + 1]) out.infinite_suspected = false;
    out.saturation_length = rep.saturation_length;
    return out;
}

WindowedDefectReport windowed_defect(const WordSpec& spec, std::vector<std::int64_t> schedule,
                                     std::int64_t budget) {
    if (schedule.empty())
        throw error(errc::invalid_argument, "schedule must be non-empty");
    WordSpec full = spec;
    full.length = schedule.back();
    return windowed_defect(generate_prefix(full, budget), std::move(schedule));
}

}  // namespace defectlab
