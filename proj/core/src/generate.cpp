#include "defectlab/generate.hpp"

#include <string>

#include "defectlab/manacher.hpp"

namespace defectlab {

namespace {

void check_budget(std::int64_t need, std::int64_t budget, const std::string& what) {
    if (need > budget)
        throw error(errc::budget_exceeded, what + " needs " + std::to_string(need) +
                                               " symbols, budget is " + std::to_string(budget));
}

Word generate_fixed_point(const FixedPointSpec& fp, std::int64_t length) {
    const Morphism& m = fp.morphism;
    if (!m.non_erasing())
        throw error(errc::invalid_spec, "fixed point of an erasing morphism");
    auto start_dom = m.domain()->find(fp.start);
    if (!start_dom)
        throw error(errc::invalid_spec, "start letter '" + fp.start + "' not in domain");
    if (!m.prolongable_on(*start_dom))
        throw error(errc::invalid_spec,
                    "morphism not prolongable on start letter '" + fp.start + "'");

    // every producible letter needs an image: codomain symbol -> domain symbol
    std::vector<Symbol> cod2dom(m.codomain()->size());
    for (std::size_t s = 0; s < m.codomain()->size(); ++s) {
        auto d = m.domain()->find(m.codomain()->token(static_cast<Symbol>(s)));
        if (!d)
            throw error(errc::invalid_spec, "letter '" + m.codomain()->token(static_cast<Symbol>(s)) +
                                                "' can be produced but has no image");
        cod2dom[s] = *d;
    }

    const auto want = static_cast<std::size_t>(length);
    std::vector<Symbol> out;
    out.reserve(want + m.max_image_length());
    {
        auto img = m.image(*start_dom).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    // expand in place: every produced symbol is eventually consumed once
    for (std::size_t i = 1; out.size() < want; ++i) {
        if (i >= out.size())
            throw error(errc::internal, "fixed-point iteration stalled");
        auto img = m.image(cod2dom[out[i]]).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    out.resize(want);
    return Word(m.codomain(), std::move(out));
}

}  // namespace

AlphabetPtr closure_alphabet() {
    static const AlphabetPtr alpha = Alphabet::make({"0", "1", "2"});
    return alpha;
}

Word palindromic_closure(const Word& w) {
    if (w.is_empty()) return w;
    Manacher man(w.symbols());
    const std::size_t lps = man.longest_palindromic_suffix();
    const std::size_t keep = w.size() - lps;  // w = u * lps(w); append reverse(u)
    std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
    out.reserve(w.size() + keep);
    for (std::size_t i = keep; i-- > 0;) out.push_back(w[i]);
    return Word(w.alphabet(), std::move(out));
}

Word closure_level(int i, std::int64_t budget) {
    if (i < 0) throw error(errc::invalid_argument, "closure level must be non-negative");
    const auto alpha = closure_alphabet();
    Word v = Word::empty(alpha);
    std::int64_t predicted = 0;  // |v_j| = 11^j - 1
    for (int j = 1; j <= i; ++j) {
        predicted = 11 * predicted + 10;
        check_budget(predicted, budget, "closure level " + std::to_string(j));
        std::vector<Symbol> w;
        w.reserve(static_cast<std::size_t>(7 * static_cast<std::int64_t>(v.size()) + 6));
        const Symbol letters[6] = {0, 1, 1, 0, 2, 2};
        for (Symbol x : letters) {
            w.insert(w.end(), v.symbols().begin(), v.symbols().end());
            w.push_back(x);
        }
        v = palindromic_closure(Word(alpha, std::move(w)));
        if (static_cast<std::int64_t>(v.size()) != predicted)
            throw error(errc::internal, "closure recursion lost its length invariant");
    }
    return v;
}

Word generate_prefix(const WordSpec& spec, std::int64_t budget) {
    if (spec.length < 1)
        throw error(errc::invalid_spec, "requested length must be at least 1");
    check_budget(spec.length, budget, "requested prefix");
    const std::int64_t length = spec.length;

    if (const auto* lit = std::get_if<LiteralSpec>(&spec.variant)) {
        if (static_cast<std::int64_t>(lit->text.size()) < length)
            throw error(errc::invalid_spec, "literal shorter than requested length");
        return lit->text.prefix(static_cast<std::size_t>(length));
    }
    if (const auto* per = std::get_if<PeriodicSpec>(&spec.variant)) {
        if (per->period.is_empty())
            throw error(errc::invalid_spec, "periodic word needs a non-empty period");
        std::vector<Symbol> out;
        out.reserve(static_cast<std::size_t>(length));
        while (static_cast<std::int64_t>(out.size()) < length) {
            auto p = per->period.symbols();
            out.insert(out.end(), p.begin(), p.end());
        }
        out.resize(static_cast<std::size_t>(length));
        return Word(per->period.alphabet(), std::move(out));
    }
    if (const auto* fp = std::get_if<FixedPointSpec>(&spec.variant)) {
        return generate_fixed_point(*fp, length);
    }
    if (const auto* mi = std::get_if<MorphicImageSpec>(&spec.variant)) {
        const Morphism& m = mi->morphism;
        if (!m.non_erasing())
            throw error(errc::invalid_spec, "morphic image of an erasing morphism");
        if (!mi->inner) throw error(errc::invalid_spec, "morphic image needs an inner spec");
        const auto minlen = static_cast<std::int64_t>(m.min_image_length());
        const std::int64_t inner_len = (length + minlen - 1) / minlen + 1;
        check_budget(inner_len, budget, "morphic-image inner prefix");
        WordSpec inner = *mi->inner;
        inner.length = inner_len;
        Word v = generate_prefix(inner, budget);
        Word img = apply_morphism(m, v);
        if (static_cast<std::int64_t>(img.size()) < length)
            throw error(errc::internal, "morphic image does not cover the requested length");
        return img.prefix(static_cast<std::size_t>(length));
    }
    const auto& cs = std::get<ClosureSequenceSpec>(spec.variant);
    if (cs.level < 0) throw error(errc::invalid_spec, "closure level must be non-negative");
    int level = cs.level;
    Word v = closure_level(level, budget);
    while (static_cast<std::int64_t>(v.size()) < length)
        v = closure_level(++level, budget);
    return v.prefix(static_cast<std::size_t>(length));
}

}  // namespace defectlab
