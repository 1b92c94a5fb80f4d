#include "defectlab/morphism_class.hpp"

#include <algorithm>
#include <string>

#include "defectlab/detail/span_map.hpp"
#include "defectlab/returns.hpp"
#include "defectlab/search.hpp"

namespace defectlab {

const char* morph_class_name(MorphClass c) {
    switch (c) {
        case MorphClass::P: return "P";
        case MorphClass::Pret: return "P_ret";
        case MorphClass::StandardSpecialP: return "standard_special_P";
    }
    return "unknown";
}

bool validate_pret_witness(const Morphism& m, const Word& p) {
    if (!m.non_erasing() || !p.is_palindrome()) return false;
    if (!compatible(p.alphabet(), m.codomain())) return false;
    if (!m.injective_on_letters()) return false;
    const Word pc = rebase(p, m.codomain());
    for (const auto& img : m.images()) {
        const Word u = img + pc;
        if (!u.is_palindrome()) return false;
        const auto occ = find_occurrences(u.symbols(), pc.symbols());
        if (occ.size() != 2) return false;
        if (occ[0] != 0 || static_cast<std::size_t>(occ[1]) != u.size() - pc.size()) return false;
    }
    return true;
}

std::optional<ClassWitness> check_class_Pret(const Morphism& m, std::int64_t p_max) {
    if (!m.non_erasing())
        throw error(errc::invalid_argument, "class check needs a non-erasing morphism");
    if (!m.injective_on_letters()) return std::nullopt;
    if (p_max < 0) p_max = 2 * static_cast<std::int64_t>(m.max_image_length());

    const auto& images = m.images();
    for (std::int64_t len = 0; len <= p_max; ++len) {
        // the only possible candidate of this length: prefix of image(b)^omega,
        // which must agree for every letter
        std::vector<Symbol> cand(static_cast<std::size_t>(len));
        const auto& first = images[0];
        for (std::int64_t i = 0; i < len; ++i)
            cand[static_cast<std::size_t>(i)] =
                first[static_cast<std::size_t>(i) % first.size()];
        bool common = true;
        for (const auto& img : images) {
            for (std::int64_t i = 0; i < len && common; ++i)
                if (cand[static_cast<std::size_t>(i)] !=
                    img[static_cast<std::size_t>(i) % img.size()])
                    common = false;
            if (!common) break;
        }
        if (!common) break;  // longer candidates extend this one, also fail
        Word p(m.codomain(), cand);
        if (!p.is_palindrome()) continue;
        if (!validate_pret_witness(m, p)) continue;
        ClassWitness w;
        w.kind = MorphClass::Pret;
        w.pal = p;
        for (const auto& img : images) w.parts.push_back({img, 0});
        return w;
    }
    return std::nullopt;
}

std::optional<ClassWitness> check_class_P(const Morphism& m) {
    if (!m.non_erasing())
        throw error(errc::invalid_argument, "class check needs a non-erasing morphism");
    const auto& images = m.images();
    std::size_t lcp = images[0].size();
    for (const auto& img : images) {
        std::size_t k = 0;
        while (k < lcp && k < img.size() && img[k] == images[0][k]) ++k;
        lcp = k;
    }
    for (std::size_t len = lcp + 1; len-- > 0;) {
        Word p = images[0].prefix(len);
        if (!p.is_palindrome()) continue;
        bool ok = true;
        std::vector<LetterPart> parts;
        for (const auto& img : images) {
            Word q = img.sub(len, img.size() - len);
            if (!q.is_palindrome()) { ok = false; break; }
            parts.push_back({q, 0});
        }
        if (!ok) continue;
        return ClassWitness{MorphClass::P, p, std::move(parts), -1};
    }
    return std::nullopt;
}

PretMorphism compose_pret(const PretMorphism& outer, const PretMorphism& inner) {
    if (!validate_pret_witness(outer.morphism, outer.p) ||
        !validate_pret_witness(inner.morphism, inner.p))
        throw error(errc::invalid_argument, "composition needs valid class witnesses");

    // inner codomain letters must have outer images (token-wise embedding)
    std::vector<Word> images;
    images.reserve(inner.morphism.images().size());
    for (const auto& img : inner.morphism.images())
        images.push_back(apply_morphism(outer.morphism, translate(img, outer.morphism.domain())));
    Morphism composed(inner.morphism.domain(), outer.morphism.codomain(), std::move(images));

    Word p =
        apply_morphism(outer.morphism, translate(inner.p, outer.morphism.domain())) + outer.p;
    if (!validate_pret_witness(composed, p))
        throw error(errc::internal, "composed witness failed validation");
    return {std::move(composed), std::move(p)};
}

Morphism conjugate(const Morphism& m, const Word& shift, ConjugationDirection dir) {
    const Word s = rebase(shift, m.codomain());
    std::vector<Word> images;
    images.reserve(m.images().size());
    for (const auto& img : m.images()) {
        if (dir == ConjugationDirection::LeftToRight) {
            if (!img.starts_with(s))
                throw error(errc::invalid_argument,
                            "shift word is not a prefix of every image");
            images.push_back(img.sub(s.size(), img.size() - s.size()) + s);
        } else {
            if (!img.ends_with(s))
                throw error(errc::invalid_argument,
                            "shift word is not a suffix of every image");
            images.push_back(s + img.prefix(img.size() - s.size()));
        }
    }
    return Morphism(m.domain(), m.codomain(), std::move(images));
}

namespace {

// sigma(a) = (phi(a) q) with the leading q removed; valid whenever q is a
// prefix of phi(a) q, which the class guarantees even for |q| > |phi(a)|.
Word rotate_left(const Word& img, const Word& q) {
    Word ext = img + q;
    if (!ext.starts_with(q))
        throw error(errc::internal, "rotation word is not a prefix of image.q");
    return ext.sub(q.size(), img.size());
}

}  // namespace

PretToPResult pret_to_P(const PretMorphism& pm) {
    if (!validate_pret_witness(pm.morphism, pm.p))
        throw error(errc::invalid_argument, "pret_to_P needs a valid witness");
    const Word p = rebase(pm.p, pm.morphism.codomain());
    const std::size_t half = p.size() / 2;
    const Word q = p.prefix(half);
    const Word x = p.size() % 2 == 1 ? p.sub(half, 1) : Word::empty(p.alphabet());

    std::vector<Word> images;
    images.reserve(pm.morphism.images().size());
    for (const auto& img : pm.morphism.images()) images.push_back(rotate_left(img, q));
    Morphism sigma(pm.morphism.domain(), pm.morphism.codomain(), std::move(images));

    ClassWitness witness;
    witness.kind = MorphClass::P;
    witness.pal = x;
    for (const auto& img : sigma.images()) {
        if (!img.starts_with(x))
            throw error(errc::internal, "conjugate image lost the middle letter");
        Word y = img.sub(x.size(), img.size() - x.size());
        if (!y.is_palindrome())
            throw error(errc::internal, "conjugate remainder is not a palindrome");
        witness.parts.push_back({std::move(y), 0});
    }
    return {{q, ConjugationDirection::LeftToRight}, std::move(sigma), std::move(witness)};
}

namespace {

// condition 2: any occurrence of phi(x) r inside phi(word) r sits at an image
// boundary whose letter is x
bool synchronized_on(const Morphism& m, const Word& r, const Word& word) {
    Word t = apply_morphism(m, word) + r;
    std::vector<std::int64_t> boundary_letter(t.size() + 1, -1);
    std::int64_t at = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        boundary_letter[static_cast<std::size_t>(at)] = word[i];
        at += static_cast<std::int64_t>(m.image(word[i]).size());
    }
    for (Symbol x = 0; x < static_cast<Symbol>(m.domain()->size()); ++x) {
        const Word probe = m.image(x) + r;
        for (std::int32_t pos : find_occurrences(t.symbols(), probe.symbols()))
            if (boundary_letter[static_cast<std::size_t>(pos)] != x) return false;
    }
    return true;
}

}  // namespace

bool validate_standard_special(const Morphism& m, const Word& r, const Word& domain_sample,
                               std::int32_t depth, std::vector<LetterPart>* parts_out) {
    if (!m.non_erasing()) return false;
    const Word rc = rebase(r, m.codomain());
    if (!rc.is_palindrome()) return false;

    std::vector<LetterPart> parts;
    for (const auto& img : m.images()) {
        if (img.size() >= rc.size()) {
            if (!img.starts_with(rc)) return false;
            Word q = img.sub(rc.size(), img.size() - rc.size());
            if (!q.is_palindrome()) return false;
            parts.push_back({std::move(q), 0});
        } else {
            // negative part: image = r minus a proper palindromic suffix
            if (!rc.starts_with(img)) return false;
            Word pi = rc.sub(img.size(), rc.size() - img.size());
            if (pi.size() >= rc.size()) return false;
            if (!pi.is_palindrome()) return false;
            parts.push_back({pi, static_cast<std::int32_t>(pi.size())});
        }
    }
    // condition 1: images end with pairwise different letters
    std::uint64_t ends = 0;
    for (const auto& img : m.images()) {
        if (img.is_empty()) return false;
        const std::uint64_t bit = 1ull << img[img.size() - 1];
        if (ends & bit) return false;
        ends |= bit;
    }
    // condition 2 on all short compositions plus the supplied sample
    const auto letters = static_cast<Symbol>(m.domain()->size());
    std::vector<Symbol> stack;
    for (std::int32_t k = 1; k <= depth; ++k) {
        stack.assign(static_cast<std::size_t>(k), 0);
        for (;;) {
            if (!synchronized_on(m, rc, Word(m.domain(), stack))) return false;
            std::int32_t i = k - 1;
            while (i >= 0 && stack[static_cast<std::size_t>(i)] == letters - 1) {
                stack[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            stack[static_cast<std::size_t>(i)] += 1;
        }
    }
    if (!domain_sample.is_empty()) {
        if (!synchronized_on(m, rc, rebase(domain_sample, m.domain()))) return false;
    }
    if (parts_out) *parts_out = std::move(parts);
    return true;
}

std::optional<ClassWitness> check_standard_special_P(const Morphism& m, const Word& domain_sample,
                                                     std::int32_t depth) {
    if (!m.non_erasing())
        throw error(errc::invalid_argument, "class check needs a non-erasing morphism");
    if (m.codomain()->size() > 64)
        throw error(errc::invalid_argument, "alphabets up to 64 letters");

    // condition 1 does not depend on r
    std::uint64_t ends = 0;
    for (const auto& img : m.images()) {
        const std::uint64_t bit = 1ull << img[img.size() - 1];
        if (ends & bit) return std::nullopt;
        ends |= bit;
    }
    const Word* longest = &m.images()[0];
    for (const auto& img : m.images())
        if (img.size() > longest->size()) longest = &img;

    // beyond the longest image every part is negative; the mirror constraint
    // then pins the candidate up to twice the image length
    const std::size_t cap = 2 * longest->size();
    for (std::size_t len = 0; len <= cap; ++len) {
        Word r = Word::empty(m.codomain());
        if (len <= longest->size()) {
            r = longest->prefix(len);
        } else {
            std::vector<Symbol> syms(longest->symbols().begin(), longest->symbols().end());
            for (std::size_t i = longest->size(); i < len; ++i)
                syms.push_back(syms[len - 1 - i]);
            r = Word(m.codomain(), std::move(syms));
        }
        // r must be prefix-comparable with every image; the shared prefix is
        // fixed, so one failure rules out every longer candidate as well
        bool comparable = true;
        for (const auto& img : m.images()) {
            if (img.size() >= len ? !img.starts_with(r) : !r.starts_with(img)) {
                comparable = false;
                break;
            }
        }
        if (!comparable) break;
        if (!r.is_palindrome()) continue;
        std::vector<LetterPart> parts;
        if (!validate_standard_special(m, r, domain_sample, depth, &parts)) continue;
        return ClassWitness{MorphClass::StandardSpecialP, std::move(r), std::move(parts), depth};
    }
    return std::nullopt;
}

BinaryStandardResult binary_pret_to_standard_special(const PretMorphism& pm) {
    if (pm.morphism.domain()->size() != 2)
        throw error(errc::invalid_argument, "construction needs a binary domain");
    if (!validate_pret_witness(pm.morphism, pm.p))
        throw error(errc::invalid_argument, "construction needs a valid witness");

    const Word& a = pm.morphism.image(0);
    const Word& b = pm.morphism.image(1);
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
    const Word p1 = a.suffix(k);

    Morphism sigma = conjugate(pm.morphism, p1, ConjugationDirection::RightToLeft);
    // r must be a palindrome, so the trailing copy of p1 appears reversed
    Word r = p1 + rebase(pm.p, pm.morphism.codomain()) + p1.reversed();
    std::vector<LetterPart> parts;
    if (!validate_standard_special(sigma, r, Word::empty(sigma.domain()), 3, &parts))
        throw error(errc::internal, "binary conjugate failed standard-special validation");
    ClassWitness w{MorphClass::StandardSpecialP, std::move(r), std::move(parts), 3};
    return {{p1, ConjugationDirection::RightToLeft}, std::move(sigma), std::move(w)};
}

bool is_primitive(const Morphism& m) {
    if (!compatible(m.domain(), m.codomain()))
        throw error(errc::domain_mismatch, "primitivity needs domain = codomain");
    const auto n = static_cast<std::size_t>(m.domain()->size());
    std::vector<std::uint64_t> base(n, 0);  // row a: letters occurring in image(a)
    for (std::size_t a = 0; a < n; ++a)
        for (Symbol s : m.image(static_cast<Symbol>(a)).symbols()) base[a] |= 1ull << s;

    const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    const std::int64_t cap =
        static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(n) + 2;
    std::vector<std::uint64_t> cur = base;
    for (std::int64_t k = 1; k <= std::max<std::int64_t>(cap, 1); ++k) {
        bool all = true;
        for (std::size_t a = 0; a < n; ++a)
            if (cur[a] != full) { all = false; break; }
        if (all) return true;
        std::vector<std::uint64_t> next(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (cur[a] & (1ull << b)) next[a] |= base[b];
        cur = std::move(next);
    }
    return false;
}

DerivedDecomposition derive_rich_preimage(const Word& w, const DeriveHints& hints) {
    if (w.is_empty()) throw error(errc::insufficient_window, "empty window");
    PalindromeIndex idx(w);
    const std::int64_t K = hints.k ? *hints.k : estimate_K(w);
    const std::int64_t H = hints.h ? *hints.h : estimate_H(idx);

    std::int64_t rk = 0;
    if (K > 0) {
        if (K >= static_cast<std::int64_t>(w.size()))
            throw error(errc::insufficient_window,
                        "window shorter than the palindromic-return constant K = " +
                            std::to_string(K));
        rk = recurrence_function(w, K).r[static_cast<std::size_t>(K)];
    }
    const std::int64_t bound = std::max(2 * rk, H);
    if (static_cast<std::int64_t>(w.size()) <= bound)
        throw error(errc::insufficient_window,
                    "window of " + std::to_string(w.size()) + " symbols, need more than " +
                        std::to_string(bound) + " (max of 2R(K) = " + std::to_string(2 * rk) +
                        " and H = " + std::to_string(H) + ")");

    // shortest palindromic prefix longer than K
    Word p;
    bool found = false;
    for (std::int64_t len = K + 1; len <= static_cast<std::int64_t>(w.size()); ++len) {
        const auto [start, l] = idx.lps_span(len);
        if (start == 0 && l == len) {
            p = w.prefix(static_cast<std::size_t>(len));
            found = true;
            break;
        }
    }
    if (!found)
        throw error(errc::insufficient_window,
                    "no palindromic prefix longer than K = " + std::to_string(K));

    const auto occ = find_occurrences(w.symbols(), p.symbols());
    if (occ.size() < 2)
        throw error(errc::insufficient_window,
                    "the palindromic prefix p recurs only " + std::to_string(occ.size()) +
                        " time(s); return words of p are not observable");

    std::vector<Word> returns;                      // in order of first appearance
    detail::SpanMap<std::int32_t> seen;
    std::vector<Symbol> derived;
    const Symbol* base = w.symbols().data();
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        const std::int32_t len = occ[i + 1] - occ[i];
        auto [it, inserted] =
            seen.try_emplace(detail::SpanKey{base + occ[i], len},
                             static_cast<std::int32_t>(returns.size()));
        if (inserted)
            returns.push_back(w.sub(static_cast<std::size_t>(occ[i]), static_cast<std::size_t>(len)));
        derived.push_back(it->second);
    }

    std::vector<std::string> letters;
    for (std::size_t i = 0; i < returns.size(); ++i) letters.push_back(std::to_string(i));
    auto derived_alpha = Alphabet::make(std::move(letters));
    Morphism ret(derived_alpha, w.alphabet(), returns);
    if (!validate_pret_witness(ret, p))
        throw error(errc::insufficient_window,
                    "return set of p not closed in the window (a return fails the class "
                    "conditions); a longer window is needed");

    Word derived_prefix(derived_alpha, std::move(derived));
    Word tail =
        w.sub(static_cast<std::size_t>(occ.back()), w.size() - static_cast<std::size_t>(occ.back()));
    DefectReport drep = defect(derived_prefix);
    return DerivedDecomposition{std::move(p),   std::move(ret), std::move(derived_prefix),
                                std::move(tail), std::move(drep), K, H};
}

}  // namespace defectlab
