#include "defectlab/morphism.hpp"

#include <unordered_set>

namespace defectlab {

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (!domain_ || !codomain_) throw error(errc::invalid_argument, "morphism needs alphabets");
    if (images_.size() != domain_->size())
        throw error(errc::invalid_argument, "morphism needs exactly one image per domain letter");
    for (auto& img : images_) {
        if (!compatible(img.alphabet(), codomain_))
            throw error(errc::domain_mismatch, "image not over the codomain alphabet");
        img = rebase(img, codomain_);
    }
}

Morphism Morphism::from_rules(const std::vector<std::pair<std::string, std::string>>& rules,
                              AlphabetPtr codomain) {
    if (rules.empty()) throw error(errc::invalid_argument, "morphism needs at least one rule");
    std::vector<std::string> domain_tokens;
    for (const auto& [letter, _] : rules) domain_tokens.push_back(letter);
    auto domain = Alphabet::make(domain_tokens);

    std::vector<std::vector<std::string>> image_tokens;
    image_tokens.reserve(rules.size());
    for (const auto& [_, image] : rules) image_tokens.push_back(tokenize(image));

    if (!codomain) {
        std::vector<std::string> order;
        std::unordered_set<std::string> seen;
        for (const auto& toks : image_tokens)
            for (const auto& t : toks)
                if (seen.insert(t).second) order.push_back(t);
        if (order.empty()) order = domain_tokens;
        codomain = Alphabet::make(order);
    }

    std::vector<Word> images;
    images.reserve(rules.size());
    for (const auto& toks : image_tokens) {
        std::vector<Symbol> syms;
        syms.reserve(toks.size());
        for (const auto& t : toks) {
            auto s = codomain->find(t);
            if (!s) throw error(errc::domain_mismatch, "image token '" + t + "' not in alphabet");
            syms.push_back(*s);
        }
        images.emplace_back(codomain, std::move(syms));
    }
    return Morphism(std::move(domain), std::move(codomain), std::move(images));
}

bool Morphism::non_erasing() const noexcept {
    for (const auto& img : images_)
        if (img.is_empty()) return false;
    return true;
}

bool Morphism::injective_on_letters() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] == images_[j]) return false;
    return true;
}

bool Morphism::prolongable_on(Symbol a) const {
    const Word& img = image(a);
    if (img.size() < 2) return false;
    return codomain_->token(img[0]) == domain_->token(a);
}

std::size_t Morphism::min_image_length() const noexcept {
    std::size_t m = images_.empty() ? 0 : images_[0].size();
    for (const auto& img : images_) m = std::min(m, img.size());
    return m;
}

std::size_t Morphism::max_image_length() const noexcept {
    std::size_t m = 0;
    for (const auto& img : images_) m = std::max(m, img.size());
    return m;
}

Word apply_morphism(const Morphism& m, const Word& w) {
    if (!compatible(w.alphabet(), m.domain()))
        throw error(errc::domain_mismatch, "word not over the morphism's domain");
    std::size_t total = 0;
    for (Symbol s : w.symbols()) total += m.image(s).size();
    std::vector<Symbol> out;
    out.reserve(total);
    for (Symbol s : w.symbols()) {
        auto img = m.image(s).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(m.codomain(), std::move(out));
}

Word rebase(const Word& w, const AlphabetPtr& alphabet) {
    if (w.alphabet() == alphabet) return w;
    if (!compatible(w.alphabet(), alphabet))
        throw error(errc::domain_mismatch, "rebase needs identical token sets");
    return Word(alphabet, std::vector<Symbol>(w.symbols().begin(), w.symbols().end()));
}

Word translate(const Word& w, const AlphabetPtr& alphabet) {
    if (w.alphabet() == alphabet) return w;
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (Symbol s : w.symbols()) {
        auto t = alphabet->find(w.alphabet()->token(s));
        if (!t)
            throw error(errc::domain_mismatch,
                        "token '" + w.alphabet()->token(s) + "' not in the target alphabet");
        syms.push_back(*t);
    }
    return Word(alphabet, std::move(syms));
}

}  // namespace defectlab
