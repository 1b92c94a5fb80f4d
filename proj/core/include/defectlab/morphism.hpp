#pragma once

#include <string>
#include <utility>
#include <vector>

#include "defectlab/word.hpp"

namespace defectlab {

/// Letter-to-word mapping between two alphabets.
class Morphism {
public:
    Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

    /// Builds from (letter, image) rules in the given order; the codomain is
    /// either supplied or collected from image tokens in order of first
    /// appearance.
    static Morphism from_rules(const std::vector<std::pair<std::string, std::string>>& rules,
                               AlphabetPtr codomain = nullptr);

    const AlphabetPtr& domain() const noexcept { return domain_; }
    const AlphabetPtr& codomain() const noexcept { return codomain_; }
    const Word& image(Symbol b) const { return images_.at(static_cast<std::size_t>(b)); }
    const std::vector<Word>& images() const noexcept { return images_; }

    bool non_erasing() const noexcept;
    bool injective_on_letters() const;  // images pairwise distinct
    /// Image of `a` starts with `a` (by token) and has length >= 2.
    bool prolongable_on(Symbol a) const;
    std::size_t min_image_length() const noexcept;
    std::size_t max_image_length() const noexcept;

private:
    AlphabetPtr domain_;
    AlphabetPtr codomain_;
    std::vector<Word> images_;
};

/// Concatenation of images of w's letters; w must be over m's domain.
Word apply_morphism(const Morphism& m, const Word& w);

/// Translates a word onto another alphabet with the same token set.
Word rebase(const Word& w, const AlphabetPtr& alphabet);

/// Token-by-token translation onto any alphabet containing w's tokens.
Word translate(const Word& w, const AlphabetPtr& alphabet);

}  // namespace defectlab
