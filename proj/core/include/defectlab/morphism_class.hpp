#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "defectlab/morphism.hpp"
#include "defectlab/palindrome_index.hpp"
#include "defectlab/word.hpp"

namespace defectlab {

enum class MorphClass {
    P,                 // phi(a) = p.q_a, p and all q_a palindromes
    Pret,              // phi(b).p palindromic complete return of p, images distinct
    StandardSpecialP,  // phi(x) = r.q_x with distinct final letters + synchronization
};

const char* morph_class_name(MorphClass c);

/// Per-letter decomposition part: a palindrome word, or for standard
/// morphisms a removal of a proper palindromic suffix of r (trim > 0 encodes
/// how many symbols of r the image lacks).
struct LetterPart {
    Word word;
    std::int32_t trim = 0;
};

struct ClassWitness {
    MorphClass kind;
    Word pal;  // p for P/Pret, r for standard special
    std::vector<LetterPart> parts;
    /// For standard special morphisms: the synchronization condition was
    /// verified on all image words up to this composition depth.
    std::int32_t validated_depth = -1;
};

/// Shortest-first search: p must be a common prefix of phi(b)^omega for every
/// letter, so each candidate length admits exactly one candidate.
/// Default bound: 2 * max image length.
std::optional<ClassWitness> check_class_Pret(const Morphism& m, std::int64_t p_max = -1);

/// All three conditions of the class for an explicit candidate p.
bool validate_pret_witness(const Morphism& m, const Word& p);

/// Longest-first search over palindromic common prefixes of the images.
std::optional<ClassWitness> check_class_P(const Morphism& m);

struct PretMorphism {
    Morphism morphism;
    Word p;
};

/// Composition stays in the class; witness p = outer(p_inner) . p_outer.
PretMorphism compose_pret(const PretMorphism& outer, const PretMorphism& inner);

enum class ConjugationDirection { LeftToRight, RightToLeft };

struct ConjugacyWitness {
    Word shift;
    ConjugationDirection direction = ConjugationDirection::LeftToRight;
};

/// LeftToRight: sigma(a) = shift^-1 phi(a) shift (shift a common prefix);
/// RightToLeft: sigma(a) = shift phi(a) shift^-1 (shift a common suffix).
Morphism conjugate(const Morphism& m, const Word& shift, ConjugationDirection dir);

struct PretToPResult {
    ConjugacyWitness conjugation;
    Morphism conjugated;
    ClassWitness witness;  // class P witness of the conjugate
};

/// Writes p = q x reverse(q) (x empty or one letter), conjugates by q; the
/// conjugate is of class P with palindrome x.
PretToPResult pret_to_P(const PretMorphism& pm);

/// Validates phi(x) = r.q_x decompositions plus the two "special" conditions;
/// condition 2 is scanned over every phi(y_1..y_k).r with k <= depth and over
/// phi(domain_sample).r.
std::optional<ClassWitness> check_standard_special_P(const Morphism& m, const Word& domain_sample,
                                                     std::int32_t depth = 3);
bool validate_standard_special(const Morphism& m, const Word& r, const Word& domain_sample,
                               std::int32_t depth, std::vector<LetterPart>* parts_out = nullptr);

struct BinaryStandardResult {
    ConjugacyWitness conjugation;
    Morphism conjugated;
    ClassWitness witness;
};

/// Conjugates a binary class-Pret morphism by the longest common image suffix
/// p1; the result is standard special with r = p1 p p1.
BinaryStandardResult binary_pret_to_standard_special(const PretMorphism& pm);

/// Some boolean incidence power up to the Wielandt bound is all-positive.
bool is_primitive(const Morphism& m);

/// Decoding of a window as return words of a short palindromic prefix p:
/// window = return_morphism(derived_prefix) . residual_tail, bit-exact.
struct DerivedDecomposition {
    Word p;
    Morphism return_morphism;  // over {0..m-1}, validated class Pret with witness p
    Word derived_prefix;
    Word residual_tail;
    DefectReport derived_defect;
    std::int64_t k_used = 0;
    std::int64_t h_used = 0;
};

struct DeriveHints {
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> h;
};

/// Requires |w| > max(2 R(K), H) (window estimates unless overridden); picks
/// p as the shortest palindromic prefix longer than K.
DerivedDecomposition derive_rich_preimage(const Word& w, const DeriveHints& hints = {});

}  // namespace defectlab
