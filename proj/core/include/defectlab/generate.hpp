#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "defectlab/morphism.hpp"
#include "defectlab/word.hpp"

namespace defectlab {

/// Hard cap on generated word sizes; closure levels grow as 11^i.
inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 24;

struct WordSpec;

struct LiteralSpec {
    Word text;
};
struct PeriodicSpec {
    Word period;
};
struct FixedPointSpec {
    Morphism morphism;
    std::string start;  // domain letter token
};
struct MorphicImageSpec {
    std::shared_ptr<const WordSpec> inner;
    Morphism morphism;
};
/// Prefixes of the palindromic-closure sequence over {0,1,2}; `level` is the
/// minimum closure depth, raised as needed to cover the requested length.
struct ClosureSequenceSpec {
    int level = 0;
};

/// Description of an infinite (or long finite) word plus the prefix length
/// to materialize.
struct WordSpec {
    std::variant<LiteralSpec, PeriodicSpec, FixedPointSpec, MorphicImageSpec, ClosureSequenceSpec>
        variant;
    std::int64_t length = 1;
};

/// First `spec.length` symbols of the specified word. Deterministic.
Word generate_prefix(const WordSpec& spec, std::int64_t budget = kDefaultBudget);

/// Shortest palindrome having w as a prefix: w * reverse(u) where w = u * lps(w).
Word palindromic_closure(const Word& w);

/// v_0 = empty; v_i = (v_{i-1} 0 v_{i-1} 1 v_{i-1} 1 v_{i-1} 0 v_{i-1} 2 v_{i-1} 2)^(+).
/// |v_i| = 11^i - 1.
Word closure_level(int i, std::int64_t budget = kDefaultBudget);

/// Alphabet {0,1,2} used by the closure sequence.
AlphabetPtr closure_alphabet();

}  // namespace defectlab
