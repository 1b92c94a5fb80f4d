#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "defectlab/word.hpp"

namespace defectlab {

/// All start offsets of `needle` in `hay`, overlaps allowed (KMP).
/// The empty needle matches at every boundary: 0..|hay|.
std::vector<std::int32_t> find_occurrences(std::span<const Symbol> hay,
                                           std::span<const Symbol> needle);

/// Token-aware wrapper: maps f onto w's alphabet first; a token of f that w's
/// alphabet lacks means there is no occurrence.
std::vector<std::int32_t> find_occurrences(const Word& w, const Word& f);

}  // namespace defectlab
