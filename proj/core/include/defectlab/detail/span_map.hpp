#pragma once

#include <cstdint>
#include <cstring>
#include <unordered_map>

#include "defectlab/word.hpp"

namespace defectlab::detail {

/// Hash-map key viewing a fixed-length symbol run inside a stable buffer.
struct SpanKey {
    const Symbol* data;
    std::int32_t len;
};

struct SpanHash {
    std::size_t operator()(const SpanKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a over symbol bytes
        const auto* p = reinterpret_cast<const unsigned char*>(k.data);
        for (std::size_t i = 0; i < sizeof(Symbol) * static_cast<std::size_t>(k.len); ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct SpanEq {
    bool operator()(const SpanKey& a, const SpanKey& b) const noexcept {
        return a.len == b.len &&
               std::memcmp(a.data, b.data, sizeof(Symbol) * static_cast<std::size_t>(a.len)) == 0;
    }
};

template <typename T>
using SpanMap = std::unordered_map<SpanKey, T, SpanHash, SpanEq>;

}  // namespace defectlab::detail
