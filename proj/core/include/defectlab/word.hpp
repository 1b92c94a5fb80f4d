#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "defectlab/error.hpp"

namespace defectlab {

/// Symbols are dense small integers indexing into an Alphabet.
using Symbol = std::int32_t;

/// Ordered finite set of distinct printable tokens. The creation order is
/// the canonical iteration order everywhere (reports, witnesses, graphs).
class Alphabet {
public:
    static std::shared_ptr<const Alphabet> make(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::string& token(Symbol s) const { return tokens_.at(static_cast<std::size_t>(s)); }
    std::optional<Symbol> find(std::string_view token) const;
    bool same_tokens(const Alphabet& other) const { return tokens_ == other.tokens_; }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    /// True when some token needs the comma-separated text form.
    bool multichar() const noexcept { return multichar_; }

private:
    explicit Alphabet(std::vector<std::string> tokens);
    std::vector<std::string> tokens_;
    std::unordered_map<std::string_view, Symbol> index_;  // views into tokens_
    bool multichar_ = false;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Splits a word/image literal into symbol tokens: comma-separated when a
/// comma is present, one char per symbol otherwise.
std::vector<std::string> tokenize(std::string_view text);

/// Immutable finite word over an Alphabet.
class Word {
public:
    Word() = default;
    Word(AlphabetPtr alphabet, std::vector<Symbol> symbols);
    static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

    /// Parses against a fixed alphabet; unknown tokens raise domain_mismatch.
    static Word parse(std::string_view text, AlphabetPtr alphabet);
    /// Parses and builds the alphabet from tokens in order of first appearance.
    static Word parse_new(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool is_empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

    Word sub(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t n) const { return sub(0, n); }
    Word suffix(std::size_t n) const { return sub(size() - n, n); }
    Word reversed() const;
    bool is_palindrome() const noexcept;
    bool starts_with(const Word& w) const noexcept;
    bool ends_with(const Word& w) const noexcept;

    Word operator+(const Word& rhs) const;

    /// Text form; joins with commas iff the alphabet has multi-char tokens.
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b);
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    /// Lexicographic by symbol id; both words must share the alphabet.
    static bool lex_less(const Word& a, const Word& b);

private:
    AlphabetPtr alphabet_;
    std::vector<Symbol> symbols_;
};

/// True when both alphabets carry the same token list (identity or content).
bool compatible(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace defectlab
