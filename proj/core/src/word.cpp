#include "defectlab/word.hpp"

#include <algorithm>

namespace defectlab {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw error(errc::invalid_argument, "alphabet must be non-empty");
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty())
            throw error(errc::invalid_argument, "alphabet token must be non-empty");
        auto [it, inserted] = index_.emplace(tokens_[i], static_cast<Symbol>(i));
        if (!inserted)
            throw error(errc::invalid_argument, "duplicate alphabet token: " + tokens_[i]);
        if (tokens_[i].size() > 1) multichar_ = true;
    }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> tokens) {
    return std::shared_ptr<const Alphabet>(new Alphabet(std::move(tokens)));
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            if (next > pos) out.emplace_back(text.substr(pos, next - pos));
            pos = next + 1;
        }
    } else {
        out.reserve(text.size());
        for (char c : text) out.emplace_back(1, c);
    }
    return out;
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (!alphabet_) throw error(errc::invalid_argument, "word requires an alphabet");
    const auto n = static_cast<Symbol>(alphabet_->size());
    for (Symbol s : symbols_)
        if (s < 0 || s >= n) throw error(errc::domain_mismatch, "symbol id outside alphabet");
}

Word Word::parse(std::string_view text, AlphabetPtr alphabet) {
    if (!alphabet) throw error(errc::invalid_argument, "word requires an alphabet");
    std::vector<Symbol> syms;
    for (const auto& tok : tokenize(text)) {
        auto s = alphabet->find(tok);
        if (!s) throw error(errc::domain_mismatch, "token '" + tok + "' not in alphabet");
        syms.push_back(*s);
    }
    return Word(std::move(alphabet), std::move(syms));
}

Word Word::parse_new(std::string_view text) {
    std::vector<std::string> order;
    std::unordered_map<std::string, Symbol> seen;
    std::vector<std::string> toks = tokenize(text);
    for (const auto& tok : toks)
        if (seen.emplace(tok, static_cast<Symbol>(order.size())).second) order.push_back(tok);
    if (order.empty()) order.emplace_back("a");  // empty text still needs an alphabet
    auto alpha = Alphabet::make(std::move(order));
    std::vector<Symbol> syms;
    syms.reserve(toks.size());
    for (const auto& tok : toks) syms.push_back(*alpha->find(tok));
    return Word(std::move(alpha), std::move(syms));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos)
        throw error(errc::out_of_range, "subword out of range");
    return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                               symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::reversed() const {
    std::vector<Symbol> rev(symbols_.rbegin(), symbols_.rend());
    return Word(alphabet_, std::move(rev));
}

bool Word::is_palindrome() const noexcept {
    for (std::size_t i = 0, j = size(); i + 1 < j; ++i, --j)
        if (symbols_[i] != symbols_[j - 1]) return false;
    return true;
}

bool Word::starts_with(const Word& w) const noexcept {
    return w.size() <= size() && std::equal(w.symbols_.begin(), w.symbols_.end(), symbols_.begin());
}

bool Word::ends_with(const Word& w) const noexcept {
    return w.size() <= size() &&
           std::equal(w.symbols_.rbegin(), w.symbols_.rend(), symbols_.rbegin());
}

Word Word::operator+(const Word& rhs) const {
    if (!compatible(alphabet_, rhs.alphabet_))
        throw error(errc::domain_mismatch, "concatenation across different alphabets");
    std::vector<Symbol> syms = symbols_;
    syms.insert(syms.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return Word(alphabet_, std::move(syms));
}

std::string Word::str() const {
    std::string out;
    const bool commas = alphabet_ && alphabet_->multichar();
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (commas && i) out += ',';
        out += alphabet_->token(symbols_[i]);
    }
    return out;
}

bool operator==(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    if (a.alphabet_ == b.alphabet_ ||
        (a.alphabet_ && b.alphabet_ && a.alphabet_->same_tokens(*b.alphabet_)))
        return a.symbols_ == b.symbols_;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.alphabet_->token(a.symbols_[i]) != b.alphabet_->token(b.symbols_[i])) return false;
    return true;
}

bool Word::lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(),
                                        b.symbols_.end());
}

bool compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    return a && b && a->same_tokens(*b);
}

}  // namespace defectlab
