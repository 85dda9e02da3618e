#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace owj {

using State = int;
using Symbol = int;

/// A word is a sequence of dense symbol ids over some Alphabet.
using Word = std::vector<Symbol>;

/// Per-symbol occurrence counts of a word; one entry per alphabet symbol.
using ParikhVector = std::vector<long long>;

/// An ordered set of distinct, non-empty symbol names. Symbol ids are the
/// positions in the declared order.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws DuplicateSymbol on repeated or empty names.
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol id) const { return symbols_.at(static_cast<size_t>(id)); }
    const std::vector<std::string>& names() const { return symbols_; }
    std::optional<Symbol> id(std::string_view name) const;

    /// True when every symbol name is a single character, i.e. words can be
    /// written as bare strings.
    bool single_char() const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, Symbol, std::less<>> index_;
};

ParikhVector parikh(const Word& w, int alphabet_size);
inline ParikhVector parikh(const Word& w, const Alphabet& a) { return parikh(w, a.size()); }

/// Parses a word from its textual form: a bare string when the alphabet is
/// single-character, otherwise comma-separated symbol names. A comma in the
/// text always selects the comma-separated reading. Throws AlphabetMismatch
/// on symbols not in the alphabet.
Word parse_word(std::string_view text, const Alphabet& a);

/// Inverse of parse_word: bare concatenation for single-character alphabets,
/// comma-joined names otherwise.
std::string format_word(const Word& w, const Alphabet& a);

} // namespace owj
