#include "owj/alphabet.hpp"

#include <algorithm>

#include "owj/error.hpp"

namespace owj {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty())
            raise(Errc::duplicate_symbol, "empty symbol name at position " + std::to_string(i));
        auto [it, inserted] = index_.emplace(symbols_[i], static_cast<Symbol>(i));
        if (!inserted)
            raise(Errc::duplicate_symbol, "duplicate symbol '" + symbols_[i] + "'");
    }
}

std::optional<Symbol> Alphabet::id(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Alphabet::single_char() const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

ParikhVector parikh(const Word& w, int alphabet_size) {
    ParikhVector counts(static_cast<size_t>(alphabet_size), 0);
    for (Symbol x : w) counts.at(static_cast<size_t>(x)) += 1;
    return counts;
}

Word parse_word(std::string_view text, const Alphabet& a) {
    Word w;
    auto push = [&](std::string_view token) {
        auto id = a.id(token);
        if (!id)
            raise(Errc::alphabet_mismatch,
                  "symbol '" + std::string(token) + "' is not in the alphabet");
        w.push_back(*id);
    };
    if (text.empty()) return w;
    if (text.find(',') != std::string_view::npos) {
        size_t begin = 0;
        while (begin <= text.size()) {
            size_t end = text.find(',', begin);
            if (end == std::string_view::npos) end = text.size();
            push(text.substr(begin, end - begin));
            begin = end + 1;
        }
        return w;
    }
    if (a.single_char()) {
        for (char c : text) push(std::string_view(&c, 1));
        return w;
    }
    // Multi-character symbols without commas: only a lone symbol name is
    // unambiguous.
    push(text);
    return w;
}

std::string format_word(const Word& w, const Alphabet& a) {
    std::string out;
    bool bare = a.single_char();
    for (size_t i = 0; i < w.size(); ++i) {
        if (!bare && i > 0) out += ',';
        out += a.name(w[i]);
    }
    return out;
}

} // namespace owj
