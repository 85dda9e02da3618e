#include "owj/format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "owj/error.hpp"

namespace owj {

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
    raise(Errc::syntax_error, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Acceptor parse_automaton(std::string_view text) {
    AutomatonDescription d;
    bool saw_alphabet = false, saw_states = false, saw_accept = false;

    int line_no = 0;
    size_t begin = 0;
    while (begin <= text.size()) {
        size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;

        const std::string& head = toks.front();
        if (head == "alphabet:") {
            if (saw_alphabet) syntax_error(line_no, "repeated alphabet: line");
            saw_alphabet = true;
            d.symbols.assign(toks.begin() + 1, toks.end());
        } else if (head == "states:") {
            if (saw_states) syntax_error(line_no, "repeated states: line");
            saw_states = true;
            d.states.assign(toks.begin() + 1, toks.end());
        } else if (head == "start:") {
            if (d.start) syntax_error(line_no, "repeated start: line");
            if (toks.size() != 2) syntax_error(line_no, "start: expects one state name");
            d.start = toks[1];
        } else if (head == "accept:") {
            if (saw_accept) syntax_error(line_no, "repeated accept: line");
            saw_accept = true;
            d.accepting.assign(toks.begin() + 1, toks.end());
        } else {
            if (toks.size() != 4 || toks[2] != "->")
                syntax_error(line_no, "expected 'STATE SYMBOL -> STATE'");
            d.transitions.push_back({toks[0], toks[1], toks[3]});
        }
    }

    if (!saw_alphabet) raise(Errc::syntax_error, "missing alphabet: line");
    if (!saw_states) raise(Errc::syntax_error, "missing states: line");
    if (!d.start) raise(Errc::missing_start, "missing start: line");

    // Deterministic unless some (state,symbol) pair has two distinct targets.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> targets;
    bool deterministic = true;
    for (const auto& t : d.transitions) {
        auto& set = targets[{t.from, t.symbol}];
        set.insert(t.to);
        if (set.size() > 1) deterministic = false;
    }
    if (!deterministic) return validate_nfa(d);

    // Collapse exact duplicate lines so validate sees one entry per pair.
    AutomatonDescription dd = d;
    dd.transitions.clear();
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& t : d.transitions)
        if (seen.emplace(t.from, t.symbol).second) dd.transitions.push_back(t);
    return validate(dd);
}

namespace {

template <typename M>
void write_header(std::ostringstream& out, const M& m) {
    out << "alphabet:";
    for (const auto& s : m.alphabet.names()) out << ' ' << s;
    out << '\n';
    out << "states:";
    for (const auto& s : m.state_names) out << ' ' << s;
    out << '\n';
    out << "start: " << m.state_names[static_cast<size_t>(m.start)] << '\n';
    out << "accept:";
    for (int q = 0; q < m.n_states; ++q)
        if (m.accepting[static_cast<size_t>(q)]) out << ' ' << m.state_names[static_cast<size_t>(q)];
    out << '\n';
}

} // namespace

std::string serialize(const Automaton& a) {
    std::ostringstream out;
    write_header(out, a);
    for (State q = 0; q < a.n_states; ++q)
        for (Symbol x = 0; x < a.alphabet.size(); ++x)
            if (a.defined(q, x))
                out << a.state_names[static_cast<size_t>(q)] << ' ' << a.alphabet.name(x)
                    << " -> " << a.state_names[static_cast<size_t>(a.next(q, x))] << '\n';
    return out.str();
}

std::string serialize(const Nfa& n) {
    std::ostringstream out;
    write_header(out, n);
    for (State q = 0; q < n.n_states; ++q)
        for (Symbol x = 0; x < n.alphabet.size(); ++x)
            for (State to : n.targets(q, x))
                out << n.state_names[static_cast<size_t>(q)] << ' ' << n.alphabet.name(x)
                    << " -> " << n.state_names[static_cast<size_t>(to)] << '\n';
    return out.str();
}

std::string serialize(const Acceptor& a) {
    return std::visit([](const auto& m) { return serialize(m); }, a);
}

Acceptor load_automaton_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::syntax_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

} // namespace owj
