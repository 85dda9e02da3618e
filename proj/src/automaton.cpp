#include "owj/automaton.hpp"

#include <algorithm>
#include <map>

#include "owj/error.hpp"

namespace owj {

namespace {

struct ResolvedNames {
    Alphabet alphabet;
    std::map<std::string, State, std::less<>> state_ids;
};

ResolvedNames resolve(const AutomatonDescription& d) {
    ResolvedNames r;
    r.alphabet = Alphabet(d.symbols); // throws DuplicateSymbol
    for (size_t i = 0; i < d.states.size(); ++i) {
        if (d.states[i].empty())
            raise(Errc::duplicate_state, "empty state name at position " + std::to_string(i));
        auto [it, inserted] = r.state_ids.emplace(d.states[i], static_cast<State>(i));
        if (!inserted)
            raise(Errc::duplicate_state, "duplicate state '" + d.states[i] + "'");
    }
    return r;
}

State state_ref(const ResolvedNames& r, const std::string& name) {
    auto it = r.state_ids.find(name);
    if (it == r.state_ids.end())
        raise(Errc::out_of_range_reference, "unknown state '" + name + "'");
    return it->second;
}

Symbol symbol_ref(const ResolvedNames& r, const std::string& name) {
    auto id = r.alphabet.id(name);
    if (!id)
        raise(Errc::out_of_range_reference, "unknown symbol '" + name + "'");
    return *id;
}

template <typename M>
void fill_header(M& m, const AutomatonDescription& d, const ResolvedNames& r) {
    m.alphabet = r.alphabet;
    m.n_states = static_cast<int>(d.states.size());
    m.state_names = d.states;
    m.accepting.assign(static_cast<size_t>(m.n_states), false);
    for (const auto& name : d.accepting) m.accepting[static_cast<size_t>(state_ref(r, name))] = true;
    if (!d.start)
        raise(Errc::missing_start, "no start state given");
    m.start = state_ref(r, *d.start);
}

} // namespace

Automaton validate(const AutomatonDescription& d) {
    ResolvedNames r = resolve(d);
    Automaton a;
    fill_header(a, d, r);
    a.delta.assign(static_cast<size_t>(a.n_states) * a.alphabet.size(), -1);
    for (const auto& t : d.transitions) {
        State from = state_ref(r, t.from);
        Symbol sym = symbol_ref(r, t.symbol);
        State to = state_ref(r, t.to);
        State& slot = a.delta[static_cast<size_t>(from) * a.alphabet.size() + sym];
        if (slot >= 0)
            raise(Errc::duplicate_transition,
                  "state '" + t.from + "' already has a transition on '" + t.symbol + "'");
        slot = to;
    }
    return a;
}

Nfa validate_nfa(const AutomatonDescription& d) {
    ResolvedNames r = resolve(d);
    Nfa n;
    fill_header(n, d, r);
    n.delta.assign(static_cast<size_t>(n.n_states) * n.alphabet.size(), {});
    for (const auto& t : d.transitions) {
        State from = state_ref(r, t.from);
        Symbol sym = symbol_ref(r, t.symbol);
        State to = state_ref(r, t.to);
        auto& set = n.delta[static_cast<size_t>(from) * n.alphabet.size() + sym];
        auto it = std::lower_bound(set.begin(), set.end(), to);
        if (it == set.end() || *it != to) set.insert(it, to);
    }
    return n;
}

bool is_complete(const Automaton& a) {
    return std::all_of(a.delta.begin(), a.delta.end(), [](State s) { return s >= 0; });
}

Nfa to_nfa(const Automaton& a) {
    Nfa n;
    n.alphabet = a.alphabet;
    n.n_states = a.n_states;
    n.start = a.start;
    n.state_names = a.state_names;
    n.accepting = a.accepting;
    n.delta.resize(a.delta.size());
    for (size_t i = 0; i < a.delta.size(); ++i)
        if (a.delta[i] >= 0) n.delta[i] = {a.delta[i]};
    return n;
}

const Alphabet& acceptor_alphabet(const Acceptor& a) {
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, a);
}

int acceptor_states(const Acceptor& a) {
    return std::visit([](const auto& m) { return m.n_states; }, a);
}

} // namespace owj
