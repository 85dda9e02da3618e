#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "owj/alphabet.hpp"

namespace owj {

/// A finite automaton with a partial transition function. Run classically it
/// is a (possibly partial) DFA; run in one-way jumping mode the missing
/// transitions are what make letters skippable. Instances are produced by
/// validate()/parse_automaton() and are immutable afterwards by convention.
struct Automaton {
    Alphabet alphabet;
    int n_states = 0;
    State start = 0;
    std::vector<std::string> state_names; // declaration order, size n_states
    std::vector<bool> accepting;          // size n_states
    std::vector<State> delta;             // n_states * k, -1 = undefined

    State next(State s, Symbol x) const {
        return delta[static_cast<size_t>(s) * alphabet.size() + x];
    }
    bool defined(State s, Symbol x) const { return next(s, x) >= 0; }

    bool operator==(const Automaton& other) const = default;
};

/// Nondeterministic acceptor; no epsilon transitions.
struct Nfa {
    Alphabet alphabet;
    int n_states = 0;
    State start = 0;
    std::vector<std::string> state_names;
    std::vector<bool> accepting;
    std::vector<std::vector<State>> delta; // n_states * k, each sorted, may be empty

    const std::vector<State>& targets(State s, Symbol x) const {
        return delta[static_cast<size_t>(s) * alphabet.size() + x];
    }

    bool operator==(const Nfa& other) const = default;
};

using Acceptor = std::variant<Automaton, Nfa>;

/// An automaton description as read from text or assembled programmatically,
/// everything referenced by name and nothing checked yet.
struct AutomatonDescription {
    struct Transition {
        std::string from;
        std::string symbol;
        std::string to;
    };

    std::vector<std::string> symbols;
    std::vector<std::string> states;
    std::optional<std::string> start;
    std::vector<std::string> accepting;
    std::vector<Transition> transitions;
};

/// Checks a description against the deterministic-automaton invariants and
/// resolves names to dense ids. Throws DuplicateState, DuplicateSymbol,
/// OutOfRangeReference, DuplicateTransition (a (state,symbol) pair listed
/// more than once) or MissingStart.
Automaton validate(const AutomatonDescription& d);

/// Same resolution for a nondeterministic description; repeated
/// (state,symbol) lines accumulate into target sets.
Nfa validate_nfa(const AutomatonDescription& d);

/// True iff delta is defined on every (state, symbol) pair. Vacuously true
/// for an empty alphabet.
bool is_complete(const Automaton& a);

const Alphabet& acceptor_alphabet(const Acceptor& a);
int acceptor_states(const Acceptor& a);

/// Views a deterministic machine as an Nfa (singleton or empty target sets).
Nfa to_nfa(const Automaton& a);

} // namespace owj
