#pragma once

#include <string>
#include <string_view>

#include "owj/automaton.hpp"

namespace owj {

// Textual automaton interchange format (UTF-8, line-oriented, '#' comments):
//
//   alphabet: a b
//   states: q0 q1
//   start: q0
//   accept: q0
//   q0 a -> q1
//   q1 b -> q0
//
// One transition per line; repeated (state,symbol) lines make the machine
// nondeterministic. Symbol and state names are space-separated tokens, so
// multi-character names are fine.

/// Parses the interchange format. Returns an Automaton when every
/// (state,symbol) pair has at most one distinct target, otherwise an Nfa.
/// Throws SyntaxError (with line number) and all validate() errors.
Acceptor parse_automaton(std::string_view text);

/// Canonical serialization: declaration order is preserved, transitions are
/// emitted sorted by (state id, symbol id, target id). parse_automaton is an
/// exact inverse.
std::string serialize(const Automaton& a);
std::string serialize(const Nfa& n);
std::string serialize(const Acceptor& a);

Acceptor load_automaton_file(const std::string& path);

} // namespace owj
