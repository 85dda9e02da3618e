#pragma once

#include <string>

#include "owj/engines.hpp"

namespace owj::engines {

// Trace serialization. Both forms are schema-stable; key names and the text
// grammar are documented in the README.
//
// Text: one event per line,
//   sweep N
//   read POS SYMBOL FROM -> TO
//   skip POS SYMBOL STATE
//   halt accept|reject-empty|reject-stuck
//
// JSON: {"engine":"owj","word":...,"events":[...],"outcome":{...}} with
// event objects keyed by "kind".

std::string trace_to_text(const Trace& t, const Automaton& a);
std::string trace_to_json(const Trace& t, const Automaton& a, const Word& w);

/// Row-per-sweep view of a run: each line shows the tape as it stood when
/// the pass started, consumed letters bracketed, skipped ones plain, e.g.
///   sweep 1: [a]aaa[b]b[a][b]bb
std::string render_sweep_rows(const Trace& t, const Automaton& a, const Word& w);

std::string outcome_line(const RunOutcome& o, const Alphabet& alphabet);

} // namespace owj::engines
