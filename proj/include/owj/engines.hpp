#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "owj/automaton.hpp"

namespace owj::engines {

enum class Engine { classical, owj, jumping };

const char* engine_name(Engine e);
Engine engine_from_name(std::string_view name); // throws UnsupportedEngine

enum class EventKind { read, skip, sweep_boundary, halt };

enum class HaltReason {
    accept,       // tape empty, state accepting
    reject_empty, // tape empty, state not accepting
    reject_stuck, // a full pass over the remaining tape consumed nothing
};

/// One head movement (or pass/halt marker) of a one-way jumping run.
/// Positions are 0-based indices into the original input word. The first
/// pass starts implicitly with the run; a sweep_boundary event marks each
/// later origin crossing, so boundary indices start at 2.
struct RunEvent {
    EventKind kind;
    int pos = -1;          // read/skip
    Symbol symbol = -1;    // read/skip
    State from_state = -1; // read: state before; skip: current state
    State to_state = -1;   // read
    int sweep = 0;         // sweep_boundary: 1-based index of the pass starting
    HaltReason reason = HaltReason::accept; // halt
};

struct RunOutcome {
    bool accepted = false;
    State final_state = 0;
    int sweeps = 0;          // passes started over a nonempty remaining tape
    long long jumps = 0;     // letters skipped (Skip events)
    long long steps = 0;     // head advances: reads + skips
    int consumed = 0;        // Read events
    Word residue;            // unconsumed letters, original order
};

struct Trace {
    std::vector<RunEvent> events;
    RunOutcome outcome;
};

/// Standard DFA semantics. Halts on the first undefined transition with
/// accepted=false and the unread suffix (offending letter included) as
/// residue. sweeps is 1 for any nonempty input, jumps always 0.
RunOutcome run_classical(const Automaton& a, const Word& w);

/// One-way jumping semantics: scan the remaining tape clockwise from the
/// current position, skipping letters with no defined transition and
/// consuming the first readable one. A sweep is a started pass over a
/// nonempty remaining tape (first pass = sweep 1, empty input = 0 sweeps).
/// Halts when the tape is empty (accept iff the state is accepting) or when
/// a full pass consumes nothing.
RunOutcome run_owj(const Automaton& a, const Word& w);
Trace run_owj_traced(const Automaton& a, const Word& w);

/// Incremental form of run_owj: each step() call performs exactly one event
/// (sweep boundary, read, skip, or halt). Iterating until the halt event
/// reproduces run_owj_traced event-for-event. step() after halt throws
/// AlreadyHalted.
class OwjStepper {
public:
    OwjStepper(const Automaton& a, Word w);

    RunEvent step();
    bool halted() const { return halted_; }
    State current_state() const { return state_; }
    /// Counters accumulated so far; complete once halted.
    const RunOutcome& outcome() const { return outcome_; }

private:
    const Automaton& automaton_;
    Word word_;
    std::vector<int> next_, prev_; // circular list over positions, sentinel = n
    int head_;                     // position index or sentinel
    State state_;
    int remaining_;
    int reads_this_pass_ = 0;
    bool started_ = false;
    bool halted_ = false;
    RunOutcome outcome_;

    void finish(HaltReason reason);
};

inline constexpr long long kDefaultJumpingNodeCap = 10'000'000;

/// General jumping-automaton acceptance: may consume any occurrence of a
/// readable letter anywhere on the tape. Decided by reachability over
/// (state, remaining-letter multiset); throws SearchBudgetExceeded when that
/// space exceeds node_cap.
bool run_jumping(const Automaton& a, const Word& w,
                 long long node_cap = kDefaultJumpingNodeCap);
bool run_jumping(const Nfa& n, const Word& w,
                 long long node_cap = kDefaultJumpingNodeCap);
bool run_jumping(const Acceptor& a, const Word& w,
                 long long node_cap = kDefaultJumpingNodeCap);

} // namespace owj::engines
