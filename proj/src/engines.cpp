#include "owj/engines.hpp"

#include <cassert>
#include <deque>

#include "owj/error.hpp"

namespace owj::engines {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::classical: return "classical";
        case Engine::owj: return "owj";
        case Engine::jumping: return "jumping";
    }
    return "?";
}

Engine engine_from_name(std::string_view name) {
    if (name == "classical") return Engine::classical;
    if (name == "owj") return Engine::owj;
    if (name == "jumping") return Engine::jumping;
    raise(Errc::unsupported_engine, "unknown engine '" + std::string(name) + "'");
}

namespace {

void check_word(const Automaton& a, const Word& w) {
    for (Symbol x : w)
        if (x < 0 || x >= a.alphabet.size())
            raise(Errc::alphabet_mismatch, "word symbol id " + std::to_string(x) +
                                               " outside alphabet of size " +
                                               std::to_string(a.alphabet.size()));
}

} // namespace

RunOutcome run_classical(const Automaton& a, const Word& w) {
    check_word(a, w);
    RunOutcome o;
    o.sweeps = w.empty() ? 0 : 1;
    State q = a.start;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!a.defined(q, w[i])) {
            o.accepted = false;
            o.final_state = q;
            o.residue.assign(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
            o.consumed = static_cast<int>(i);
            o.steps = o.consumed;
            return o;
        }
        q = a.next(q, w[i]);
    }
    o.accepted = a.accepting[static_cast<size_t>(q)];
    o.final_state = q;
    o.consumed = static_cast<int>(w.size());
    o.steps = o.consumed;
    return o;
}

OwjStepper::OwjStepper(const Automaton& a, Word w)
    : automaton_(a), word_(std::move(w)), state_(a.start) {
    check_word(a, word_);
    int n = static_cast<int>(word_.size());
    remaining_ = n;
    // Circular doubly-linked list over positions, n acting as the origin
    // sentinel.
    next_.resize(static_cast<size_t>(n) + 1);
    prev_.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        next_[static_cast<size_t>(i)] = (i + 1) % (n + 1);
        prev_[static_cast<size_t>(i)] = (i + n) % (n + 1);
    }
    head_ = next_[static_cast<size_t>(n)]; // first letter, or the sentinel itself
    outcome_.final_state = state_;
}

void OwjStepper::finish(HaltReason reason) {
    halted_ = true;
    outcome_.accepted = reason == HaltReason::accept;
    outcome_.final_state = state_;
    outcome_.residue.clear();
    int n = static_cast<int>(word_.size());
    for (int i = next_[static_cast<size_t>(n)]; i != n; i = next_[static_cast<size_t>(i)])
        outcome_.residue.push_back(word_[static_cast<size_t>(i)]);
}

RunEvent OwjStepper::step() {
    if (halted_) raise(Errc::already_halted, "step() on a halted run");
    const int sentinel = static_cast<int>(word_.size());

    if (!started_) {
        started_ = true;
        if (remaining_ == 0) {
            HaltReason r = automaton_.accepting[static_cast<size_t>(state_)]
                               ? HaltReason::accept
                               : HaltReason::reject_empty;
            finish(r);
            return RunEvent{.kind = EventKind::halt, .reason = r};
        }
        // The first pass starts implicitly; boundary events mark later
        // origin crossings only.
        outcome_.sweeps = 1;
    }

    if (head_ == sentinel) {
        // The head is passing the origin.
        if (remaining_ == 0) {
            HaltReason r = automaton_.accepting[static_cast<size_t>(state_)]
                               ? HaltReason::accept
                               : HaltReason::reject_empty;
            finish(r);
            return RunEvent{.kind = EventKind::halt, .reason = r};
        }
        if (reads_this_pass_ == 0) {
            // A full pass consumed nothing: the state cannot change any more.
            finish(HaltReason::reject_stuck);
            return RunEvent{.kind = EventKind::halt, .reason = HaltReason::reject_stuck};
        }
        reads_this_pass_ = 0;
        head_ = next_[static_cast<size_t>(sentinel)];
        outcome_.sweeps += 1;
        return RunEvent{.kind = EventKind::sweep_boundary, .sweep = outcome_.sweeps};
    }

    Symbol x = word_[static_cast<size_t>(head_)];
    int pos = head_;
    outcome_.steps += 1;
    if (automaton_.defined(state_, x)) {
        State from = state_;
        state_ = automaton_.next(state_, x);
        next_[static_cast<size_t>(prev_[static_cast<size_t>(pos)])] = next_[static_cast<size_t>(pos)];
        prev_[static_cast<size_t>(next_[static_cast<size_t>(pos)])] = prev_[static_cast<size_t>(pos)];
        head_ = next_[static_cast<size_t>(pos)];
        remaining_ -= 1;
        reads_this_pass_ += 1;
        outcome_.consumed += 1;
        outcome_.final_state = state_;
        return RunEvent{
            .kind = EventKind::read, .pos = pos, .symbol = x, .from_state = from, .to_state = state_};
    }
    outcome_.jumps += 1;
    head_ = next_[static_cast<size_t>(pos)];
    return RunEvent{.kind = EventKind::skip, .pos = pos, .symbol = x, .from_state = state_};
}

RunOutcome run_owj(const Automaton& a, const Word& w) {
    OwjStepper stepper(a, w);
    while (!stepper.halted()) stepper.step();
    const RunOutcome& o = stepper.outcome();
    assert(o.steps <= static_cast<long long>(o.sweeps) * static_cast<long long>(w.size()));
    return o;
}

Trace run_owj_traced(const Automaton& a, const Word& w) {
    Trace t;
    OwjStepper stepper(a, w);
    while (!stepper.halted()) t.events.push_back(stepper.step());
    t.outcome = stepper.outcome();
    return t;
}

namespace {

// Reachability over (state, remaining-letter multiset). Multisets are ranked
// in mixed radix with per-symbol capacity = the word's letter counts.
template <typename Targets>
bool jumping_search(int n_states, State start, const std::vector<bool>& accepting,
                    int n_symbols, const Word& w, long long node_cap, Targets&& targets) {
    ParikhVector full = parikh(w, n_symbols);
    std::vector<long long> stride(static_cast<size_t>(n_symbols), 0);
    long long space = 1;
    for (int x = 0; x < n_symbols; ++x) {
        stride[static_cast<size_t>(x)] = space;
        if (full[static_cast<size_t>(x)] + 1 > node_cap / space)
            raise(Errc::search_budget_exceeded, "jumping search space exceeds node cap");
        space *= full[static_cast<size_t>(x)] + 1;
    }
    if (n_states > node_cap / space)
        raise(Errc::search_budget_exceeded, "jumping search space exceeds node cap");

    auto node = [&](State q, long long multiset_rank) {
        return multiset_rank * n_states + q;
    };
    std::vector<bool> visited(static_cast<size_t>(space * n_states), false);
    const long long full_rank = [&] {
        long long r = 0;
        for (int x = 0; x < n_symbols; ++x)
            r += full[static_cast<size_t>(x)] * stride[static_cast<size_t>(x)];
        return r;
    }();

    std::deque<std::pair<State, long long>> queue;
    queue.emplace_back(start, full_rank);
    visited[static_cast<size_t>(node(start, full_rank))] = true;
    std::vector<long long> counts(static_cast<size_t>(n_symbols));
    while (!queue.empty()) {
        auto [q, rank] = queue.front();
        queue.pop_front();
        if (rank == 0 && accepting[static_cast<size_t>(q)]) return true;
        long long rest = rank;
        for (int x = n_symbols - 1; x >= 0; --x) {
            counts[static_cast<size_t>(x)] = rest / stride[static_cast<size_t>(x)];
            rest %= stride[static_cast<size_t>(x)];
        }
        for (int x = 0; x < n_symbols; ++x) {
            if (counts[static_cast<size_t>(x)] == 0) continue;
            long long next_rank = rank - stride[static_cast<size_t>(x)];
            for (State to : targets(q, x)) {
                if (visited[static_cast<size_t>(node(to, next_rank))]) continue;
                visited[static_cast<size_t>(node(to, next_rank))] = true;
                queue.emplace_back(to, next_rank);
            }
        }
    }
    return false;
}

} // namespace

bool run_jumping(const Automaton& a, const Word& w, long long node_cap) {
    check_word(a, w);
    return jumping_search(a.n_states, a.start, a.accepting, a.alphabet.size(), w, node_cap,
                          [&](State q, Symbol x) -> std::vector<State> {
                              if (!a.defined(q, x)) return {};
                              return {a.next(q, x)};
                          });
}

bool run_jumping(const Nfa& n, const Word& w, long long node_cap) {
    for (Symbol x : w)
        if (x < 0 || x >= n.alphabet.size())
            raise(Errc::alphabet_mismatch, "word symbol outside the acceptor's alphabet");
    return jumping_search(n.n_states, n.start, n.accepting, n.alphabet.size(), w, node_cap,
                          [&](State q, Symbol x) -> const std::vector<State>& {
                              return n.targets(q, x);
                          });
}

bool run_jumping(const Acceptor& a, const Word& w, long long node_cap) {
    return std::visit([&](const auto& m) { return run_jumping(m, w, node_cap); }, a);
}

} // namespace owj::engines
