#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "owj/error.hpp"
#include "owj/langtools.hpp"
#include "owj/trace_io.hpp"
#include "oracles.hpp"

using namespace owj;
using namespace owj::engines;

namespace {

Word word(const Automaton& a, const std::string& text) { return parse_word(text, a.alphabet); }

// Every (partial) 2-state binary machine: per-pair target in {undef, q0, q1},
// any accepting set, any start.
std::vector<Automaton> all_two_state_machines() {
    std::vector<Automaton> out;
    const Alphabet ab({"a", "b"});
    for (int d0a = -1; d0a <= 1; ++d0a)
        for (int d0b = -1; d0b <= 1; ++d0b)
            for (int d1a = -1; d1a <= 1; ++d1a)
                for (int d1b = -1; d1b <= 1; ++d1b)
                    for (int acc = 0; acc < 4; ++acc)
                        for (State start = 0; start < 2; ++start) {
                            Automaton a;
                            a.alphabet = ab;
                            a.n_states = 2;
                            a.start = start;
                            a.state_names = {"q0", "q1"};
                            a.accepting = {(acc & 1) != 0, (acc & 2) != 0};
                            a.delta = {d0a, d0b, d1a, d1b};
                            out.push_back(std::move(a));
                        }
    return out;
}

void check_against_oracle(const Automaton& a, const Word& w) {
    auto expected = oracles::naive_owj(a, w);
    RunOutcome got = run_owj(a, w);
    CHECK(got.accepted == expected.accepted);
    CHECK(got.final_state == expected.final_state);
    CHECK(got.sweeps == expected.sweeps);
    CHECK(got.jumps == expected.jumps);
    CHECK(got.steps == expected.steps);
    CHECK(got.consumed == expected.consumed);
    CHECK(got.residue == expected.residue);
}

std::vector<std::vector<int>> reads_per_sweep(const Trace& t) {
    std::vector<std::vector<int>> out;
    for (const RunEvent& e : t.events) {
        if (e.kind == EventKind::sweep_boundary) {
            out.emplace_back();
        } else if (e.kind == EventKind::read || e.kind == EventKind::skip) {
            if (out.empty()) out.emplace_back(); // first pass has no boundary event
            if (e.kind == EventKind::read) out.back().push_back(e.pos);
        }
    }
    return out;
}

} // namespace

TEST_CASE("classical runs") {
    Automaton lab = langtools::gen_lab();

    RunOutcome ab = run_classical(lab, word(lab, "ab"));
    CHECK(ab.accepted);
    CHECK(ab.final_state == 0);
    CHECK(ab.sweeps == 1);
    CHECK(ab.jumps == 0);

    RunOutcome ba = run_classical(lab, word(lab, "ba"));
    CHECK(!ba.accepted);
    CHECK(ba.consumed == 0);
    CHECK(ba.residue == word(lab, "ba"));

    Automaton loop = langtools::gen_complete_random(1, 3);
    RunOutcome eps = run_classical(loop, {});
    CHECK(eps.accepted == loop.accepting[0]);
    CHECK(eps.sweeps == 0);
}

TEST_CASE("one-way jumping run of the Fig-style ten-letter input") {
    Automaton lab = langtools::gen_lab();
    Word w = word(lab, "aaaabbabbb");

    // Frozen from the naive reference simulator.
    RunOutcome o = run_owj(lab, w);
    CHECK(o.accepted);
    CHECK(o.final_state == 0);
    CHECK(o.sweeps == 4);
    CHECK(o.jumps == 12);
    CHECK(o.steps == 22);
    CHECK(o.consumed == 10);
    CHECK(o.residue.empty());

    Trace t = run_owj_traced(lab, w);
    auto reads = reads_per_sweep(t);
    CHECK(reads == std::vector<std::vector<int>>{{0, 4, 6, 7}, {1, 5}, {2, 8}, {3, 9}});

    auto expected = oracles::naive_owj(lab, w);
    CHECK(expected.sweeps == 4);
    CHECK(reads == expected.reads_per_sweep);
    CHECK(expected.skips_per_sweep == std::vector<long long>{6, 4, 2, 0});
}

TEST_CASE("one-way jumping rejects aab with everything consumed") {
    Automaton lab = langtools::gen_lab();
    RunOutcome o = run_owj(lab, word(lab, "aab"));
    CHECK(!o.accepted);
    CHECK(o.final_state == 1);
    CHECK(o.consumed == 3);
    CHECK(o.residue.empty());
    CHECK(o.sweeps == 2);
    CHECK(o.jumps == 1);
    check_against_oracle(lab, word(lab, "aab"));
}

TEST_CASE("one-way jumping leaves unreadable residue on stuck runs") {
    Automaton lab = langtools::gen_lab();
    RunOutcome o = run_owj(lab, word(lab, "bb"));
    CHECK(!o.accepted);
    CHECK(o.residue == word(lab, "bb"));
    CHECK(o.sweeps == 1); // the single started pass consumed nothing
    CHECK(o.consumed == 0);

    Trace t = run_owj_traced(lab, word(lab, "bb"));
    CHECK(t.events.back().kind == EventKind::halt);
    CHECK(t.events.back().reason == HaltReason::reject_stuck);
}

TEST_CASE("empty input never starts a sweep") {
    Automaton lab = langtools::gen_lab();
    RunOutcome o = run_owj(lab, {});
    CHECK(o.accepted); // q0 is accepting
    CHECK(o.sweeps == 0);
    CHECK(o.steps == 0);
}

TEST_CASE("stepper emits the run one event at a time") {
    Automaton lab = langtools::gen_lab();
    Word w = word(lab, "aaaabbabbb");

    // The first pass starts implicitly: step one is already a head move.
    OwjStepper stepper(lab, w);
    RunEvent first = stepper.step();
    CHECK(first.kind == EventKind::read);
    CHECK(first.pos == 0);
    CHECK(first.from_state == 0);
    CHECK(first.to_state == 1);

    RunEvent second = stepper.step();
    CHECK(second.kind == EventKind::skip);
    CHECK(second.pos == 1);
    CHECK(second.from_state == 1);

    // Drains to exactly the traced run.
    Trace reference = run_owj_traced(lab, w);
    OwjStepper replay(lab, w);
    for (const RunEvent& e : reference.events) {
        RunEvent got = replay.step();
        CHECK(got.kind == e.kind);
        CHECK(got.pos == e.pos);
        CHECK(got.symbol == e.symbol);
        CHECK(got.from_state == e.from_state);
        CHECK(got.to_state == e.to_state);
        CHECK(got.sweep == e.sweep);
    }
    CHECK(replay.halted());
    try {
        replay.step();
        FAIL("expected AlreadyHalted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::already_halted);
    }
}

TEST_CASE("alphabet mismatch is rejected") {
    Automaton lab = langtools::gen_lab();
    try {
        run_owj(lab, {0, 5});
        FAIL("expected AlphabetMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::alphabet_mismatch);
    }
}

TEST_CASE("jumping acceptance on the canonical machine") {
    Automaton lab = langtools::gen_lab();
    CHECK(run_jumping(lab, word(lab, "ba")));
    CHECK(!run_jumping(lab, word(lab, "aab")));
    CHECK(run_jumping(lab, {}) == lab.accepting[static_cast<size_t>(lab.start)]);
    CHECK(run_jumping(lab, word(lab, "bbaa")));
    CHECK(!run_jumping(lab, word(lab, "bba")));
}

TEST_CASE("jumping acceptance on an Nfa matches brute force") {
    Nfa nfa = langtools::gen_kth_last(2);
    for (int len = 0; len <= 6; ++len) {
        Word w(static_cast<size_t>(len), 0);
        while (true) {
            CHECK(run_jumping(nfa, w) == oracles::naive_jumping(Acceptor{nfa}, w));
            bool done = true;
            for (size_t i = w.size(); i-- > 0;) {
                if (w[i] + 1 < 2) {
                    w[i] += 1;
                    std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
}

TEST_CASE("jumping search respects the node cap") {
    Automaton lab = langtools::gen_lab();
    try {
        run_jumping(lab, word(lab, "aaaabbbb"), 4);
        FAIL("expected SearchBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::search_budget_exceeded);
    }
}

TEST_CASE("trace replay reproduces outcome counters") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Automaton a = langtools::gen_partial_random(1 + static_cast<int>(rng() % 5),
                                                    static_cast<double>(rng() % 101) / 100.0, rng());
        Word w;
        for (int i = 0; i < static_cast<int>(rng() % 10); ++i)
            w.push_back(static_cast<Symbol>(rng() % 2));
        Trace t = run_owj_traced(a, w);

        long long jumps = 0, steps = 0;
        int sweeps = 0, consumed = 0;
        std::vector<bool> read_positions(w.size(), false);
        int last_pos_this_sweep = -1;
        for (const RunEvent& e : t.events) {
            switch (e.kind) {
                case EventKind::sweep_boundary:
                    ++sweeps;
                    CHECK(e.sweep == sweeps);
                    last_pos_this_sweep = -1;
                    break;
                case EventKind::read:
                    if (sweeps == 0) sweeps = 1; // implicit first pass
                    ++consumed;
                    ++steps;
                    CHECK(!read_positions[static_cast<size_t>(e.pos)]);
                    read_positions[static_cast<size_t>(e.pos)] = true;
                    CHECK(e.pos > last_pos_this_sweep); // order preserved in a pass
                    last_pos_this_sweep = e.pos;
                    break;
                case EventKind::skip:
                    if (sweeps == 0) sweeps = 1;
                    ++jumps;
                    ++steps;
                    CHECK(e.pos > last_pos_this_sweep);
                    last_pos_this_sweep = e.pos;
                    break;
                case EventKind::halt:
                    break;
            }
        }
        CHECK(t.events.back().kind == EventKind::halt);
        CHECK(sweeps == t.outcome.sweeps);
        CHECK(jumps == t.outcome.jumps);
        CHECK(steps == t.outcome.steps);
        CHECK(consumed == t.outcome.consumed);
        CHECK(consumed + static_cast<int>(t.outcome.residue.size()) ==
              static_cast<int>(w.size()));
        // Residue preserves original order of unread positions.
        Word residue_expected;
        for (size_t i = 0; i < w.size(); ++i)
            if (!read_positions[i]) residue_expected.push_back(w[i]);
        CHECK(t.outcome.residue == residue_expected);
    }
}

TEST_CASE("exhaustive 2-state sweep: engine agrees with the naive simulator") {
    auto machines = all_two_state_machines();
    for (const Automaton& a : machines) {
        for (int len = 0; len <= 8; ++len) {
            Word w(static_cast<size_t>(len), 0);
            while (true) {
                check_against_oracle(a, w);
                bool done = true;
                for (size_t i = w.size(); i-- > 0;) {
                    if (w[i] + 1 < 2) {
                        w[i] += 1;
                        std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
}

TEST_CASE("complete machines: one-way jumping equals classical") {
    // Exhaustive over complete 2-state binary machines, words to length 8.
    for (const Automaton& a : all_two_state_machines()) {
        if (!is_complete(a)) continue;
        for (int len = 0; len <= 8; ++len) {
            Word w(static_cast<size_t>(len), 0);
            while (true) {
                RunOutcome jo = run_owj(a, w);
                RunOutcome co = run_classical(a, w);
                CHECK(jo.accepted == co.accepted);
                CHECK(jo.final_state == co.final_state);
                CHECK(jo.jumps == 0);
                CHECK(jo.sweeps == (len == 0 ? 0 : 1));
                bool done = true;
                for (size_t i = w.size(); i-- > 0;) {
                    if (w[i] + 1 < 2) {
                        w[i] += 1;
                        std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }

    // Randomized across sizes.
    std::mt19937_64 rng(23);
    int pairs = 0;
    while (pairs < 1000) {
        Automaton a = langtools::gen_complete_random(1 + static_cast<int>(rng() % 6), rng());
        Word w;
        for (int i = 0; i < static_cast<int>(rng() % 12); ++i)
            w.push_back(static_cast<Symbol>(rng() % 2));
        RunOutcome jo = run_owj(a, w);
        RunOutcome co = run_classical(a, w);
        CHECK(jo.accepted == co.accepted);
        CHECK(jo.final_state == co.final_state);
        ++pairs;
    }
}

TEST_CASE("quadratic step bound and stuck-pass placement hold on random runs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        Automaton a = langtools::gen_partial_random(1 + static_cast<int>(rng() % 6),
                                                    static_cast<double>(rng() % 101) / 100.0, rng());
        int len = static_cast<int>(rng() % 14);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(rng() % 2));
        Trace t = run_owj_traced(a, w);
        const RunOutcome& o = t.outcome;
        CHECK(o.sweeps <= len);
        CHECK(o.steps <= static_cast<long long>(len) * o.sweeps);
        CHECK(o.steps <= static_cast<long long>(len) * len);

        // A pass with zero reads must be the last one.
        int reads_in_pass = 0;
        bool saw_empty_pass = false;
        for (const RunEvent& e : t.events) {
            if (e.kind == EventKind::sweep_boundary) {
                if (e.sweep > 1) {
                    CHECK(reads_in_pass > 0);
                }
                reads_in_pass = 0;
            } else if (e.kind == EventKind::read) {
                ++reads_in_pass;
            } else if (e.kind == EventKind::halt) {
                saw_empty_pass = o.sweeps > 0 && reads_in_pass == 0;
            }
        }
        if (saw_empty_pass) CHECK(t.events.back().reason == HaltReason::reject_stuck);
    }
}

TEST_CASE("one-way jumping acceptance implies jumping acceptance") {
    for (const Automaton& a : all_two_state_machines()) {
        for (int len = 0; len <= 5; ++len) {
            Word w(static_cast<size_t>(len), 0);
            while (true) {
                if (run_owj(a, w).accepted) CHECK(run_jumping(a, w));
                bool done = true;
                for (size_t i = w.size(); i-- > 0;) {
                    if (w[i] + 1 < 2) {
                        w[i] += 1;
                        std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
}

TEST_CASE("jumping acceptance matches brute force and is Parikh-invariant") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        Automaton a = langtools::gen_partial_random(1 + static_cast<int>(rng() % 4),
                                                    static_cast<double>(rng() % 101) / 100.0, rng());
        int len = static_cast<int>(rng() % 8);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(rng() % 2));

        bool got = run_jumping(a, w);
        CHECK(got == oracles::naive_jumping(Acceptor{a}, w));

        Word shuffled = w;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(run_jumping(a, shuffled) == got);
    }
}

TEST_CASE("trace serialization formats") {
    Automaton lab = langtools::gen_lab();
    Trace t = run_owj_traced(lab, word(lab, "ab"));

    CHECK(trace_to_text(t, lab) ==
          "read 0 a q0 -> q1\n"
          "read 1 b q1 -> q0\n"
          "halt accept\n");

    CHECK(trace_to_json(t, lab, word(lab, "ab")) ==
          R"({"engine":"owj","events":[)"
          R"({"from":"q0","kind":"read","pos":0,"symbol":"a","to":"q1"},)"
          R"({"from":"q1","kind":"read","pos":1,"symbol":"b","to":"q0"},)"
          R"({"kind":"halt","reason":"accept"}],)"
          R"("outcome":{"accepted":true,"consumed":2,"final_state":"q0",)"
          R"("jumps":0,"residue":"","steps":2,"sweeps":1},"word":"ab"})");

    Trace big = run_owj_traced(lab, word(lab, "aaaabbabbb"));
    CHECK(render_sweep_rows(big, lab, word(lab, "aaaabbabbb")) ==
          "sweep 1: [a]aaa[b]b[a][b]bb\n"
          "sweep 2: [a]aa[b]bb\n"
          "sweep 3: [a]a[b]b\n"
          "sweep 4: [a][b]\n"
          "ACCEPT sweeps=4 jumps=12 steps=22\n");

    Trace empty = run_owj_traced(lab, {});
    CHECK(render_sweep_rows(empty, lab, {}) == "ACCEPT sweeps=0 jumps=0 steps=0\n");
}
