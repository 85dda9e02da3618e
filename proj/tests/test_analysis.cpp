#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "owj/analysis.hpp"
#include "owj/error.hpp"
#include "owj/langtools.hpp"
#include "oracles.hpp"

using namespace owj;
using namespace owj::analysis;

namespace {

ProfileOptions exhaustive_opts() {
    ProfileOptions o;
    o.budget = 1 << 20;
    return o;
}

Word ak_bk(int k) {
    Word w;
    for (int i = 0; i < k; ++i) w.push_back(0);
    for (int i = 0; i < k; ++i) w.push_back(1);
    return w;
}

} // namespace

TEST_CASE("sweep profile of the canonical machine matches the naive oracle") {
    Automaton lab = langtools::gen_lab();
    SweepProfile p = sweep_complexity(lab, 10, exhaustive_opts(), "lab");
    REQUIRE(p.per_length.size() == 11);

    for (const LengthStats& s : p.per_length) {
        CHECK(s.mode == ScanMode::exhaustive);
        CHECK(s.max_sweeps <= s.n);

        // Independent recomputation of the worst case at this length.
        int best = 0;
        Word best_word;
        long long best_jumps = 0;
        unsigned long long jumps_sum = 0;
        Word w(static_cast<size_t>(s.n), 0);
        long long count = 0;
        while (true) {
            auto r = oracles::naive_owj(lab, w);
            ++count;
            jumps_sum += static_cast<unsigned long long>(r.jumps);
            best_jumps = std::max(best_jumps, r.jumps);
            if (r.sweeps > best) {
                best = r.sweeps;
                best_word = w;
            }
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
        CHECK(s.max_sweeps == best);
        CHECK(s.witness == best_word);
        CHECK(s.max_jumps == best_jumps);
        CHECK(s.words_examined == count);
        CHECK(s.mean_jumps ==
              doctest::Approx(static_cast<double>(jumps_sum) / static_cast<double>(count)));
    }

    // The ten-letter worst case is at least the Fig-style run's four sweeps.
    CHECK(p.per_length[10].max_sweeps >= 4);
}

TEST_CASE("a^k b^k drives one sweep per balanced pair") {
    Automaton lab = langtools::gen_lab();
    for (int k = 1; k <= 8; ++k) {
        auto o = engines::run_owj(lab, ak_bk(k));
        CHECK(o.accepted);
        CHECK(o.sweeps == k);
        auto naive = oracles::naive_owj(lab, ak_bk(k));
        CHECK(naive.sweeps == k);
    }
}

TEST_CASE("complete machines profile flat") {
    Automaton dfa = langtools::gen_complete_random(3, 99);
    SweepProfile p = sweep_complexity(dfa, 8, exhaustive_opts());
    for (const LengthStats& s : p.per_length) {
        CHECK(s.max_sweeps <= 1);
        CHECK(s.max_jumps == 0);
        CHECK(s.mean_jumps == 0.0);
    }
}

TEST_CASE("exhaustive profiles are deterministic, witnesses included") {
    Automaton lab = langtools::gen_lab();
    SweepProfile p1 = sweep_complexity(lab, 9, exhaustive_opts(), "lab");
    SweepProfile p2 = sweep_complexity(lab, 9, exhaustive_opts(), "lab");
    REQUIRE(p1.per_length.size() == p2.per_length.size());
    for (size_t i = 0; i < p1.per_length.size(); ++i) {
        CHECK(p1.per_length[i].max_sweeps == p2.per_length[i].max_sweeps);
        CHECK(p1.per_length[i].witness == p2.per_length[i].witness);
        CHECK(p1.per_length[i].max_jumps == p2.per_length[i].max_jumps);
        CHECK(p1.per_length[i].words_examined == p2.per_length[i].words_examined);
    }

    std::ostringstream c1, c2;
    write_profile_csv(p1, lab.alphabet, c1);
    write_profile_csv(p2, lab.alphabet, c2);
    CHECK(c1.str() == c2.str());
    CHECK(c1.str().rfind("n,max_sweeps,witness,max_jumps,mean_jumps,words_examined,mode,seed\n",
                         0) == 0);
}

TEST_CASE("profiles do not depend on the worker count") {
    Automaton lab = langtools::gen_lab();
    ProfileOptions serial = exhaustive_opts();
    serial.threads = 1;
    ProfileOptions wide = exhaustive_opts();
    wide.threads = 4;

    SweepProfile p1 = sweep_complexity(lab, 11, serial);
    SweepProfile p4 = sweep_complexity(lab, 11, wide);
    for (size_t i = 0; i < p1.per_length.size(); ++i) {
        CHECK(p1.per_length[i].max_sweeps == p4.per_length[i].max_sweeps);
        CHECK(p1.per_length[i].witness == p4.per_length[i].witness);
        CHECK(p1.per_length[i].max_jumps == p4.per_length[i].max_jumps);
        CHECK(p1.per_length[i].mean_jumps == p4.per_length[i].mean_jumps);
    }

    using langtools::enumerate_language;
    langtools::LanguageSample s1 =
        enumerate_language(Acceptor{lab}, engines::Engine::owj, 10, 1 << 20, 1);
    langtools::LanguageSample s4 =
        enumerate_language(Acceptor{lab}, engines::Engine::owj, 10, 1 << 20, 4);
    CHECK(s1.bits == s4.bits);
}

TEST_CASE("sampled mode never overestimates the exhaustive maximum") {
    Automaton lab = langtools::gen_lab();
    SweepProfile exact = sweep_complexity(lab, 12, exhaustive_opts());

    ProfileOptions sampling;
    sampling.budget = 4; // forces sampling beyond length 2
    sampling.samples_per_length = 500;
    sampling.seed = 5;
    SweepProfile sampled = sweep_complexity(lab, 12, sampling);

    for (size_t i = 0; i < sampled.per_length.size(); ++i) {
        if (sampled.per_length[i].mode == ScanMode::sampled) {
            CHECK(sampled.per_length[i].words_examined == 500);
            CHECK(sampled.per_length[i].max_sweeps <= exact.per_length[i].max_sweeps);
        }
    }
    // Sampling with the same seed is reproducible.
    SweepProfile again = sweep_complexity(lab, 12, sampling);
    for (size_t i = 0; i < sampled.per_length.size(); ++i) {
        CHECK(again.per_length[i].max_sweeps == sampled.per_length[i].max_sweeps);
        CHECK(again.per_length[i].witness == sampled.per_length[i].witness);
    }
}

TEST_CASE("jump statistics") {
    Automaton complete = langtools::gen_complete_random(4, 12);
    for (const JumpStats& s : jump_statistics(complete, 7, exhaustive_opts())) {
        CHECK(s.max_jumps == 0);
        CHECK(s.mean_jumps == 0.0);
    }

    Automaton lab = langtools::gen_lab();
    auto stats = jump_statistics(lab, 6, exhaustive_opts());
    CHECK(stats[0].max_jumps == 0); // empty word
    CHECK(stats[6].max_jumps > 0);
}

TEST_CASE("growth classification") {
    Automaton lab = langtools::gen_lab();

    GrowthReport linear_report = classify_growth(sweep_complexity(lab, 16, exhaustive_opts()));
    CHECK(linear_report.cls == GrowthClass::linear);
    CHECK(linear_report.slope == doctest::Approx(0.5).epsilon(0.2));
    CHECK(!linear_report.plateau);

    Automaton complete = langtools::gen_complete_random(2, 5);
    GrowthReport flat_report = classify_growth(sweep_complexity(complete, 10, exhaustive_opts()));
    CHECK(flat_report.cls == GrowthClass::constant);
    CHECK(flat_report.plateau);

    SweepProfile tiny = sweep_complexity(lab, 2, exhaustive_opts());
    try {
        classify_growth(tiny);
        FAIL("expected InsufficientData");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::insufficient_data);
    }
}

TEST_CASE("step bound holds with ratio at most one") {
    Automaton lab = langtools::gen_lab();
    StepBoundReport r = verify_step_bound(lab, 12, exhaustive_opts());
    CHECK(r.max_ratio <= 1.0);
    CHECK(r.max_ratio > 0.0);
    CHECK(r.worst_n >= 1);

    // Complete machines walk each word once: ratio 1/n.
    Automaton complete = langtools::gen_complete_random(3, 77);
    StepBoundReport rc = verify_step_bound(complete, 8, exhaustive_opts());
    CHECK(rc.max_ratio <= 1.0);

    // Unary machine, exhaustive over unary words.
    AutomatonDescription d;
    d.symbols = {"a"};
    d.states = {"q0", "q1"};
    d.start = "q0";
    d.accepting = {"q1"};
    d.transitions = {{"q0", "a", "q1"}};
    StepBoundReport ru = verify_step_bound(validate(d), 10, exhaustive_opts());
    CHECK(ru.max_ratio <= 1.0);
}

TEST_CASE("profile csv witness quoting handles multi-symbol alphabets") {
    AutomatonDescription d;
    d.symbols = {"go", "stop"};
    d.states = {"q0"};
    d.start = "q0";
    d.accepting = {"q0"};
    d.transitions = {{"q0", "go", "q0"}};
    Automaton a = validate(d);

    SweepProfile p = sweep_complexity(a, 2, exhaustive_opts());
    std::ostringstream out;
    write_profile_csv(p, a.alphabet, out);
    // Comma-joined witness words must be quoted.
    CHECK(out.str().find("\"") != std::string::npos);
}
