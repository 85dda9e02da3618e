// owj — command-line workbench for one-way jumping finite automata.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "owj/analysis.hpp"
#include "owj/error.hpp"
#include "owj/format.hpp"
#include "owj/langtools.hpp"
#include "owj/trace_io.hpp"

using namespace owj;
using engines::Engine;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string out;
    std::string format = "text";
};

void emit(const CommonOpts& common, const std::string& payload) {
    if (common.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(common.out, std::ios::binary);
    if (!f) raise(Errc::syntax_error, "cannot write '" + common.out + "'");
    f << payload;
}

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "owj: " << message << "\n";
    std::exit(2);
}

const Automaton& need_dfa(const Acceptor& acc, const char* verb) {
    if (const auto* dfa = std::get_if<Automaton>(&acc)) return *dfa;
    raise(Errc::unsupported_engine,
          std::string(verb) + " needs a deterministic machine; run determinize first");
}

Engine parse_engine(const std::string& name) {
    try {
        return engines::engine_from_name(name);
    } catch (const Error&) {
        usage_error("unknown engine '" + name + "' (expected classical, owj or jumping)");
    }
}

json outcome_json(const engines::RunOutcome& o, const Alphabet& alphabet,
                  const std::vector<std::string>& state_names) {
    return json{{"accepted", o.accepted},
                {"final_state", state_names[static_cast<size_t>(o.final_state)]},
                {"sweeps", o.sweeps},
                {"jumps", o.jumps},
                {"steps", o.steps},
                {"consumed", o.consumed},
                {"residue", format_word(o.residue, alphabet)}};
}

int cmd_run(const std::string& file, const std::string& word_text, const std::string& engine_name,
            bool with_trace, long long budget, const CommonOpts& common) {
    Engine engine = parse_engine(engine_name);
    if (with_trace && engine != Engine::owj)
        usage_error("--trace is only available with --engine owj");

    Acceptor acc = load_automaton_file(file);
    Word w = parse_word(word_text, acceptor_alphabet(acc));

    if (engine == Engine::jumping) {
        bool accepted = engines::run_jumping(acc, w, budget);
        if (common.format == "json") {
            json doc{{"engine", "jumping"},
                     {"word", format_word(w, acceptor_alphabet(acc))},
                     {"accepted", accepted}};
            emit(common, doc.dump() + "\n");
        } else {
            emit(common, std::string(accepted ? "ACCEPT" : "REJECT") + "\n");
        }
        return 0;
    }

    const Automaton& dfa = need_dfa(acc, "run");
    if (engine == Engine::classical) {
        engines::RunOutcome o = engines::run_classical(dfa, w);
        if (common.format == "json") {
            json doc{{"engine", "classical"},
                     {"word", format_word(w, dfa.alphabet)},
                     {"outcome", outcome_json(o, dfa.alphabet, dfa.state_names)}};
            emit(common, doc.dump() + "\n");
        } else {
            emit(common, engines::outcome_line(o, dfa.alphabet) + "\n");
        }
        return 0;
    }

    engines::Trace t = engines::run_owj_traced(dfa, w);
    if (common.format == "json") {
        if (with_trace) {
            emit(common, engines::trace_to_json(t, dfa, w) + "\n");
        } else {
            json doc{{"engine", "owj"},
                     {"word", format_word(w, dfa.alphabet)},
                     {"outcome", outcome_json(t.outcome, dfa.alphabet, dfa.state_names)}};
            emit(common, doc.dump() + "\n");
        }
    } else {
        std::string text;
        if (with_trace) text += engines::trace_to_text(t, dfa);
        text += engines::outcome_line(t.outcome, dfa.alphabet) + "\n";
        emit(common, text);
    }
    return 0;
}

int cmd_trace(const std::string& file, const std::string& word_text,
              const std::string& engine_name, const CommonOpts& common) {
    if (parse_engine(engine_name) != Engine::owj)
        usage_error("trace renders one-way jumping runs; use --engine owj");
    Acceptor acc = load_automaton_file(file);
    const Automaton& dfa = need_dfa(acc, "trace");
    Word w = parse_word(word_text, dfa.alphabet);
    engines::Trace t = engines::run_owj_traced(dfa, w);
    if (common.format == "json") emit(common, engines::trace_to_json(t, dfa, w) + "\n");
    else emit(common, engines::render_sweep_rows(t, dfa, w));
    return 0;
}

int cmd_profile(const std::string& file, const std::string& engine_name, int n_max,
                const analysis::ProfileOptions& opts, const CommonOpts& common) {
    if (parse_engine(engine_name) != Engine::owj)
        usage_error("profile measures one-way jumping sweeps; use --engine owj");
    Acceptor acc = load_automaton_file(file);
    const Automaton& dfa = need_dfa(acc, "profile");
    analysis::SweepProfile p = analysis::sweep_complexity(dfa, n_max, opts, file);

    if (common.format == "json") {
        json rows = json::array();
        for (const auto& s : p.per_length)
            rows.push_back({{"n", s.n},
                            {"max_sweeps", s.max_sweeps},
                            {"witness", format_word(s.witness, dfa.alphabet)},
                            {"max_jumps", s.max_jumps},
                            {"mean_jumps", s.mean_jumps},
                            {"words_examined", s.words_examined},
                            {"mode", analysis::scan_mode_name(s.mode)}});
        json doc{{"automaton", p.automaton_label}, {"seed", p.seed}, {"rows", rows}};
        if (p.per_length.size() >= 6) {
            analysis::GrowthReport g = analysis::classify_growth(p);
            doc["growth"] = {{"class", analysis::growth_class_name(g.cls)},
                             {"slope", g.slope},
                             {"plateau", g.plateau}};
        }
        emit(common, doc.dump() + "\n");
        return 0;
    }

    std::ostringstream csv;
    analysis::write_profile_csv(p, dfa.alphabet, csv);
    if (common.format == "text" && p.per_length.size() >= 6) {
        analysis::GrowthReport g = analysis::classify_growth(p);
        std::ostringstream line;
        line << "# growth: " << analysis::growth_class_name(g.cls) << " (slope " << g.slope
             << ", heuristic)\n";
        emit(common, csv.str() + line.str());
    } else {
        emit(common, csv.str());
    }
    return 0;
}

int cmd_enumerate(const std::string& file, const std::string& engine_name, int max_len,
                  long long cap, const CommonOpts& common) {
    Engine engine = parse_engine(engine_name);
    Acceptor acc = load_automaton_file(file);
    langtools::LanguageSample s = langtools::enumerate_language(acc, engine, max_len, cap);
    if (common.format == "json") {
        json words = json::array();
        const int k = s.alphabet.size();
        Word w;
        long long index = 0;
        for (int len = 0; len <= s.max_len; ++len) {
            if (len > 0 && k == 0) break;
            w.assign(static_cast<size_t>(len), 0);
            bool more = true;
            while (more) {
                words.push_back(json::array(
                    {format_word(w, s.alphabet), s.bits[static_cast<size_t>(index)] ? 1 : 0}));
                ++index;
                more = [&] {
                    for (size_t i = w.size(); i-- > 0;) {
                        if (w[i] + 1 < k) {
                            w[i] += 1;
                            std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
                            return true;
                        }
                    }
                    return false;
                }();
            }
        }
        json doc{{"engine", engines::engine_name(engine)}, {"max_len", s.max_len}, {"sample", words}};
        emit(common, doc.dump() + "\n");
    } else {
        std::ostringstream out;
        langtools::write_sample(s, out);
        emit(common, out.str());
    }
    return 0;
}

int cmd_compare(const std::string& file1, const std::string& file2,
                const std::string& engine_pair, int n, long long cap, const CommonOpts& common) {
    std::string first = engine_pair, second = engine_pair;
    if (auto comma = engine_pair.find(','); comma != std::string::npos) {
        first = engine_pair.substr(0, comma);
        second = engine_pair.substr(comma + 1);
    }
    Engine e1 = parse_engine(first), e2 = parse_engine(second);
    Acceptor a1 = load_automaton_file(file1);
    Acceptor a2 = file2.empty() ? a1 : load_automaton_file(file2);

    auto diff = langtools::equivalent_up_to(a1, e1, a2, e2, n, cap);
    if (common.format == "json") {
        json doc{{"equal", !diff.has_value()}, {"n", n}};
        if (diff) doc["counterexample"] = format_word(*diff, acceptor_alphabet(a1));
        emit(common, doc.dump() + "\n");
    } else if (diff) {
        emit(common, "Counterexample: " + format_word(*diff, acceptor_alphabet(a1)) + "\n");
    } else {
        emit(common, "Equal\n");
    }
    return 0;
}

int cmd_determinize(const std::string& file, long long state_cap, const CommonOpts& common) {
    Acceptor acc = load_automaton_file(file);
    Nfa nfa = std::holds_alternative<Nfa>(acc) ? std::get<Nfa>(acc)
                                               : to_nfa(std::get<Automaton>(acc));
    emit(common, serialize(langtools::subset_construction(nfa, state_cap)));
    return 0;
}

int cmd_minimize(const std::string& file, bool require_complete, const CommonOpts& common) {
    Acceptor acc = load_automaton_file(file);
    const Automaton& dfa = need_dfa(acc, "minimize");
    emit(common, serialize(langtools::minimize(dfa, require_complete)));
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, std::uint64_t seed,
            const CommonOpts& common) {
    emit(common, serialize(langtools::gen_family(family, args, seed)));
    return 0;
}

int cmd_probe(const std::string& file, const std::string& engine_name, int max_len, int p, int s,
              long long cap, const CommonOpts& common) {
    Engine engine = parse_engine(engine_name);
    Acceptor acc = load_automaton_file(file);
    langtools::LanguageSample sample = langtools::enumerate_language(acc, engine, max_len, cap);
    langtools::ResidualTable table = langtools::residual_probe(sample, p, s);

    if (common.format == "csv") {
        std::ostringstream out;
        langtools::write_residual_csv(table, sample.alphabet, out);
        emit(common, out.str());
    } else if (common.format == "json") {
        json doc{{"engine", engines::engine_name(engine)},
                 {"max_len", max_len},
                 {"p", p},
                 {"s", s},
                 {"distinct_rows", table.distinct_rows}};
        emit(common, doc.dump() + "\n");
    } else {
        std::ostringstream out;
        out << "consistent with ≤ " << table.distinct_rows << " residuals up to (" << p << ","
            << s << ")\n";
        emit(common, out.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for DFAs run in one-way jumping mode"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string engine, file, file2, word, family;
    std::vector<std::string> family_args;
    bool with_trace = false, require_complete = false;
    int n = 8, max_len = 14, p = 6, s = 7;
    long long budget = -1;
    std::uint64_t seed = analysis::kDefaultSeed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", common.out, "write output to FILE instead of stdout");
    };

    CLI::App* run = app.add_subcommand("run", "run one word and print the verdict");
    run->add_option("--engine", engine, "classical|owj|jumping")->required();
    run->add_flag("--trace", with_trace, "include the event trace (owj only)");
    run->add_option("--budget", budget, "jumping-search node cap");
    run->add_option("file", file, "automaton file")->required();
    run->add_option("word", word, "input word")->required();
    add_common(run);

    CLI::App* trace = app.add_subcommand("trace", "render a run sweep by sweep");
    trace->add_option("--engine", engine, "must be owj")->required();
    trace->add_option("file", file)->required();
    trace->add_option("word", word)->required();
    add_common(trace);

    CLI::App* profile = app.add_subcommand("profile", "worst-case sweep/jump statistics per length");
    profile->add_option("--engine", engine, "must be owj")->required();
    profile->add_option("--n", n, "maximum input length")->required();
    profile->add_option("--budget", budget, "exhaustive-scan threshold per length");
    profile->add_option("--seed", seed, "sampling seed");
    profile->add_option("file", file)->required();
    add_common(profile);

    CLI::App* enumerate = app.add_subcommand("enumerate", "membership of every word up to a length");
    enumerate->add_option("--engine", engine, "classical|owj|jumping")->required();
    enumerate->add_option("--max-len", max_len, "maximum word length")->required();
    enumerate->add_option("--budget", budget, "word-count cap");
    enumerate->add_option("file", file)->required();
    add_common(enumerate);

    CLI::App* compare = app.add_subcommand("compare", "bounded language equivalence");
    compare->add_option("--engine", engine, "ENGINE or ENGINE1,ENGINE2")->required();
    compare->add_option("--n", n, "length bound (default 8)");
    compare->add_option("--budget", budget, "word-count cap");
    compare->add_option("file", file)->required();
    compare->add_option("file2", file2, "second automaton (defaults to the first)");
    add_common(compare);

    CLI::App* determinize = app.add_subcommand("determinize", "subset construction");
    determinize->add_option("--budget", budget, "subset-state cap");
    determinize->add_option("file", file)->required();
    add_common(determinize);

    CLI::App* minimize = app.add_subcommand("minimize", "minimal complete DFA");
    minimize->add_flag("--require-complete", require_complete,
                       "fail on partial machines instead of adding a sink");
    minimize->add_option("file", file)->required();
    add_common(minimize);

    CLI::App* gen = app.add_subcommand("gen", "generate a fixture machine");
    gen->add_option("family", family, "lab | kth_last K | complete_random N | partial_random N D")
        ->required();
    gen->add_option("args", family_args, "family parameters");
    gen->add_option("--seed", seed, "seed for random families");
    add_common(gen);

    CLI::App* probe = app.add_subcommand("probe", "bounded residual (Myhill-Nerode) table");
    probe->add_option("--engine", engine, "sample engine (default owj)");
    probe->add_option("--max-len", max_len, "sample window (default 14)");
    probe->add_option("--p", p, "prefix length bound (default 6)");
    probe->add_option("--s", s, "suffix length bound (default 7)");
    probe->add_option("--budget", budget, "word-count cap");
    probe->add_option("file", file)->required();
    add_common(probe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if ((*run || *trace || *compare || *enumerate) && common.format == "csv")
            usage_error("this subcommand has no csv output (use text or json)");
        if ((*determinize || *minimize) && common.format != "text")
            usage_error("automaton output uses the text format only");
        if (*run)
            return cmd_run(file, word, engine, with_trace,
                           budget > 0 ? budget : engines::kDefaultJumpingNodeCap, common);
        if (*trace) return cmd_trace(file, word, engine, common);
        if (*profile) {
            analysis::ProfileOptions opts;
            if (budget > 0) opts.budget = budget;
            opts.seed = seed;
            return cmd_profile(file, engine, n, opts, common);
        }
        if (*enumerate)
            return cmd_enumerate(file, engine, max_len,
                                 budget > 0 ? budget : langtools::kDefaultEnumerationCap, common);
        if (*compare)
            return cmd_compare(file, file2, engine, n,
                               budget > 0 ? budget : langtools::kDefaultEnumerationCap, common);
        if (*determinize)
            return cmd_determinize(file, budget > 0 ? budget : langtools::kDefaultSubsetCap,
                                   common);
        if (*minimize) return cmd_minimize(file, require_complete, common);
        if (*gen) {
            if (common.format != "text") usage_error("gen writes the text format only");
            return cmd_gen(family, family_args, seed, common);
        }
        if (*probe) {
            if (engine.empty()) engine = "owj";
            return cmd_probe(file, engine, max_len, p, s,
                             budget > 0 ? budget : langtools::kDefaultEnumerationCap, common);
        }
    } catch (const Error& e) {
        std::cerr << "owj: error [" << errc_module(e.code()) << "] " << errc_name(e.code()) << ": "
                  << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "owj: error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
