#include "owj/trace_io.hpp"

#include <sstream>

#include <json.hpp>

namespace owj::engines {

namespace {

const char* halt_reason_name(HaltReason r) {
    switch (r) {
        case HaltReason::accept: return "accept";
        case HaltReason::reject_empty: return "reject-empty";
        case HaltReason::reject_stuck: return "reject-stuck";
    }
    return "?";
}

} // namespace

std::string trace_to_text(const Trace& t, const Automaton& a) {
    std::ostringstream out;
    auto state = [&](State q) -> const std::string& {
        return a.state_names[static_cast<size_t>(q)];
    };
    for (const RunEvent& e : t.events) {
        switch (e.kind) {
            case EventKind::sweep_boundary:
                out << "sweep " << e.sweep << '\n';
                break;
            case EventKind::read:
                out << "read " << e.pos << ' ' << a.alphabet.name(e.symbol) << ' '
                    << state(e.from_state) << " -> " << state(e.to_state) << '\n';
                break;
            case EventKind::skip:
                out << "skip " << e.pos << ' ' << a.alphabet.name(e.symbol) << ' '
                    << state(e.from_state) << '\n';
                break;
            case EventKind::halt:
                out << "halt " << halt_reason_name(e.reason) << '\n';
                break;
        }
    }
    return out.str();
}

std::string trace_to_json(const Trace& t, const Automaton& a, const Word& w) {
    nlohmann::json events = nlohmann::json::array();
    auto state = [&](State q) { return a.state_names[static_cast<size_t>(q)]; };
    for (const RunEvent& e : t.events) {
        switch (e.kind) {
            case EventKind::sweep_boundary:
                events.push_back({{"kind", "sweep"}, {"sweep", e.sweep}});
                break;
            case EventKind::read:
                events.push_back({{"kind", "read"},
                                  {"pos", e.pos},
                                  {"symbol", a.alphabet.name(e.symbol)},
                                  {"from", state(e.from_state)},
                                  {"to", state(e.to_state)}});
                break;
            case EventKind::skip:
                events.push_back({{"kind", "skip"},
                                  {"pos", e.pos},
                                  {"symbol", a.alphabet.name(e.symbol)},
                                  {"state", state(e.from_state)}});
                break;
            case EventKind::halt:
                events.push_back({{"kind", "halt"}, {"reason", halt_reason_name(e.reason)}});
                break;
        }
    }
    nlohmann::json doc{
        {"engine", "owj"},
        {"word", format_word(w, a.alphabet)},
        {"events", events},
        {"outcome",
         {{"accepted", t.outcome.accepted},
          {"final_state", state(t.outcome.final_state)},
          {"sweeps", t.outcome.sweeps},
          {"jumps", t.outcome.jumps},
          {"steps", t.outcome.steps},
          {"consumed", t.outcome.consumed},
          {"residue", format_word(t.outcome.residue, a.alphabet)}}}};
    return doc.dump();
}

std::string render_sweep_rows(const Trace& t, const Automaton& a, const Word& w) {
    // Positions read in each sweep, in head order. The first pass has no
    // boundary event, so open its group lazily.
    std::vector<std::vector<int>> reads_per_sweep;
    for (const RunEvent& e : t.events) {
        if (e.kind == EventKind::sweep_boundary) {
            reads_per_sweep.emplace_back();
        } else if (e.kind == EventKind::read || e.kind == EventKind::skip) {
            if (reads_per_sweep.empty()) reads_per_sweep.emplace_back();
            if (e.kind == EventKind::read) reads_per_sweep.back().push_back(e.pos);
        }
    }

    std::vector<int> remaining(w.size());
    for (size_t i = 0; i < w.size(); ++i) remaining[i] = static_cast<int>(i);

    const bool bare = a.alphabet.single_char();
    std::ostringstream out;
    for (size_t s = 0; s < reads_per_sweep.size(); ++s) {
        std::vector<bool> read_here(w.size(), false);
        for (int pos : reads_per_sweep[s]) read_here[static_cast<size_t>(pos)] = true;
        out << "sweep " << (s + 1) << ':';
        bool first = true;
        for (int pos : remaining) {
            if (first || !bare) out << ' ';
            const std::string& name = a.alphabet.name(w[static_cast<size_t>(pos)]);
            if (read_here[static_cast<size_t>(pos)]) out << '[' << name << ']';
            else out << name;
            first = false;
        }
        out << '\n';
        std::vector<int> kept;
        for (int pos : remaining)
            if (!read_here[static_cast<size_t>(pos)]) kept.push_back(pos);
        remaining = std::move(kept);
    }
    out << outcome_line(t.outcome, a.alphabet) << '\n';
    return out.str();
}

std::string outcome_line(const RunOutcome& o, const Alphabet& alphabet) {
    std::ostringstream out;
    out << (o.accepted ? "ACCEPT" : "REJECT") << " sweeps=" << o.sweeps << " jumps=" << o.jumps
        << " steps=" << o.steps;
    if (!o.residue.empty()) out << " residue=" << format_word(o.residue, alphabet);
    return out.str();
}

} // namespace owj::engines
