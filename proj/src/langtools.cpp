#include "owj/langtools.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <random>
#include <thread>

#include "owj/error.hpp"

namespace owj::langtools {

using engines::Engine;

namespace {

bool nfa_accepts(const Nfa& n, const Word& w) {
    std::vector<bool> current(static_cast<size_t>(n.n_states), false);
    current[static_cast<size_t>(n.start)] = true;
    std::vector<bool> next(static_cast<size_t>(n.n_states), false);
    for (Symbol x : w) {
        if (x < 0 || x >= n.alphabet.size())
            raise(Errc::alphabet_mismatch, "word symbol outside the acceptor's alphabet");
        std::fill(next.begin(), next.end(), false);
        bool any = false;
        for (State q = 0; q < n.n_states; ++q) {
            if (!current[static_cast<size_t>(q)]) continue;
            for (State to : n.targets(q, x)) {
                next[static_cast<size_t>(to)] = true;
                any = true;
            }
        }
        if (!any) return false;
        std::swap(current, next);
    }
    for (State q = 0; q < n.n_states; ++q)
        if (current[static_cast<size_t>(q)] && n.accepting[static_cast<size_t>(q)]) return true;
    return false;
}

long long pow_or_raise(int k, int n, long long cap, Errc code) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (k == 0) return 0;
        if (total > cap / k) raise(code, "word space exceeds the configured cap");
        total *= k;
    }
    return total;
}

long long count_words_up_to(int k, int max_len, long long cap) {
    long long count = 0;
    for (int n = 0; n <= max_len; ++n) {
        long long layer = pow_or_raise(k, n, cap, Errc::cap_exceeded);
        if (count > cap - layer) raise(Errc::cap_exceeded, "word space exceeds the configured cap");
        count += layer;
    }
    return count;
}

Word unrank(long long index, int n, int k) {
    Word w(static_cast<size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<Symbol>(index % k);
        index /= k;
    }
    return w;
}

bool lex_increment(Word& w, int k) {
    for (size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1 < k) {
            w[i] += 1;
            std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

bool membership(const Acceptor& a, Engine e, const Word& w, long long jumping_cap) {
    if (const auto* dfa = std::get_if<Automaton>(&a)) {
        switch (e) {
            case Engine::classical: return engines::run_classical(*dfa, w).accepted;
            case Engine::owj: return engines::run_owj(*dfa, w).accepted;
            case Engine::jumping: return engines::run_jumping(*dfa, w, jumping_cap);
        }
    }
    const Nfa& nfa = std::get<Nfa>(a);
    switch (e) {
        case Engine::classical: return nfa_accepts(nfa, w);
        case Engine::jumping: return engines::run_jumping(nfa, w, jumping_cap);
        case Engine::owj:
            raise(Errc::unsupported_engine,
                  "one-way jumping semantics is defined for deterministic machines only");
    }
    return false;
}

long long LanguageSample::rank(const Word& w) const {
    const int k = alphabet.size();
    if (static_cast<int>(w.size()) > max_len)
        raise(Errc::bounds_exceed_sample, "word longer than the sampled window");
    long long offset = 0, layer = 1;
    for (size_t i = 0; i < w.size(); ++i) {
        offset += layer;
        layer *= k;
    }
    long long value = 0;
    for (Symbol x : w) {
        if (x < 0 || x >= k)
            raise(Errc::alphabet_mismatch, "word symbol outside the sample's alphabet");
        value = value * k + x;
    }
    return offset + value;
}

LanguageSample enumerate_language(const Acceptor& a, Engine e, int max_len, long long cap,
                                  int threads) {
    const Alphabet& alphabet = acceptor_alphabet(a);
    const int k = alphabet.size();
    LanguageSample sample;
    sample.alphabet = alphabet;
    sample.max_len = max_len;
    sample.bits.assign(static_cast<size_t>(count_words_up_to(k, max_len, cap)), 0);

    long long offset = 0;
    for (int n = 0; n <= max_len; ++n) {
        long long layer = 1;
        for (int i = 0; i < n; ++i) layer *= k;
        if (layer == 0) break;
        int pool_size = threads > 0 ? threads
                                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        long long chunks = std::min<long long>(pool_size, std::max<long long>(1, layer / 4096));
        auto work = [&](long long c) {
            long long begin = layer * c / chunks;
            long long end = layer * (c + 1) / chunks;
            if (begin >= end) return;
            Word w = unrank(begin, n, k);
            for (long long i = begin; i < end; ++i) {
                sample.bits[static_cast<size_t>(offset + i)] = membership(a, e, w) ? 1 : 0;
                lex_increment(w, k);
            }
        };
        if (chunks == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (long long c = 0; c < chunks; ++c) pool.emplace_back(work, c);
            for (auto& t : pool) t.join();
        }
        offset += layer;
    }
    return sample;
}

std::optional<Word> equivalent_up_to(const Acceptor& a1, Engine e1, const Acceptor& a2, Engine e2,
                                     int n, long long cap) {
    const Alphabet& alphabet = acceptor_alphabet(a1);
    if (!(alphabet == acceptor_alphabet(a2)))
        raise(Errc::alphabet_mismatch, "compared acceptors have different alphabets");
    count_words_up_to(alphabet.size(), n, cap);

    const int k = alphabet.size();
    for (int len = 0; len <= n; ++len) {
        Word w(static_cast<size_t>(len), 0);
        if (len > 0 && k == 0) break;
        while (true) {
            if (membership(a1, e1, w) != membership(a2, e2, w)) return w;
            if (!lex_increment(w, k)) break;
        }
    }
    return std::nullopt;
}

ResidualTable residual_probe(const LanguageSample& sample, int p, int s) {
    if (p < 0 || s < 0 || p + s > sample.max_len)
        raise(Errc::bounds_exceed_sample,
              "prefix/suffix bounds (" + std::to_string(p) + "," + std::to_string(s) +
                  ") exceed the sampled window of length " + std::to_string(sample.max_len));
    const int k = sample.alphabet.size();

    auto words_up_to = [&](int bound) {
        std::vector<Word> out;
        for (int len = 0; len <= bound; ++len) {
            if (len > 0 && k == 0) break;
            Word w(static_cast<size_t>(len), 0);
            while (true) {
                out.push_back(w);
                if (!lex_increment(w, k)) break;
            }
        }
        return out;
    };

    ResidualTable t;
    t.p = p;
    t.s = s;
    t.prefixes = words_up_to(p);
    std::vector<Word> suffixes = words_up_to(s);

    std::map<std::vector<bool>, int> classes;
    for (const Word& prefix : t.prefixes) {
        std::vector<bool> row;
        row.reserve(suffixes.size());
        Word concat = prefix;
        for (const Word& suffix : suffixes) {
            concat.resize(prefix.size());
            concat.insert(concat.end(), suffix.begin(), suffix.end());
            row.push_back(sample.member(concat));
        }
        auto [it, inserted] = classes.emplace(row, static_cast<int>(classes.size()));
        t.row_class.push_back(it->second);
        t.rows.push_back(std::move(row));
    }
    t.distinct_rows = static_cast<int>(classes.size());
    return t;
}

Automaton subset_construction(const Nfa& n, long long state_cap) {
    const int k = n.alphabet.size();
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<State> flat_delta;
    std::queue<State> pending;

    auto intern = [&](std::vector<State> subset) {
        auto [it, inserted] = ids.emplace(std::move(subset), static_cast<State>(subsets.size()));
        if (inserted) {
            if (static_cast<long long>(subsets.size()) >= state_cap)
                raise(Errc::state_cap_exceeded, "subset construction exceeds the state cap");
            subsets.push_back(it->first);
            pending.push(it->second);
        }
        return it->second;
    };

    intern({n.start});
    std::vector<std::vector<State>> rows;
    while (!pending.empty()) {
        State id = pending.front();
        pending.pop();
        std::vector<State> row(static_cast<size_t>(k));
        for (Symbol x = 0; x < k; ++x) {
            std::vector<bool> mark(static_cast<size_t>(n.n_states), false);
            for (State q : subsets[static_cast<size_t>(id)])
                for (State to : n.targets(q, x)) mark[static_cast<size_t>(to)] = true;
            std::vector<State> target;
            for (State q = 0; q < n.n_states; ++q)
                if (mark[static_cast<size_t>(q)]) target.push_back(q);
            row[static_cast<size_t>(x)] = intern(std::move(target));
        }
        rows.push_back(std::move(row));
    }

    Automaton a;
    a.alphabet = n.alphabet;
    a.n_states = static_cast<int>(subsets.size());
    a.start = 0;
    a.accepting.assign(static_cast<size_t>(a.n_states), false);
    for (State id = 0; id < a.n_states; ++id) {
        a.state_names.push_back("q" + std::to_string(id));
        for (State q : subsets[static_cast<size_t>(id)])
            if (n.accepting[static_cast<size_t>(q)]) a.accepting[static_cast<size_t>(id)] = true;
    }
    a.delta.assign(static_cast<size_t>(a.n_states) * k, -1);
    for (State id = 0; id < a.n_states; ++id)
        for (Symbol x = 0; x < k; ++x)
            a.delta[static_cast<size_t>(id) * k + x] = rows[static_cast<size_t>(id)][static_cast<size_t>(x)];
    return a;
}

namespace {

// Reachable part of a complete DFA, renumbered in BFS discovery order.
Automaton reachable_part(const Automaton& a) {
    const int k = a.alphabet.size();
    std::vector<State> order;
    std::vector<State> remap(static_cast<size_t>(a.n_states), -1);
    std::queue<State> pending;
    remap[static_cast<size_t>(a.start)] = 0;
    order.push_back(a.start);
    pending.push(a.start);
    while (!pending.empty()) {
        State q = pending.front();
        pending.pop();
        for (Symbol x = 0; x < k; ++x) {
            State to = a.next(q, x);
            if (remap[static_cast<size_t>(to)] >= 0) continue;
            remap[static_cast<size_t>(to)] = static_cast<State>(order.size());
            order.push_back(to);
            pending.push(to);
        }
    }
    Automaton r;
    r.alphabet = a.alphabet;
    r.n_states = static_cast<int>(order.size());
    r.start = 0;
    r.accepting.assign(static_cast<size_t>(r.n_states), false);
    r.delta.assign(static_cast<size_t>(r.n_states) * k, -1);
    for (State q = 0; q < r.n_states; ++q) {
        State old = order[static_cast<size_t>(q)];
        r.state_names.push_back("q" + std::to_string(q));
        r.accepting[static_cast<size_t>(q)] = a.accepting[static_cast<size_t>(old)];
        for (Symbol x = 0; x < k; ++x)
            r.delta[static_cast<size_t>(q) * k + x] = remap[static_cast<size_t>(a.next(old, x))];
    }
    return r;
}

} // namespace

Automaton minimize(const Automaton& a, bool require_complete) {
    Automaton c = a;
    if (!is_complete(c)) {
        if (require_complete)
            raise(Errc::not_complete, "automaton has undefined transitions and completion is off");
        const int k = c.alphabet.size();
        State sink = c.n_states;
        c.n_states += 1;
        c.state_names.push_back("__sink");
        c.accepting.push_back(false);
        std::vector<State> delta(static_cast<size_t>(c.n_states) * k, sink);
        for (State q = 0; q < sink; ++q)
            for (Symbol x = 0; x < k; ++x)
                if (a.defined(q, x)) delta[static_cast<size_t>(q) * k + x] = a.next(q, x);
        c.delta = std::move(delta);
    }
    c = reachable_part(c);

    // Moore partition refinement: states are grouped by (block, successor
    // blocks) signatures until stable.
    const int k = c.alphabet.size();
    std::vector<int> block(static_cast<size_t>(c.n_states));
    for (State q = 0; q < c.n_states; ++q) block[static_cast<size_t>(q)] = c.accepting[static_cast<size_t>(q)] ? 1 : 0;
    int n_blocks = 2;
    for (;;) {
        std::map<std::vector<int>, int> next_ids;
        std::vector<int> next_block(static_cast<size_t>(c.n_states));
        for (State q = 0; q < c.n_states; ++q) {
            std::vector<int> signature;
            signature.reserve(static_cast<size_t>(k) + 1);
            signature.push_back(block[static_cast<size_t>(q)]);
            for (Symbol x = 0; x < k; ++x)
                signature.push_back(block[static_cast<size_t>(c.next(q, x))]);
            auto [it, inserted] = next_ids.emplace(std::move(signature), static_cast<int>(next_ids.size()));
            next_block[static_cast<size_t>(q)] = it->second;
        }
        int refined = static_cast<int>(next_ids.size());
        block.swap(next_block);
        if (refined == n_blocks) break;
        n_blocks = refined;
    }

    Automaton m;
    m.alphabet = c.alphabet;
    m.n_states = n_blocks;
    m.start = block[static_cast<size_t>(c.start)];
    m.accepting.assign(static_cast<size_t>(n_blocks), false);
    m.delta.assign(static_cast<size_t>(n_blocks) * k, -1);
    for (State q = 0; q < c.n_states; ++q) {
        int b = block[static_cast<size_t>(q)];
        m.accepting[static_cast<size_t>(b)] = c.accepting[static_cast<size_t>(q)];
        for (Symbol x = 0; x < k; ++x)
            m.delta[static_cast<size_t>(b) * k + x] = block[static_cast<size_t>(c.next(q, x))];
    }
    for (State q = 0; q < m.n_states; ++q) m.state_names.push_back("q" + std::to_string(q));
    return reachable_part(m);
}

Automaton gen_lab() {
    AutomatonDescription d;
    d.symbols = {"a", "b"};
    d.states = {"q0", "q1"};
    d.start = "q0";
    d.accepting = {"q0"};
    d.transitions = {{"q0", "a", "q1"}, {"q1", "b", "q0"}};
    return validate(d);
}

Nfa gen_kth_last(int k) {
    if (k < 1) raise(Errc::bad_parameter, "kth_last needs k >= 1");
    AutomatonDescription d;
    d.symbols = {"a", "b"};
    for (int i = 0; i <= k; ++i) d.states.push_back("q" + std::to_string(i));
    d.start = "q0";
    d.accepting = {"q" + std::to_string(k)};
    d.transitions.push_back({"q0", "a", "q0"});
    d.transitions.push_back({"q0", "b", "q0"});
    d.transitions.push_back({"q0", "a", "q1"});
    for (int i = 1; i < k; ++i) {
        d.transitions.push_back({"q" + std::to_string(i), "a", "q" + std::to_string(i + 1)});
        d.transitions.push_back({"q" + std::to_string(i), "b", "q" + std::to_string(i + 1)});
    }
    return validate_nfa(d);
}

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t k) {
    std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= bound);
    return v % k;
}

AutomatonDescription random_description(int n_states) {
    AutomatonDescription d;
    d.symbols = {"a", "b"};
    for (int i = 0; i < n_states; ++i) d.states.push_back("q" + std::to_string(i));
    d.start = "q0";
    return d;
}

} // namespace

Automaton gen_complete_random(int n_states, std::uint64_t seed) {
    if (n_states < 1) raise(Errc::bad_parameter, "complete_random needs n_states >= 1");
    std::mt19937_64 rng(seed);
    AutomatonDescription d = random_description(n_states);
    for (int q = 0; q < n_states; ++q)
        for (const char* sym : {"a", "b"}) {
            State to = static_cast<State>(draw_below(rng, static_cast<std::uint64_t>(n_states)));
            d.transitions.push_back({d.states[static_cast<size_t>(q)], sym,
                                     d.states[static_cast<size_t>(to)]});
        }
    for (int q = 0; q < n_states; ++q)
        if (rng() & 1u) d.accepting.push_back(d.states[static_cast<size_t>(q)]);
    return validate(d);
}

Automaton gen_partial_random(int n_states, double density, std::uint64_t seed) {
    if (n_states < 1) raise(Errc::bad_parameter, "partial_random needs n_states >= 1");
    if (!(density >= 0.0 && density <= 1.0))
        raise(Errc::bad_parameter, "partial_random needs density in [0,1]");
    std::mt19937_64 rng(seed);
    AutomatonDescription d = random_description(n_states);
    for (int q = 0; q < n_states; ++q)
        for (const char* sym : {"a", "b"}) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            State to = static_cast<State>(draw_below(rng, static_cast<std::uint64_t>(n_states)));
            if (u < density)
                d.transitions.push_back({d.states[static_cast<size_t>(q)], sym,
                                         d.states[static_cast<size_t>(to)]});
        }
    for (int q = 0; q < n_states; ++q)
        if (rng() & 1u) d.accepting.push_back(d.states[static_cast<size_t>(q)]);
    return validate(d);
}

Acceptor gen_family(const std::string& name, const std::vector<std::string>& args,
                    std::uint64_t seed) {
    auto want = [&](size_t n) {
        if (args.size() != n)
            raise(Errc::bad_parameter, "family '" + name + "' expects " + std::to_string(n) +
                                           " parameter(s), got " + std::to_string(args.size()));
    };
    auto as_int = [&](const std::string& s) {
        try {
            size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            raise(Errc::bad_parameter, "not an integer: '" + s + "'");
        }
    };
    auto as_double = [&](const std::string& s) {
        try {
            size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            raise(Errc::bad_parameter, "not a number: '" + s + "'");
        }
    };

    if (name == "lab") {
        want(0);
        return gen_lab();
    }
    if (name == "kth_last") {
        want(1);
        long long k = as_int(args[0]);
        if (k < 1 || k > 30) raise(Errc::bad_parameter, "kth_last k out of range");
        return gen_kth_last(static_cast<int>(k));
    }
    if (name == "complete_random") {
        want(1);
        long long n = as_int(args[0]);
        if (n < 1 || n > 1'000'000) raise(Errc::bad_parameter, "complete_random n_states out of range");
        return gen_complete_random(static_cast<int>(n), seed);
    }
    if (name == "partial_random") {
        want(2);
        long long n = as_int(args[0]);
        if (n < 1 || n > 1'000'000) raise(Errc::bad_parameter, "partial_random n_states out of range");
        return gen_partial_random(static_cast<int>(n), as_double(args[1]), seed);
    }
    raise(Errc::unknown_family, "unknown family '" + name + "'");
}

void write_sample(const LanguageSample& s, std::ostream& out) {
    const int k = s.alphabet.size();
    long long index = 0;
    for (int len = 0; len <= s.max_len; ++len) {
        if (len > 0 && k == 0) break;
        Word w(static_cast<size_t>(len), 0);
        while (true) {
            out << format_word(w, s.alphabet) << '\t' << (s.bits[static_cast<size_t>(index)] ? '1' : '0')
                << '\n';
            ++index;
            if (!lex_increment(w, k)) break;
        }
    }
}

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

void write_residual_csv(const ResidualTable& t, const Alphabet& alphabet, std::ostream& out) {
    out << "prefix,row_bits_hex,row_class_id\n";
    for (size_t i = 0; i < t.prefixes.size(); ++i) {
        out << csv_field(format_word(t.prefixes[i], alphabet)) << ',';
        const auto& row = t.rows[i];
        for (size_t j = 0; j < row.size(); j += 4) {
            int nibble = 0;
            for (size_t b = 0; b < 4 && j + b < row.size(); ++b)
                if (row[j + b]) nibble |= 8 >> b;
            out << "0123456789abcdef"[nibble];
        }
        out << ',' << t.row_class[i] << '\n';
    }
}

} // namespace owj::langtools
