#include "owj/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include "owj/error.hpp"

namespace owj::analysis {

const char* scan_mode_name(ScanMode m) {
    return m == ScanMode::exhaustive ? "exhaustive" : "sampled";
}

const char* growth_class_name(GrowthClass c) {
    switch (c) {
        case GrowthClass::constant: return "constant";
        case GrowthClass::sublinear: return "sublinear";
        case GrowthClass::linear: return "linear";
        case GrowthClass::unclassified: return "unclassified";
    }
    return "?";
}

namespace {

// k^n, or nullopt when it exceeds cap.
std::optional<long long> checked_pow(int k, int n, long long cap) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (k == 0) return 0;
        if (total > cap / k) return std::nullopt;
        total *= k;
    }
    return total;
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

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
    // Rejection sampling keeps the draw exactly uniform and portable.
    std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= bound);
    return v % k;
}

// Order-independent reduction over the runs of one length.
struct Accum {
    int max_sweeps = -1; // -1 until the first word is seen
    Word sweep_witness;
    long long max_jumps = 0;
    unsigned long long jumps_sum = 0;
    long long max_steps = 0;
    Word steps_witness;
    long long words = 0;

    void add(const Word& w, const engines::RunOutcome& o) {
        words += 1;
        jumps_sum += static_cast<unsigned long long>(o.jumps);
        max_jumps = std::max(max_jumps, o.jumps);
        if (o.sweeps > max_sweeps || (o.sweeps == max_sweeps && w < sweep_witness)) {
            max_sweeps = o.sweeps;
            sweep_witness = w;
        }
        if (o.steps > max_steps || (o.steps == max_steps && w < steps_witness)) {
            max_steps = o.steps;
            steps_witness = w;
        }
    }

    void merge(const Accum& other) {
        if (other.words == 0) return;
        if (other.max_sweeps > max_sweeps ||
            (other.max_sweeps == max_sweeps && other.sweep_witness < sweep_witness))
            { max_sweeps = other.max_sweeps; sweep_witness = other.sweep_witness; }
        if (other.max_steps > max_steps ||
            (other.max_steps == max_steps && other.steps_witness < steps_witness))
            { max_steps = other.max_steps; steps_witness = other.steps_witness; }
        max_jumps = std::max(max_jumps, other.max_jumps);
        jumps_sum += other.jumps_sum;
        words += other.words;
    }
};

struct LengthMeasure {
    Accum accum;
    ScanMode mode = ScanMode::exhaustive;
};

LengthMeasure measure_length(const Automaton& a, int n, const ProfileOptions& opts) {
    const int k = a.alphabet.size();
    LengthMeasure m;
    auto total = checked_pow(k, n, std::max<long long>(opts.budget, 1));

    if (total) {
        m.mode = ScanMode::exhaustive;
        long long count = *total;
        if (count == 0) {
            m.accum.max_sweeps = 0; // no words of this length at all
            return m;
        }
        int threads = opts.threads > 0 ? opts.threads
                                       : std::max(1u, std::thread::hardware_concurrency());
        long long chunks = std::min<long long>(threads, std::max<long long>(1, count / 1024));
        std::vector<Accum> partial(static_cast<size_t>(chunks));
        auto work = [&](long long c) {
            long long begin = count * c / chunks;
            long long end = count * (c + 1) / chunks;
            if (begin >= end) return;
            Word w = unrank(begin, n, k);
            for (long long i = begin; i < end; ++i) {
                partial[static_cast<size_t>(c)].add(w, engines::run_owj(a, w));
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
        for (const Accum& p : partial) m.accum.merge(p);
        return m;
    }

    m.mode = ScanMode::sampled;
    std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n + 1)));
    Word w(static_cast<size_t>(n));
    for (int i = 0; i < opts.samples_per_length; ++i) {
        for (auto& x : w) x = static_cast<Symbol>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        m.accum.add(w, engines::run_owj(a, w));
    }
    return m;
}

LengthStats to_stats(int n, const LengthMeasure& m) {
    LengthStats s;
    s.n = n;
    s.mode = m.mode;
    s.words_examined = m.accum.words;
    s.max_sweeps = std::max(m.accum.max_sweeps, 0);
    s.witness = m.accum.sweep_witness;
    s.max_jumps = m.accum.max_jumps;
    s.mean_jumps = m.accum.words > 0
                       ? static_cast<double>(m.accum.jumps_sum) / static_cast<double>(m.accum.words)
                       : 0.0;
    return s;
}

} // namespace

SweepProfile sweep_complexity(const Automaton& a, int n_max, const ProfileOptions& opts,
                              const std::string& label) {
    SweepProfile p;
    p.automaton_label = label;
    p.seed = opts.seed;
    for (int n = 0; n <= n_max; ++n) p.per_length.push_back(to_stats(n, measure_length(a, n, opts)));
    return p;
}

std::vector<JumpStats> jump_statistics(const Automaton& a, int n_max, const ProfileOptions& opts) {
    std::vector<JumpStats> out;
    for (int n = 0; n <= n_max; ++n) {
        LengthStats s = to_stats(n, measure_length(a, n, opts));
        out.push_back({s.n, s.max_jumps, s.mean_jumps});
    }
    return out;
}

GrowthReport classify_growth(const SweepProfile& p, const GrowthOptions& opts) {
    const auto& rows = p.per_length;
    if (rows.size() < 6)
        raise(Errc::insufficient_data,
              "growth classification needs at least 6 measured lengths, got " +
                  std::to_string(rows.size()));

    const size_t from = rows.size() / 2; // top half of measured lengths
    GrowthReport r;

    bool flat = true, monotone = true;
    for (size_t i = from + 1; i < rows.size(); ++i) {
        if (rows[i].max_sweeps != rows[from].max_sweeps) flat = false;
        if (rows[i].max_sweeps < rows[i - 1].max_sweeps) monotone = false;
    }
    r.plateau = flat;

    // Least-squares slope of max_sweeps against n over the tail.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double m = static_cast<double>(rows.size() - from);
    for (size_t i = from; i < rows.size(); ++i) {
        double x = rows[i].n, y = rows[i].max_sweeps;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    double denom = m * sxx - sx * sx;
    r.slope = denom != 0 ? (m * sxy - sx * sy) / denom : 0.0;

    if (flat) r.cls = GrowthClass::constant;
    else if (!monotone) r.cls = GrowthClass::unclassified;
    else if (r.slope >= opts.linear_slope_min && r.slope <= opts.linear_slope_max)
        r.cls = GrowthClass::linear;
    else if (r.slope < opts.linear_slope_min) r.cls = GrowthClass::sublinear;
    else r.cls = GrowthClass::unclassified;
    return r;
}

StepBoundReport verify_step_bound(const Automaton& a, int n_max, const ProfileOptions& opts) {
    StepBoundReport r;
    for (int n = 1; n <= n_max; ++n) {
        LengthMeasure m = measure_length(a, n, opts);
        if (m.accum.words == 0) continue;
        double bound = static_cast<double>(n) * static_cast<double>(n);
        if (static_cast<double>(m.accum.max_steps) > bound)
            raise(Errc::bound_violation,
                  "steps " + std::to_string(m.accum.max_steps) + " > n^2 for word '" +
                      format_word(m.accum.steps_witness, a.alphabet) + "'");
        double ratio = static_cast<double>(m.accum.max_steps) / bound;
        if (ratio > r.max_ratio) {
            r.max_ratio = ratio;
            r.worst_word = m.accum.steps_witness;
            r.worst_n = n;
        }
    }
    return r;
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

std::string format_mean(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_profile_csv(const SweepProfile& p, const Alphabet& alphabet, std::ostream& out) {
    out << "n,max_sweeps,witness,max_jumps,mean_jumps,words_examined,mode,seed\n";
    for (const LengthStats& s : p.per_length) {
        out << s.n << ',' << s.max_sweeps << ',' << csv_field(format_word(s.witness, alphabet))
            << ',' << s.max_jumps << ',' << format_mean(s.mean_jumps) << ',' << s.words_examined
            << ',' << scan_mode_name(s.mode) << ',' << p.seed << '\n';
    }
}

} // namespace owj::analysis
