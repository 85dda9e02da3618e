#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "owj/engines.hpp"

namespace owj::langtools {

inline constexpr long long kDefaultEnumerationCap = 2'000'000;
inline constexpr long long kDefaultSubsetCap = 1 << 20;

/// Membership of one word under the chosen engine. Classical semantics on an
/// Nfa is ordinary NFA acceptance; one-way jumping on an Nfa is unsupported.
bool membership(const Acceptor& a, engines::Engine e, const Word& w,
                long long jumping_cap = engines::kDefaultJumpingNodeCap);

/// Exact membership of every word of length <= max_len, shortlex order
/// (length-major, lexicographic within a length).
struct LanguageSample {
    Alphabet alphabet;
    int max_len = 0;
    std::vector<std::uint8_t> bits; // shortlex-indexed 0/1

    long long size() const { return static_cast<long long>(bits.size()); }
    long long rank(const Word& w) const;
    bool member(const Word& w) const { return bits[static_cast<size_t>(rank(w))] != 0; }
};

/// Runs the chosen engine on every word up to max_len. Throws CapExceeded
/// when the word count would exceed cap.
LanguageSample enumerate_language(const Acceptor& a, engines::Engine e, int max_len,
                                  long long cap = kDefaultEnumerationCap,
                                  int threads = 0);

/// Compares the two acceptors' languages over all words of length <= n and
/// returns the shortlex-first difference, or nullopt when they agree.
/// Requires equal alphabets.
std::optional<Word> equivalent_up_to(const Acceptor& a1, engines::Engine e1,
                                     const Acceptor& a2, engines::Engine e2,
                                     int n, long long cap = kDefaultEnumerationCap);

/// Bounded Myhill-Nerode observation table: rows are prefixes (length <= p),
/// columns suffixes (length <= s), entries membership(prefix . suffix).
/// distinct_rows lower-bounds the state count of any complete DFA for the
/// sampled language; it is a probe, never a regularity verdict.
struct ResidualTable {
    int p = 0;
    int s = 0;
    std::vector<Word> prefixes;              // shortlex
    std::vector<std::vector<bool>> rows;     // one per prefix, suffix-indexed
    std::vector<int> row_class;              // id of first identical row
    int distinct_rows = 0;
};

/// Throws BoundsExceedSample unless p + s <= sample.max_len.
ResidualTable residual_probe(const LanguageSample& sample, int p, int s);

/// Deterministic subset construction: complete DFA over the reachable
/// subsets, states numbered in BFS order from {start}. Throws
/// StateCapExceeded past state_cap subsets.
Automaton subset_construction(const Nfa& n, long long state_cap = kDefaultSubsetCap);

/// Minimal complete DFA for the classical language of a. Partial machines
/// are completed with a fresh sink first; with require_complete set that
/// case throws NotComplete instead. States are renumbered canonically (BFS
/// from the start), so equal languages give byte-identical serializations.
Automaton minimize(const Automaton& a, bool require_complete = false);

// Fixture generators. All are deterministic in their parameters.
Automaton gen_lab();                        // the 2-state balanced-counts machine
Nfa gen_kth_last(int k);                    // "k-th letter from the end is a"
Automaton gen_complete_random(int n_states, std::uint64_t seed);
Automaton gen_partial_random(int n_states, double density, std::uint64_t seed);

/// Name-based dispatcher used by the CLI: lab, kth_last K,
/// complete_random N, partial_random N DENSITY. Seed-taking families read
/// seed. Throws UnknownFamily / BadParameter.
Acceptor gen_family(const std::string& name, const std::vector<std::string>& args,
                    std::uint64_t seed);

/// One "word<TAB>bit" line per sample entry, shortlex order.
void write_sample(const LanguageSample& s, std::ostream& out);

/// CSV: prefix,row_bits_hex,row_class_id. Row bits are packed suffix-major,
/// first suffix in the high bit of the first hex digit.
void write_residual_csv(const ResidualTable& t, const Alphabet& alphabet, std::ostream& out);

} // namespace owj::langtools
