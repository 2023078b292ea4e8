#ifndef ADVICER_NERODE_HPP
#define ADVICER_NERODE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "advicer/automata.hpp"

namespace advicer {

using Word = std::vector<Symbol>;

/// Black-box language membership predicate, total on Σ*.
struct LanguageOracle {
    Alphabet input;
    std::function<bool(const Word&)> membership;
    std::string source_name;
    std::optional<TermAutomaton> machine; // set when built from an automaton

    bool contains(const Word& w) const { return membership(w); }
};

LanguageOracle catalog_oracle(const std::string& name);
LanguageOracle oracle_from(TermAutomaton machine);

struct NerodeClass {
    Word representative; // lexicographically least member
    std::vector<Word> members;
    bool accepting = false;
};

/// Partition of Σ^n by bounded-suffix indistinguishability. The class count
/// is a lower bound on the true width unless `exact` is set.
struct NerodeTable {
    std::size_t length = 0;
    std::size_t suffix_depth = 0;
    bool exact = false;
    std::vector<NerodeClass> classes;          // ordered by representative
    std::vector<std::vector<int>> successor;   // [class][a] -> class at n+1; empty until linked

    int class_of(const Word& w) const; // -1 if absent
};

/// Shortest (then lexicographically least) suffix z, |z| <= depth, with
/// xz and yz on opposite sides of the language; nullopt if none found.
std::optional<Word> distinguish(const LanguageOracle& oracle, const Word& x, const Word& y,
                                std::size_t depth);

/// Partition of Σ^n via the signature kernel (OpenMP-parallel).
NerodeTable classes_at(const LanguageOracle& oracle, std::size_t n, std::size_t depth);
/// Serial reference: incremental pairwise-distinguish partition refinement.
/// Must agree with classes_at; kept for testing and benchmarking.
NerodeTable classes_at_serial(const LanguageOracle& oracle, std::size_t n, std::size_t depth);

std::size_t width(const LanguageOracle& oracle, std::size_t n, std::size_t depth);

/// Exact state equivalence from advice position n+1: q ~ q' iff every
/// suffix read from there ends in states of equal acceptance. Greatest
/// fixpoint over (state pair, advice phase); periodic advice only.
std::vector<std::vector<int>> state_equiv_at(const TermAutomaton& m, std::uint64_t n);

/// Exact width of L(m) at length n: states reachable in exactly n steps,
/// counted modulo state_equiv_at(m, n).
std::size_t exact_width_at(const TermAutomaton& m, std::uint64_t n);

/// The congruence step h_n between consecutive tables; throws
/// DepthInsufficiency if some class's successors straddle two classes.
std::vector<std::vector<int>> class_assignment_stability(const NerodeTable& table_n,
                                                         const NerodeTable& table_n1);

/// Machine produced by the bounded-width synthesis: states {1..2k} with
/// {1..k} accepting, and one transition table per advice position (the
/// advice symbol at position n is the table itself).
struct SynthesizedAutomaton {
    int k = 0;
    std::size_t horizon = 0;
    int initial = 1; // 1-based
    Alphabet input;
    std::vector<std::vector<int>> tables; // tables[n]: flat [state-1][a] -> 1-based state
    std::vector<int> default_table;       // used past the horizon

    int num_states() const { return 2 * k; }
    bool accepts(const Word& w) const;
};

SynthesizedAutomaton synthesize(const LanguageOracle& oracle, int k, std::size_t horizon,
                                std::size_t depth);

} // namespace advicer

#endif
