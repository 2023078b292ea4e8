#ifndef ADVICER_AUTOMATA_HPP
#define ADVICER_AUTOMATA_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "advicer/advice.hpp"

namespace advicer {

/// Deterministic finite automaton that reads a fixed advice stream in
/// lockstep with its input and accepts by final state.
struct TermAutomaton {
    std::vector<std::string> state_names;
    Alphabet input;
    Alphabet advice_alphabet;
    AdviceStream advice;
    std::vector<int> delta; // [q][g][a], row-major
    int initial = 0;
    std::vector<bool> accepting;

    int num_states() const { return static_cast<int>(state_names.size()); }
    int step(int q, Symbol g, Symbol a) const {
        return delta[(static_cast<std::size_t>(q) * advice_alphabet.size() + g) * input.size() + a];
    }
    void validate() const;
};

/// Nonterminating variant: once the input ends the machine keeps stepping
/// on a blank symbol, and acceptance is a Muller condition over the states
/// visited infinitely often.
struct MullerAutomaton {
    std::vector<std::string> state_names;
    Alphabet input;
    Alphabet advice_alphabet;
    AdviceStream advice;
    std::vector<int> delta; // [q][g][a] with a in 0..|input| (blank = |input|)
    int initial = 0;
    std::vector<std::vector<int>> accept_family; // each member sorted

    int num_states() const { return static_cast<int>(state_names.size()); }
    Symbol blank() const { return input.size(); }
    int step(int q, Symbol g, Symbol a) const {
        return delta[(static_cast<std::size_t>(q) * advice_alphabet.size() + g) * (input.size() + 1) + a];
    }
    void validate() const;
};

struct RunTrace {
    std::vector<int> states; // α_0..α_m (terminating: m = |w|; Muller: up to lasso closure)
    std::size_t stem_length = 0;
    std::vector<std::pair<int, std::size_t>> cycle; // (state, advice phase), Muller only
    std::vector<int> infinity_set;                  // sorted, Muller only
    bool accepted = false;
};

RunTrace run_terminating(const TermAutomaton& m, const std::vector<Symbol>& w);
bool accepts_terminating(const TermAutomaton& m, const std::vector<Symbol>& w);

/// Exact Muller run via lasso detection on (state, advice phase) pairs.
/// Requires ultimately periodic advice.
RunTrace run_nonterminating(const MullerAutomaton& m, const std::vector<Symbol>& w);
bool accepts_nonterminating(const MullerAutomaton& m, const std::vector<Symbol>& w);

/// Bounded simulation for machines whose advice is not ultimately periodic:
/// returns the state sequence after |w| input steps plus `steps` blank steps.
/// The verdict is inconclusive by construction.
std::vector<int> run_bounded(const MullerAutomaton& m, const std::vector<Symbol>& w,
                             std::uint64_t steps);

/// f_n: all states q whose blank-only run from advice position n+1 has its
/// infinity set in the acceptance family. Requires periodic advice.
std::vector<int> empty_string_accept_set(const MullerAutomaton& m, std::uint64_t n);

} // namespace advicer

#endif
