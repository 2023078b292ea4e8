#ifndef ADVICER_MODELS_HPP
#define ADVICER_MODELS_HPP

#include "advicer/automata.hpp"

namespace advicer {

/// Terminating -> nonterminating: blank transitions self-loop on every
/// state and the acceptance family is {{q} : q accepting}. Same advice.
MullerAutomaton t_to_nt(const TermAutomaton& m);

/// Nonterminating -> terminating over the expanded pair advice (A_n, f_n):
/// states are (original state, membership bit), the bit tracking whether
/// the current state lies in the empty-string acceptance set at the
/// current position. Requires ultimately periodic advice.
TermAutomaton nt_to_t(const MullerAutomaton& m);

/// Plain advice-free DFA.
struct Dfa {
    std::vector<std::string> state_names;
    Alphabet input;
    std::vector<int> delta; // [q][a]
    int initial = 0;
    std::vector<bool> accepting;

    int num_states() const { return static_cast<int>(state_names.size()); }
    int step(int q, Symbol a) const {
        return delta[static_cast<std::size_t>(q) * input.size() + a];
    }
    bool accepts(const std::vector<Symbol>& w) const;
};

/// The prefix-recognizer construction: from a terminating machine over
/// unary input and binary advice, builds an advice-free DFA over the
/// advice alphabet with an absorbing reject sink. Accepting states expect
/// the next advice character to be 1, rejecting states expect 0.
Dfa pref_recognizer(const TermAutomaton& m);

} // namespace advicer

#endif
