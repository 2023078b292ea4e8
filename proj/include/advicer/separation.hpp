#ifndef ADVICER_SEPARATION_HPP
#define ADVICER_SEPARATION_HPP

#include <utility>
#include <vector>

#include "advicer/nerode.hpp"

namespace advicer {

/// Deterministic letter-to-letter transducer: reads an infinite word over
/// the input alphabet and emits one output symbol per step.
struct Transducer {
    int num_states = 0;
    Alphabet input;  // Γ
    Alphabet output; // Σ
    std::vector<Symbol> out; // [q][b]
    std::vector<int> next;   // [q][b]
    int initial = 0;

    Symbol emit(int q, Symbol b) const {
        return out[static_cast<std::size_t>(q) * input.size() + b];
    }
    int advance(int q, Symbol b) const {
        return next[static_cast<std::size_t>(q) * input.size() + b];
    }
    void validate() const;
};

std::vector<Symbol> run_transducer(const Transducer& t, const AdviceStream& b, std::size_t n);

/// Witness that a word can never appear in any output of a transducer:
/// the chain of feasible state sets shrinks to empty.
struct EvadeCertificate {
    std::vector<Symbol> word;                      // u_M
    std::vector<std::vector<int>> state_sets;      // Q ⊋ Q' ⊋ … ⊋ ∅
    std::vector<std::pair<Symbol, int>> steps;     // (chosen symbol, occurrence count)
};

/// Requires |output alphabet| = |input alphabet| + 1.
EvadeCertificate evade_word(const Transducer& t);

/// Normalizes a prefix-language recognizer into a transducer emitting the
/// unique acceptable input at each accepting state, repairing rows that
/// have zero or several acceptable inputs.
Transducer to_transducer(const TermAutomaton& m);

/// All transducers with <= budget states, input {0..k-1}, output {0..k},
/// in canonical order: state count first, then tables lexicographically by
/// (output, next) per (state, input) cell. Initial state fixed to 0.
std::vector<Transducer> enumerate_transducers(int k, int budget);

/// Concatenation of the evading words of all canonically enumerated
/// transducers; the enumeration budget grows lazily as deeper positions
/// are requested.
AdviceStream diagonal_advice(int k, int budget);

/// membership(w) = w is a prefix of the stream.
LanguageOracle pref_oracle(const AdviceStream& a);

} // namespace advicer

#endif
