#ifndef ADVICER_TEST_HELPERS_HPP
#define ADVICER_TEST_HELPERS_HPP

#include <functional>
#include <random>
#include <vector>

#include "advicer/automata.hpp"
#include "advicer/treeauto.hpp"

namespace advicer::testing {

inline TermAutomaton make_term(std::vector<std::string> states, Alphabet sigma, Alphabet gamma,
                               AdviceStream advice, int initial, std::vector<int> accepting,
                               const std::function<int(int, int, int)>& delta) {
    TermAutomaton m;
    m.state_names = std::move(states);
    m.input = std::move(sigma);
    m.advice_alphabet = std::move(gamma);
    m.advice = std::move(advice);
    m.initial = initial;
    m.accepting.assign(m.state_names.size(), false);
    for (int q : accepting)
        m.accepting[static_cast<std::size_t>(q)] = true;
    m.delta.resize(m.state_names.size() * static_cast<std::size_t>(m.advice_alphabet.size()) *
                   m.input.size());
    for (int q = 0; q < m.num_states(); ++q)
        for (int g = 0; g < m.advice_alphabet.size(); ++g)
            for (int a = 0; a < m.input.size(); ++a)
                m.delta[(static_cast<std::size_t>(q) * m.advice_alphabet.size() + g) * m.input.size() +
                        a] = delta(q, g, a);
    m.validate();
    return m;
}

// delta gets a = |sigma| for the blank symbol.
inline MullerAutomaton make_muller(std::vector<std::string> states, Alphabet sigma, Alphabet gamma,
                                   AdviceStream advice, int initial,
                                   std::vector<std::vector<int>> accept_family,
                                   const std::function<int(int, int, int)>& delta) {
    MullerAutomaton m;
    m.state_names = std::move(states);
    m.input = std::move(sigma);
    m.advice_alphabet = std::move(gamma);
    m.advice = std::move(advice);
    m.initial = initial;
    m.accept_family = std::move(accept_family);
    const int cols = m.input.size() + 1;
    m.delta.resize(m.state_names.size() * static_cast<std::size_t>(m.advice_alphabet.size()) * cols);
    for (int q = 0; q < m.num_states(); ++q)
        for (int g = 0; g < m.advice_alphabet.size(); ++g)
            for (int a = 0; a < cols; ++a)
                m.delta[(static_cast<std::size_t>(q) * m.advice_alphabet.size() + g) * cols + a] =
                    delta(q, g, a);
    m.validate();
    return m;
}

/// Parity of 1s over {0,1}, advice-ignoring; state 0 (even) accepting.
inline TermAutomaton parity_machine() {
    return make_term({"even", "odd"}, binary_alphabet(), Alphabet({"x"}),
                     AdviceStream::ultimately_periodic(Alphabet({"x"}), {}, {0}), 0, {0},
                     [](int q, int, int a) { return a == 1 ? 1 - q : q; });
}

/// Unary machine accepting 1^n iff the n-th advice symbol is 1.
inline TermAutomaton characteristic_machine(AdviceStream advice) {
    Alphabet gamma = advice.alphabet();
    return make_term({"s0", "s1"}, Alphabet({"1"}), gamma, std::move(advice), 0, {1},
                     [](int, int g, int) { return g; });
}

/// The loop-until-blank machine: on blank it branches on the advice symbol
/// into an accepting or a rejecting self-loop. F = {{acc}}.
inline MullerAutomaton branch_on_blank_machine(AdviceStream advice) {
    Alphabet gamma = advice.alphabet();
    Alphabet sigma({"0"});
    return make_muller({"loop", "acc", "rej"}, sigma, gamma, std::move(advice), 0, {{1}},
                       [](int q, int g, int a) {
                           if (a == 0) // real input: keep looping (or stay put)
                               return q == 0 ? 0 : q;
                           if (q == 0) // blank in the loop state: branch on advice
                               return g == 1 ? 1 : 2;
                           return q; // blank self-loops
                       });
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }
};

inline AdviceStream random_periodic_advice(Rng& rng, const Alphabet& gamma, int max_total) {
    int total = 1 + rng.below(max_total);
    int prefix_len = rng.below(total);
    std::vector<Symbol> prefix, period;
    for (int i = 0; i < prefix_len; ++i)
        prefix.push_back(rng.below(gamma.size()));
    for (int i = prefix_len; i < total; ++i)
        period.push_back(rng.below(gamma.size()));
    if (period.empty())
        period.push_back(rng.below(gamma.size()));
    return AdviceStream::ultimately_periodic(gamma, prefix, period);
}

inline TermAutomaton random_term_machine(Rng& rng, int max_states, int gamma_size,
                                         int max_advice_total) {
    int states = 1 + rng.below(max_states);
    Alphabet gamma = numeric_alphabet(gamma_size);
    std::vector<std::string> names;
    for (int q = 0; q < states; ++q)
        names.push_back("q" + std::to_string(q));
    std::vector<int> accepting;
    for (int q = 0; q < states; ++q)
        if (rng.below(2))
            accepting.push_back(q);
    return make_term(names, binary_alphabet(), gamma,
                     random_periodic_advice(rng, gamma, max_advice_total), rng.below(states),
                     accepting, [&](int, int, int) { return rng.below(states); });
}

inline MullerAutomaton random_muller_machine(Rng& rng, int max_states, int gamma_size,
                                             int max_advice_total) {
    int states = 1 + rng.below(max_states);
    Alphabet gamma = numeric_alphabet(gamma_size);
    std::vector<std::string> names;
    for (int q = 0; q < states; ++q)
        names.push_back("q" + std::to_string(q));
    std::vector<std::vector<int>> family;
    for (int mask = 1; mask < (1 << states); ++mask)
        if (rng.below(3) == 0) {
            std::vector<int> set;
            for (int q = 0; q < states; ++q)
                if (mask & (1 << q))
                    set.push_back(q);
            family.push_back(std::move(set));
        }
    return make_muller(names, binary_alphabet(), gamma,
                       random_periodic_advice(rng, gamma, max_advice_total), rng.below(states),
                       std::move(family), [&](int, int, int) { return rng.below(states); });
}

inline TreeAutomaton random_tree_machine(Rng& rng, int max_states) {
    int states = 1 + rng.below(max_states);
    TreeAutomaton m;
    for (int q = 0; q < states; ++q)
        m.state_names.push_back("q" + std::to_string(q));
    m.input = Alphabet({"a", "b"});
    m.advice_alphabet = Alphabet({"c", "d"});
    m.advice = rng.below(2)
                   ? AdviceTree::uniform(m.advice_alphabet, rng.below(2))
                   : AdviceTree::depth_periodic(m.advice_alphabet,
                                                {rng.below(2), rng.below(2)});
    m.initial = rng.below(states);
    m.accepting.assign(static_cast<std::size_t>(states), false);
    for (int q = 0; q < states; ++q)
        if (rng.below(2))
            m.accepting[static_cast<std::size_t>(q)] = true;
    m.delta.resize(static_cast<std::size_t>(states) * states * 2 * 2);
    for (auto& v : m.delta)
        v = rng.below(states);
    m.validate();
    return m;
}

/// All words over {0,...,sigma-1} of length exactly n, lexicographic.
inline std::vector<std::vector<Symbol>> words_of_length(int sigma, std::size_t n) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> w(n, 0);
    for (;;) {
        out.push_back(w);
        std::size_t j = n;
        for (; j-- > 0;) {
            if (++w[j] < sigma)
                break;
            w[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            break;
        if (n == 0)
            break;
    }
    if (n == 0)
        out.resize(1);
    return out;
}

/// All words of length <= max_len, shortest first.
inline std::vector<std::vector<Symbol>> words_up_to(int sigma, std::size_t max_len) {
    std::vector<std::vector<Symbol>> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        auto layer = words_of_length(sigma, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// All labeled trees whose positions have length <= depth.
inline std::vector<LabeledTree> trees_up_to_depth(const Alphabet& sigma, int depth) {
    if (depth < 0)
        return {LabeledTree{}};
    std::vector<LabeledTree> subs = trees_up_to_depth(sigma, depth - 1);
    std::vector<LabeledTree> out{LabeledTree{}};
    for (int label = 0; label < sigma.size(); ++label)
        for (const LabeledTree& l : subs)
            for (const LabeledTree& r : subs) {
                LabeledTree t;
                t.nodes[""] = label;
                for (const auto& [pos, lab] : l.nodes)
                    t.nodes["0" + pos] = lab;
                for (const auto& [pos, lab] : r.nodes)
                    t.nodes["1" + pos] = lab;
                out.push_back(std::move(t));
            }
    return out;
}

} // namespace advicer::testing

#endif
