#include "advicer/automata.hpp"

#include <algorithm>
#include <map>

namespace advicer {

namespace {

void check_states(const std::vector<int>& delta, int n, const char* what) {
    for (int q : delta)
        if (q < 0 || q >= n)
            throw ContractViolation(std::string(what) + ": transition target out of range");
}

void check_word(const Alphabet& sigma, const std::vector<Symbol>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!sigma.contains(w[i]))
            throw ContractViolation("input symbol at position " + std::to_string(i + 1) +
                                    " not in the input alphabet");
}

} // namespace

void TermAutomaton::validate() const {
    if (state_names.empty())
        throw ContractViolation("automaton needs at least one state");
    if (initial < 0 || initial >= num_states())
        throw ContractViolation("initial state out of range");
    if (static_cast<int>(accepting.size()) != num_states())
        throw ContractViolation("accepting flags must cover all states");
    std::size_t want = static_cast<std::size_t>(num_states()) * advice_alphabet.size() * input.size();
    if (delta.size() != want)
        throw ContractViolation("transition table is not total");
    check_states(delta, num_states(), "terminating automaton");
    if (!(advice.alphabet() == advice_alphabet))
        throw ContractViolation("advice stream alphabet differs from the advice alphabet");
}

void MullerAutomaton::validate() const {
    if (state_names.empty())
        throw ContractViolation("automaton needs at least one state");
    if (initial < 0 || initial >= num_states())
        throw ContractViolation("initial state out of range");
    std::size_t want = static_cast<std::size_t>(num_states()) * advice_alphabet.size() * (input.size() + 1);
    if (delta.size() != want)
        throw ContractViolation("transition table is not total (blank rows included)");
    check_states(delta, num_states(), "muller automaton");
    for (const auto& set : accept_family) {
        if (!std::is_sorted(set.begin(), set.end()))
            throw ContractViolation("acceptance family members must be sorted");
        for (int q : set)
            if (q < 0 || q >= num_states())
                throw ContractViolation("acceptance family state out of range");
    }
    if (!(advice.alphabet() == advice_alphabet))
        throw ContractViolation("advice stream alphabet differs from the advice alphabet");
}

RunTrace run_terminating(const TermAutomaton& m, const std::vector<Symbol>& w) {
    check_word(m.input, w);
    RunTrace tr;
    tr.states.reserve(w.size() + 1);
    int q = m.initial;
    tr.states.push_back(q);
    for (std::size_t n = 1; n <= w.size(); ++n) {
        q = m.step(q, m.advice.at(n), w[n - 1]);
        tr.states.push_back(q);
    }
    tr.accepted = m.accepting[static_cast<std::size_t>(q)];
    return tr;
}

bool accepts_terminating(const TermAutomaton& m, const std::vector<Symbol>& w) {
    return run_terminating(m, w).accepted;
}

namespace {

// Blank-only lasso from (state q, advice position pos). Returns the sorted
// infinity set; records the discovered stem and cycle if asked.
std::vector<int> blank_lasso(const MullerAutomaton& m, int q, std::uint64_t pos,
                             RunTrace* trace) {
    std::map<std::pair<int, std::size_t>, std::size_t> seen;
    std::vector<std::pair<int, std::size_t>> path;
    for (;;) {
        std::size_t phase = m.advice.phase_of(pos);
        auto key = std::make_pair(q, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
            std::vector<int> inf;
            for (std::size_t i = it->second; i < path.size(); ++i)
                inf.push_back(path[i].first);
            std::sort(inf.begin(), inf.end());
            inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
            if (trace) {
                trace->stem_length = it->second;
                trace->cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
            }
            return inf;
        }
        seen.emplace(key, path.size());
        path.push_back(key);
        if (trace)
            trace->states.push_back(q);
        q = m.step(q, m.advice.at_phase(phase), m.blank());
        ++pos;
    }
}

bool family_accepts(const MullerAutomaton& m, const std::vector<int>& inf) {
    return std::find(m.accept_family.begin(), m.accept_family.end(), inf) != m.accept_family.end();
}

} // namespace

RunTrace run_nonterminating(const MullerAutomaton& m, const std::vector<Symbol>& w) {
    check_word(m.input, w);
    if (!m.advice.is_ultimately_periodic())
        throw UnsupportedAdvice("exact Muller acceptance needs ultimately periodic advice; "
                                "use bounded simulation for generated streams");
    RunTrace tr;
    int q = m.initial;
    tr.states.push_back(q);
    for (std::size_t n = 1; n <= w.size(); ++n) {
        q = m.step(q, m.advice.at(n), w[n - 1]);
        tr.states.push_back(q);
    }
    RunTrace blank;
    tr.infinity_set = blank_lasso(m, q, w.size() + 1, &blank);
    // blank.states[0] duplicates the last input state
    tr.states.insert(tr.states.end(), blank.states.begin() + 1, blank.states.end());
    tr.stem_length = w.size() + blank.stem_length;
    tr.cycle = std::move(blank.cycle);
    tr.accepted = family_accepts(m, tr.infinity_set);
    return tr;
}

bool accepts_nonterminating(const MullerAutomaton& m, const std::vector<Symbol>& w) {
    return run_nonterminating(m, w).accepted;
}

std::vector<int> run_bounded(const MullerAutomaton& m, const std::vector<Symbol>& w,
                             std::uint64_t steps) {
    check_word(m.input, w);
    std::vector<int> states;
    int q = m.initial;
    states.push_back(q);
    std::uint64_t pos = 1;
    for (Symbol a : w) {
        q = m.step(q, m.advice.at(pos++), a);
        states.push_back(q);
    }
    for (std::uint64_t i = 0; i < steps; ++i) {
        q = m.step(q, m.advice.at(pos++), m.blank());
        states.push_back(q);
    }
    return states;
}

std::vector<int> empty_string_accept_set(const MullerAutomaton& m, std::uint64_t n) {
    if (!m.advice.is_ultimately_periodic())
        throw UnsupportedAdvice("empty-string acceptance needs ultimately periodic advice");
    std::vector<int> out;
    for (int q = 0; q < m.num_states(); ++q)
        if (family_accepts(m, blank_lasso(m, q, n + 1, nullptr)))
            out.push_back(q);
    return out;
}

} // namespace advicer
