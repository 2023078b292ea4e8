#include "advicer/models.hpp"

#include <algorithm>
#include <map>

namespace advicer {

MullerAutomaton t_to_nt(const TermAutomaton& m) {
    m.validate();
    MullerAutomaton out;
    out.state_names = m.state_names;
    out.input = m.input;
    out.advice_alphabet = m.advice_alphabet;
    out.advice = m.advice;
    out.initial = m.initial;
    const int gamma = m.advice_alphabet.size();
    const int cols = m.input.size() + 1;
    out.delta.assign(static_cast<std::size_t>(m.num_states()) * gamma * cols, 0);
    for (int q = 0; q < m.num_states(); ++q) {
        for (int g = 0; g < gamma; ++g) {
            for (int a = 0; a < m.input.size(); ++a)
                out.delta[(static_cast<std::size_t>(q) * gamma + g) * cols + a] = m.step(q, g, a);
            out.delta[(static_cast<std::size_t>(q) * gamma + g) * cols + m.input.size()] = q;
        }
    }
    for (int q = 0; q < m.num_states(); ++q)
        if (m.accepting[static_cast<std::size_t>(q)])
            out.accept_family.push_back({q});
    return out;
}

TermAutomaton nt_to_t(const MullerAutomaton& m) {
    m.validate();
    if (!m.advice.is_ultimately_periodic())
        throw UnsupportedAdvice("pair-advice expansion needs ultimately periodic advice");

    const std::size_t stem = m.advice.stem().size();
    const std::size_t cycle = m.advice.cycle().size();
    const std::size_t horizon = stem + cycle;

    // The empty-string acceptance set at position n depends only on the
    // position class of n+1, so the pair stream inherits the original
    // stem/cycle split.
    auto f_at = [&](std::uint64_t n) { return empty_string_accept_set(m, n); };

    // Collect the occurring pairs (advice symbol at n, f_n) for n = 1..horizon;
    // past the stem they repeat with the cycle.
    std::map<std::pair<Symbol, std::vector<int>>, int> pair_ids;
    std::vector<std::string> pair_names;
    std::vector<std::pair<Symbol, std::vector<int>>> pairs_by_pos; // n = 1..horizon
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        auto p = std::make_pair(m.advice.at(n), f_at(n));
        if (!pair_ids.count(p)) {
            std::string nm = "(" + m.advice_alphabet.name(p.first) + ";";
            for (std::size_t i = 0; i < p.second.size(); ++i)
                nm += (i ? " " : "") + m.state_names[static_cast<std::size_t>(p.second[i])];
            nm += ")";
            pair_ids.emplace(p, static_cast<int>(pair_names.size()));
            pair_names.push_back(nm);
        }
        pairs_by_pos.push_back(p);
    }
    Alphabet pair_alphabet{pair_names};
    std::vector<Symbol> adv_prefix, adv_period;
    for (std::size_t i = 0; i < horizon; ++i) {
        int id = pair_ids.at(pairs_by_pos[i]);
        (i < stem ? adv_prefix : adv_period).push_back(id);
    }

    TermAutomaton out;
    out.input = m.input;
    out.advice_alphabet = pair_alphabet;
    out.advice = AdviceStream::ultimately_periodic(pair_alphabet, adv_prefix, adv_period);

    // States (q, bit): bit = [q in f_n] at the current position.
    const int q_count = m.num_states();
    for (int q = 0; q < q_count; ++q)
        for (int bit = 0; bit < 2; ++bit)
            out.state_names.push_back(m.state_names[static_cast<std::size_t>(q)] +
                                      (bit ? "|1" : "|0"));
    out.accepting.assign(static_cast<std::size_t>(2 * q_count), false);
    for (int q = 0; q < q_count; ++q)
        out.accepting[static_cast<std::size_t>(2 * q + 1)] = true;

    auto f0 = f_at(0);
    bool init_bit = std::binary_search(f0.begin(), f0.end(), m.initial);
    out.initial = 2 * m.initial + (init_bit ? 1 : 0);

    const int gamma = pair_alphabet.size();
    const int cols = m.input.size();
    out.delta.assign(static_cast<std::size_t>(2 * q_count) * gamma * cols, 0);
    // Invert pair ids for the transition definition.
    std::vector<std::pair<Symbol, std::vector<int>>> pair_of(static_cast<std::size_t>(gamma));
    for (const auto& [p, id] : pair_ids)
        pair_of[static_cast<std::size_t>(id)] = p;
    for (int q = 0; q < q_count; ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            for (int g = 0; g < gamma; ++g) {
                const auto& [adv, fset] = pair_of[static_cast<std::size_t>(g)];
                for (int a = 0; a < cols; ++a) {
                    int q2 = m.step(q, adv, a);
                    bool b2 = std::binary_search(fset.begin(), fset.end(), q2);
                    out.delta[(static_cast<std::size_t>(2 * q + bit) * gamma + g) * cols + a] =
                        2 * q2 + (b2 ? 1 : 0);
                }
            }
        }
    }
    out.validate();
    return out;
}

bool Dfa::accepts(const std::vector<Symbol>& w) const {
    int q = initial;
    for (Symbol a : w) {
        if (!input.contains(a))
            throw ContractViolation("input symbol not in the DFA alphabet");
        q = step(q, a);
    }
    return accepting[static_cast<std::size_t>(q)];
}

Dfa pref_recognizer(const TermAutomaton& m) {
    m.validate();
    if (m.input.size() != 1)
        throw ContractViolation("prefix recognizer needs a unary input alphabet");
    if (m.advice_alphabet.size() != 2)
        throw ContractViolation("prefix recognizer needs a binary advice alphabet");

    Dfa d;
    d.input = m.advice_alphabet;
    d.state_names = m.state_names;
    d.state_names.push_back("r");
    const int sink = m.num_states();
    d.initial = m.initial;
    d.accepting.assign(static_cast<std::size_t>(m.num_states()) + 1, true);
    d.accepting[static_cast<std::size_t>(sink)] = false;
    d.delta.assign((static_cast<std::size_t>(m.num_states()) + 1) * 2, sink);
    for (int q = 0; q < m.num_states(); ++q) {
        // An accepting state expects the next advice character to be 1, a
        // rejecting state expects 0; the matching move follows the unary
        // input transition, everything else falls into the sink.
        Symbol expected = m.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
        d.delta[static_cast<std::size_t>(q) * 2 + expected] = m.step(q, expected, 0);
    }
    return d;
}

} // namespace advicer
