#include "advicer/separation.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace advicer {

void Transducer::validate() const {
    if (num_states < 1)
        throw ContractViolation("transducer needs at least one state");
    std::size_t want = static_cast<std::size_t>(num_states) * input.size();
    if (out.size() != want || next.size() != want)
        throw ContractViolation("transducer tables must be total");
    for (Symbol s : out)
        if (!output.contains(s))
            throw ContractViolation("transducer output symbol out of range");
    for (int q : next)
        if (q < 0 || q >= num_states)
            throw ContractViolation("transducer successor out of range");
    if (initial < 0 || initial >= num_states)
        throw ContractViolation("transducer initial state out of range");
}

std::vector<Symbol> run_transducer(const Transducer& t, const AdviceStream& b, std::size_t n) {
    if (!(b.alphabet() == t.input))
        throw ContractViolation("input stream alphabet differs from the transducer's");
    std::vector<Symbol> out;
    out.reserve(n);
    int q = t.initial;
    for (std::size_t i = 1; i <= n; ++i) {
        Symbol c = b.at(i);
        out.push_back(t.emit(q, c));
        q = t.advance(q, c);
    }
    return out;
}

EvadeCertificate evade_word(const Transducer& t) {
    if (t.output.size() != t.input.size() + 1)
        throw ContractViolation("evading word needs |output alphabet| = |input alphabet| + 1");
    EvadeCertificate cert;
    std::vector<int> live(static_cast<std::size_t>(t.num_states));
    for (int q = 0; q < t.num_states; ++q)
        live[static_cast<std::size_t>(q)] = q;
    cert.state_sets.push_back(live);
    while (!live.empty()) {
        // Occurrence counts of each output symbol over the live (q, b) pairs.
        std::vector<int> count(static_cast<std::size_t>(t.output.size()), 0);
        for (int q : live)
            for (int b = 0; b < t.input.size(); ++b)
                ++count[static_cast<std::size_t>(t.emit(q, b))];
        Symbol pick = 0;
        for (Symbol a = 1; a < t.output.size(); ++a)
            if (count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(pick)])
                pick = a;
        std::vector<int> reached;
        for (int q : live)
            for (int b = 0; b < t.input.size(); ++b)
                if (t.emit(q, b) == pick)
                    reached.push_back(t.advance(q, b));
        std::sort(reached.begin(), reached.end());
        reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
        cert.word.push_back(pick);
        cert.steps.emplace_back(pick, count[static_cast<std::size_t>(pick)]);
        cert.state_sets.push_back(reached);
        live = std::move(reached);
    }
    return cert;
}

Transducer to_transducer(const TermAutomaton& m) {
    m.validate();
    if (std::none_of(m.accepting.begin(), m.accepting.end(), [](bool b) { return b; }))
        throw DegenerateMachine("machine has no accepting states");
    int least_accepting = 0;
    while (!m.accepting[static_cast<std::size_t>(least_accepting)])
        ++least_accepting;

    Transducer t;
    t.num_states = m.num_states();
    t.input = m.advice_alphabet;
    t.output = m.input;
    t.initial = m.initial;
    t.out.assign(static_cast<std::size_t>(t.num_states) * t.input.size(), 0);
    t.next.assign(static_cast<std::size_t>(t.num_states) * t.input.size(), 0);
    for (int q = 0; q < m.num_states(); ++q) {
        for (int b = 0; b < m.advice_alphabet.size(); ++b) {
            // Row repair: keep the least input leading to an accepting state;
            // a row with none gets input 0 redirected to the least accepting
            // state. Mirrors the normalization that fixes exactly one
            // acceptable input per (accepting state, advice symbol) pair.
            int chosen = -1;
            for (int a = 0; a < m.input.size() && chosen < 0; ++a)
                if (m.accepting[static_cast<std::size_t>(m.step(q, b, a))])
                    chosen = a;
            std::size_t cell = static_cast<std::size_t>(q) * t.input.size() + b;
            if (chosen < 0) {
                t.out[cell] = 0;
                t.next[cell] = least_accepting;
            } else {
                t.out[cell] = chosen;
                t.next[cell] = m.step(q, b, chosen);
            }
        }
    }
    return t;
}

std::vector<Transducer> enumerate_transducers(int k, int budget) {
    if (k < 1 || budget < 1)
        throw ContractViolation("alphabet parameter and budget must be positive");
    std::vector<Transducer> machines;
    const Alphabet gamma = numeric_alphabet(k);
    const Alphabet sigma = numeric_alphabet(k + 1);
    for (int states = 1; states <= budget; ++states) {
        const std::size_t cells = static_cast<std::size_t>(states) * k;
        const int options = (k + 1) * states; // (output, next) per cell
        std::vector<int> choice(cells, 0);
        bool more = true;
        while (more) {
            Transducer t;
            t.num_states = states;
            t.input = gamma;
            t.output = sigma;
            t.out.resize(cells);
            t.next.resize(cells);
            for (std::size_t c = 0; c < cells; ++c) {
                t.out[c] = choice[c] / states;
                t.next[c] = choice[c] % states;
            }
            machines.push_back(std::move(t));
            more = false;
            for (std::size_t c = cells; c-- > 0;) {
                if (++choice[c] < options) {
                    more = true;
                    break;
                }
                choice[c] = 0;
            }
        }
    }
    return machines;
}

namespace {

// Lazily extended concatenation of evading words, shared by all copies of
// a diagonal stream.
struct DiagonalBuffer {
    int k;
    int next_state_count = 1;
    std::vector<Symbol> symbols;
    std::mutex mu;

    Symbol at(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mu);
        while (symbols.size() < n) {
            // Enumerate the next state-count layer and append its words.
            for (const Transducer& t : enumerate_transducers(k, next_state_count)) {
                if (t.num_states != next_state_count)
                    continue;
                auto cert = evade_word(t);
                symbols.insert(symbols.end(), cert.word.begin(), cert.word.end());
            }
            ++next_state_count;
        }
        return symbols[n - 1];
    }
};

} // namespace

AdviceStream diagonal_advice(int k, int budget) {
    auto buf = std::make_shared<DiagonalBuffer>();
    buf->k = k;
    // Pre-fill the budgeted prefix so the descriptor's budget is honest.
    for (const Transducer& t : enumerate_transducers(k, budget)) {
        auto cert = evade_word(t);
        buf->symbols.insert(buf->symbols.end(), cert.word.begin(), cert.word.end());
    }
    buf->next_state_count = budget + 1;
    std::string name = "diag(" + std::to_string(k) + "," + std::to_string(budget) + ")";
    return AdviceStream::generated(numeric_alphabet(k + 1), std::move(name),
                                   [buf](std::uint64_t n) { return buf->at(n); });
}

LanguageOracle pref_oracle(const AdviceStream& a) {
    LanguageOracle o;
    o.input = a.alphabet();
    o.source_name = "pref:" + a.descriptor();
    AdviceStream stream = a;
    o.membership = [stream](const Word& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (stream.at(i + 1) != w[i])
                return false;
        return true;
    };
    return o;
}

} // namespace advicer
