#include "advicer/nerode.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace advicer {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1u << 20;

} // namespace

LanguageOracle catalog_oracle(const std::string& name) {
    LanguageOracle o;
    o.input = binary_alphabet();
    o.source_name = name;
    if (name == "0n1n") {
        o.membership = [](const Word& w) {
            std::size_t zeros = 0;
            while (zeros < w.size() && w[zeros] == 0)
                ++zeros;
            for (std::size_t i = zeros; i < w.size(); ++i)
                if (w[i] != 1)
                    return false;
            return 2 * zeros == w.size();
        };
    } else if (name == "parity") {
        o.membership = [](const Word& w) {
            return std::count(w.begin(), w.end(), 1) % 2 == 0;
        };
    } else if (name == "contains-11") {
        o.membership = [](const Word& w) {
            for (std::size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] == 1 && w[i] == 1)
                    return true;
            return false;
        };
    } else if (name == "mod3-ones") {
        o.membership = [](const Word& w) {
            return std::count(w.begin(), w.end(), 1) % 3 == 0;
        };
    } else if (name == "all") {
        o.membership = [](const Word&) { return true; };
    } else if (name == "none") {
        o.membership = [](const Word&) { return false; };
    } else {
        throw ContractViolation("unknown catalog language: " + name);
    }
    return o;
}

LanguageOracle oracle_from(TermAutomaton machine) {
    machine.validate();
    LanguageOracle o;
    o.input = machine.input;
    o.source_name = "automaton";
    o.machine = std::move(machine);
    const TermAutomaton* m = &*o.machine;
    o.membership = [m](const Word& w) { return accepts_terminating(*m, w); };
    return o;
}

int NerodeTable::class_of(const Word& w) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const Word& m : classes[i].members)
            if (m == w)
                return static_cast<int>(i);
    return -1;
}

namespace {

// Words of length n in lexicographic order.
std::vector<Word> all_words(int sigma, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(sigma);
        if (total > kEnumerationGuard)
            throw SizeError("|Sigma|^n exceeds the enumeration guard 2^20");
    }
    std::vector<Word> out;
    out.reserve(total);
    Word w(n, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(w);
        for (std::size_t j = n; j-- > 0;) {
            if (++w[j] < sigma)
                break;
            w[j] = 0;
        }
    }
    return out;
}

// Suffixes with |z| <= depth, shortest first, lexicographic within a length.
std::vector<Word> all_suffixes(int sigma, std::size_t depth) {
    std::vector<Word> out;
    out.emplace_back();
    for (std::size_t len = 1; len <= depth; ++len) {
        auto layer = all_words(sigma, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

NerodeTable table_from_groups(std::size_t n, std::size_t depth,
                              const std::vector<Word>& words,
                              const std::vector<int>& group_of,
                              const std::vector<bool>& accepting_flags,
                              const LanguageOracle& oracle) {
    int group_count = 0;
    for (int g : group_of)
        group_count = std::max(group_count, g + 1);

    NerodeTable table;
    table.length = n;
    table.suffix_depth = depth;
    table.classes.resize(static_cast<std::size_t>(group_count));
    std::vector<bool> seen(static_cast<std::size_t>(group_count), false);
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto g = static_cast<std::size_t>(group_of[i]);
        if (!seen[g]) {
            seen[g] = true;
            table.classes[g].representative = words[i]; // words are in lex order
            table.classes[g].accepting = accepting_flags[i];
        }
        table.classes[g].members.push_back(words[i]);
    }
    // Groups were numbered by first appearance in lex order, so classes are
    // already ordered by representative.
    if (oracle.machine && oracle.machine->advice.is_ultimately_periodic()) {
        std::size_t exact = exact_width_at(*oracle.machine, n);
        table.exact = (table.classes.size() == exact);
    }
    return table;
}

} // namespace

std::optional<Word> distinguish(const LanguageOracle& oracle, const Word& x, const Word& y,
                                std::size_t depth) {
    if (x.size() != y.size())
        throw ContractViolation("distinguish requires |x| = |y|");
    for (const Word& z : all_suffixes(oracle.input.size(), depth)) {
        Word xz = x, yz = y;
        xz.insert(xz.end(), z.begin(), z.end());
        yz.insert(yz.end(), z.begin(), z.end());
        if (oracle.contains(xz) != oracle.contains(yz))
            return z;
    }
    return std::nullopt;
}

NerodeTable classes_at(const LanguageOracle& oracle, std::size_t n, std::size_t depth) {
    const int sigma = oracle.input.size();
    const std::vector<Word> words = all_words(sigma, n);
    const std::vector<Word> suffixes = all_suffixes(sigma, depth);

    const std::size_t sig_words = (suffixes.size() + 63) / 64;
    std::vector<std::uint64_t> signatures(words.size() * sig_words, 0);
    std::vector<bool> accepting_flags(words.size(), false);

    // Data-parallel kernel: one membership signature per word.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t wi = 0; wi < static_cast<std::ptrdiff_t>(words.size()); ++wi) {
        Word buf = words[static_cast<std::size_t>(wi)];
        const std::size_t base_len = buf.size();
        std::uint64_t* sig = &signatures[static_cast<std::size_t>(wi) * sig_words];
        for (std::size_t zi = 0; zi < suffixes.size(); ++zi) {
            buf.resize(base_len);
            buf.insert(buf.end(), suffixes[zi].begin(), suffixes[zi].end());
            if (oracle.contains(buf))
                sig[zi / 64] |= std::uint64_t{1} << (zi % 64);
        }
        accepting_flags[static_cast<std::size_t>(wi)] = (sig[0] & 1) != 0;
    }

    std::map<std::vector<std::uint64_t>, int> groups;
    std::vector<int> group_of(words.size(), -1);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::vector<std::uint64_t> key(signatures.begin() + static_cast<std::ptrdiff_t>(wi * sig_words),
                                       signatures.begin() + static_cast<std::ptrdiff_t>((wi + 1) * sig_words));
        auto [it, fresh] = groups.try_emplace(std::move(key), static_cast<int>(groups.size()));
        (void)fresh;
        group_of[wi] = it->second;
    }
    return table_from_groups(n, depth, words, group_of, accepting_flags, oracle);
}

NerodeTable classes_at_serial(const LanguageOracle& oracle, std::size_t n, std::size_t depth) {
    const std::vector<Word> words = all_words(oracle.input.size(), n);
    std::vector<Word> representatives;
    std::vector<int> group_of(words.size(), -1);
    std::vector<bool> accepting_flags(words.size(), false);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        accepting_flags[wi] = oracle.contains(words[wi]);
        for (std::size_t g = 0; g < representatives.size(); ++g) {
            if (!distinguish(oracle, representatives[g], words[wi], depth)) {
                group_of[wi] = static_cast<int>(g);
                break;
            }
        }
        if (group_of[wi] < 0) {
            group_of[wi] = static_cast<int>(representatives.size());
            representatives.push_back(words[wi]);
        }
    }
    return table_from_groups(n, depth, words, group_of, accepting_flags, oracle);
}

std::size_t width(const LanguageOracle& oracle, std::size_t n, std::size_t depth) {
    return classes_at(oracle, n, depth).classes.size();
}

std::vector<std::vector<int>> state_equiv_at(const TermAutomaton& m, std::uint64_t n) {
    if (!m.advice.is_ultimately_periodic())
        throw UnsupportedAdvice("state equivalence needs ultimately periodic advice");
    const std::size_t phases = m.advice.phase_count();
    const int q_count = m.num_states();
    // distinct[c][q * Q + q'] — greatest fixpoint of inequivalence.
    std::vector<std::vector<char>> distinct(
        phases, std::vector<char>(static_cast<std::size_t>(q_count) * q_count, 0));
    for (std::size_t c = 0; c < phases; ++c)
        for (int q = 0; q < q_count; ++q)
            for (int r = 0; r < q_count; ++r)
                if (m.accepting[static_cast<std::size_t>(q)] != m.accepting[static_cast<std::size_t>(r)])
                    distinct[c][static_cast<std::size_t>(q) * q_count + r] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < phases; ++c) {
            const Symbol g = m.advice.at_phase(c);
            const std::size_t next = m.advice.phase_successor(c);
            for (int q = 0; q < q_count; ++q) {
                for (int r = q + 1; r < q_count; ++r) {
                    if (distinct[c][static_cast<std::size_t>(q) * q_count + r])
                        continue;
                    for (int a = 0; a < m.input.size(); ++a) {
                        int q2 = m.step(q, g, a);
                        int r2 = m.step(r, g, a);
                        if (distinct[next][static_cast<std::size_t>(q2) * q_count + r2] ||
                            distinct[next][static_cast<std::size_t>(r2) * q_count + q2]) {
                            distinct[c][static_cast<std::size_t>(q) * q_count + r] = 1;
                            distinct[c][static_cast<std::size_t>(r) * q_count + q] = 1;
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    const std::size_t at = m.advice.phase_of(n + 1);
    std::vector<std::vector<int>> partition;
    std::vector<int> cls(static_cast<std::size_t>(q_count), -1);
    for (int q = 0; q < q_count; ++q) {
        if (cls[static_cast<std::size_t>(q)] >= 0)
            continue;
        std::vector<int> group{q};
        cls[static_cast<std::size_t>(q)] = static_cast<int>(partition.size());
        for (int r = q + 1; r < q_count; ++r)
            if (cls[static_cast<std::size_t>(r)] < 0 &&
                !distinct[at][static_cast<std::size_t>(q) * q_count + r]) {
                group.push_back(r);
                cls[static_cast<std::size_t>(r)] = cls[static_cast<std::size_t>(q)];
            }
        partition.push_back(std::move(group));
    }
    return partition;
}

std::size_t exact_width_at(const TermAutomaton& m, std::uint64_t n) {
    std::vector<char> reach(static_cast<std::size_t>(m.num_states()), 0);
    reach[static_cast<std::size_t>(m.initial)] = 1;
    for (std::uint64_t pos = 1; pos <= n; ++pos) {
        std::vector<char> next(reach.size(), 0);
        const Symbol g = m.advice.at(pos);
        for (int q = 0; q < m.num_states(); ++q)
            if (reach[static_cast<std::size_t>(q)])
                for (int a = 0; a < m.input.size(); ++a)
                    next[static_cast<std::size_t>(m.step(q, g, a))] = 1;
        reach = std::move(next);
    }
    auto partition = state_equiv_at(m, n);
    std::size_t count = 0;
    for (const auto& group : partition)
        if (std::any_of(group.begin(), group.end(),
                        [&](int q) { return reach[static_cast<std::size_t>(q)] != 0; }))
            ++count;
    return count;
}

std::vector<std::vector<int>> class_assignment_stability(const NerodeTable& table_n,
                                                         const NerodeTable& table_n1) {
    if (table_n1.length != table_n.length + 1)
        throw ContractViolation("tables must be at consecutive lengths");
    if (table_n1.suffix_depth != table_n.suffix_depth)
        throw ContractViolation("tables must use the same suffix depth");
    // Index members of the next table for O(1) lookup.
    std::map<Word, int> next_class;
    for (std::size_t c = 0; c < table_n1.classes.size(); ++c)
        for (const Word& w : table_n1.classes[c].members)
            next_class[w] = static_cast<int>(c);
    int sigma = 0;
    if (!table_n1.classes.empty() && !table_n1.classes[0].members.empty())
        sigma = static_cast<int>([&] {
            int hi = 0;
            for (const auto& cl : table_n1.classes)
                for (const Word& w : cl.members)
                    for (Symbol s : w)
                        hi = std::max(hi, s + 1);
            return hi == 0 ? 1 : hi;
        }());
    std::vector<std::vector<int>> succ(table_n.classes.size(), std::vector<int>(static_cast<std::size_t>(sigma), -1));
    for (std::size_t c = 0; c < table_n.classes.size(); ++c) {
        for (int a = 0; a < sigma; ++a) {
            int target = -1;
            for (const Word& w : table_n.classes[c].members) {
                Word wa = w;
                wa.push_back(a);
                auto it = next_class.find(wa);
                if (it == next_class.end())
                    throw ContractViolation("extended word missing from the next table");
                if (target < 0)
                    target = it->second;
                else if (target != it->second)
                    throw DepthInsufficiency(
                        "class successors straddle two classes at length " +
                        std::to_string(table_n1.length) + "; raise the suffix depth");
            }
            succ[c][static_cast<std::size_t>(a)] = target;
        }
    }
    return succ;
}

bool SynthesizedAutomaton::accepts(const Word& w) const {
    int state = initial;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::vector<int>& tbl = i < horizon ? tables[i] : default_table;
        state = tbl[static_cast<std::size_t>(state - 1) * input.size() + w[i]];
    }
    return state <= k;
}

SynthesizedAutomaton synthesize(const LanguageOracle& oracle, int k, std::size_t horizon,
                                std::size_t depth) {
    if (k < 1)
        throw ContractViolation("class bound k must be positive");
    const int sigma = oracle.input.size();

    std::vector<NerodeTable> tables;
    tables.reserve(horizon + 1);
    for (std::size_t n = 0; n <= horizon; ++n) {
        tables.push_back(classes_at(oracle, n, depth));
        if (tables.back().classes.size() > static_cast<std::size_t>(k)) {
            std::string msg = "width " + std::to_string(tables.back().classes.size()) +
                              " exceeds bound " + std::to_string(k) + " at length " +
                              std::to_string(n) + "; witnesses:";
            for (const auto& cl : tables.back().classes)
                msg += " " + (cl.representative.empty() ? std::string("<empty>")
                                                        : to_text(oracle.input, cl.representative));
            throw BoundViolation(msg, n);
        }
    }

    // State assignment per table: accepting classes take 1.. in representative
    // order, rejecting classes take k+1.. .
    auto assign_states = [&](const NerodeTable& t) {
        std::vector<int> state_of(t.classes.size(), 0);
        int next_acc = 1, next_rej = k + 1;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
            state_of[c] = t.classes[c].accepting ? next_acc++ : next_rej++;
        return state_of;
    };

    SynthesizedAutomaton out;
    out.k = k;
    out.horizon = horizon;
    out.input = oracle.input;
    out.initial = oracle.contains(Word{}) ? 1 : k + 1;
    out.default_table.resize(static_cast<std::size_t>(2 * k) * sigma);
    for (int s = 1; s <= 2 * k; ++s)
        for (int a = 0; a < sigma; ++a)
            out.default_table[static_cast<std::size_t>(s - 1) * sigma + a] = s;

    for (std::size_t n = 0; n < horizon; ++n) {
        auto succ = class_assignment_stability(tables[n], tables[n + 1]);
        auto here = assign_states(tables[n]);
        auto there = assign_states(tables[n + 1]);
        std::vector<int> tbl = out.default_table; // unassigned states map to themselves
        for (std::size_t c = 0; c < tables[n].classes.size(); ++c)
            for (int a = 0; a < sigma; ++a)
                tbl[static_cast<std::size_t>(here[c] - 1) * sigma + a] =
                    there[static_cast<std::size_t>(succ[c][static_cast<std::size_t>(a)])];
        out.tables.push_back(std::move(tbl));
    }
    return out;
}

} // namespace advicer
