#include "advicer/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "advicer/rationals.hpp"

namespace advicer {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string_view::npos ? p : p - start)));
        if (p == std::string_view::npos)
            break;
        start = p + 1;
    }
    return out;
}

// Key/value lines plus repeated delta/trans lines.
struct Lines {
    std::map<std::string, std::string> fields;
    std::vector<std::string> deltas; // payload after "delta:"/"trans:"/"f<n>:"
    std::vector<std::string> delta_keys;
};

Lines parse_lines(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw FormatError("expected 'key: value' line: " + t);
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (key == "delta" || key == "trans") {
            out.deltas.push_back(value);
            out.delta_keys.push_back(key);
        } else {
            if (out.fields.count(key))
                throw FormatError("duplicate field: " + key);
            out.fields[key] = value;
        }
    }
    return out;
}

const std::string& need(const Lines& l, const std::string& key) {
    auto it = l.fields.find(key);
    if (it == l.fields.end())
        throw FormatError("missing field: " + key);
    return it->second;
}

Alphabet alphabet_from_csv(const std::string& csv) {
    if (csv.empty())
        throw FormatError("empty alphabet");
    return Alphabet(split(csv, ','));
}

int state_index(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    throw FormatError("unknown state: " + name);
}

} // namespace

AdviceStream catalog_stream(const std::string& name) {
    if (name == "champernowne-factorial")
        return champernowne_advice();
    if (name == "prime-char")
        return AdviceStream::generated(binary_alphabet(), "prime-char",
                                       [](std::uint64_t n) { return is_prime(n) ? 1 : 0; });
    if (name.rfind("diag(", 0) == 0 && name.back() == ')') {
        auto args = split(std::string_view(name).substr(5, name.size() - 6), ',');
        if (args.size() != 2)
            throw FormatError("diag needs two arguments: diag(<k>,<budget>)");
        return diagonal_advice(std::stoi(args[0]), std::stoi(args[1]));
    }
    throw FormatError("unknown catalog stream: " + name);
}

AdviceStream parse_stream_descriptor(const Alphabet& gamma, std::string_view descriptor) {
    if (descriptor.rfind("gen:", 0) == 0) {
        AdviceStream s = catalog_stream(std::string(descriptor.substr(4)));
        if (!(s.alphabet() == gamma))
            throw FormatError("catalog stream alphabet differs from the declared advice alphabet");
        return s;
    }
    if (descriptor.rfind("periodic:", 0) == 0) {
        std::string_view body = descriptor.substr(9);
        std::size_t bar = body.find('|');
        if (bar == std::string_view::npos)
            throw FormatError("periodic descriptor needs '|' between prefix and period");
        return AdviceStream::ultimately_periodic(gamma, to_symbols(gamma, body.substr(0, bar)),
                                                 to_symbols(gamma, body.substr(bar + 1)));
    }
    throw FormatError("unknown stream descriptor: " + std::string(descriptor));
}

AdviceTree parse_tree_descriptor(const Alphabet& gamma, std::string_view descriptor) {
    if (descriptor.rfind("tree:uniform:", 0) == 0) {
        int s = gamma.index_of(descriptor.substr(13));
        if (s < 0)
            throw FormatError("uniform symbol not in the advice alphabet");
        return AdviceTree::uniform(gamma, s);
    }
    if (descriptor.rfind("tree:depthperiodic:", 0) == 0) {
        std::vector<Symbol> table;
        for (const std::string& name : split(descriptor.substr(19), ',')) {
            int s = gamma.index_of(name);
            if (s < 0)
                throw FormatError("depth table symbol not in the advice alphabet: " + name);
            table.push_back(s);
        }
        return AdviceTree::depth_periodic(gamma, table);
    }
    throw FormatError("unknown tree descriptor: " + std::string(descriptor));
}

ParsedMachine parse_machine(const std::string& text) {
    Lines l = parse_lines(text);
    std::vector<std::string> states = split(need(l, "states"), ',');
    Alphabet sigma = alphabet_from_csv(need(l, "sigma"));
    Alphabet gamma = alphabet_from_csv(need(l, "gamma"));
    AdviceStream advice = parse_stream_descriptor(gamma, need(l, "advice"));
    int initial = state_index(states, need(l, "initial"));
    const bool muller = l.fields.count("muller") != 0;
    if (muller && l.fields.count("accepting"))
        throw FormatError("machine cannot have both accepting: and muller:");

    const int cols = sigma.size() + (muller ? 1 : 0);
    std::vector<int> delta(states.size() * static_cast<std::size_t>(gamma.size()) * cols, -1);
    for (const std::string& d : l.deltas) {
        std::size_t arrow = d.find("->");
        if (arrow == std::string::npos)
            throw FormatError("delta line needs '->': " + d);
        auto lhs = split(d.substr(0, arrow), ',');
        if (lhs.size() != 3)
            throw FormatError("delta line needs 'q,g,a -> q''");
        int q = state_index(states, lhs[0]);
        int g = gamma.index_of(lhs[1]);
        if (g < 0)
            throw FormatError("advice symbol not in gamma: " + lhs[1]);
        int a;
        if (lhs[2] == "_") {
            if (!muller)
                throw FormatError("blank transitions only belong in muller machines");
            a = sigma.size();
        } else {
            a = sigma.index_of(lhs[2]);
            if (a < 0)
                throw FormatError("input symbol not in sigma: " + lhs[2]);
        }
        int q2 = state_index(states, trim(d.substr(arrow + 2)));
        delta[(static_cast<std::size_t>(q) * gamma.size() + g) * cols + a] = q2;
    }
    for (int v : delta)
        if (v < 0)
            throw FormatError("transition table is not total");

    ParsedMachine out;
    if (muller) {
        MullerAutomaton m;
        m.state_names = states;
        m.input = sigma;
        m.advice_alphabet = gamma;
        m.advice = advice;
        m.initial = initial;
        m.delta = std::move(delta);
        std::string fam = need(l, "muller");
        if (!fam.empty()) {
            for (const std::string& set : split(fam, ';')) {
                if (set.size() < 2 || set.front() != '{' || set.back() != '}')
                    throw FormatError("muller set must be {q,...}: " + set);
                std::vector<int> members;
                std::string inner = trim(set.substr(1, set.size() - 2));
                if (!inner.empty())
                    for (const std::string& name : split(inner, ','))
                        members.push_back(state_index(states, name));
                std::sort(members.begin(), members.end());
                m.accept_family.push_back(std::move(members));
            }
        }
        m.validate();
        out.muller = std::move(m);
    } else {
        TermAutomaton m;
        m.state_names = states;
        m.input = sigma;
        m.advice_alphabet = gamma;
        m.advice = advice;
        m.initial = initial;
        m.delta = std::move(delta);
        m.accepting.assign(states.size(), false);
        std::string acc = need(l, "accepting");
        if (!acc.empty())
            for (const std::string& name : split(acc, ','))
                m.accepting[static_cast<std::size_t>(state_index(states, name))] = true;
        m.validate();
        out.term = std::move(m);
    }
    return out;
}

namespace {

std::string csv(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ',';
        out += items[i];
    }
    return out;
}

std::string alphabet_csv(const Alphabet& a) {
    std::vector<std::string> names;
    for (int s = 0; s < a.size(); ++s)
        names.push_back(a.name(s));
    return csv(names);
}

} // namespace

std::string serialize(const TermAutomaton& m) {
    std::ostringstream out;
    out << "states: " << csv(m.state_names) << "\n";
    out << "sigma: " << alphabet_csv(m.input) << "\n";
    out << "gamma: " << alphabet_csv(m.advice_alphabet) << "\n";
    out << "advice: " << m.advice.descriptor() << "\n";
    out << "initial: " << m.state_names[static_cast<std::size_t>(m.initial)] << "\n";
    std::vector<std::string> acc;
    for (int q = 0; q < m.num_states(); ++q)
        if (m.accepting[static_cast<std::size_t>(q)])
            acc.push_back(m.state_names[static_cast<std::size_t>(q)]);
    out << "accepting: " << csv(acc) << "\n";
    for (int q = 0; q < m.num_states(); ++q)
        for (int g = 0; g < m.advice_alphabet.size(); ++g)
            for (int a = 0; a < m.input.size(); ++a)
                out << "delta: " << m.state_names[static_cast<std::size_t>(q)] << ","
                    << m.advice_alphabet.name(g) << "," << m.input.name(a) << " -> "
                    << m.state_names[static_cast<std::size_t>(m.step(q, g, a))] << "\n";
    return out.str();
}

std::string serialize(const MullerAutomaton& m) {
    std::ostringstream out;
    out << "states: " << csv(m.state_names) << "\n";
    out << "sigma: " << alphabet_csv(m.input) << "\n";
    out << "gamma: " << alphabet_csv(m.advice_alphabet) << "\n";
    out << "advice: " << m.advice.descriptor() << "\n";
    out << "initial: " << m.state_names[static_cast<std::size_t>(m.initial)] << "\n";
    std::string fam;
    for (std::size_t i = 0; i < m.accept_family.size(); ++i) {
        if (i)
            fam += ";";
        fam += "{";
        for (std::size_t j = 0; j < m.accept_family[i].size(); ++j) {
            if (j)
                fam += ",";
            fam += m.state_names[static_cast<std::size_t>(m.accept_family[i][j])];
        }
        fam += "}";
    }
    out << "muller: " << fam << "\n";
    for (int q = 0; q < m.num_states(); ++q)
        for (int g = 0; g < m.advice_alphabet.size(); ++g)
            for (int a = 0; a <= m.input.size(); ++a)
                out << "delta: " << m.state_names[static_cast<std::size_t>(q)] << ","
                    << m.advice_alphabet.name(g) << ","
                    << (a == m.input.size() ? std::string("_") : m.input.name(a)) << " -> "
                    << m.state_names[static_cast<std::size_t>(m.step(q, g, a))] << "\n";
    return out.str();
}

Transducer parse_transducer(const std::string& text) {
    Lines l = parse_lines(text);
    std::vector<std::string> states = split(need(l, "states"), ',');
    Transducer t;
    t.num_states = static_cast<int>(states.size());
    t.input = alphabet_from_csv(need(l, "gamma"));
    t.output = alphabet_from_csv(need(l, "sigma"));
    t.initial = state_index(states, need(l, "initial"));
    t.out.assign(static_cast<std::size_t>(t.num_states) * t.input.size(), -1);
    t.next.assign(static_cast<std::size_t>(t.num_states) * t.input.size(), -1);
    for (std::size_t i = 0; i < l.deltas.size(); ++i) {
        if (l.delta_keys[i] != "trans")
            throw FormatError("transducer files use 'trans:' lines");
        const std::string& d = l.deltas[i];
        std::size_t arrow = d.find("->");
        if (arrow == std::string::npos)
            throw FormatError("trans line needs '->': " + d);
        auto lhs = split(d.substr(0, arrow), ',');
        auto rhs = split(d.substr(arrow + 2), ',');
        if (lhs.size() != 2 || rhs.size() != 2)
            throw FormatError("trans line needs 'q,b -> a,q''");
        int q = state_index(states, lhs[0]);
        int b = t.input.index_of(lhs[1]);
        int a = t.output.index_of(rhs[0]);
        int q2 = state_index(states, rhs[1]);
        if (b < 0 || a < 0)
            throw FormatError("trans line symbol not in its alphabet: " + d);
        t.out[static_cast<std::size_t>(q) * t.input.size() + b] = a;
        t.next[static_cast<std::size_t>(q) * t.input.size() + b] = q2;
    }
    t.validate();
    return t;
}

std::string serialize(const Transducer& t) {
    std::ostringstream out;
    std::vector<std::string> states;
    for (int q = 0; q < t.num_states; ++q)
        states.push_back("q" + std::to_string(q));
    out << "states: " << csv(states) << "\n";
    out << "gamma: " << alphabet_csv(t.input) << "\n";
    out << "sigma: " << alphabet_csv(t.output) << "\n";
    out << "initial: " << states[static_cast<std::size_t>(t.initial)] << "\n";
    for (int q = 0; q < t.num_states; ++q)
        for (int b = 0; b < t.input.size(); ++b)
            out << "trans: " << states[static_cast<std::size_t>(q)] << "," << t.input.name(b)
                << " -> " << t.output.name(t.emit(q, b)) << ","
                << states[static_cast<std::size_t>(t.advance(q, b))] << "\n";
    return out.str();
}

std::string serialize(const SynthesizedAutomaton& m) {
    std::ostringstream out;
    out << "k: " << m.k << "\n";
    out << "horizon: " << m.horizon << "\n";
    out << "sigma: " << alphabet_csv(m.input) << "\n";
    out << "initial: " << m.initial << "\n";
    auto table_line = [&](const std::vector<int>& tbl) {
        std::string line;
        for (int s = 1; s <= m.num_states(); ++s)
            for (int a = 0; a < m.input.size(); ++a) {
                if (!line.empty())
                    line += ' ';
                line += std::to_string(s) + "," + m.input.name(a) + "->" +
                        std::to_string(tbl[static_cast<std::size_t>(s - 1) * m.input.size() + a]);
            }
        return line;
    };
    for (std::size_t n = 0; n < m.tables.size(); ++n)
        out << "f" << n << ": " << table_line(m.tables[n]) << "\n";
    out << "default: " << table_line(m.default_table) << "\n";
    return out.str();
}

TreeAutomaton parse_tree_automaton(const std::string& text) {
    Lines l = parse_lines(text);
    std::vector<std::string> states = split(need(l, "states"), ',');
    TreeAutomaton m;
    m.state_names = states;
    m.input = alphabet_from_csv(need(l, "sigma"));
    m.advice_alphabet = alphabet_from_csv(need(l, "gamma"));
    m.advice = parse_tree_descriptor(m.advice_alphabet, need(l, "advice"));
    m.initial = state_index(states, need(l, "initial"));
    m.accepting.assign(states.size(), false);
    std::string acc = need(l, "accepting");
    if (!acc.empty())
        for (const std::string& name : split(acc, ','))
            m.accepting[static_cast<std::size_t>(state_index(states, name))] = true;
    m.delta.assign(states.size() * states.size() *
                       static_cast<std::size_t>(m.advice_alphabet.size()) * m.input.size(),
                   -1);
    for (const std::string& d : l.deltas) {
        std::size_t arrow = d.find("->");
        if (arrow == std::string::npos)
            throw FormatError("delta line needs '->': " + d);
        auto lhs = split(d.substr(0, arrow), ',');
        if (lhs.size() != 4)
            throw FormatError("tree delta line needs 'ql,qr,g,a -> q'");
        int ql = state_index(states, lhs[0]);
        int qr = state_index(states, lhs[1]);
        int g = m.advice_alphabet.index_of(lhs[2]);
        int a = m.input.index_of(lhs[3]);
        if (g < 0 || a < 0)
            throw FormatError("tree delta symbol not in its alphabet: " + d);
        int q2 = state_index(states, trim(d.substr(arrow + 2)));
        m.delta[((static_cast<std::size_t>(ql) * states.size() + qr) * m.advice_alphabet.size() +
                 g) * m.input.size() + a] = q2;
    }
    for (int v : m.delta)
        if (v < 0)
            throw FormatError("tree transition table is not total");
    m.validate();
    return m;
}

std::string serialize(const TreeAutomaton& m) {
    std::ostringstream out;
    out << "states: " << csv(m.state_names) << "\n";
    out << "sigma: " << alphabet_csv(m.input) << "\n";
    out << "gamma: " << alphabet_csv(m.advice_alphabet) << "\n";
    out << "advice: " << m.advice.descriptor() << "\n";
    out << "initial: " << m.state_names[static_cast<std::size_t>(m.initial)] << "\n";
    std::vector<std::string> acc;
    for (int q = 0; q < m.num_states(); ++q)
        if (m.accepting[static_cast<std::size_t>(q)])
            acc.push_back(m.state_names[static_cast<std::size_t>(q)]);
    out << "accepting: " << csv(acc) << "\n";
    for (int ql = 0; ql < m.num_states(); ++ql)
        for (int qr = 0; qr < m.num_states(); ++qr)
            for (int g = 0; g < m.advice_alphabet.size(); ++g)
                for (int a = 0; a < m.input.size(); ++a)
                    out << "delta: " << m.state_names[static_cast<std::size_t>(ql)] << ","
                        << m.state_names[static_cast<std::size_t>(qr)] << ","
                        << m.advice_alphabet.name(g) << "," << m.input.name(a) << " -> "
                        << m.state_names[static_cast<std::size_t>(m.step(ql, qr, g, a))] << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write file: " + path);
    out << text;
}

} // namespace advicer
