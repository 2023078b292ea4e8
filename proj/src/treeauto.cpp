#include "advicer/treeauto.hpp"

#include <algorithm>

#include "advicer/errors.hpp"

namespace advicer {

void LabeledTree::validate() const {
    for (const auto& [pos, label] : nodes) {
        for (char c : pos)
            if (c != '0' && c != '1')
                throw ContractViolation("tree position must be a binary string: " + pos);
        if (!pos.empty() && !contains(pos.substr(0, pos.size() - 1)))
            throw ContractViolation("tree positions must be prefix-closed; missing parent of " + pos);
        (void)label;
    }
}

bool canonical_less(const LabeledTree& a, const LabeledTree& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    auto ai = a.nodes.begin(), bi = b.nodes.begin();
    for (; ai != a.nodes.end(); ++ai, ++bi)
        if (ai->first != bi->first)
            return ai->first < bi->first;
    ai = a.nodes.begin();
    bi = b.nodes.begin();
    for (; ai != a.nodes.end(); ++ai, ++bi)
        if (ai->second != bi->second)
            return ai->second < bi->second;
    return false;
}

bool is_graft_site(const LabeledTree& t, const std::string& u) {
    if (u.empty())
        return t.empty();
    if (t.contains(u))
        return false;
    return t.contains(u.substr(0, u.size() - 1));
}

LabeledTree graft(const LabeledTree& t, const std::string& u, const LabeledTree& x) {
    if (!is_graft_site(t, u))
        throw ContractViolation("not a graft site: \"" + u + "\"");
    LabeledTree out = t;
    for (const auto& [pos, label] : x.nodes)
        out.nodes[u + pos] = label;
    return out;
}

namespace {

std::string_view skip_ws(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

// Parses one term, advancing `s` past it; writes nodes rooted at `at`.
void parse_term(const Alphabet& sigma, std::string_view& s, const std::string& at,
                LabeledTree& out) {
    s = skip_ws(s);
    if (s.empty())
        throw FormatError("unexpected end of tree text");
    if (s.front() == '.') {
        s.remove_prefix(1);
        return;
    }
    std::size_t name_end = s.find_first_of("(),. \t");
    if (name_end == std::string_view::npos)
        name_end = s.size();
    if (name_end == 0)
        throw FormatError("expected a label in tree text");
    std::string_view name = s.substr(0, name_end);
    int label = sigma.index_of(name);
    if (label < 0)
        throw FormatError("tree label not in alphabet: " + std::string(name));
    s.remove_prefix(name_end);
    out.nodes[at] = label;
    s = skip_ws(s);
    if (!s.empty() && s.front() == '(') {
        s.remove_prefix(1);
        parse_term(sigma, s, at + "0", out);
        s = skip_ws(s);
        if (s.empty() || s.front() != ',')
            throw FormatError("expected ',' in tree text");
        s.remove_prefix(1);
        parse_term(sigma, s, at + "1", out);
        s = skip_ws(s);
        if (s.empty() || s.front() != ')')
            throw FormatError("expected ')' in tree text");
        s.remove_prefix(1);
    }
}

} // namespace

LabeledTree parse_tree(const Alphabet& sigma, std::string_view text) {
    LabeledTree t;
    std::string_view s = text;
    parse_term(sigma, s, "", t);
    s = skip_ws(s);
    if (!s.empty())
        throw FormatError("trailing characters in tree text");
    return t;
}

std::string tree_to_text(const Alphabet& sigma, const LabeledTree& t) {
    std::function<std::string(const std::string&)> render = [&](const std::string& at) {
        auto it = t.nodes.find(at);
        if (it == t.nodes.end())
            return std::string(".");
        std::string label = sigma.name(it->second);
        if (!t.contains(at + "0") && !t.contains(at + "1"))
            return label;
        return label + "(" + render(at + "0") + "," + render(at + "1") + ")";
    };
    return render("");
}

void TreeAutomaton::validate() const {
    if (state_names.empty())
        throw ContractViolation("tree automaton needs at least one state");
    if (initial < 0 || initial >= num_states())
        throw ContractViolation("initial state out of range");
    if (static_cast<int>(accepting.size()) != num_states())
        throw ContractViolation("accepting flags must cover all states");
    std::size_t want = static_cast<std::size_t>(num_states()) * num_states() *
                       advice_alphabet.size() * input.size();
    if (delta.size() != want)
        throw ContractViolation("tree transition table is not total");
    for (int q : delta)
        if (q < 0 || q >= num_states())
            throw ContractViolation("tree transition target out of range");
    if (!(advice.alphabet() == advice_alphabet))
        throw ContractViolation("advice tree alphabet differs from the advice alphabet");
}

TreeRun run_tree(const TreeAutomaton& m, const LabeledTree& t) {
    t.validate();
    for (const auto& [pos, label] : t.nodes) {
        (void)pos;
        if (!m.input.contains(label))
            throw ContractViolation("tree label not in the automaton's input alphabet");
    }
    TreeRun run;
    std::function<int(const std::string&)> eval = [&](const std::string& pos) -> int {
        auto it = t.nodes.find(pos);
        if (it == t.nodes.end())
            return m.initial;
        int q = m.step(eval(pos + "0"), eval(pos + "1"), m.advice.at(pos), it->second);
        run.assignment[pos] = q;
        return q;
    };
    run.root_state = eval("");
    run.accepted = m.accepting[static_cast<std::size_t>(run.root_state)];
    return run;
}

TreeOracle tree_catalog_oracle(const std::string& name) {
    TreeOracle o;
    o.input = Alphabet({"a", "b"});
    o.source_name = name;
    if (name == "even-a") {
        o.membership = [](const LabeledTree& t) {
            long count = 0;
            for (const auto& [pos, label] : t.nodes) {
                (void)pos;
                if (label == 0)
                    ++count;
            }
            return count % 2 == 0;
        };
    } else if (name == "all") {
        o.membership = [](const LabeledTree&) { return true; };
    } else if (name == "empty-only") {
        o.membership = [](const LabeledTree& t) { return t.empty(); };
    } else if (name == "root-a") {
        o.membership = [](const LabeledTree& t) {
            auto it = t.nodes.find("");
            return it != t.nodes.end() && it->second == 0;
        };
    } else {
        throw ContractViolation("unknown catalog tree language: " + name);
    }
    return o;
}

TreeOracle oracle_from(TreeAutomaton machine) {
    machine.validate();
    TreeOracle o;
    o.input = machine.input;
    o.source_name = "tree-automaton";
    o.machine = std::move(machine);
    const TreeAutomaton* m = &*o.machine;
    o.membership = [m](const LabeledTree& t) { return run_tree(*m, t).accepted; };
    return o;
}

namespace {

constexpr std::size_t kTreeGuard = 1u << 18;

// All labeled trees with exactly n nodes.
std::vector<LabeledTree> trees_exactly(const Alphabet& sigma, int n) {
    if (n == 0)
        return {LabeledTree{}};
    std::vector<LabeledTree> out;
    for (int left = 0; left <= n - 1; ++left) {
        auto ls = trees_exactly(sigma, left);
        auto rs = trees_exactly(sigma, n - 1 - left);
        for (int label = 0; label < sigma.size(); ++label) {
            for (const LabeledTree& l : ls) {
                for (const LabeledTree& r : rs) {
                    LabeledTree t;
                    t.nodes[""] = label;
                    for (const auto& [pos, lab] : l.nodes)
                        t.nodes["0" + pos] = lab;
                    for (const auto& [pos, lab] : r.nodes)
                        t.nodes["1" + pos] = lab;
                    out.push_back(std::move(t));
                    if (out.size() > kTreeGuard)
                        throw SizeError("tree enumeration exceeds the guard 2^18");
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<LabeledTree> enumerate_trees(const Alphabet& sigma, int max_nodes) {
    std::vector<LabeledTree> out;
    for (int n = 0; n <= max_nodes; ++n) {
        auto layer = trees_exactly(sigma, n);
        if (out.size() + layer.size() > kTreeGuard)
            throw SizeError("tree enumeration exceeds the guard 2^18");
        out.insert(out.end(), layer.begin(), layer.end());
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<LabeledTree> enumerate_contexts(const Alphabet& sigma, const std::string& v,
                                            int max_nodes) {
    if (v.empty())
        return {LabeledTree{}};
    std::vector<LabeledTree> out;
    for (const LabeledTree& t : enumerate_trees(sigma, max_nodes))
        if (is_graft_site(t, v))
            out.push_back(t);
    return out;
}

std::optional<LabeledTree> tree_distinguish(const TreeOracle& oracle, const LabeledTree& x,
                                            const LabeledTree& y, const std::string& v,
                                            int context_size) {
    for (const LabeledTree& ctx : enumerate_contexts(oracle.input, v, context_size))
        if (oracle.contains(graft(ctx, v, x)) != oracle.contains(graft(ctx, v, y)))
            return ctx;
    return std::nullopt;
}

int TreePartition::classify(const TreeOracle& oracle, const LabeledTree& t) const {
    std::vector<bool> sig;
    sig.reserve(contexts.size());
    for (const LabeledTree& ctx : contexts)
        sig.push_back(oracle.contains(graft(ctx, position, t)));
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].signature == sig)
            return static_cast<int>(c);
    return -1;
}

TreePartition tree_classes_at(const TreeOracle& oracle, const std::string& v, int tree_size,
                              int context_size) {
    TreePartition part;
    part.position = v;
    part.contexts = enumerate_contexts(oracle.input, v, context_size);
    std::map<std::vector<bool>, std::size_t> by_signature;
    for (const LabeledTree& t : enumerate_trees(oracle.input, tree_size)) {
        std::vector<bool> sig;
        sig.reserve(part.contexts.size());
        for (const LabeledTree& ctx : part.contexts)
            sig.push_back(oracle.contains(graft(ctx, v, t)));
        auto it = by_signature.find(sig);
        if (it == by_signature.end()) {
            TreePartition::Class cls;
            cls.representative = t; // enumeration is canonical, first hit is least
            cls.signature = sig;
            // The bare graft (context = chain down to v) decides acceptance at λ.
            if (v.empty())
                cls.accepting = oracle.contains(t);
            by_signature.emplace(std::move(sig), part.classes.size());
            part.classes.push_back(std::move(cls));
            it = by_signature.find(part.classes.back().signature);
        }
        part.classes[it->second].members.push_back(t);
    }
    return part;
}

bool SynthesizedTreeAutomaton::accepts(const LabeledTree& t) const {
    t.validate();
    int q0 = initial;
    std::function<int(const std::string&)> eval = [&](const std::string& pos) -> int {
        auto it = t.nodes.find(pos);
        if (it == t.nodes.end())
            return q0;
        int jl = eval(pos + "0");
        int jr = eval(pos + "1");
        auto tb = tables.find(pos);
        const std::vector<int>& tbl = tb == tables.end() ? default_table : tb->second;
        return tbl[(static_cast<std::size_t>(jl - 1) * k + (jr - 1)) * input.size() + it->second];
    };
    return eval("") == 1;
}

SynthesizedTreeAutomaton synthesize_tree(const TreeOracle& oracle, int k, int depth_horizon,
                                         int tree_size, int context_size) {
    if (k < 1)
        throw ContractViolation("class bound k must be positive");
    const bool empty_in = oracle.contains(LabeledTree{});
    const int q0 = empty_in ? 1 : 2;
    if (q0 > k)
        throw BoundViolation("k must be at least 2 when the empty tree is not in T", 0);

    // Positions up to depth_horizon + 1: child classes feed the tables at
    // the horizon itself.
    std::vector<std::string> positions{""};
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (static_cast<int>(positions[i].size()) <= depth_horizon) {
            positions.push_back(positions[i] + "0");
            positions.push_back(positions[i] + "1");
        }

    std::map<std::string, TreePartition> parts;
    std::map<std::string, std::vector<int>> state_of; // class index -> 1-based state
    for (const std::string& v : positions) {
        TreePartition part = tree_classes_at(oracle, v, tree_size, context_size);
        if (part.classes.size() > static_cast<std::size_t>(k))
            throw BoundViolation("tree width " + std::to_string(part.classes.size()) +
                                     " exceeds bound " + std::to_string(k) + " at position \"" + v +
                                     "\"; witness representatives: " +
                                     [&] {
                                         std::string s;
                                         for (const auto& cl : part.classes)
                                             s += tree_to_text(oracle.input, cl.representative) + " ";
                                         return s;
                                     }(),
                                 v.size());

        // Assign states: the empty tree's class always takes the state named
        // q0; at λ the accepting class takes state 1; the rest follow
        // canonical class order over the unused states.
        std::vector<int> assign(part.classes.size(), 0);
        std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
        int empty_class = part.classify(oracle, LabeledTree{});
        assign[static_cast<std::size_t>(empty_class)] = q0;
        used[static_cast<std::size_t>(q0)] = true;
        if (v.empty()) {
            for (std::size_t c = 0; c < part.classes.size(); ++c)
                if (part.classes[c].accepting && assign[c] == 0) {
                    assign[c] = 1;
                    used[1] = true;
                }
        }
        int next = 1;
        for (std::size_t c = 0; c < part.classes.size(); ++c) {
            if (assign[c] != 0)
                continue;
            while (used[static_cast<std::size_t>(next)])
                ++next;
            assign[c] = next;
            used[static_cast<std::size_t>(next)] = true;
        }
        state_of[v] = std::move(assign);
        parts.emplace(v, std::move(part));
    }

    SynthesizedTreeAutomaton out;
    out.k = k;
    out.depth_horizon = depth_horizon;
    out.initial = q0;
    out.input = oracle.input;
    const int sigma = oracle.input.size();
    out.default_table.assign(static_cast<std::size_t>(k) * k * sigma, 0);
    for (int j = 1; j <= k; ++j)
        for (int j2 = 1; j2 <= k; ++j2)
            for (int a = 0; a < sigma; ++a)
                out.default_table[(static_cast<std::size_t>(j - 1) * k + (j2 - 1)) * sigma + a] = j;

    for (const std::string& v : positions) {
        if (static_cast<int>(v.size()) > depth_horizon)
            continue;
        const TreePartition& here = parts.at(v);
        const TreePartition& left = parts.at(v + "0");
        const TreePartition& right = parts.at(v + "1");
        std::vector<int> tbl = out.default_table;
        for (std::size_t cl = 0; cl < left.classes.size(); ++cl) {
            for (std::size_t cr = 0; cr < right.classes.size(); ++cr) {
                for (int a = 0; a < sigma; ++a) {
                    // t_{(s,a,t)} built from the class representatives.
                    LabeledTree single;
                    single.nodes[""] = a;
                    LabeledTree combined = graft(graft(single, "0", left.classes[cl].representative),
                                                 "1", right.classes[cr].representative);
                    int target = here.classify(oracle, combined);
                    if (target < 0)
                        throw DepthInsufficiency(
                            "combined tree matches no class at position \"" + v +
                            "\"; raise the tree or context size bounds");
                    int j = state_of.at(v + "0")[cl];
                    int j2 = state_of.at(v + "1")[cr];
                    tbl[(static_cast<std::size_t>(j - 1) * k + (j2 - 1)) * sigma + a] =
                        state_of.at(v)[static_cast<std::size_t>(target)];
                }
            }
        }
        out.tables.emplace(v, std::move(tbl));
    }
    return out;
}

} // namespace advicer
