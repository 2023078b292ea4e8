#ifndef ADVICER_TREEAUTO_HPP
#define ADVICER_TREEAUTO_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "advicer/advice.hpp"

namespace advicer {

/// Finite prefix-closed set of binary positions with a total labeling.
struct LabeledTree {
    std::map<std::string, Symbol> nodes;

    bool empty() const { return nodes.empty(); }
    std::size_t size() const { return nodes.size(); }
    bool contains(const std::string& pos) const { return nodes.count(pos) != 0; }
    void validate() const;
    bool operator==(const LabeledTree&) const = default;
};

/// Fixed total order: size, then position set, then labels.
bool canonical_less(const LabeledTree& a, const LabeledTree& b);

/// u is a graft site of t: u missing from t with its parent present, or
/// u = λ and t empty.
bool is_graft_site(const LabeledTree& t, const std::string& u);

LabeledTree graft(const LabeledTree& t, const std::string& u, const LabeledTree& x);

/// `a(l,r)` with `.` for an absent child; `.` alone is the empty tree.
LabeledTree parse_tree(const Alphabet& sigma, std::string_view text);
std::string tree_to_text(const Alphabet& sigma, const LabeledTree& t);

/// Bottom-up deterministic tree automaton reading an advice tree.
struct TreeAutomaton {
    std::vector<std::string> state_names;
    Alphabet input;
    Alphabet advice_alphabet;
    AdviceTree advice;
    std::vector<int> delta; // [q_left][q_right][g][a]
    int initial = 0;
    std::vector<bool> accepting;

    int num_states() const { return static_cast<int>(state_names.size()); }
    int step(int ql, int qr, Symbol g, Symbol a) const {
        return delta[((static_cast<std::size_t>(ql) * num_states() + qr) * advice_alphabet.size() + g) *
                         input.size() + a];
    }
    void validate() const;
};

struct TreeRun {
    std::map<std::string, int> assignment; // positions of the tree only
    int root_state = 0;
    bool accepted = false;
};

TreeRun run_tree(const TreeAutomaton& m, const LabeledTree& t);

struct TreeOracle {
    Alphabet input;
    std::function<bool(const LabeledTree&)> membership;
    std::string source_name;
    std::optional<TreeAutomaton> machine;

    bool contains(const LabeledTree& t) const { return membership(t); }
};

TreeOracle tree_catalog_oracle(const std::string& name);
TreeOracle oracle_from(TreeAutomaton machine);

/// All labeled trees with <= max_nodes nodes, in canonical order.
std::vector<LabeledTree> enumerate_trees(const Alphabet& sigma, int max_nodes);
/// All labeled trees with <= max_nodes nodes having v as a graft site,
/// in canonical order.
std::vector<LabeledTree> enumerate_contexts(const Alphabet& sigma, const std::string& v,
                                            int max_nodes);

/// Smallest (then canonically least) context with graft site v separating
/// x from y; nullopt if none within the size bound.
std::optional<LabeledTree> tree_distinguish(const TreeOracle& oracle, const LabeledTree& x,
                                            const LabeledTree& y, const std::string& v,
                                            int context_size);

/// Partition of the trees with <= tree_size nodes by context signatures at
/// position v. A lower bound on the true width of the tree congruence.
struct TreePartition {
    std::string position;
    std::vector<LabeledTree> contexts;
    struct Class {
        LabeledTree representative;
        std::vector<LabeledTree> members;
        std::vector<bool> signature;
        bool accepting = false; // membership of the representative grafted bare
    };
    std::vector<Class> classes;

    /// Class of an arbitrary tree by recomputing its signature; -1 when it
    /// matches no enumerated class.
    int classify(const TreeOracle& oracle, const LabeledTree& t) const;
};

TreePartition tree_classes_at(const TreeOracle& oracle, const std::string& v, int tree_size,
                              int context_size);

/// Synthesis result: states {1..k} with F = {1}, an explicit transition
/// table per position up to the depth horizon, and a default table below.
struct SynthesizedTreeAutomaton {
    int k = 0;
    int depth_horizon = 0;
    int initial = 1; // 1-based; 1 if the empty tree is in T, else 2
    Alphabet input;
    std::map<std::string, std::vector<int>> tables; // flat [(j-1)k + (j'-1)]|Σ| + a -> state
    std::vector<int> default_table;

    bool accepts(const LabeledTree& t) const;
};

SynthesizedTreeAutomaton synthesize_tree(const TreeOracle& oracle, int k, int depth_horizon,
                                         int tree_size, int context_size);

} // namespace advicer

#endif
