#include "advicer/advice.hpp"

#include <algorithm>
#include <sstream>

namespace advicer {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw ContractViolation("alphabet must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ContractViolation("duplicate alphabet symbol: " + names_[i]);
}

const std::string& Alphabet::name(Symbol s) const {
    if (!contains(s))
        throw ContractViolation("symbol id out of range: " + std::to_string(s));
    return names_[static_cast<std::size_t>(s)];
}

int Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return -1;
}

Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }

Alphabet numeric_alphabet(int k) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

std::vector<Symbol> to_symbols(const Alphabet& a, std::string_view text) {
    std::vector<Symbol> out;
    if (text.empty())
        return out;
    bool single = true;
    for (int s = 0; s < a.size(); ++s)
        if (a.name(s).size() != 1)
            single = false;
    if (single && text.find(',') == std::string_view::npos) {
        for (char c : text) {
            int s = a.index_of(std::string_view(&c, 1));
            if (s < 0)
                throw ContractViolation(std::string("symbol not in alphabet: ") + c);
            out.push_back(s);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        int s = a.index_of(tok);
        if (s < 0)
            throw ContractViolation("symbol not in alphabet: " + std::string(tok));
        out.push_back(s);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string to_text(const Alphabet& a, const std::vector<Symbol>& word) {
    bool single = true;
    for (int s = 0; s < a.size(); ++s)
        if (a.name(s).size() != 1)
            single = false;
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!single && i > 0)
            out += ',';
        out += a.name(word[i]);
    }
    return out;
}

AdviceStream AdviceStream::ultimately_periodic(Alphabet alphabet,
                                               std::vector<Symbol> prefix,
                                               std::vector<Symbol> period) {
    if (period.empty())
        throw ContractViolation("period must be nonempty");
    for (Symbol s : prefix)
        if (!alphabet.contains(s))
            throw ContractViolation("prefix symbol outside alphabet");
    for (Symbol s : period)
        if (!alphabet.contains(s))
            throw ContractViolation("period symbol outside alphabet");
    AdviceStream st;
    st.alphabet_ = std::move(alphabet);
    st.prefix_ = std::move(prefix);
    st.period_ = std::move(period);
    return st;
}

AdviceStream AdviceStream::generated(Alphabet alphabet, std::string name,
                                     std::function<Symbol(std::uint64_t)> at) {
    AdviceStream st;
    st.alphabet_ = std::move(alphabet);
    st.name_ = std::move(name);
    st.generator_ = std::move(at);
    return st;
}

Symbol AdviceStream::at(std::uint64_t n) const {
    if (n == 0)
        throw ContractViolation("advice positions are 1-based");
    if (generator_)
        return generator_(n);
    if (period_.empty())
        throw ContractViolation("evaluating an unset advice stream");
    if (n <= prefix_.size())
        return prefix_[n - 1];
    return period_[(n - prefix_.size() - 1) % period_.size()];
}

std::vector<Symbol> AdviceStream::prefix(std::uint64_t n) const {
    std::vector<Symbol> out;
    out.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i)
        out.push_back(at(i));
    return out;
}

std::string AdviceStream::prefix_text(std::uint64_t n) const {
    return to_text(alphabet_, prefix(n));
}

std::string AdviceStream::descriptor() const {
    if (generator_)
        return "gen:" + name_;
    return "periodic:" + to_text(alphabet_, prefix_) + "|" + to_text(alphabet_, period_);
}

std::size_t AdviceStream::phase_count() const {
    if (generator_)
        throw UnsupportedAdvice("phase analysis requires ultimately periodic advice");
    return prefix_.size() + period_.size();
}

std::size_t AdviceStream::phase_of(std::uint64_t pos) const {
    if (pos == 0)
        throw ContractViolation("advice positions are 1-based");
    if (generator_)
        throw UnsupportedAdvice("phase analysis requires ultimately periodic advice");
    if (pos <= prefix_.size())
        return static_cast<std::size_t>(pos - 1);
    return prefix_.size() + (pos - prefix_.size() - 1) % period_.size();
}

std::size_t AdviceStream::phase_successor(std::size_t phase) const {
    std::size_t total = phase_count();
    if (phase + 1 < total)
        return phase + 1;
    return prefix_.size(); // wrap to the start of the cycle
}

Symbol AdviceStream::at_phase(std::size_t phase) const {
    if (generator_)
        throw UnsupportedAdvice("phase analysis requires ultimately periodic advice");
    if (phase < prefix_.size())
        return prefix_[phase];
    return period_[phase - prefix_.size()];
}

AdviceTree AdviceTree::uniform(Alphabet alphabet, Symbol s) {
    if (!alphabet.contains(s))
        throw ContractViolation("uniform symbol outside alphabet");
    AdviceTree t;
    t.alphabet_ = std::move(alphabet);
    t.by_depth_ = {s};
    return t;
}

AdviceTree AdviceTree::depth_periodic(Alphabet alphabet, std::vector<Symbol> by_depth) {
    if (by_depth.empty())
        throw ContractViolation("depth table must be nonempty");
    for (Symbol s : by_depth)
        if (!alphabet.contains(s))
            throw ContractViolation("depth table symbol outside alphabet");
    AdviceTree t;
    t.alphabet_ = std::move(alphabet);
    t.by_depth_ = std::move(by_depth);
    return t;
}

AdviceTree AdviceTree::generated(Alphabet alphabet, std::string name,
                                 std::function<Symbol(std::string_view)> at) {
    AdviceTree t;
    t.alphabet_ = std::move(alphabet);
    t.name_ = std::move(name);
    t.generator_ = std::move(at);
    return t;
}

Symbol AdviceTree::at(std::string_view position) const {
    for (char c : position)
        if (c != '0' && c != '1')
            throw ContractViolation("tree position must be a binary string");
    if (generator_)
        return generator_(position);
    if (by_depth_.empty())
        throw ContractViolation("evaluating an unset advice tree");
    return by_depth_[position.size() % by_depth_.size()];
}

std::string AdviceTree::descriptor() const {
    if (generator_)
        return "tree:gen:" + name_;
    if (by_depth_.size() == 1)
        return "tree:uniform:" + alphabet_.name(by_depth_[0]);
    std::string out = "tree:depthperiodic:";
    for (std::size_t i = 0; i < by_depth_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += alphabet_.name(by_depth_[i]);
    }
    return out;
}

} // namespace advicer
