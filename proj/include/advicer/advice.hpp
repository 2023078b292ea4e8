#ifndef ADVICER_ADVICE_HPP
#define ADVICER_ADVICE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "advicer/errors.hpp"

namespace advicer {

using Symbol = int;

/// Ordered finite alphabet; symbols are indices into the name table.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Symbol s) const;
    int index_of(std::string_view name) const; // -1 if absent
    bool contains(Symbol s) const { return s >= 0 && s < size(); }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

Alphabet binary_alphabet();
/// {"0","1",...,"<k-1>"}
Alphabet numeric_alphabet(int k);

/// Converts a text word to symbols. Single-character symbol names map one
/// character per symbol; otherwise the word must be comma-separated names.
std::vector<Symbol> to_symbols(const Alphabet& a, std::string_view text);
std::string to_text(const Alphabet& a, const std::vector<Symbol>& word);

/// An infinite word over a finite alphabet, evaluable at any 1-based
/// position. Either ultimately periodic (prefix + repeating period) or
/// produced by a named deterministic generator.
class AdviceStream {
public:
    AdviceStream() = default; // unset; any evaluation is a contract violation

    static AdviceStream ultimately_periodic(Alphabet alphabet,
                                            std::vector<Symbol> prefix,
                                            std::vector<Symbol> period);
    static AdviceStream generated(Alphabet alphabet, std::string name,
                                  std::function<Symbol(std::uint64_t)> at);

    /// n-th symbol, 1-based. n = 0 is a contract violation.
    Symbol at(std::uint64_t n) const;
    std::vector<Symbol> prefix(std::uint64_t n) const;
    std::string prefix_text(std::uint64_t n) const;

    const Alphabet& alphabet() const { return alphabet_; }
    bool is_ultimately_periodic() const { return !generator_; }
    const std::vector<Symbol>& stem() const { return prefix_; }
    const std::vector<Symbol>& cycle() const { return period_; }
    const std::string& generator_name() const { return name_; }

    /// `periodic:<prefix>|<period>` or `gen:<name>`.
    std::string descriptor() const;

    // Position classes for ultimately periodic streams: positions 1..|stem|
    // are singleton classes, positions past the stem collapse modulo the
    // cycle. Run analyses (Muller lassos, state equivalence) work on these.
    std::size_t phase_count() const;
    std::size_t phase_of(std::uint64_t pos) const;
    std::size_t phase_successor(std::size_t phase) const;
    Symbol at_phase(std::size_t phase) const;

private:
    Alphabet alphabet_;
    std::vector<Symbol> prefix_;
    std::vector<Symbol> period_;
    std::string name_;
    std::function<Symbol(std::uint64_t)> generator_;
};

/// A total labeling of {0,1}* by a finite alphabet.
class AdviceTree {
public:
    AdviceTree() = default; // unset; any evaluation is a contract violation

    static AdviceTree uniform(Alphabet alphabet, Symbol s);
    static AdviceTree depth_periodic(Alphabet alphabet, std::vector<Symbol> by_depth);
    static AdviceTree generated(Alphabet alphabet, std::string name,
                                std::function<Symbol(std::string_view)> at);

    Symbol at(std::string_view position) const;
    const Alphabet& alphabet() const { return alphabet_; }
    std::string descriptor() const;

private:
    Alphabet alphabet_;
    std::vector<Symbol> by_depth_; // uniform = size 1
    std::string name_;
    std::function<Symbol(std::string_view)> generator_;
};

} // namespace advicer

#endif
