#ifndef ADVICER_IO_HPP
#define ADVICER_IO_HPP

#include <optional>
#include <string>

#include "advicer/automata.hpp"
#include "advicer/nerode.hpp"
#include "advicer/separation.hpp"
#include "advicer/treeauto.hpp"

namespace advicer {

/// Named generator streams: champernowne-factorial, prime-char,
/// diag(<k>,<budget>).
AdviceStream catalog_stream(const std::string& name);

/// `periodic:<prefix>|<period>` over the given alphabet, or `gen:<name>`.
AdviceStream parse_stream_descriptor(const Alphabet& gamma, std::string_view descriptor);

AdviceTree parse_tree_descriptor(const Alphabet& gamma, std::string_view descriptor);

/// One machine per file; terminating machines carry an `accepting:` line,
/// Muller machines a `muller:` line.
struct ParsedMachine {
    std::optional<TermAutomaton> term;
    std::optional<MullerAutomaton> muller;
};

ParsedMachine parse_machine(const std::string& text);
std::string serialize(const TermAutomaton& m);
std::string serialize(const MullerAutomaton& m);

Transducer parse_transducer(const std::string& text);
std::string serialize(const Transducer& t);

std::string serialize(const SynthesizedAutomaton& m);

TreeAutomaton parse_tree_automaton(const std::string& text);
std::string serialize(const TreeAutomaton& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace advicer

#endif
