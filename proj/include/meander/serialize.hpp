#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "meander/perm.hpp"

namespace meander {

// One meander per line: {"n":8,"perm":[3,6,7,2,1,8,5,4]}
// Key order and spacing are fixed so files diff cleanly.
std::string jsonl_line(const seq_t& seq);

// Parses a stream of jsonl lines.  Blank lines are skipped.  Malformed
// json, wrong shape, or an invalid meander raise with the 1-based line
// number in the message.  Every returned sequence is validated.
std::vector<seq_t> parse_jsonl(std::istream& in);
std::vector<seq_t> parse_jsonl_string(const std::string& text);

// Standalone SVG drawing of the arc configuration: crossings equally
// spaced on the horizontal line, arcs drawn as semicircles, virtual
// entry and exit arcs clipped at the margins.  Output is byte-for-byte
// deterministic for a given sequence.
std::string svg_document(const seq_t& seq);

}  // namespace meander
