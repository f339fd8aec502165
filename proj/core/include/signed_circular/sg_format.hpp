#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "signed_circular/signed_graph.hpp"

namespace sc {

/// Parsed `.sg` file: the graph plus the text of every `#` comment, in order
/// and without the leading `#` and one following space.
struct SgDocument {
    SignedGraph graph;
    std::vector<std::string> comments;
};

/// Grammar: `sg <n>` then one `u v +` / `u v -` line per edge. `#` starts a
/// comment, blank lines are ignored. Throws ParseError.
SgDocument parse_sg(std::string_view text);
SgDocument read_sg(std::istream& in);
SgDocument read_sg_file(const std::string& path);

/// Comment lines are written first, each prefixed with "# ".
std::string emit_sg(const SignedGraph& g, const std::vector<std::string>& comments = {});
void write_sg_file(const std::string& path, const SignedGraph& g,
                   const std::vector<std::string>& comments = {});

} // namespace sc
