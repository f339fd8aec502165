#include "signed_circular/sg_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "signed_circular/errors.hpp"
#include "text_scan.hpp"

namespace sc {

SgDocument parse_sg(std::string_view text)
{
    SgDocument doc;
    bool have_header = false;
    detail::for_each_line(text, [&](int line_no, std::string_view line) {
        detail::LineScanner scan(line_no, line);
        if (auto comment = scan.comment()) {
            doc.comments.emplace_back(*comment);
        }
        if (scan.at_end()) {
            return;
        }
        if (!have_header) {
            scan.expect_word("sg");
            const int n = scan.integer("vertex count");
            if (n < 0) {
                scan.fail("vertex count must be non-negative");
            }
            scan.expect_end();
            doc.graph = SignedGraph(n);
            have_header = true;
            return;
        }
        const int u = scan.integer("edge endpoint");
        const int col_v = scan.column();
        const int v = scan.integer("edge endpoint");
        const int col_s = scan.column();
        const char s = scan.sign_token();
        scan.expect_end();
        const int n = doc.graph.order();
        if (u < 0 || u >= n) {
            throw ParseError(line_no, 1 + static_cast<int>(line.find_first_not_of(" \t")),
                             "vertex " + std::to_string(u) + " out of range");
        }
        if (v < 0 || v >= n) {
            throw ParseError(line_no, col_v, "vertex " + std::to_string(v) + " out of range");
        }
        if (u == v) {
            throw ParseError(line_no, col_s, "loop at vertex " + std::to_string(u));
        }
        doc.graph.add_edge(u, v, s == '+' ? Sign::Positive : Sign::Negative);
    });
    if (!have_header) {
        throw ParseError(detail::line_count(text) + 1, 1, "missing `sg <n>` header");
    }
    return doc;
}

SgDocument read_sg(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sg(buffer.str());
}

SgDocument read_sg_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_sg(in);
}

std::string emit_sg(const SignedGraph& g, const std::vector<std::string>& comments)
{
    std::string out;
    for (const auto& c : comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    out += "sg " + std::to_string(g.order()) + '\n';
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += sign_char(e.sign);
        out += '\n';
    }
    return out;
}

void write_sg_file(const std::string& path, const SignedGraph& g,
                   const std::vector<std::string>& comments)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << emit_sg(g, comments);
}

} // namespace sc
