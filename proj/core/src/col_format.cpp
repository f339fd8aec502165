#include "signed_circular/col_format.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "signed_circular/errors.hpp"
#include "text_scan.hpp"

namespace sc {

std::string emit_col(const DiscreteColoring& c)
{
    std::string out = "rate " + std::to_string(c.grid.p) + " " + std::to_string(c.grid.q) + "\n";
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        out += "color " + std::to_string(v) + " " + std::to_string(c.colors[v]) + "\n";
    }
    return out;
}

DiscreteColoring parse_col(std::string_view text)
{
    std::optional<ColorGrid> grid;
    std::map<int, int> colors;
    detail::for_each_line(text, [&](int line_no, std::string_view line) {
        detail::LineScanner scan(line_no, line);
        if (scan.at_end()) {
            return;
        }
        if (!grid) {
            scan.expect_word("rate");
            const int p = scan.integer("numerator");
            const int col_q = scan.column();
            const int q = scan.integer("denominator");
            scan.expect_end();
            if (q < 1 || p < 2 * q) {
                throw ParseError(line_no, col_q, "rate must satisfy q >= 1 and p >= 2q");
            }
            grid = ColorGrid(p, q);
            return;
        }
        scan.expect_word("color");
        const int col_v = scan.column();
        const int v = scan.integer("vertex");
        const int col_c = scan.column();
        const int color = scan.integer("color");
        scan.expect_end();
        if (v < 0) {
            throw ParseError(line_no, col_v, "negative vertex");
        }
        if (color < 0 || color >= grid->p) {
            throw ParseError(line_no, col_c, "color out of range [0, " + std::to_string(grid->p) + ")");
        }
        if (!colors.emplace(v, color).second) {
            throw ParseError(line_no, col_v, "vertex " + std::to_string(v) + " colored twice");
        }
    });
    if (!grid) {
        throw ParseError(detail::line_count(text) + 1, 1, "missing `rate <p> <q>` line");
    }
    DiscreteColoring c{*grid, {}};
    for (const auto& [v, color] : colors) {
        if (v != static_cast<int>(c.colors.size())) {
            throw ParseError(detail::line_count(text) + 1, 1,
                             "vertex " + std::to_string(c.colors.size()) + " is not colored");
        }
        c.colors.push_back(color);
    }
    return c;
}

DiscreteColoring read_col_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_col(buffer.str());
}

void write_col_file(const std::string& path, const DiscreteColoring& c)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << emit_col(c);
}

} // namespace sc
