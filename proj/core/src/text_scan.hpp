#pragma once

// Line scanner shared by the `.sg` and `.col` readers.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "signed_circular/errors.hpp"

namespace sc::detail {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        fn(++line_no, line);
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
}

inline int line_count(std::string_view text)
{
    int count = 0;
    for_each_line(text, [&](int, std::string_view) { ++count; });
    return count;
}

class LineScanner {
public:
    LineScanner(int line_no, std::string_view line) : line_no_(line_no), line_(line)
    {
        const auto hash = line_.find('#');
        if (hash != std::string_view::npos) {
            auto c = line_.substr(hash + 1);
            if (!c.empty() && c.front() == ' ') {
                c.remove_prefix(1);
            }
            comment_ = c;
            line_ = line_.substr(0, hash);
        }
        skip_space();
    }

    std::optional<std::string_view> comment() const { return comment_; }
    bool at_end() const { return pos_ >= line_.size(); }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, column(), what); }

    std::string_view word()
    {
        const auto start = pos_;
        while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') {
            ++pos_;
        }
        auto w = line_.substr(start, pos_ - start);
        skip_space();
        return w;
    }

    void expect_word(std::string_view expected)
    {
        const int col = column();
        if (word() != expected) {
            throw ParseError(line_no_, col, "expected `" + std::string(expected) + "`");
        }
    }

    int integer(const char* what)
    {
        const int col = column();
        if (at_end()) {
            throw ParseError(line_no_, col, std::string("missing ") + what);
        }
        const auto w = word();
        int value = 0;
        const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
        if (ec != std::errc{} || ptr != w.data() + w.size()) {
            throw ParseError(line_no_, col, std::string("invalid ") + what + " `" + std::string(w) + "`");
        }
        return value;
    }

    char sign_token()
    {
        const int col = column();
        if (at_end()) {
            throw ParseError(line_no_, col, "missing edge sign");
        }
        const auto w = word();
        if (w != "+" && w != "-") {
            throw ParseError(line_no_, col, "edge sign must be `+` or `-`, got `" + std::string(w) + "`");
        }
        return w.front();
    }

    void expect_end() const
    {
        if (!at_end()) {
            fail("unexpected trailing text");
        }
    }

private:
    void skip_space()
    {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) {
            ++pos_;
        }
    }

    int line_no_;
    std::string_view line_;
    std::size_t pos_ = 0;
    std::optional<std::string_view> comment_;
};

} // namespace sc::detail
