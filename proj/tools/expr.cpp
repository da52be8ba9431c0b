#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    double parse() {
        const double v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad expression '" + std::string(s_) + "': " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_factor() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'p';
    }

    double sum() {
        double v = product();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            v = c == '+' ? v + product() : v - product();
        }
        return v;
    }

    double product() {
        double v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                const double rhs = unary();
                if (c == '/' && rhs == 0.0) fail("division by zero");
                v = c == '*' ? v * rhs : v / rhs;
            } else if (starts_factor()) {
                v *= primary();
            } else {
                return v;
            }
        }
    }

    double unary() {
        const char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            return c == '-' ? -unary() : unary();
        }
        return primary();
    }

    double primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            const double v = sum();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return v;
        }
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        double v = 0.0;
        const char* first = s_.data() + pos_;
        const auto [end, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec != std::errc{}) fail("expected a number or pi");
        pos_ += static_cast<std::size_t>(end - first);
        return v;
    }
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (std::size_t start = 0;;) {
        const std::size_t at = s.find(sep, start);
        std::string_view piece = s.substr(start, at - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        out.push_back(piece);
        if (at == std::string_view::npos) return out;
        start = at + 1;
    }
}

}  // namespace

double eval_expr(std::string_view text) {
    const double v = Parser(text).parse();
    if (!std::isfinite(v)) throw ParseError("non-finite value '" + std::string(text) + "'");
    return v;
}

std::vector<double> parse_list(const std::vector<std::string>& items) {
    std::vector<double> out;
    bool pending_ellipsis = false;
    for (const auto& joined : items)
        for (auto item : split(joined, ',')) {
            if (item == "...") {
                if (out.size() < 2 || pending_ellipsis) throw ParseError("'...' needs two values before it");
                pending_ellipsis = true;
                continue;
            }
            const auto parts = split(item, ':');
            if (parts.size() == 1) {
                const double v = eval_expr(item);
                if (pending_ellipsis) {
                    // Continue the progression set by the two preceding values up to v.
                    const double x0 = out[out.size() - 2], step = out.back() - x0;
                    const double k = (v - x0) / step;
                    if (step == 0.0 || k < 1.0 || std::abs(k - std::round(k)) > 1e-6)
                        throw ParseError("'...' does not reach " + std::string(item) + " in equal steps");
                    for (long j = 2; j < std::lround(k); ++j) out.push_back(x0 + static_cast<double>(j) * step);
                    pending_ellipsis = false;
                }
                out.push_back(v);
                continue;
            }
            if (pending_ellipsis) throw ParseError("'...' must be followed by a single value");
            if (parts.size() != 3) throw ParseError("range must be start:stop:step, got '" + std::string(item) + "'");
            const double a = eval_expr(parts[0]), b = eval_expr(parts[1]), step = eval_expr(parts[2]);
            if (step == 0.0 || (b - a) * step < 0.0)
                throw ParseError("range step does not reach the stop value in '" + std::string(item) + "'");
            const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
            if (count > 10'000'000) throw ParseError("range too long: '" + std::string(item) + "'");
            for (long k = 0; k < count; ++k) out.push_back(a + static_cast<double>(k) * step);
        }
    if (pending_ellipsis) throw ParseError("'...' must be followed by a final value");
    return out;
}

}  // namespace cli
