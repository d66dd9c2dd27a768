#pragma once

// Small arithmetic expression language for user supplied fields.
//
//   additive       := multiplicative (('+' | '-') multiplicative)*
//   multiplicative := unary (('*' | '/') unary)*
//   unary          := '-' unary | power
//   power          := primary ('^' unary)?          right associative
//   primary        := number | x1..x9 | func '(' additive ')' | '(' additive ')'
//   func           := exp | abs | tanh | sin | cos | sqrt

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsym/error.hpp"

namespace gsym {

class Expression {
public:
    enum class op { number, variable, neg, add, sub, mul, div, pow, exp, abs, tanh, sin, cos, sqrt };

    struct Node {
        op kind;
        double value = 0.0;  // number
        int index = -1;      // variable, zero based
        int lhs = -1;
        int rhs = -1;
    };

    static Expression parse(std::string_view text, std::size_t dim);

    double operator()(std::span<const double> x) const { return eval(root_, x); }

    /// Fully parenthesized form that parses back to the same tree.
    std::string to_string() const { return print(root_); }

    bool uses_abs() const noexcept {
        for (const auto& n : nodes_)
            if (n.kind == op::abs)
                return true;
        return false;
    }

    const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
    friend class ExpressionParser;

    double eval(int i, std::span<const double> x) const {
        const Node& n = nodes_[static_cast<std::size_t>(i)];
        switch (n.kind) {
            case op::number: return n.value;
            case op::variable: return x[static_cast<std::size_t>(n.index)];
            case op::neg: return -eval(n.lhs, x);
            case op::add: return eval(n.lhs, x) + eval(n.rhs, x);
            case op::sub: return eval(n.lhs, x) - eval(n.rhs, x);
            case op::mul: return eval(n.lhs, x) * eval(n.rhs, x);
            case op::div: return eval(n.lhs, x) / eval(n.rhs, x);
            case op::pow: return std::pow(eval(n.lhs, x), eval(n.rhs, x));
            case op::exp: return std::exp(eval(n.lhs, x));
            case op::abs: return std::abs(eval(n.lhs, x));
            case op::tanh: return std::tanh(eval(n.lhs, x));
            case op::sin: return std::sin(eval(n.lhs, x));
            case op::cos: return std::cos(eval(n.lhs, x));
            case op::sqrt: return std::sqrt(eval(n.lhs, x));
        }
        return 0.0;
    }

    std::string print(int i) const {
        const Node& n = nodes_[static_cast<std::size_t>(i)];
        auto bin = [&](const char* sym) { return "(" + print(n.lhs) + sym + print(n.rhs) + ")"; };
        auto fn = [&](const char* name) { return std::string(name) + "(" + print(n.lhs) + ")"; };
        switch (n.kind) {
            case op::number: {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", n.value);
                return buf;
            }
            case op::variable: return "x" + std::to_string(n.index + 1);
            case op::neg: return "(-" + print(n.lhs) + ")";
            case op::add: return bin("+");
            case op::sub: return bin("-");
            case op::mul: return bin("*");
            case op::div: return bin("/");
            case op::pow: return bin("^");
            case op::exp: return fn("exp");
            case op::abs: return fn("abs");
            case op::tanh: return fn("tanh");
            case op::sin: return fn("sin");
            case op::cos: return fn("cos");
            case op::sqrt: return fn("sqrt");
        }
        return {};
    }

    std::vector<Node> nodes_;
    int root_ = -1;
};

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

    Expression run() {
        out_.root_ = additive();
        skip_space();
        if (pos_ < text_.size())
            fail(parse_error::kind::syntax, "unexpected '" + std::string(1, text_[pos_]) + "'");
        return std::move(out_);
    }

private:
    using op = Expression::op;

    [[noreturn]] void fail(parse_error::kind k, const std::string& what) const { throw parse_error(k, pos_, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    int push(Expression::Node n) {
        out_.nodes_.push_back(n);
        return static_cast<int>(out_.nodes_.size() - 1);
    }

    int binary(op k, int lhs, int rhs) { return push({k, 0.0, -1, lhs, rhs}); }

    int additive() {
        int lhs = multiplicative();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            lhs = binary(c == '+' ? op::add : op::sub, lhs, multiplicative());
        }
        return lhs;
    }

    int multiplicative() {
        int lhs = unary();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            lhs = binary(c == '*' ? op::mul : op::div, lhs, unary());
        }
        return lhs;
    }

    int unary() {
        if (peek() == '-') {
            ++pos_;
            return push({op::neg, 0.0, -1, unary(), -1});
        }
        return power();
    }

    int power() {
        int base = primary();
        if (peek() == '^') {
            ++pos_;
            return binary(op::pow, base, unary());
        }
        return base;
    }

    int primary() {
        const char c = peek();
        if (c == '\0')
            fail(parse_error::kind::syntax, "unexpected end of input");
        if (c == '(') {
            ++pos_;
            int inner = additive();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return identifier();
        fail(parse_error::kind::syntax, "unexpected '" + std::string(1, c) + "'");
    }

    void expect(char c) {
        if (peek() != c)
            fail(parse_error::kind::syntax, std::string("expected '") + c + "'");
        ++pos_;
    }

    int number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
        if (ec != std::errc{})
            fail(parse_error::kind::syntax, "malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return push({op::number, value, -1, -1, -1});
    }

    int identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name.size() >= 2 && name[0] == 'x' &&
            name.substr(1).find_first_not_of("0123456789") == std::string_view::npos) {
            int index = 0;
            std::from_chars(name.data() + 1, name.data() + name.size(), index);
            if (index < 1 || index > 9 || static_cast<std::size_t>(index) > dim_) {
                pos_ = start;
                fail(parse_error::kind::variable,
                     "variable '" + std::string(name) + "' out of range for dimension " + std::to_string(dim_));
            }
            return push({op::variable, 0.0, index - 1, -1, -1});
        }

        static constexpr std::array<std::pair<std::string_view, op>, 6> functions{{
            {"exp", op::exp}, {"abs", op::abs}, {"tanh", op::tanh},
            {"sin", op::sin}, {"cos", op::cos}, {"sqrt", op::sqrt},
        }};
        for (const auto& [fname, kind] : functions) {
            if (name != fname)
                continue;
            expect('(');
            if (peek() == ')')
                fail(parse_error::kind::arity, std::string(fname) + " takes exactly one argument");
            int arg = additive();
            if (peek() == ',')
                fail(parse_error::kind::arity, std::string(fname) + " takes exactly one argument");
            expect(')');
            return push({kind, 0.0, -1, arg, -1});
        }
        pos_ = start;
        fail(parse_error::kind::syntax, "unknown identifier '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::size_t dim_;
    std::size_t pos_ = 0;
    Expression out_;
};

inline Expression Expression::parse(std::string_view text, std::size_t dim) {
    return ExpressionParser(text, dim).run();
}

}  // namespace gsym
