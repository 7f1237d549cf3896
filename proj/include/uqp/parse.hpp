// parse.hpp
//
// Surface syntax for algebra elements:
//
//   expr   := ['+'|'-']? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' sint)?
//   atom   := 'x' uint | 'e' '[' uint ',' uint ']' | 'q' | uint | '(' expr ')'
//
// Whitespace-insensitive; '*' is optional between atoms; negative exponents
// are allowed on q only.  (The optional leading sign is a strict superset of
// the sum rule so canonical renderings of negative leading terms re-parse.)

#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqp/algebra.hpp"

namespace uqp {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          pos(position) {}
    size_t pos;
};

// ---------------------------------------------------------------------------
// AST.

struct Expression {
    enum class Kind { sum, product, power, number, generator, letter, q };
    Kind kind;
    // sum: children with signs; product: children; power: single child + exponent
    std::vector<std::pair<int, Expression>> children;  // sign is +1/-1 (sums) or unused
    long number = 0;                                   // number
    int gen_index = 0;                                 // generator
    Letter letter_value;                               // letter
    int exponent = 1;                                  // power
};

namespace detail {

struct Token {
    enum class Kind { plus, minus, star, caret, lparen, rparen, lbracket, rbracket, comma,
                      integer, gen, e, q, end };
    Kind kind;
    long value = 0;  // integer payload (integer literal or generator index)
    size_t pos = 0;
};

inline std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> tokens;
    size_t k = 0;
    const auto read_uint = [&](size_t at) -> long {
        if (k >= input.size() || !std::isdigit(static_cast<unsigned char>(input[k])))
            throw ParseError("expected digits", at);
        long v = 0;
        while (k < input.size() && std::isdigit(static_cast<unsigned char>(input[k]))) {
            v = v * 10 + (input[k] - '0');
            if (v > 1000000) throw ParseError("integer too large", at);
            ++k;
        }
        return v;
    };
    while (k < input.size()) {
        const char c = input[k];
        const size_t at = k;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        switch (c) {
            case '+': tokens.push_back({Token::Kind::plus, 0, at}); ++k; continue;
            case '-': tokens.push_back({Token::Kind::minus, 0, at}); ++k; continue;
            case '*': tokens.push_back({Token::Kind::star, 0, at}); ++k; continue;
            case '^': tokens.push_back({Token::Kind::caret, 0, at}); ++k; continue;
            case '(': tokens.push_back({Token::Kind::lparen, 0, at}); ++k; continue;
            case ')': tokens.push_back({Token::Kind::rparen, 0, at}); ++k; continue;
            case '[': tokens.push_back({Token::Kind::lbracket, 0, at}); ++k; continue;
            case ']': tokens.push_back({Token::Kind::rbracket, 0, at}); ++k; continue;
            case ',': tokens.push_back({Token::Kind::comma, 0, at}); ++k; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tokens.push_back({Token::Kind::integer, read_uint(at), at});
            continue;
        }
        if (c == 'x') {
            ++k;
            tokens.push_back({Token::Kind::gen, read_uint(at), at});
            continue;
        }
        if (c == 'e') {
            ++k;
            tokens.push_back({Token::Kind::e, 0, at});
            continue;
        }
        if (c == 'q') {
            ++k;
            tokens.push_back({Token::Kind::q, 0, at});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
    tokens.push_back({Token::Kind::end, 0, input.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, int n) : tokens_(std::move(tokens)), n_(n) {}

    Expression parse() {
        Expression e = parse_expr();
        expect(Token::Kind::end, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[k_]; }
    Token take() { return tokens_[k_++]; }
    void expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
        ++k_;
    }

    static bool starts_factor(Token::Kind kind) {
        switch (kind) {
            case Token::Kind::integer:
            case Token::Kind::gen:
            case Token::Kind::e:
            case Token::Kind::q:
            case Token::Kind::lparen: return true;
            default: return false;
        }
    }

    Expression parse_expr() {
        Expression sum;
        sum.kind = Expression::Kind::sum;
        int sign = 1;
        if (peek().kind == Token::Kind::plus) take();
        else if (peek().kind == Token::Kind::minus) { take(); sign = -1; }
        sum.children.emplace_back(sign, parse_term());
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            const int s = take().kind == Token::Kind::plus ? 1 : -1;
            sum.children.emplace_back(s, parse_term());
        }
        if (sum.children.size() == 1 && sum.children[0].first == 1)
            return std::move(sum.children[0].second);
        return sum;
    }

    Expression parse_term() {
        Expression prod;
        prod.kind = Expression::Kind::product;
        prod.children.emplace_back(1, parse_factor());
        for (;;) {
            if (peek().kind == Token::Kind::star) {
                take();
                prod.children.emplace_back(1, parse_factor());
            } else if (starts_factor(peek().kind)) {
                prod.children.emplace_back(1, parse_factor());
            } else {
                break;
            }
        }
        if (prod.children.size() == 1) return std::move(prod.children[0].second);
        return prod;
    }

    Expression parse_factor() {
        Expression atom = parse_atom();
        if (peek().kind != Token::Kind::caret) return atom;
        const size_t caret_pos = take().pos;
        int sign = 1;
        if (peek().kind == Token::Kind::minus) {
            take();
            sign = -1;
        }
        if (peek().kind != Token::Kind::integer) throw ParseError("expected exponent", peek().pos);
        const long raw = take().value;
        if (sign < 0 && atom.kind != Expression::Kind::q)
            throw ParseError("negative exponent allowed on q only", caret_pos);
        Expression power;
        power.kind = Expression::Kind::power;
        power.exponent = static_cast<int>(sign * raw);
        power.children.emplace_back(1, std::move(atom));
        return power;
    }

    Expression parse_atom() {
        const Token t = peek();
        switch (t.kind) {
            case Token::Kind::integer: {
                take();
                Expression e;
                e.kind = Expression::Kind::number;
                e.number = t.value;
                return e;
            }
            case Token::Kind::gen: {
                take();
                if (t.value < 1 || t.value > n_)
                    throw ParseError("generator x" + std::to_string(t.value) +
                                         " out of range for rank " + std::to_string(n_),
                                     t.pos);
                Expression e;
                e.kind = Expression::Kind::generator;
                e.gen_index = static_cast<int>(t.value);
                return e;
            }
            case Token::Kind::e: {
                take();
                expect(Token::Kind::lbracket, "'['");
                if (peek().kind != Token::Kind::integer) throw ParseError("expected row index", peek().pos);
                const long i = take().value;
                expect(Token::Kind::comma, "','");
                if (peek().kind != Token::Kind::integer) throw ParseError("expected column index", peek().pos);
                const long j = take().value;
                expect(Token::Kind::rbracket, "']'");
                const Letter l{static_cast<int>(i), static_cast<int>(j)};
                if (!(1 <= l.i && l.i < l.j && l.j <= n_ + 1))
                    throw ParseError("letter e[" + std::to_string(i) + "," + std::to_string(j) +
                                         "] out of range for rank " + std::to_string(n_),
                                     t.pos);
                Expression e;
                e.kind = Expression::Kind::letter;
                e.letter_value = l;
                return e;
            }
            case Token::Kind::q: {
                take();
                Expression e;
                e.kind = Expression::Kind::q;
                return e;
            }
            case Token::Kind::lparen: {
                take();
                Expression e = parse_expr();
                expect(Token::Kind::rparen, "')'");
                return e;
            }
            default: throw ParseError("expected atom", t.pos);
        }
    }

    std::vector<Token> tokens_;
    size_t k_ = 0;
    int n_;
};

}  // namespace detail

inline Expression parse(const std::string& input, int n) {
    if (n < 1) throw std::domain_error("parse: rank must be >= 1");
    return detail::Parser(detail::tokenize(input), n).parse();
}

inline Element eval_expression(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::sum: {
            Element sum;
            for (const auto& [sign, child] : e.children) {
                const Element v = eval_expression(child);
                if (sign > 0) sum += v;
                else sum -= v;
            }
            return sum;
        }
        case Expression::Kind::product: {
            Element prod = Element::one();
            for (const auto& [sign, child] : e.children) prod *= eval_expression(child);
            return prod;
        }
        case Expression::Kind::power: {
            const Expression& base = e.children[0].second;
            if (base.kind == Expression::Kind::q)
                return Element::scalar(Laurent::q_power(e.exponent));
            return eval_expression(base).power(e.exponent);
        }
        case Expression::Kind::number: return Element::scalar(Laurent(e.number));
        case Expression::Kind::generator: return Element::generator(e.gen_index);
        case Expression::Kind::letter: return Element::letter(e.letter_value);
        case Expression::Kind::q: return Element::scalar(Laurent::q_power(1));
    }
    throw std::logic_error("eval_expression: unreachable");
}

inline Element parse_element(const std::string& input, int n) {
    return eval_expression(parse(input, n));
}

}  // namespace uqp
