#include "ncalg/expression.hpp"

#include <cctype>
#include <optional>

namespace ncalg {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      reason_(what),
      line_(line),
      column_(column) {}

bool NameScope::knows(std::string_view name) const {
    return defined.find(name) != defined.end() || (alphabet && alphabet->find(name));
}

Element NameScope::lookup(std::string_view name) const {
    if (auto it = defined.find(name); it != defined.end()) return it->second;
    if (alphabet) {
        if (auto s = alphabet->find(name)) return Element::generator(alphabet, *s);
    }
    throw std::out_of_range("unknown name '" + std::string(name) + "'");
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            SourcePos at = pos_;
            if (i_ >= src_.size()) {
                out.push_back({Tok::End, "", at});
                return out;
            }
            unsigned char c = static_cast<unsigned char>(src_[i_]);
            if (std::isdigit(c)) {
                out.push_back({Tok::Number, number(), at});
            } else if (ident_start(c)) {
                std::string text;
                while (i_ < src_.size() && ident_char(static_cast<unsigned char>(src_[i_]))) text += advance();
                out.push_back({Tok::Ident, std::move(text), at});
            } else {
                Tok kind;
                switch (c) {
                    case '+': kind = Tok::Plus; break;
                    case '-': kind = Tok::Minus; break;
                    case '*': kind = Tok::Star; break;
                    case '^': kind = Tok::Caret; break;
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case '[': kind = Tok::LBracket; break;
                    case ']': kind = Tok::RBracket; break;
                    case '{': kind = Tok::LBrace; break;
                    case '}': kind = Tok::RBrace; break;
                    case ',': kind = Tok::Comma; break;
                    case '/':
                        throw ParseError("'/' is only allowed inside rational literals such as 1/16", at.line, at.column);
                    default:
                        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", at.line,
                                         at.column);
                }
                out.push_back({kind, std::string(1, advance()), at});
            }
        }
    }

private:
    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            // continuation bytes of a UTF-8 sequence share the lead byte's column
            ++pos_.column;
        }
        return c;
    }

    void skip_space() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
    }

    std::string number() {
        std::string text;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) text += advance();
        if (i_ < src_.size() && src_[i_] == '/') {
            SourcePos slash = pos_;
            text += advance();
            if (i_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                throw ParseError("'/' in a rational literal must be followed by digits", slash.line, slash.column);
            }
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) text += advance();
        }
        return text;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const NameScope& scope) : toks_(std::move(tokens)), scope_(scope) {}

    ExpressionAst parse_all() {
        ExpressionAst e = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    Token take() { return toks_[k_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos.line, peek().pos.column); }

    void expect(Tok kind, const char* what, const Token& opener) {
        if (peek().kind != kind) {
            std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
            throw ParseError(std::string("expected ") + what + " to close '" + opener.text + "' opened at column " +
                                 std::to_string(opener.pos.column) + ", found " + got,
                             peek().pos.line, peek().pos.column);
        }
        ++k_;
    }

    static ExpressionAst node(ExpressionAst::Kind kind, SourcePos pos, std::vector<ExpressionAst> children) {
        ExpressionAst n;
        n.kind = kind;
        n.pos = pos;
        n.children = std::move(children);
        return n;
    }

    ExpressionAst expr() {
        SourcePos start = peek().pos;
        ExpressionAst lhs;
        if (peek().kind == Tok::Minus) {
            take();
            lhs = node(ExpressionAst::Kind::Negate, start, {term()});
        } else {
            if (peek().kind == Tok::Plus) take();
            lhs = term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = take();
            auto kind = op.kind == Tok::Plus ? ExpressionAst::Kind::Sum : ExpressionAst::Kind::Difference;
            ExpressionAst rhs = term();
            lhs = node(kind, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    static bool starts_atom(Tok t) {
        return t == Tok::Number || t == Tok::Ident || t == Tok::LParen || t == Tok::LBracket || t == Tok::LBrace;
    }

    ExpressionAst term() {
        ExpressionAst lhs = factor();
        while (true) {
            SourcePos at = peek().pos;
            if (peek().kind == Tok::Star) {
                take();
            } else if (!starts_atom(peek().kind)) {
                break;
            }
            ExpressionAst rhs = factor();
            lhs = node(ExpressionAst::Kind::Product, at, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExpressionAst factor() {
        ExpressionAst base = atom();
        if (peek().kind == Tok::Caret) {
            Token caret = take();
            if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) {
                fail("exponent must be a natural number");
            }
            Token n = take();
            ExpressionAst p = node(ExpressionAst::Kind::Power, caret.pos, {std::move(base)});
            p.exponent = static_cast<unsigned>(std::stoul(n.text));
            return p;
        }
        return base;
    }

    ExpressionAst atom() {
        Token t = peek();
        switch (t.kind) {
            case Tok::Number: {
                take();
                ExpressionAst n = node(ExpressionAst::Kind::Rational, t.pos, {});
                try {
                    n.value = Scalar::parse(t.text);
                } catch (const std::exception&) {
                    throw ParseError("invalid rational literal '" + t.text + "'", t.pos.line, t.pos.column);
                }
                return n;
            }
            case Tok::Ident:
                take();
                return names(t);
            case Tok::LParen: {
                take();
                ExpressionAst inner = expr();
                expect(Tok::RParen, "')'", t);
                return node(ExpressionAst::Kind::Paren, t.pos, {std::move(inner)});
            }
            case Tok::LBracket:
            case Tok::LBrace: {
                take();
                ExpressionAst a = expr();
                if (peek().kind != Tok::Comma) fail("expected ',' inside '" + t.text + "'");
                take();
                ExpressionAst b = expr();
                bool square = t.kind == Tok::LBracket;
                expect(square ? Tok::RBracket : Tok::RBrace, square ? "']'" : "'}'", t);
                return node(square ? ExpressionAst::Kind::Commutator : ExpressionAst::Kind::Anticommutator, t.pos,
                            {std::move(a), std::move(b)});
            }
            case Tok::End:
                fail("unexpected end of input");
            default:
                fail("unexpected '" + t.text + "'");
        }
    }

    /// Resolves an identifier, splitting it into known names if needed.
    ExpressionAst names(const Token& t) {
        std::vector<std::string> parts;
        if (scope_.knows(t.text)) {
            parts.push_back(t.text);
        } else if (!split(t.text, 0, parts)) {
            throw ParseError("unknown name '" + t.text + "'", t.pos.line, t.pos.column);
        }
        ExpressionAst out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            ExpressionAst n = node(ExpressionAst::Kind::Name, t.pos, {});
            n.name = parts[i];
            out = i == 0 ? std::move(n) : node(ExpressionAst::Kind::Product, t.pos, {std::move(out), std::move(n)});
        }
        return out;
    }

    bool split(const std::string& text, std::size_t from, std::vector<std::string>& parts) const {
        if (from == text.size()) return true;
        for (std::size_t len = text.size() - from; len > 0; --len) {
            std::string candidate = text.substr(from, len);
            if (!scope_.knows(candidate)) continue;
            parts.push_back(candidate);
            if (split(text, from + len, parts)) return true;
            parts.pop_back();
        }
        return false;
    }

    std::vector<Token> toks_;
    std::size_t k_ = 0;
    const NameScope& scope_;
};

Element reduce_with(const NameScope& scope, Element e) { return scope.reduce ? scope.reduce(e) : e; }

}  // namespace

ExpressionAst parse_expression(std::string_view input, const NameScope& scope) {
    return Parser(Lexer(input).run(), scope).parse_all();
}

Element evaluate(const ExpressionAst& ast, const NameScope& scope) {
    using K = ExpressionAst::Kind;
    switch (ast.kind) {
        case K::Rational:
            return Element(scope.alphabet, ast.value);
        case K::Name:
            return scope.lookup(ast.name);
        case K::Negate:
            return -evaluate(ast.children[0], scope);
        case K::Paren:
            return evaluate(ast.children[0], scope);
        case K::Sum:
            return evaluate(ast.children[0], scope) + evaluate(ast.children[1], scope);
        case K::Difference:
            return evaluate(ast.children[0], scope) - evaluate(ast.children[1], scope);
        case K::Product:
            return reduce_with(scope, evaluate(ast.children[0], scope) * evaluate(ast.children[1], scope));
        case K::Power: {
            Element base = evaluate(ast.children[0], scope);
            Element acc(scope.alphabet, Scalar(1));
            for (unsigned i = 0; i < ast.exponent; ++i) acc = reduce_with(scope, acc * base);
            return acc;
        }
        case K::Commutator:
        case K::Anticommutator: {
            Element a = evaluate(ast.children[0], scope);
            Element b = evaluate(ast.children[1], scope);
            return reduce_with(scope, ast.kind == K::Commutator ? commutator(a, b) : anticommutator(a, b));
        }
    }
    throw std::logic_error("unhandled expression node");
}

Element parse_element(std::string_view input, const NameScope& scope) {
    return reduce_with(scope, evaluate(parse_expression(input, scope), scope));
}

std::string ast_to_text(const ExpressionAst& ast) {
    using K = ExpressionAst::Kind;
    auto child = [&](std::size_t i) { return ast_to_text(ast.children[i]); };
    switch (ast.kind) {
        case K::Rational: return ast.value.to_string();
        case K::Name: return ast.name;
        case K::Negate: return "(-" + child(0) + ")";
        case K::Paren: return child(0);
        case K::Sum: return "(" + child(0) + " + " + child(1) + ")";
        case K::Difference: return "(" + child(0) + " - " + child(1) + ")";
        case K::Product: return "(" + child(0) + " * " + child(1) + ")";
        case K::Power: return "(" + child(0) + ")^" + std::to_string(ast.exponent);
        case K::Commutator: return "[" + child(0) + ", " + child(1) + "]";
        case K::Anticommutator: return "{" + child(0) + ", " + child(1) + "}";
    }
    return {};
}

}  // namespace ncalg
