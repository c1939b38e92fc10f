#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/element.hpp"

namespace ncalg {

/// Raised for lexical errors, unknown names and malformed brackets.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
    int line_;
    int column_;
};

/// Names an expression may refer to: alphabet generators plus defined elements.
struct NameScope {
    AlphabetPtr alphabet;
    std::map<std::string, Element, std::less<>> defined;
    /// Applied after every product; identity when empty.
    std::function<Element(const Element&)> reduce;

    bool knows(std::string_view name) const;
    Element lookup(std::string_view name) const;
};

struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Syntax tree of the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | name | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
struct ExpressionAst {
    enum class Kind { Rational, Name, Negate, Sum, Difference, Product, Power, Commutator, Anticommutator, Paren };

    Kind kind = Kind::Rational;
    Scalar value;         // Rational
    std::string name;     // Name
    unsigned exponent = 0;  // Power
    std::vector<ExpressionAst> children;
    SourcePos pos;
};

/// Parses `input`; every name must resolve in `scope`. An identifier that is
/// not itself a known name is split into a juxtaposition of known names when
/// possible ("CBA" -> C B A).
ExpressionAst parse_expression(std::string_view input, const NameScope& scope);

/// Evaluates the tree, reducing after each product with `scope.reduce`.
Element evaluate(const ExpressionAst& ast, const NameScope& scope);

/// parse_expression followed by evaluate.
Element parse_element(std::string_view input, const NameScope& scope);

/// Fully parenthesized rendering of the tree, mainly for diagnostics.
std::string ast_to_text(const ExpressionAst& ast);

}  // namespace ncalg
