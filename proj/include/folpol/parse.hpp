#pragma once
#include <stdexcept>
#include <string>

#include "folpol/form.hpp"

namespace folpol {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Grammar: sums of products of rational literals, sqrt(n), x, y, parentheses and powers;
// juxtaposition multiplies. A form has every term carrying exactly one of dx, dy.
OneForm parse_form(const std::string& text);
BivariatePoly parse_poly(const std::string& text);

}  // namespace folpol
