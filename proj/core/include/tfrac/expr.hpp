#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace tfrac {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Variables and named constants visible to an expression.
struct ExprEnv {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double alpha = 0.0;
    double T = 0.0;
};

/// Parsed closed-form expression in the spec-file sub-language:
/// operators + - * / ^, functions sin cos exp pow, constants pi alpha T,
/// variables x y t.
class Expr {
  public:
    static Expr parse(const std::string& text);
    double eval(const ExprEnv& env) const;
    const std::string& text() const { return text_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace tfrac
