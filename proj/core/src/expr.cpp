#include "tfrac/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace tfrac {

namespace {
enum class Op { num, var, add, sub, mul, div, pow, neg, sin, cos, exp };
}

struct Expr::Node {
    Op op;
    double value = 0.0;   // num
    char var = 0;         // var: x y t a(lpha) T p(i)
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ExprError("expression error at position " + std::to_string(pos) + ": " + what);
    }

    static NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Expr::Node>();
        n->op = op; n->a = std::move(a); n->b = std::move(b);
        return n;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+')) lhs = make(Op::add, lhs, parse_term());
            else if (eat('-')) lhs = make(Op::sub, lhs, parse_term());
            else return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (eat('*')) lhs = make(Op::mul, lhs, parse_unary());
            else if (eat('/')) lhs = make(Op::div, lhs, parse_unary());
            else return lhs;
        }
    }

    NodePtr parse_unary() {
        if (eat('-')) return make(Op::neg, parse_unary());
        eat('+');
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (eat('^')) return make(Op::pow, base, parse_unary());  // right associative
        return base;
    }

    NodePtr parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (eat('(')) {
            NodePtr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t end;
        double v;
        try {
            v = std::stod(s.substr(pos), &end);
        } catch (const std::exception&) {
            fail("malformed number");
        }
        pos += end;
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::num; n->value = v;
        return n;
    }

    NodePtr parse_name() {
        std::size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string name = s.substr(start, pos - start);
        auto var = [](char v) {
            auto n = std::make_shared<Expr::Node>();
            n->op = Op::var; n->var = v;
            return NodePtr(n);
        };
        if (name == "x") return var('x');
        if (name == "y") return var('y');
        if (name == "t") return var('t');
        if (name == "alpha") return var('a');
        if (name == "T") return var('T');
        if (name == "pi") return var('p');
        if (name == "sin" || name == "cos" || name == "exp") {
            if (!eat('(')) fail("expected '(' after " + name);
            NodePtr arg = parse_expr();
            if (!eat(')')) fail("expected ')'");
            Op op = name == "sin" ? Op::sin : name == "cos" ? Op::cos : Op::exp;
            return make(op, arg);
        }
        if (name == "pow") {
            if (!eat('(')) fail("expected '(' after pow");
            NodePtr a = parse_expr();
            if (!eat(',')) fail("expected ',' in pow");
            NodePtr b = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return make(Op::pow, a, b);
        }
        fail("unknown name '" + name + "'");
    }
};

double eval_node(const Expr::Node& n, const ExprEnv& env) {
    switch (n.op) {
        case Op::num: return n.value;
        case Op::var:
            switch (n.var) {
                case 'x': return env.x;
                case 'y': return env.y;
                case 't': return env.t;
                case 'a': return env.alpha;
                case 'T': return env.T;
                default: return M_PI;
            }
        case Op::add: return eval_node(*n.a, env) + eval_node(*n.b, env);
        case Op::sub: return eval_node(*n.a, env) - eval_node(*n.b, env);
        case Op::mul: return eval_node(*n.a, env) * eval_node(*n.b, env);
        case Op::div: return eval_node(*n.a, env) / eval_node(*n.b, env);
        case Op::pow: return std::pow(eval_node(*n.a, env), eval_node(*n.b, env));
        case Op::neg: return -eval_node(*n.a, env);
        case Op::sin: return std::sin(eval_node(*n.a, env));
        case Op::cos: return std::cos(eval_node(*n.a, env));
        default: return std::exp(eval_node(*n.a, env));
    }
}

}  // namespace

Expr Expr::parse(const std::string& text) {
    Parser p(text);
    Expr e;
    e.root_ = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    e.text_ = text;
    return e;
}

double Expr::eval(const ExprEnv& env) const {
    if (!root_) throw ExprError("evaluating an empty expression");
    return eval_node(*root_, env);
}

}  // namespace tfrac
