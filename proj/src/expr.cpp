#include "wspec/expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <vector>

namespace wspec {

namespace {

enum class Op { constant, var_x, var_y, add, sub, mul, div, pow, sqrt, neg };

struct Node {
    Op op;
    double value = 0.0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

double eval_node(const Node& n, double x, double y) {
    switch (n.op) {
        case Op::constant: return n.value;
        case Op::var_x: return x;
        case Op::var_y: return y;
        case Op::add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
        case Op::sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
        case Op::mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
        case Op::div: return eval_node(*n.lhs, x, y) / eval_node(*n.rhs, x, y);
        case Op::pow: return std::pow(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
        case Op::sqrt: return std::sqrt(eval_node(*n.lhs, x, y));
        case Op::neg: return -eval_node(*n.lhs, x, y);
    }
    return 0.0;
}

NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr parse() {
        auto e = expr();
        skip_space();
        if (pos_ != src_.size()) throw ExprParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = binary(Op::add, std::move(lhs), term());
            else if (eat('-'))
                lhs = binary(Op::sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        auto lhs = factor();
        for (;;) {
            if (eat('*'))
                lhs = binary(Op::mul, std::move(lhs), factor());
            else if (eat('/'))
                lhs = binary(Op::div, std::move(lhs), factor());
            else
                return lhs;
        }
    }

    NodePtr factor() {
        if (eat('-')) {
            auto n = std::make_unique<Node>();
            n->op = Op::neg;
            n->lhs = factor();
            return n;
        }
        return power();
    }

    NodePtr power() {
        auto base = atom();
        if (eat('^')) return binary(Op::pow, std::move(base), factor());
        return base;
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= src_.size()) throw ExprParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) throw ExprParseError("expected ')'", pos_);
            return e;
        }
        throw ExprParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        try {
            auto n = std::make_unique<Node>();
            n->op = Op::constant;
            n->value = std::stod(src_.substr(start, pos_ - start));
            return n;
        } catch (const std::exception&) {
            throw ExprParseError("bad number", start);
        }
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::string id = src_.substr(start, pos_ - start);
        auto n = std::make_unique<Node>();
        if (id == "x") {
            n->op = Op::var_x;
        } else if (id == "y") {
            n->op = Op::var_y;
        } else if (id == "sqrt") {
            if (!eat('(')) throw ExprParseError("expected '(' after sqrt", pos_);
            n->op = Op::sqrt;
            n->lhs = expr();
            if (!eat(')')) throw ExprParseError("expected ')'", pos_);
        } else {
            throw ExprParseError("unknown identifier '" + id + "'", start);
        }
        return n;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

}  // namespace

WeightFunction parse_weight_expression(const std::string& src) {
    auto root = std::shared_ptr<Node>(Parser(src).parse().release());
    WeightFunction f;
    f.name = "expr:" + src;
    f.fn = [root](double x, double y) { return eval_node(*root, x, y); };
    return f;
}

}  // namespace wspec
