#include <sepstar/expression.hpp>

#include <array>
#include <cctype>

#include <sepstar/errors.hpp>
#include <sepstar/potentials.hpp>

namespace sepstar
{

namespace
{

constexpr std::array<std::string_view, 3> kBuiltins{"fubini-study", "hyperbolic", "flat"};

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b)
{
    Expr e;
    e.kind = kind;
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

class Parser
{
public:
    Parser(std::string_view text, int n) : s_(text), n_(n) {}

    ExprPtr parse()
    {
        skip();
        if (pos_ == s_.size()) {
            throw parse_error("empty expression", pos_);
        }
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) {
            throw parse_error(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned uint_literal(const char *what)
    {
        skip();
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.empty()) {
            throw parse_error(std::string("expected ") + what, start);
        }
        if (d.size() > 6) {
            throw parse_error(std::string(what) + " too large", start);
        }
        return static_cast<unsigned>(std::stoul(d));
    }

    ExprPtr expr()
    {
        ExprPtr e = term();
        while (true) {
            if (accept('+')) {
                e = binary(Expr::Kind::add, e, term());
            } else if (accept('-')) {
                e = binary(Expr::Kind::sub, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term()
    {
        ExprPtr e = factor();
        while (accept('*')) {
            e = binary(Expr::Kind::mul, e, factor());
        }
        return e;
    }

    ExprPtr factor()
    {
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::neg;
            e.lhs = factor();
            return node(std::move(e));
        }
        if (accept('+')) {
            return factor();
        }
        ExprPtr base = atom();
        if (accept('^')) {
            Expr e;
            e.kind = Expr::Kind::pow;
            e.exponent = uint_literal("exponent");
            e.lhs = std::move(base);
            return node(std::move(e));
        }
        return base;
    }

    ExprPtr variable(bool conjugate, std::size_t start)
    {
        skip();
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.empty()) {
            throw parse_error("expected variable index", at);
        }
        const unsigned long index = d.size() > 6 ? 1000000 : std::stoul(d);
        if (index == 0) {
            throw parse_error("variable indices start at 1", start);
        }
        if (index > static_cast<unsigned long>(n_)) {
            throw parse_error("index " + d + " exceeds dimension " + std::to_string(n_), start);
        }
        Expr e;
        e.kind = Expr::Kind::variable;
        e.var = conjugate ? Variable::zbar(static_cast<int>(index) - 1) : Variable::z(static_cast<int>(index) - 1);
        return node(std::move(e));
    }

    ExprPtr atom()
    {
        skip();
        const std::size_t start = pos_;
        if (pos_ == s_.size()) {
            throw parse_error("unexpected end of expression", pos_);
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!accept(')')) {
                throw parse_error("expected ')'", pos_);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(digits());
            mpz_class den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                const std::size_t at = pos_;
                const std::string d = digits();
                if (d.empty()) {
                    throw parse_error("expected denominator", at);
                }
                den = mpz_class(d);
                if (den == 0) {
                    throw parse_error("zero denominator", at);
                }
            }
            Expr e;
            e.value = mpq_class(num, den);
            e.value.canonicalize();
            return node(std::move(e));
        }
        for (std::string_view b : kBuiltins) {
            if (s_.substr(pos_, b.size()) == b && (pos_ + b.size() == s_.size() || !ident_char(s_[pos_ + b.size()]))) {
                pos_ += b.size();
                Expr e;
                e.kind = Expr::Kind::builtin;
                e.name = std::string(b);
                return node(std::move(e));
            }
        }
        if (s_.substr(pos_, 4) == "zbar") {
            pos_ += 4;
            return variable(true, start);
        }
        if (c == 'z') {
            ++pos_;
            return variable(false, start);
        }
        if (c == 'i' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::imaginary;
            return node(std::move(e));
        }
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expression(std::string_view text, int n)
{
    if (n < 1 || n > kMaxDim) {
        throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDim));
    }
    return Parser(text, n).parse();
}

Jet evaluate(const Expr &e, int n, int order)
{
    switch (e.kind) {
    case Expr::Kind::number:
        return Jet::constant(n, order, GaussRational(e.value));
    case Expr::Kind::imaginary:
        return Jet::constant(n, order, GaussRational::i());
    case Expr::Kind::variable:
        return Jet::variable(n, order, e.var);
    case Expr::Kind::builtin:
        return builtin_potential(e.name, n, order);
    case Expr::Kind::add:
        return evaluate(*e.lhs, n, order) + evaluate(*e.rhs, n, order);
    case Expr::Kind::sub:
        return evaluate(*e.lhs, n, order) - evaluate(*e.rhs, n, order);
    case Expr::Kind::mul:
        return evaluate(*e.lhs, n, order) * evaluate(*e.rhs, n, order);
    case Expr::Kind::neg:
        return -evaluate(*e.lhs, n, order);
    case Expr::Kind::pow: {
        const Jet base = evaluate(*e.lhs, n, order);
        Jet r = Jet::constant(n, order, GaussRational(1));
        for (unsigned k = 0; k < e.exponent; ++k) {
            r = r * base;
            if (r.is_zero()) {
                break;
            }
        }
        return r;
    }
    }
    throw std::logic_error("unknown expression node");
}

Jet evaluate_expression(std::string_view text, int n, int order) { return evaluate(*parse_expression(text, n), n, order); }

int expression_degree(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::imaginary:
        return 0;
    case Expr::Kind::variable:
        return 1;
    case Expr::Kind::builtin:
        return 2;
    case Expr::Kind::add:
    case Expr::Kind::sub:
        return std::max(expression_degree(*e.lhs), expression_degree(*e.rhs));
    case Expr::Kind::mul:
        return expression_degree(*e.lhs) + expression_degree(*e.rhs);
    case Expr::Kind::neg:
        return expression_degree(*e.lhs);
    case Expr::Kind::pow:
        return expression_degree(*e.lhs) * static_cast<int>(e.exponent);
    }
    return 0;
}

std::string to_string(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::number:
        return fraction_string(e.value);
    case Expr::Kind::imaginary:
        return "i";
    case Expr::Kind::variable:
        return (e.var.conjugate ? "zbar" : "z") + std::to_string(e.var.index + 1);
    case Expr::Kind::builtin:
        return e.name;
    case Expr::Kind::add:
        return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
    case Expr::Kind::sub:
        return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    case Expr::Kind::mul:
        return to_string(*e.lhs) + "*" + to_string(*e.rhs);
    case Expr::Kind::neg:
        return "-" + to_string(*e.lhs);
    case Expr::Kind::pow:
        return to_string(*e.lhs) + "^" + std::to_string(e.exponent);
    }
    return {};
}

} // namespace sepstar
