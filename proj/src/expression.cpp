#include "fpa/expression.hpp"

#include <cctype>
#include <limits>

namespace fpa {

Mode parse_mode(std::string_view name)
{
    if (name == "poisson")
        return Mode::Poisson;
    if (name == "env")
        return Mode::Env;
    if (name == "symplectic")
        return Mode::Symplectic;
    if (name == "weyl")
        return Mode::Weyl;
    if (name == "pnenv")
        return Mode::PnEnv;
    throw DomainError("unknown mode '" + std::string(name) + "'");
}

std::string mode_name(Mode mode)
{
    switch (mode) {
    case Mode::Poisson:
        return "poisson";
    case Mode::Env:
        return "env";
    case Mode::Symplectic:
        return "symplectic";
    case Mode::Weyl:
        return "weyl";
    case Mode::PnEnv:
        return "pnenv";
    }
    return "?";
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

constexpr int kIndexCap = 1 << 20;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip_space();
        if (!at_end())
            fail("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    char advance()
    {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }

    void expect(char c)
    {
        skip_space();
        if (at_end())
            fail(std::string("expected '") + c + "' but the input ended");
        if (peek() != c)
            fail(std::string("expected '") + c + "' but found '" + peek() + "'");
        advance();
    }

    std::shared_ptr<Expr> node(Expr::Kind kind, int line, int col) const
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = line;
        e->column = col;
        return e;
    }

    ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b, int line, int col) const
    {
        auto e = node(kind, line, col);
        e->children = {std::move(a), std::move(b)};
        return e;
    }

    std::string digits()
    {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            out.push_back(advance());
        return out;
    }

    static int capped(const std::string& d)
    {
        long v = 0;
        for (char c : d) {
            v = v * 10 + (c - '0');
            if (v > kIndexCap)
                return kIndexCap;
        }
        return static_cast<int>(v);
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (true) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-')
                return lhs;
            const int line = line_, col = col_;
            advance();
            ExprPtr rhs = term();
            lhs = binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs, line, col);
        }
    }

    static bool is_h_factor(const Expr& e)
    {
        if (e.kind == Expr::Kind::Neg)
            return is_h_factor(*e.children[0]);
        return e.kind == Expr::Kind::Ham || (e.kind == Expr::Kind::Pow && e.children[0]->kind == Expr::Kind::Ham);
    }

    bool h_call_ahead() const
    {
        if (peek() != 'h')
            return false;
        std::size_t p = pos_ + 1;
        while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p])))
            ++p;
        return p < src_.size() && src_[p] == '(';
    }

    ExprPtr term()
    {
        ExprPtr lhs = factor();
        ExprPtr last = lhs;
        while (true) {
            skip_space();
            const int line = line_, col = col_;
            if (peek() == '*') {
                advance();
            } else if (!(is_h_factor(*last) && h_call_ahead())) {
                return lhs;
            }
            last = factor();
            lhs = binary(Expr::Kind::Mul, lhs, last, line, col);
        }
    }

    ExprPtr factor()
    {
        skip_space();
        const int line = line_, col = col_;
        if (peek() == '-') {
            advance();
            auto e = node(Expr::Kind::Neg, line, col);
            e->children = {factor()};
            return e;
        }
        ExprPtr b = base();
        skip_space();
        if (peek() != '^')
            return b;
        const int pl = line_, pc = col_;
        advance();
        skip_space();
        const std::string d = digits();
        if (d.empty())
            fail("expected a nonnegative integer exponent after '^'");
        auto e = node(Expr::Kind::Pow, pl, pc);
        e->exponent = capped(d);
        e->children = {b};
        return e;
    }

    ExprPtr base()
    {
        skip_space();
        const int line = line_, col = col_;
        if (at_end())
            fail("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text = digits();
            if (peek() == '/') {
                advance();
                const std::string den = digits();
                if (den.empty())
                    fail("expected a denominator after '/'");
                if (den.find_first_not_of('0') == std::string::npos)
                    throw ParseError("zero denominator", line, col);
                text += "/" + den;
            }
            auto e = node(Expr::Kind::Number, line, col);
            e->value = parse_scalar(text);
            return e;
        }
        if (c == 'x' || c == 'y' || c == 'X' || c == 'Y') {
            advance();
            const std::string d = digits();
            if (d.empty())
                fail(std::string("expected a variable index after '") + c + "'");
            auto e = node(Expr::Kind::Variable, line, col);
            e->letter = c;
            e->index = capped(d);
            return e;
        }
        if (c == 'h') {
            advance();
            expect('(');
            auto e = node(Expr::Kind::Ham, line, col);
            e->children = {expr()};
            expect(')');
            return e;
        }
        if (c == '(') {
            advance();
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (c == '{' || c == '[') {
            advance();
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(c == '{' ? '}' : ']');
            return binary(c == '{' ? Expr::Kind::Brace : Expr::Kind::Square, a, b, line, col);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

[[noreturn]] void illegal(const Expr& e, const std::string& what)
{
    throw ParseError(what, e.line, e.column);
}

void check_index(const Expr& e, int n)
{
    if (e.index < 1 || e.index > n)
        throw DomainError("variable index " + std::to_string(e.index) + " at " + std::to_string(e.line) +
                          ":" + std::to_string(e.column) + " is outside 1.." + std::to_string(n));
}

constexpr int kMaxExponent = 4096;

template <typename Ops>
typename Ops::Value evaluate(const Expr& e, const Ops& ops)
{
    using V = typename Ops::Value;
    switch (e.kind) {
    case Expr::Kind::Number:
        return ops.number(e.value);
    case Expr::Kind::Variable:
        check_index(e, ops.n);
        return ops.variable(e);
    case Expr::Kind::Add:
        return ops.add(evaluate(*e.children[0], ops), evaluate(*e.children[1], ops));
    case Expr::Kind::Sub:
        return ops.add(evaluate(*e.children[0], ops), ops.neg(evaluate(*e.children[1], ops)));
    case Expr::Kind::Neg:
        return ops.neg(evaluate(*e.children[0], ops));
    case Expr::Kind::Mul:
        return ops.mul(evaluate(*e.children[0], ops), evaluate(*e.children[1], ops));
    case Expr::Kind::Pow: {
        if (e.exponent > kMaxExponent)
            throw DomainError("exponent too large");
        const V b = evaluate(*e.children[0], ops);
        V r = ops.number(Scalar(1));
        for (int i = 0; i < e.exponent; ++i)
            r = ops.mul(r, b);
        return r;
    }
    case Expr::Kind::Brace:
        return ops.brace(evaluate(*e.children[0], ops), evaluate(*e.children[1], ops), e);
    case Expr::Kind::Square:
        return ops.square(evaluate(*e.children[0], ops), evaluate(*e.children[1], ops), e);
    case Expr::Kind::Ham:
        return ops.ham(evaluate(*e.children[0], ops), e);
    }
    illegal(e, "unknown expression node");
}

struct PoissonOps {
    using Value = PoissonElement;
    int n;
    Value number(const Scalar& c) const { return Value(c); }
    Value variable(const Expr& e) const
    {
        if (e.letter != 'x')
            illegal(e, "only x-variables are available in poisson mode");
        return Value::generator(e.index);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value brace(const Value& a, const Value& b, const Expr&) const { return poisson_bracket(a, b); }
    Value square(const Value& a, const Value& b, const Expr&) const { return poisson_bracket(a, b); }
    Value ham(const Value&, const Expr& e) const { illegal(e, "h(...) is only available in env and pnenv modes"); }
};

struct EnvOps {
    using Value = EnvElement;
    int n;
    static PoissonElement in_p(const Value& v, const Expr& e, const char* what)
    {
        Splitting s = split(v);
        if (!s.omega_part.is_zero())
            illegal(e, std::string(what) + " needs arguments in the Poisson algebra");
        return s.p_part;
    }
    Value number(const Scalar& c) const { return Value(c); }
    Value variable(const Expr& e) const
    {
        if (e.letter != 'x')
            illegal(e, "only x-variables are available in env mode");
        return Value(PoissonElement::generator(e.index));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return env_mul(a, b); }
    Value brace(const Value& a, const Value& b, const Expr& e) const
    {
        return Value(poisson_bracket(in_p(a, e, "a bracket"), in_p(b, e, "a bracket")));
    }
    Value square(const Value& a, const Value& b, const Expr& e) const { return brace(a, b, e); }
    Value ham(const Value& a, const Expr& e) const { return fpa::ham(in_p(a, e, "h(...)")); }
};

struct SymplecticOps {
    using Value = SymplecticPoly;
    int n;
    Value number(const Scalar& c) const { return Polynomial::constant(2 * n, c); }
    Value variable(const Expr& e) const
    {
        if (e.letter == 'x')
            return sp_x(n, e.index);
        if (e.letter == 'y')
            return sp_y(n, e.index);
        illegal(e, "X/Y are only available in weyl mode");
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value brace(const Value& a, const Value& b, const Expr&) const { return sp_bracket(a, b); }
    Value square(const Value& a, const Value& b, const Expr&) const { return sp_bracket(a, b); }
    Value ham(const Value&, const Expr& e) const { illegal(e, "h(...) is only available in env and pnenv modes"); }
};

struct WeylOps {
    using Value = WeylElement;
    int n;
    Value number(const Scalar& c) const { return Value::constant(n, c); }
    Value variable(const Expr& e) const
    {
        return (e.letter == 'x' || e.letter == 'X') ? Value::X(n, e.index) : Value::Y(n, e.index);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return Scalar(-1) * a; }
    Value mul(const Value& a, const Value& b) const { return weyl_mul(a, b); }
    Value brace(const Value&, const Value&, const Expr& e) const
    {
        illegal(e, "{...} is not available in weyl mode; use [a,b] for the commutator");
    }
    Value square(const Value& a, const Value& b, const Expr&) const { return weyl_mul(a, b) - weyl_mul(b, a); }
    Value ham(const Value&, const Expr& e) const { illegal(e, "h(...) is only available in env and pnenv modes"); }
};

struct PnEnvOps {
    using Value = PnEnvElement;
    int n;
    SymplecticPoly in_p(const Value& v, const Expr& e, const char* what) const
    {
        SymplecticPoly p(2 * n);
        for (const auto& [g, c] : v.terms()) {
            if (!g.is_zero())
                illegal(e, std::string(what) + " needs polynomial arguments");
            p = c;
        }
        return p;
    }
    Value number(const Scalar& c) const { return Value::from_poly(Polynomial::constant(2 * n, c)); }
    Value variable(const Expr& e) const
    {
        if (e.letter == 'x')
            return Value::from_poly(sp_x(n, e.index));
        if (e.letter == 'y')
            return Value::from_poly(sp_y(n, e.index));
        illegal(e, "X/Y are only available in weyl mode");
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return Scalar(-1) * a; }
    Value mul(const Value& a, const Value& b) const { return pn_env_mul(a, b); }
    Value brace(const Value& a, const Value& b, const Expr& e) const
    {
        return Value::from_poly(sp_bracket(in_p(a, e, "a bracket"), in_p(b, e, "a bracket")));
    }
    Value square(const Value& a, const Value& b, const Expr&) const { return pn_env_mul(a, b) - pn_env_mul(b, a); }
    Value ham(const Value& a, const Expr& e) const
    {
        // h_p = sum_v dp/dv h_v
        const SymplecticPoly p = in_p(a, e, "h(...)");
        Value r(n);
        for (int v = 0; v < 2 * n; ++v) {
            MultiIndex gamma(2 * n);
            gamma.set(v, 1);
            r.add_term(gamma, p.derivative(v));
        }
        return r;
    }
};

void check_rank(int n)
{
    if (n < 1)
        throw DomainError("the variable count n must be positive");
}

}  // namespace

ExprPtr parse_expression(std::string_view src) { return Parser(src).parse(); }

PoissonElement eval_poisson(const Expr& e, int n)
{
    check_rank(n);
    return evaluate(e, PoissonOps{n});
}

EnvElement eval_env(const Expr& e, int n)
{
    check_rank(n);
    return evaluate(e, EnvOps{n});
}

SymplecticPoly eval_symplectic(const Expr& e, int n)
{
    check_rank(n);
    return evaluate(e, SymplecticOps{n});
}

WeylElement eval_weyl(const Expr& e, int n)
{
    check_rank(n);
    return evaluate(e, WeylOps{n});
}

PnEnvElement eval_pnenv(const Expr& e, int n)
{
    check_rank(n);
    return evaluate(e, PnEnvOps{n});
}

PoissonElement parse_poisson(std::string_view src, int n) { return eval_poisson(*parse_expression(src), n); }
EnvElement parse_env(std::string_view src, int n) { return eval_env(*parse_expression(src), n); }
SymplecticPoly parse_symplectic(std::string_view src, int n) { return eval_symplectic(*parse_expression(src), n); }
WeylElement parse_weyl(std::string_view src, int n) { return eval_weyl(*parse_expression(src), n); }
PnEnvElement parse_pnenv(std::string_view src, int n) { return eval_pnenv(*parse_expression(src), n); }

}  // namespace fpa
