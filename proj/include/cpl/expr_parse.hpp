// Recursive-descent parsers for the two expression grammars the CLI accepts:
// rational-function expressions over named symbols, and U_q(sl2) expressions
// over E, F, K, q. Shared grammar: sums, products with explicit '*',
// division (rational functions only), integer powers, parentheses; q also
// takes rational exponents written q^(p/r).
#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "cpl/ratfunc.hpp"
#include "cpl/uqsl2.hpp"

namespace cpl {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::optional<std::string> ident() {
        skip_ws();
        if (pos_ >= s_.size()) return std::nullopt;
        char c = s_[pos_];
        if (!std::isalpha((unsigned char)c) && c != '_') return std::nullopt;
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_' || s_[pos_] == '.'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::optional<Integer> integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            return std::nullopt;
        }
        return Integer(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

/// exponent after '^': integer, (integer), or (p/r) when allow_fraction
inline std::pair<long, long> parse_exponent(Lexer& lx, bool allow_fraction) {
    if (lx.consume('(')) {
        auto num = lx.integer();
        if (!num) lx.fail("expected exponent");
        long den = 1;
        if (lx.consume('/')) {
            if (!allow_fraction) lx.fail("fractional exponent not allowed here");
            auto d = lx.integer();
            if (!d || *d <= 0) lx.fail("expected positive exponent denominator");
            den = d->get_si();
        }
        lx.expect(')');
        return {num->get_si(), den};
    }
    auto num = lx.integer();
    if (!num) lx.fail("expected exponent");
    return {num->get_si(), 1};
}

template <class Value, class Ops>
Value parse_sum(Lexer& lx, const Ops& ops);

template <class Value, class Ops>
Value parse_atom(Lexer& lx, const Ops& ops) {
    if (lx.consume('(')) {
        Value v = parse_sum<Value>(lx, ops);
        lx.expect(')');
        return v;
    }
    if (auto name = lx.ident()) return ops.symbol(lx, *name);
    if (auto num = lx.integer()) return ops.constant(*num);
    lx.fail("expected a term");
}

template <class Value, class Ops>
Value parse_power(Lexer& lx, const Ops& ops) {
    // unary minus binds looser than '^' but tighter than '*'
    if (lx.consume('-')) return ops.negate(parse_power<Value>(lx, ops));
    Value base = parse_atom<Value>(lx, ops);
    if (lx.consume('^')) {
        auto [num, den] = parse_exponent(lx, ops.fractional_powers);
        return ops.power(lx, base, num, den);
    }
    return base;
}

template <class Value, class Ops>
Value parse_product(Lexer& lx, const Ops& ops) {
    Value v = parse_power<Value>(lx, ops);
    for (;;) {
        if (lx.consume('*')) {
            v = ops.multiply(v, parse_power<Value>(lx, ops));
        } else if (ops.division && lx.consume('/')) {
            v = ops.divide(lx, v, parse_power<Value>(lx, ops));
        } else {
            return v;
        }
    }
}

template <class Value, class Ops>
Value parse_sum(Lexer& lx, const Ops& ops) {
    Value v = parse_product<Value>(lx, ops);
    for (;;) {
        if (lx.consume('+'))
            v = ops.add(v, parse_product<Value>(lx, ops));
        else if (lx.consume('-'))
            v = ops.subtract(v, parse_product<Value>(lx, ops));
        else
            return v;
    }
}

struct RatFuncOps {
    static constexpr bool fractional_powers = false;
    static constexpr bool division = true;
    const std::set<std::string>* allowed;

    RatFunc symbol(Lexer& lx, const std::string& name) const {
        if (allowed && !allowed->count(name)) lx.fail("unknown symbol " + name);
        return RatFunc::variable(name);
    }
    RatFunc constant(const Integer& v) const { return RatFunc{Poly(Rational(v))}; }
    RatFunc negate(const RatFunc& v) const { return -v; }
    RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
    RatFunc subtract(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc multiply(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc divide(Lexer& lx, const RatFunc& a, const RatFunc& b) const {
        if (b.is_zero()) lx.fail("division by zero");
        return a / b;
    }
    RatFunc power(Lexer& lx, const RatFunc& base, long num, long den) const {
        (void)den;
        if (base.is_zero() && num < 0) lx.fail("zero to a negative power");
        return base.pow(num);
    }
};

struct UqOps {
    static constexpr bool fractional_powers = true;
    static constexpr bool division = false;

    UqElement symbol(Lexer& lx, const std::string& name) const {
        if (name == "E") return UqElement::E();
        if (name == "F") return UqElement::F();
        if (name == "K") return UqElement::K();
        if (name == "q") return UqElement::unit(QScalar::q_power(1));
        lx.fail("unknown generator " + name + " (expected E, F, K or q)");
    }
    UqElement constant(const Integer& v) const { return UqElement::unit(QScalar(v)); }
    UqElement negate(const UqElement& v) const { return UqElement() - v; }
    UqElement add(const UqElement& a, const UqElement& b) const { return a + b; }
    UqElement subtract(const UqElement& a, const UqElement& b) const { return a - b; }
    UqElement multiply(const UqElement& a, const UqElement& b) const { return a * b; }
    UqElement divide(Lexer&, const UqElement& a, const UqElement&) const { return a; }
    UqElement power(Lexer& lx, const UqElement& base, long num, long den) const {
        if (base.terms().size() == 1) {
            const auto& [m, c] = *base.terms().begin();
            // q-power: exponent arithmetic, must stay in (1/2)Z
            if (m == UqElement::Pbw{0, 0, 0} && c.is_monomial() &&
                c.terms().begin()->second == 1) {
                long k = c.terms().begin()->first;
                QScalar qs = QScalar::monomial(Integer(1), k * num, c.denominator_degree() * den);
                if (qs.denominator_degree() > 2) lx.fail("q exponent outside (1/2)Z");
                return UqElement::unit(qs);
            }
            // pure K power: any integer exponent
            if (m[0] == 0 && m[2] == 0 && c == QScalar(1) && den == 1)
                return UqElement::K(m[1] * num);
        }
        if (den != 1) lx.fail("fractional power of a non-scalar");
        if (num < 0) lx.fail("negative power of a non-invertible element");
        UqElement acc = UqElement::unit();
        for (long i = 0; i < num; ++i) acc = acc * base;
        return acc;
    }
};

}  // namespace detail

/// Parses a rational-function expression; when `allowed` is given, symbols
/// outside it are rejected.
inline RatFunc parse_ratfunc(const std::string& text,
                             const std::set<std::string>* allowed = nullptr) {
    detail::Lexer lx(text);
    detail::RatFuncOps ops{allowed};
    RatFunc v = detail::parse_sum<RatFunc>(lx, ops);
    if (!lx.eof()) lx.fail("trailing input");
    return v;
}

/// Parses a U_q(sl2) expression over E, F, K, q.
inline UqElement parse_uq(const std::string& text) {
    detail::Lexer lx(text);
    detail::UqOps ops;
    UqElement v = detail::parse_sum<UqElement>(lx, ops);
    if (!lx.eof()) lx.fail("trailing input");
    return v;
}

}  // namespace cpl
