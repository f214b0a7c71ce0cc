#include "dplct/parse.hpp"

#include <cctype>
#include <cstring>

namespace dplct {
namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at position " + std::to_string(pos), pos);
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        if (!eof()) fail("unexpected trailing input");
        return p;
    }

    MultiPoly expr() {
        MultiPoly acc = term(true);
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                add_into(acc, term(false), Rational(1));
            } else if (c == '-') {
                ++pos;
                add_into(acc, term(false), Rational(-1));
            } else {
                break;
            }
        }
        return acc;
    }

    // allow_sign: unary sign at the start of an expression
    MultiPoly term(bool allow_sign) {
        Rational sign(1);
        if (allow_sign) {
            while (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -sign;
                ++pos;
            }
        }
        MultiPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = mul(acc, factor());
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = mul(acc, factor());  // implicit multiplication
            } else {
                break;
            }
        }
        if (sign != Rational(1)) {
            for (auto& [k, v] : acc.terms) v *= sign;
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (peek() == '^') {
            ++pos;
            long e = integer();
            if (e < 0) fail("negative exponent");
            MultiPoly acc = constant(Rational(1));
            for (long i = 0; i < e; ++i) acc = mul(acc, base);
            return acc;
        }
        return base;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (peek() == '/') {
                ++pos;
                long den = integer();
                if (den == 0) fail("zero denominator");
                return constant(Rational(num, den));
            }
            return constant(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const char* v = std::strchr(kVariables, c);
            if (v == nullptr) fail(std::string("unknown variable '") + c + "'");
            ++pos;
            MultiPoly p;
            std::array<int, 6> key{};
            key[static_cast<std::size_t>(v - kVariables)] = 1;
            p.terms[key] = Rational(1);
            return p;
        }
        fail("expected a number, variable or '('");
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    static MultiPoly constant(const Rational& r) {
        MultiPoly p;
        if (!r.is_zero()) p.terms[std::array<int, 6>{}] = r;
        return p;
    }

    static void add_into(MultiPoly& a, const MultiPoly& b, const Rational& scale) {
        for (const auto& [k, v] : b.terms) {
            Rational nv = a.terms.count(k) ? a.terms[k] + v * scale : v * scale;
            if (nv.is_zero())
                a.terms.erase(k);
            else
                a.terms[k] = nv;
        }
    }

    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ka, va] : a.terms)
            for (const auto& [kb, vb] : b.terms) {
                std::array<int, 6> k{};
                for (std::size_t i = 0; i < 6; ++i) k[i] = ka[i] + kb[i];
                Rational nv = (r.terms.count(k) ? r.terms[k] : Rational(0)) + va * vb;
                if (nv.is_zero())
                    r.terms.erase(k);
                else
                    r.terms[k] = nv;
            }
        return r;
    }
};

int var_index(char c) { return static_cast<int>(std::strchr(kVariables, c) - kVariables); }

}  // namespace

bool MultiPoly::uses_only(const std::string& vars) const {
    for (const auto& [k, v] : terms) {
        for (int i = 0; i < 6; ++i) {
            if (k[static_cast<std::size_t>(i)] > 0 && vars.find(kVariables[i]) == std::string::npos)
                return false;
        }
    }
    return true;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    int d = -1;
    for (const auto& [k, v] : terms) {
        int total = 0;
        for (int e : k) total += e;
        if (d < 0)
            d = total;
        else if (d != total)
            return false;
    }
    if (degree_out) *degree_out = d < 0 ? 0 : d;
    return true;
}

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

BinaryForm to_binary_form(const MultiPoly& p) {
    if (!p.uses_only("st")) throw parse_error("binary form may use only s and t");
    int d = 0;
    if (!p.is_homogeneous(&d)) throw parse_error("binary form must be homogeneous");
    if (p.terms.empty()) return BinaryForm::zero_of_degree(0);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    const int si = var_index('s'), ti = var_index('t');
    for (const auto& [k, v] : p.terms) c[static_cast<std::size_t>(k[static_cast<std::size_t>(ti)])] = v;
    (void)si;
    return BinaryForm(d, std::move(c));
}

BinaryForm to_binary_form_of_degree(const MultiPoly& p, int degree) {
    if (p.terms.empty()) return BinaryForm::zero_of_degree(degree);
    BinaryForm f = to_binary_form(p);
    if (f.degree() != degree)
        throw parse_error("expected a homogeneous form of degree " + std::to_string(degree) +
                          ", got degree " + std::to_string(f.degree()));
    return f;
}

TernaryForm to_ternary_form(const MultiPoly& p) {
    if (!p.uses_only("xyz")) throw parse_error("ternary form may use only x, y and z");
    int d = 0;
    if (!p.is_homogeneous(&d)) throw parse_error("ternary form must be homogeneous");
    TernaryForm f(d);
    const int xi = var_index('x'), yi = var_index('y'), zi = var_index('z');
    for (const auto& [k, v] : p.terms)
        f.add_term(k[static_cast<std::size_t>(xi)], k[static_cast<std::size_t>(yi)],
                   k[static_cast<std::size_t>(zi)], v);
    return f;
}

Bivar<Rational> to_bivariate(const MultiPoly& p) {
    if (!p.uses_only("xy")) throw parse_error("plane germ may use only x and y");
    Bivar<Rational> f;
    const int xi = var_index('x'), yi = var_index('y');
    for (const auto& [k, v] : p.terms)
        f.add_term(k[static_cast<std::size_t>(xi)], k[static_cast<std::size_t>(yi)], v);
    return f;
}

BinaryForm parse_binary_form(const std::string& text) { return to_binary_form(parse_poly(text)); }
TernaryForm parse_ternary_form(const std::string& text) { return to_ternary_form(parse_poly(text)); }
Bivar<Rational> parse_bivariate(const std::string& text) { return to_bivariate(parse_poly(text)); }

QPoly parse_univariate(const std::string& text) {
    MultiPoly p = parse_poly(text);
    int used = -1;
    for (const auto& [k, v] : p.terms)
        for (int i = 0; i < 6; ++i)
            if (k[static_cast<std::size_t>(i)] > 0) {
                if (used >= 0 && used != i) throw parse_error("expected a univariate polynomial");
                used = i;
            }
    std::vector<Rational> c;
    for (const auto& [k, v] : p.terms) {
        int e = used >= 0 ? k[static_cast<std::size_t>(used)] : 0;
        if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1, Rational(0));
        c[static_cast<std::size_t>(e)] = v;
    }
    return QPoly(std::move(c));
}

}  // namespace dplct
