#include "szf/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace szf {

namespace {

std::string term_plain(const BigInt& c, std::size_t k, bool latex) {
    BigInt a = abs(c);
    std::string s;
    if (a != 1 || k == 0) s = a.get_str();
    if (k >= 1) {
        s += "t";
        if (k >= 2) {
            if (latex && k >= 10)
                s += "^{" + std::to_string(k) + "}";
            else
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

std::string poly_string(const IntPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    const char* plus = latex ? "+" : " + ";
    const char* minus = latex ? "-" : " - ";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const BigInt& c = p.coeff(k);
        if (c == 0) continue;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? minus : plus;
        out += term_plain(c, k, latex);
    }
    return out;
}

std::string factors_string(const LinearFactorProduct& den, bool latex) {
    std::map<long, std::size_t> mult;
    for (long d : den.factors()) ++mult[d];
    std::string out;
    for (auto [d, e] : mult) {
        out += d == 1 ? "(1+t)" : "(1+" + std::to_string(d) + "t)";
        if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return out;
}

std::size_t count_terms(const IntPoly& p) {
    std::size_t n = 0;
    for (const BigInt& c : p.coeffs()) n += c != 0;
    return n;
}

}  // namespace

std::string to_plain(const IntPoly& p) { return poly_string(p, false); }

std::string to_plain(const RationalSeries& f) {
    if (f.denominator.empty()) return poly_string(f.numerator, false);
    std::string num = poly_string(f.numerator, false);
    if (count_terms(f.numerator) > 1) num = "(" + num + ")";
    std::string den = factors_string(f.denominator, false);
    // a lone unexponentiated factor already carries its parentheses
    if (f.denominator.size() > 1 || den.back() != ')') den = "(" + den + ")";
    return num + "/" + den;
}

std::string to_latex(const IntPoly& p) { return poly_string(p, true); }

std::string to_latex(const RationalSeries& f) {
    if (f.denominator.empty()) return poly_string(f.numerator, true);
    return "\\frac{" + poly_string(f.numerator, true) + "}{" + factors_string(f.denominator, true) +
           "}";
}

namespace {

struct Scanner {
    std::string s;
    std::size_t pos = 0;

    explicit Scanner(const std::string& text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("cannot parse zeta string at position " + std::to_string(pos) + ": " +
                          what);
    }
};

// digits -> big integer
BigInt scan_bigint(Scanner& sc) {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(sc.peek()))) digits += sc.s[sc.pos++];
    if (digits.empty()) sc.fail("expected an integer");
    return BigInt(digits);
}

std::size_t scan_uint(Scanner& sc) {
    BigInt v = scan_bigint(sc);
    if (!v.fits_ulong_p()) sc.fail("exponent out of range");
    return static_cast<std::size_t>(v.get_ui());
}

// [sign] term { sign term }, term = INT [ 't' [ '^' UINT ] ] | 't' [ '^' UINT ]
IntPoly scan_poly(Scanner& sc, auto stop) {
    std::vector<BigInt> coeffs;
    bool first = true;
    while (!sc.done() && !stop(sc.peek())) {
        int sign = 1;
        if (sc.eat('-'))
            sign = -1;
        else if (!sc.eat('+') && !first)
            sc.fail("expected '+' or '-'");
        first = false;

        BigInt c = std::isdigit(static_cast<unsigned char>(sc.peek())) ? scan_bigint(sc) : BigInt(1);
        std::size_t k = 0;
        if (sc.eat('t')) k = sc.eat('^') ? scan_uint(sc) : 1;
        if (k >= coeffs.size()) coeffs.resize(k + 1);
        coeffs[k] += sign * c;
    }
    if (first) sc.fail("expected a polynomial");
    return IntPoly(std::move(coeffs));
}

// "1 + K t" with K omitted meaning 1
long scan_linear(Scanner& sc) {
    if (!(sc.eat('1') && sc.eat('+'))) sc.fail("expected a factor of the form 1+Kt");
    BigInt k = std::isdigit(static_cast<unsigned char>(sc.peek())) ? scan_bigint(sc) : BigInt(1);
    if (!sc.eat('t')) sc.fail("expected 't' in factor");
    if (k < 1 || !k.fits_slong_p()) sc.fail("factor degree out of range");
    return k.get_si();
}

std::vector<long> scan_factor_stream(Scanner& sc) {
    std::vector<long> factors;
    if (sc.peek() != '(') {  // bare "1+Kt" as the entire product
        factors.push_back(scan_linear(sc));
        if (!sc.done()) sc.fail("trailing input after factor");
        return factors;
    }
    while (!sc.done()) {
        if (!sc.eat('(')) sc.fail("expected '('");
        long d = scan_linear(sc);
        if (!sc.eat(')')) sc.fail("expected ')'");
        std::size_t e = sc.eat('^') ? scan_uint(sc) : 1;
        if (e == 0) sc.fail("zero exponent on a factor");
        factors.insert(factors.end(), e, d);
    }
    return factors;
}

// index of the parenthesis matching s[open], or npos
std::size_t matching_paren(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i;
    }
    return std::string::npos;
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    Scanner sc(text);
    IntPoly p = scan_poly(sc, [](char) { return false; });
    if (!sc.done()) sc.fail("trailing input");
    return p;
}

RationalSeries parse_zeta(const std::string& text) {
    Scanner sc(text);

    IntPoly num;
    if (sc.eat('(')) {
        num = scan_poly(sc, [](char c) { return c == ')'; });
        if (!sc.eat(')')) sc.fail("expected ')'");
    } else {
        num = scan_poly(sc, [](char c) { return c == '/'; });
    }
    if (sc.done()) return {std::move(num), LinearFactorProduct{}};
    if (!sc.eat('/')) sc.fail("expected '/'");

    std::string rest = sc.s.substr(sc.pos);
    if (rest.empty()) sc.fail("empty denominator");
    // strip redundant wrapping layers: "((1+2t)(1+3t))" -> "(1+2t)(1+3t)"
    while (rest.front() == '(' && matching_paren(rest, 0) == rest.size() - 1 &&
           rest.compare(1, 2, "1+") != 0)
        rest = rest.substr(1, rest.size() - 2);
    if (rest.size() > 2 && rest.front() == '(' && rest.back() == ')' &&
        matching_paren(rest, 0) == rest.size() - 1)
        rest = rest.substr(1, rest.size() - 2);  // "(1+2t)" -> bare "1+2t"

    Scanner den(rest);
    std::vector<long> factors = scan_factor_stream(den);
    if (factors.empty()) sc.fail("empty denominator");
    return {std::move(num), LinearFactorProduct(std::move(factors))};
}

}  // namespace szf
