#include "gwci/poly.hpp"

#include <cctype>
#include <sstream>

namespace gwci {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    [[noreturn]] void error(const std::string& msg) const {
        fail(errc::syntax_error, msg + " at position " + std::to_string(i));
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::string read_ident(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.i;
    while (cur.i < cur.s.size() && ident_char(cur.s[cur.i])) ++cur.i;
    return cur.s.substr(start, cur.i - start);
}

std::string read_uint(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == start) cur.error("expected integer");
    return cur.s.substr(start, cur.i - start);
}

// `int` or `int/int`, sign handled by the caller
Rational read_coeff(Cursor& cur) {
    std::string num = read_uint(cur);
    if (cur.peek() == '/') {
        cur.take();
        std::string den = read_uint(cur);
        if (den == "0") cur.error("zero denominator");
        return Rational::from_string(num + "/" + den);
    }
    return Rational::from_string(num);
}

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Cursor cur{text};
    Poly result(vars.size());
    bool first = true;

    auto var_index = [&](const std::string& name, const Cursor& c) -> std::size_t {
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == name) return k;
        fail(errc::unknown_variable,
             "unknown variable '" + name + "' at position " + std::to_string(c.i));
    };

    while (!cur.done()) {
        int sign = 1;
        if (first) {
            if (cur.peek() == '+' || cur.peek() == '-') {
                if (cur.take() == '-') sign = -1;
            }
        } else {
            char op = cur.take();
            if (op == '-') sign = -1;
            else if (op != '+') cur.error("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        Monomial mono = Monomial::one(vars.size());
        bool saw_factor = false;

        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = read_coeff(cur);
            saw_factor = true;
            if (cur.peek() == '*') cur.take();
            else if (ident_start(cur.peek())) cur.error("expected '*' between coefficient and variable");
        }
        while (ident_start(cur.peek())) {
            std::string name = read_ident(cur);
            std::size_t vi = var_index(name, cur);
            int exp = 1;
            if (cur.peek() == '^') {
                cur.take();
                std::string e = read_uint(cur);
                exp = std::stoi(e);
                if (exp <= 0) cur.error("exponent must be positive");
            }
            mono.e[vi] += exp;
            saw_factor = true;
            if (cur.peek() == '*') {
                cur.take();
                if (!ident_start(cur.peek()) && !std::isdigit(static_cast<unsigned char>(cur.peek())))
                    cur.error("expected factor after '*'");
                if (std::isdigit(static_cast<unsigned char>(cur.peek())))
                    cur.error("coefficient must precede variables");
            } else {
                break;
            }
        }
        if (!saw_factor) cur.error("expected term");
        if (sign < 0) coeff = -coeff;
        result.add_term(mono, coeff);
    }
    if (first) fail(errc::syntax_error, "empty polynomial text");
    return result;
}

std::string format_poly(const Poly& p, const std::vector<std::string>& vars,
                        const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : p.sorted_terms(ord)) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;

        bool unit = c.is_one();
        bool any_var = !t.mono.is_one();
        if (!unit || !any_var) out << c.str();
        bool need_star = !unit && any_var;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            int e = t.mono.e[i];
            if (e == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << vars[i];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace gwci
