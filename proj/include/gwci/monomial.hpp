#pragma once

#include "gwci/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace gwci {

// Exponent vector of fixed length n (the ambient variable count).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    // requires divides(m) in the other direction: *this / d
    Monomial divide_by(const Monomial& d) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= d.e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    // Container ordering only; monomial orders live in MonomialOrder.
    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
};

enum class OrderKind { lex, grlex, grevlex };

// Total multiplicative well-ordering on monomials. `precedence[r]` is the
// variable index with significance rank r (rank 0 most significant).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<int> precedence; // permutation of 0..n-1

    MonomialOrder() = default;
    MonomialOrder(OrderKind k, std::size_t nvars) : kind(k), precedence(nvars) {
        std::iota(precedence.begin(), precedence.end(), 0);
    }
    MonomialOrder(OrderKind k, std::vector<int> prec) : kind(k), precedence(std::move(prec)) {}

    // strict a < b
    bool less(const Monomial& a, const Monomial& b) const {
        if (kind != OrderKind::lex) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db;
        }
        switch (kind) {
        case OrderKind::lex:
        case OrderKind::grlex:
            for (int v : precedence) {
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
            }
            return false;
        case OrderKind::grevlex:
            for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
                if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it];
            }
            return false;
        }
        return false;
    }

    bool equal_layout(const MonomialOrder& o) const {
        return kind == o.kind && precedence == o.precedence;
    }

    static const char* kind_name(OrderKind k) {
        switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
        }
        return "?";
    }

    static OrderKind kind_from_name(const std::string& s) {
        if (s == "lex") return OrderKind::lex;
        if (s == "grlex") return OrderKind::grlex;
        if (s == "grevlex") return OrderKind::grevlex;
        fail(errc::schema_violation, "unknown monomial order: " + s);
    }
};

} // namespace gwci
