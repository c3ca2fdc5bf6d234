#pragma once

#include "gwci/error.hpp"
#include "gwci/monomial.hpp"
#include "gwci/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwci {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored, so
// two polynomials are equal iff their term maps are equal. The term map uses
// the container ordering of Monomial; monomial orders are applied on demand.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }
    static Poly monomial(Monomial m, const Rational& c = Rational(1)) {
        Poly p(m.nvars());
        p.add_term(std::move(m), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i, int exp = 1) {
        Monomial m = Monomial::one(nvars);
        m.e[i] = exp;
        return monomial(std::move(m));
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    Poly times_term(const Monomial& m, const Rational& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d; // -1 for the zero polynomial
    }

    // Common total degree of all terms, or nullopt. The zero polynomial
    // reports degree 0 (it is homogeneous of every degree).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    Poly homogeneous_component(int deg) const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == deg) r.terms_.emplace(m, c);
        return r;
    }

    std::vector<int> degrees_present() const {
        std::vector<int> ds;
        for (const auto& [m, c] : terms_) {
            int d = m.degree();
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    // Largest term under `ord`. Precondition: nonzero.
    Term leading_term(const MonomialOrder& ord) const {
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    bool has_constant_term() const {
        auto it = terms_.find(Monomial::one(nvars_));
        return it != terms_.end();
    }

    // Terms sorted descending by `ord`.
    std::vector<Term> sorted_terms(const MonomialOrder& ord) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& [m, c] : terms_) ts.push_back({m, c});
        std::sort(ts.begin(), ts.end(),
                  [&](const Term& a, const Term& b) { return ord.less(b.mono, a.mono); });
        return ts;
    }

private:
    void check_vars(const Poly& o) const {
        if (nvars_ != o.nvars_)
            fail(errc::variable_mismatch, "operands live in different polynomial rings");
    }

    std::size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

// Polynomial text grammar: terms joined by '+'/'-'; a term is
// `[coeff *] factor (* factor)*` or a bare coeff; coeff is `int` or
// `int/int`; factor is `var` or `var^posint`; whitespace ignored.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

// Canonical form: terms sorted descending by `ord`; coefficients as `num` or
// `num/den`; unit coefficients suppressed. parse(format(p)) == p.
std::string format_poly(const Poly& p, const std::vector<std::string>& vars,
                        const MonomialOrder& ord);

} // namespace gwci
