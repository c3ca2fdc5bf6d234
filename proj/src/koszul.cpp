#include "gwci/koszul.hpp"

#include <algorithm>

namespace gwci {

namespace {

// insertion sort, counting swaps; returns 0 on a repeated index
int sort_sign(std::vector<int>& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

} // namespace

void KoszulElement::add(std::vector<int> tuple, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (nvars_ == 0) nvars_ = coeff.nvars();
    degree_ = static_cast<int>(tuple.size());
    int sign = sort_sign(tuple);
    if (sign == 0) return;
    Poly c = sign == 1 ? coeff : -coeff;
    auto [it, inserted] = terms_.emplace(std::move(tuple), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KoszulElement& KoszulElement::operator+=(const KoszulElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

KoszulElement& KoszulElement::operator-=(const KoszulElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

KoszulElement KoszulElement::scaled(const Rational& c) const {
    KoszulElement r(degree_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [t, p] : terms_) r.add(t, p.scaled(c));
    return r;
}

KoszulElement KoszulElement::times(const Poly& p) const {
    KoszulElement r(degree_, nvars_);
    for (const auto& [t, c] : terms_) r.add(t, c * p);
    return r;
}

KoszulElement KoszulElement::reduced(const GroebnerBasis& G) const {
    KoszulElement r(degree_, nvars_);
    for (const auto& [t, c] : terms_) r.add(t, nf(c, G));
    return r;
}

KoszulElement delta(const KoszulElement& w, const GFrame& F) {
    KoszulElement r(std::max(w.degree() - 1, 0), w.nvars());
    for (const auto& [t, c] : w.terms()) {
        for (std::size_t m = 0; m < t.size(); ++m) {
            std::vector<int> rest;
            rest.reserve(t.size() - 1);
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != m) rest.push_back(t[i]);
            Poly coeff = c * F.g[t[m]];
            if (m % 2 == 1) coeff = -coeff;
            r.add(std::move(rest), coeff);
        }
    }
    return r;
}

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b) {
    KoszulElement r(a.degree() + b.degree(), std::max(a.nvars(), b.nvars()));
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            std::vector<int> t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add(std::move(t), ca * cb);
        }
    }
    return r;
}

KoszulElement nabla(const KoszulElement& w, const GFrame& F) {
    KoszulElement r(w.degree() + 1, w.nvars());
    for (const auto& [t, c] : w.terms()) {
        GExpansion E = g_expand(c, F);
        for (std::size_t j = 0; j < F.s(); ++j) {
            Poly pj = partial(E, j, F);
            if (pj.is_zero()) continue;
            std::vector<int> nt;
            nt.reserve(t.size() + 1);
            nt.push_back(static_cast<int>(j));
            nt.insert(nt.end(), t.begin(), t.end());
            r.add(std::move(nt), pj);
        }
    }
    return r;
}

KoszulElement h_nabla(const KoszulElement& w, const GFrame& F) {
    KoszulElement r(w.degree() + 1, w.nvars());
    int k = w.degree();
    for (const auto& [t, c] : w.terms()) {
        GExpansion E = g_expand(c, F);
        for (const auto& [N, q] : E.coeffs) {
            int total = 0;
            for (int n : N) total += n;
            if (total == 0) continue;
            for (std::size_t j = 0; j < N.size(); ++j) {
                if (N[j] == 0) continue;
                std::vector<int> M(N);
                --M[j];
                Poly coeff = q.scaled(Rational(-N[j], total + k)) * g_power(F, M);
                std::vector<int> nt;
                nt.reserve(t.size() + 1);
                nt.push_back(static_cast<int>(j));
                nt.insert(nt.end(), t.begin(), t.end());
                r.add(std::move(nt), coeff);
            }
        }
    }
    return r;
}

KoszulElement sigma_pi(const KoszulElement& w, const GFrame& F) {
    KoszulElement r(w.degree(), w.nvars());
    if (w.degree() != 0) return r;
    for (const auto& [t, c] : w.terms()) r.add(t, F.sigma(c));
    return r;
}

} // namespace gwci
