#include "gwci/gframe.hpp"

namespace gwci {

GFrame make_frame(std::vector<std::string> vars, const MonomialOrder& order,
                  std::vector<Poly> g) {
    GFrame F;
    F.vars = std::move(vars);
    F.order = order;
    F.g = std::move(g);
    if (F.g.size() != F.vars.size())
        fail(errc::wrong_count, "need exactly one sequence element per variable, got " +
                                    std::to_string(F.g.size()) + " for " +
                                    std::to_string(F.vars.size()) + " variables");
    for (std::size_t i = 0; i < F.g.size(); ++i) {
        auto d = F.g[i].homogeneous_degree();
        if (!d || *d == 0)
            fail(errc::not_homogeneous,
                 "g[" + std::to_string(i + 1) + "] must be homogeneous of positive degree");
        F.degs.push_back(*d);
    }
    F.gb_g = buchberger(F.g, F.order);
    if (!is_zero_dimensional(F.gb_g))
        fail(errc::not_zero_dimensional, "(g) is not zero-dimensional");
    F.std_basis = standard_monomials(F.gb_g);
    return F;
}

Poly g_power(const GFrame& F, const std::vector<int>& N) {
    Poly r = Poly::constant(F.nvars(), Rational(1));
    for (std::size_t i = 0; i < N.size(); ++i) {
        if (N[i] < 0) return Poly::zero(F.nvars());
        for (int k = 0; k < N[i]; ++k) r *= F.g[i];
    }
    return r;
}

namespace {

void expand_homogeneous(const Poly& h, std::vector<int> idx, const GFrame& F,
                        std::map<std::vector<int>, Poly>& out) {
    if (h.is_zero()) return;
    DivisionResult dr = normal_form(h, F.gb_g);
    if (!dr.nf.is_zero()) {
        auto [it, inserted] = out.emplace(idx, dr.nf);
        if (!inserted) it->second += dr.nf;
    }
    Poly r = h - dr.nf;
    if (r.is_zero()) return;
    std::vector<Poly> a = lift_to_generators(r, F.gb_g);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        std::vector<int> next = idx;
        ++next[i];
        expand_homogeneous(a[i], std::move(next), F, out);
    }
}

} // namespace

GExpansion g_expand(const Poly& q, const GFrame& F) {
    GExpansion E;
    E.s = F.s();
    for (int d : q.degrees_present())
        expand_homogeneous(q.homogeneous_component(d), std::vector<int>(F.s(), 0), F, E.coeffs);
    // merged sums of sigma-reduced coefficients stay sigma-reduced; fold any
    // residue back into higher indices just in case
    for (auto it = E.coeffs.begin(); it != E.coeffs.end();) {
        Poly red = F.sigma(it->second);
        if (red == it->second) {
            ++it;
            continue;
        }
        Poly residue = it->second - red;
        it->second = red;
        std::map<std::vector<int>, Poly> extra;
        expand_homogeneous(residue, it->first, F, extra);
        for (auto& [n, c] : extra) {
            if (n == it->first) continue;
            auto [jt, inserted] = E.coeffs.emplace(n, c);
            if (!inserted) jt->second += c;
        }
        if (it->second.is_zero()) it = E.coeffs.erase(it);
        else ++it;
    }
    for (auto it = E.coeffs.begin(); it != E.coeffs.end();)
        it = it->second.is_zero() ? E.coeffs.erase(it) : std::next(it);
    return E;
}

Poly g_reconstruct(const GExpansion& E, const GFrame& F) {
    Poly r = Poly::zero(F.nvars());
    for (const auto& [N, c] : E.coeffs) r += c * g_power(F, N);
    return r;
}

Poly partial(const GExpansion& E, std::size_t j, const GFrame& F) {
    Poly r = Poly::zero(F.nvars());
    for (const auto& [N, c] : E.coeffs) {
        if (N[j] == 0) continue;
        std::vector<int> M = N;
        --M[j];
        r += c.scaled(Rational(N[j])) * g_power(F, M);
    }
    return r;
}

Poly partial(const Poly& q, std::size_t j, const GFrame& F) {
    return partial(g_expand(q, F), j, F);
}

Poly hatted_partial(const GExpansion& E, std::size_t j, const GFrame& F) {
    Poly r = Poly::zero(F.nvars());
    for (const auto& [N, c] : E.coeffs) {
        if (N[j] == 0) continue;
        int total = 0;
        for (int n : N) total += n;
        std::vector<int> M = N;
        --M[j];
        r += c.scaled(Rational(N[j], total)) * g_power(F, M);
    }
    return r;
}

Poly hatted_partial(const Poly& q, std::size_t j, const GFrame& F) {
    return hatted_partial(g_expand(q, F), j, F);
}

std::optional<int> g_degree(const GExpansion& E) {
    std::optional<int> d;
    for (const auto& [N, c] : E.coeffs) {
        int total = 0;
        for (int n : N) total += n;
        if (!d) d = total;
        else if (*d != total) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

std::optional<int> g_degree(const Poly& q, const GFrame& F) {
    return g_degree(g_expand(q, F));
}

} // namespace gwci
