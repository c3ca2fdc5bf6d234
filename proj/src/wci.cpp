#include "gwci/wci.hpp"

#include <algorithm>

namespace gwci {

namespace {

// drop zeros, duplicates, and elements already in the ideal of the kept ones
std::vector<Poly> trim_generators(std::vector<Poly> gens, const MonomialOrder& order) {
    std::vector<Poly> kept;
    std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.term_count() < b.term_count();
    });
    GroebnerBasis G;
    for (Poly& p : gens) {
        if (p.is_zero()) continue;
        if (!kept.empty() && nf(p, G).is_zero()) continue;
        kept.push_back(p);
        G = buchberger(kept, order);
    }
    return kept;
}

} // namespace

GroebnerBasis partial_ideal(const std::vector<Poly>& I_gens, const GFrame& F) {
    std::vector<Poly> gens;
    std::vector<GExpansion> exps;
    for (const Poly& f : I_gens) {
        gens.push_back(f);
        exps.push_back(g_expand(f, F));
    }
    for (const GExpansion& E : exps)
        for (std::size_t j = 0; j < F.s(); ++j) gens.push_back(partial(E, j, F));
    for (std::size_t i = 0; i < exps.size(); ++i) {
        for (const Monomial& bm : F.std_basis) {
            if (bm.is_one()) continue; // coefficients are sigma-reduced: t = 0
            Poly b = Poly::monomial(bm);
            for (std::size_t j = 0; j < F.s(); ++j) {
                Poly t = Poly::zero(F.nvars());
                for (const auto& [M, c] : exps[i].coeffs)
                    t += partial(b * c, j, F) * g_power(F, M);
                gens.push_back(std::move(t));
            }
        }
    }
    return buchberger(trim_generators(std::move(gens), F.order), F.order);
}

GroebnerBasis partial_ideal_bruteforce(const std::vector<Poly>& I_gens, const GFrame& F,
                                       int degree_bound) {
    std::vector<Poly> gens = I_gens;
    std::vector<Monomial> monos;
    Monomial m = Monomial::one(F.nvars());
    while (true) {
        if (m.degree() <= degree_bound) monos.push_back(m);
        std::size_t v = 0;
        while (v < F.nvars()) {
            if (++m.e[v] <= degree_bound) break;
            m.e[v] = 0;
            ++v;
        }
        if (v == F.nvars()) break;
    }
    for (const Poly& f : I_gens)
        for (const Monomial& mm : monos)
            for (std::size_t j = 0; j < F.s(); ++j)
                gens.push_back(partial(f.times_term(mm, Rational(1)), j, F));
    return buchberger(trim_generators(std::move(gens), F.order), F.order);
}

PropCheck check_prop_sufficient(const std::vector<Poly>& I_gens, const GFrame& F) {
    PropCheck res;
    res.derived = partial_ideal(I_gens, F);
    GroebnerBasis gbI = buchberger(I_gens, F.order);
    res.holds = true;
    for (std::size_t i = 0; i < res.derived.basis.size() && res.holds; ++i) {
        for (std::size_t j = i; j < res.derived.basis.size(); ++j) {
            Poly prod = res.derived.basis[i] * res.derived.basis[j];
            if (!nf(prod, gbI).is_zero()) {
                res.holds = false;
                res.witness = prod;
                break;
            }
        }
    }
    return res;
}

std::vector<LabeledProduct> cycle_products(
    const std::vector<std::pair<std::string, KoszulElement>>& cycles, const GFrame& F,
    const GroebnerBasis& gbI) {
    std::vector<LabeledProduct> out;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i; j < cycles.size(); ++j) {
            KoszulElement w = wedge(cycles[i].second, cycles[j].second).reduced(gbI);
            out.push_back({cycles[i].first, cycles[j].first, std::move(w)});
        }
    return out;
}

namespace {

KoszulElement mu_value(const MasseyTable& T, const std::vector<std::string>& args) {
    if (args.size() == 1) {
        auto it = T.basis.find(args[0]);
        if (it == T.basis.end()) fail(errc::schema_violation, "unknown label " + args[0]);
        return it->second;
    }
    auto it = T.mu.find(args);
    return it != T.mu.end() ? it->second : KoszulElement();
}

} // namespace

MasseyReport verify_massey(const MasseyTable& T, const GFrame& F, const GroebnerBasis& gbI,
                           int max_p) {
    MasseyReport rep;
    std::vector<std::string> labels;
    for (const auto& [l, z] : T.basis) labels.push_back(l);

    for (const auto& [args, value] : T.mu) {
        if (args.size() < 2) fail(errc::schema_violation, "mu entries need at least two labels");
        int expected = static_cast<int>(args.size()) - 1;
        for (const auto& l : args) {
            auto it = T.basis.find(l);
            if (it == T.basis.end()) fail(errc::schema_violation, "unknown label " + l);
            expected += it->second.degree();
        }
        if (!value.is_zero() && value.degree() != expected)
            fail(errc::degree_mismatch, "mu entry degree " + std::to_string(value.degree()) +
                                            ", expected " + std::to_string(expected));
    }

    std::vector<std::vector<std::string>> tuples;
    std::vector<std::string> cur;
    std::function<void(int)> build = [&](int len) {
        if (static_cast<int>(cur.size()) == len) {
            tuples.push_back(cur);
            return;
        }
        for (const auto& l : labels) {
            cur.push_back(l);
            build(len);
            cur.pop_back();
        }
    };
    for (int p = 2; p <= max_p; ++p) build(p);

    for (const auto& tup : tuples) {
        ++rep.tuples_checked;
        KoszulElement lhs = delta(mu_value(T, tup), F).reduced(gbI);
        KoszulElement rhs;
        for (std::size_t j = 1; j < tup.size(); ++j) {
            std::vector<std::string> left(tup.begin(), tup.begin() + j);
            std::vector<std::string> right(tup.begin() + j, tup.end());
            KoszulElement a = mu_value(T, left);
            KoszulElement b = mu_value(T, right);
            if (a.is_zero() || b.is_zero()) continue;
            KoszulElement prod = wedge(a, b);
            if (a.degree() % 2 == 1) rhs += prod; // bar(a) = (-1)^(|a|+1) a
            else rhs -= prod;
        }
        rhs = rhs.reduced(gbI);
        if (lhs != rhs) {
            std::string name;
            for (const auto& l : tup) name += (name.empty() ? "" : ",") + l;
            rep.violations.push_back("equation fails for (" + name + ")");
        }
    }
    return rep;
}

ProductsResult products_vanish(const std::vector<std::pair<std::string, KoszulElement>>& cycles,
                               const GFrame& F, const GroebnerBasis& gbI) {
    ProductsResult res;
    res.table = cycle_products(cycles, F, gbI);
    res.vanish = true;
    for (const auto& p : res.table)
        if (!p.value.is_zero()) res.vanish = false;
    if (res.vanish)
        for (const auto& [l, z] : cycles) res.certificate.basis.emplace(l, z);
    return res;
}

} // namespace gwci
