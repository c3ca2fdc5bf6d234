#include "gwci/generators.hpp"

#include <functional>
#include <map>

namespace gwci {

namespace {

void require_valid_level(const FreeResolution& R, const GFrame& F, int level) {
    if (level < 0) fail(errc::degree_out_of_range, "negative homological degree");
    GwciReport rep = check_gwci(R, F);
    if (!rep.ok) fail(errc::not_gwci, "resolution differentials do not land in (g)");
    homology_rank(R, F, level); // length diagnostic
}

GeneratorSet degree_zero_set(const FreeResolution& R, const GFrame& F, const GroebnerBasis* gbI,
                             const std::string& provenance) {
    GeneratorSet S;
    S.degree = 0;
    S.provenance = provenance;
    int b0 = R.rank(0);
    for (int j = 0; j < b0; ++j) {
        std::vector<KoszulElement> row;
        for (int m = 0; m < b0; ++m) {
            Poly c = m == j ? Poly::constant(F.nvars(), Rational(1)) : Poly::zero(F.nvars());
            if (gbI && b0 == 1) c = nf(c, *gbI);
            row.push_back(KoszulElement::scalar(c));
        }
        S.generators.push_back(std::move(row));
    }
    return S;
}

// chains (j_2,...,j_level) with the derivative step supplied by the caller
using Step = std::function<Poly(const GExpansion&, std::size_t)>;

KoszulElement chain_sum(const FreeResolution& R, const GFrame& F, int level, int j1, int m0,
                        const Step& step, bool with_d_constant) {
    KoszulElement z(level, F.nvars());
    std::vector<int> chain(level + 1);
    chain[0] = j1;
    chain[level] = m0;

    std::function<void(int)> walk = [&](int t) {
        // chain[0..t-1] chosen; choose chain[t] in F_{level-t}
        if (t < level) {
            for (int j = 0; j < R.rank(level - t); ++j) {
                chain[t] = j;
                walk(t + 1);
            }
            return;
        }
        std::vector<int> degs;
        if (with_d_constant) {
            for (int u = 1; u <= level; ++u) {
                const Poly& e = R.entry(level - u + 1, chain[u], chain[u - 1]);
                if (e.is_zero()) return;
                auto d = g_degree(e, F);
                if (!d) fail(errc::not_g_homogeneous,
                             "resolution entry is not homogeneous in g");
                degs.push_back(*d);
            }
        }
        std::map<std::vector<int>, Poly> values;
        values.emplace(std::vector<int>{}, Poly::constant(F.nvars(), Rational(1)));
        for (int u = 1; u <= level && !values.empty(); ++u) {
            const Poly& e = R.entry(level - u + 1, chain[u], chain[u - 1]);
            std::map<std::vector<int>, Poly> next;
            if (e.is_zero()) {
                values.clear();
                break;
            }
            for (const auto& [ks, v] : values) {
                Poly p = e * v;
                if (p.is_zero()) continue;
                GExpansion E = g_expand(p, F);
                for (std::size_t k = 0; k < F.s(); ++k) {
                    Poly dk = step(E, k);
                    if (dk.is_zero()) continue;
                    std::vector<int> nk = ks;
                    nk.push_back(static_cast<int>(k));
                    auto [it, inserted] = next.emplace(std::move(nk), dk);
                    if (!inserted) it->second += dk;
                }
            }
            values = std::move(next);
        }
        Rational dc(1);
        if (with_d_constant && !values.empty()) dc = d_constant(degs);
        for (const auto& [ks, v] : values) z.add(ks, v.scaled(dc));
    };
    walk(1);
    return z;
}

void reduce_set(GeneratorSet& S, const FreeResolution& R, const GroebnerBasis* gbI) {
    if (!gbI || R.rank(0) != 1) return;
    for (auto& row : S.generators)
        for (auto& z : row) z = z.reduced(*gbI);
}

GeneratorSet build_set(const FreeResolution& R, const GFrame& F, int level,
                       const GroebnerBasis* gbI, const Step& step, bool with_d_constant,
                       const std::string& provenance) {
    require_valid_level(R, F, level);
    if (level == 0) return degree_zero_set(R, F, gbI, provenance);
    GeneratorSet S;
    S.degree = level;
    S.provenance = provenance;
    if (level > R.length()) return S;
    for (int j1 = 0; j1 < R.rank(level); ++j1) {
        std::vector<KoszulElement> row;
        for (int m0 = 0; m0 < R.rank(0); ++m0)
            row.push_back(chain_sum(R, F, level, j1, m0, step, with_d_constant));
        S.generators.push_back(std::move(row));
    }
    reduce_set(S, R, gbI);
    return S;
}

} // namespace

GeneratorSet generators_main(const FreeResolution& R, const GFrame& F, int level,
                             const GroebnerBasis* gbI) {
    Step hatted = [&F](const GExpansion& E, std::size_t k) { return hatted_partial(E, k, F); };
    return build_set(R, F, level, gbI, hatted, false, "main");
}

GeneratorSet generators_g_homogeneous(const FreeResolution& R, const GFrame& F, int level,
                                      const GroebnerBasis* gbI) {
    Step plain = [&F](const GExpansion& E, std::size_t k) { return partial(E, k, F); };
    return build_set(R, F, level, gbI, plain, true, "g_homogeneous");
}

GeneratorSet generators_via_retract(const FreeResolution& R, const GFrame& F, int level,
                                    const GroebnerBasis* gbI) {
    require_valid_level(R, F, level);
    GeneratorSet S;
    S.degree = level;
    S.provenance = "retract";
    if (level > R.length()) return S;
    for (int j1 = 0; j1 < R.rank(level); ++j1) {
        TotalElement w = sigma_tilde(R, F, level, j1);
        std::vector<KoszulElement> row;
        for (int m0 = 0; m0 < R.rank(0); ++m0) {
            KoszulElement bottom = w.component(0, m0);
            if (bottom.is_zero()) bottom = KoszulElement(level, F.nvars());
            row.push_back(std::move(bottom));
        }
        S.generators.push_back(std::move(row));
    }
    reduce_set(S, R, gbI);
    return S;
}

Rational d_constant(const std::vector<int>& degrees) {
    Rational d(1);
    long acc = 0;
    for (std::size_t t = 0; t < degrees.size(); ++t) {
        acc += degrees[t];
        long denom = acc - static_cast<long>(t);
        if (denom <= 0)
            fail(errc::nonpositive_denominator,
                 "degree prefix sum " + std::to_string(denom) + " is not positive");
        d *= Rational(1, denom);
    }
    return d;
}

Poly jacobian_det(const std::vector<Poly>& fs, const std::vector<int>& ks, const GFrame& F) {
    if (fs.size() != ks.size()) fail(errc::shape_mismatch, "need as many indices as entries");
    std::size_t n = fs.size();
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly::zero(F.nvars())));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) M[j][l] = partial(fs[l], ks[j], F);

    std::function<Poly(std::vector<int>, std::size_t)> det = [&](std::vector<int> rows,
                                                                  std::size_t col) -> Poly {
        if (rows.size() == 1) return M[rows[0]][col];
        Poly acc = Poly::zero(F.nvars());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (M[rows[i]][col].is_zero()) continue;
            std::vector<int> rest = rows;
            rest.erase(rest.begin() + i);
            Poly sub = det(rest, col + 1);
            Poly term = M[rows[i]][col] * sub;
            acc += (i % 2 == 0) ? term : -term;
        }
        return acc;
    };
    std::vector<int> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<int>(i);
    return n == 0 ? Poly::constant(F.nvars(), Rational(1)) : det(rows, 0);
}

GeneratorSet generators_k_coeff(const FreeResolution& R, const GFrame& F, int level,
                                const GroebnerBasis* gbI) {
    require_valid_level(R, F, level);
    for (std::size_t i = 0; i < R.diffs.size(); ++i)
        for (const auto& row : R.diffs[i])
            for (const Poly& p : row) {
                GExpansion E = g_expand(p, F);
                for (const auto& [N, c] : E.coeffs)
                    if (c.term_count() != 1 || !c.terms().begin()->first.is_one())
                        fail(errc::not_k_coefficient,
                             "resolution entry expands with coefficients outside k");
            }
    if (level == 0) return degree_zero_set(R, F, gbI, "k_coefficient");
    GeneratorSet S;
    S.degree = level;
    S.provenance = "k_coefficient";
    if (level > R.length()) return S;

    std::vector<std::vector<int>> ktuples; // strictly increasing, 0-based
    {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == level) {
                ktuples.push_back(cur);
                return;
            }
            for (int k = start; k < static_cast<int>(F.s()); ++k) {
                cur.push_back(k);
                rec(k + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }

    for (int j1 = 0; j1 < R.rank(level); ++j1) {
        std::vector<KoszulElement> row;
        for (int m0 = 0; m0 < R.rank(0); ++m0) {
            KoszulElement z(level, F.nvars());
            std::vector<int> chain(level + 1);
            chain[0] = j1;
            chain[level] = m0;
            std::function<void(int)> walk = [&](int t) {
                if (t < level) {
                    for (int j = 0; j < R.rank(level - t); ++j) {
                        chain[t] = j;
                        walk(t + 1);
                    }
                    return;
                }
                std::vector<int> degs;
                std::vector<Poly> fs; // f^1 first
                for (int u = level; u >= 1; --u)
                    fs.push_back(R.entry(level - u + 1, chain[u], chain[u - 1]));
                for (int u = 1; u <= level; ++u) {
                    const Poly& e = R.entry(level - u + 1, chain[u], chain[u - 1]);
                    if (e.is_zero()) return;
                    degs.push_back(*g_degree(e, F));
                }
                Rational D = d_constant(degs);
                for (const auto& ks : ktuples) {
                    Poly dtm = jacobian_det(fs, ks, F);
                    if (dtm.is_zero()) continue;
                    z.add(ks, dtm.scaled(D));
                }
            };
            walk(1);
            row.push_back(std::move(z));
        }
        S.generators.push_back(std::move(row));
    }
    reduce_set(S, R, gbI);
    return S;
}

Proportionality proportionality(const KoszulElement& a, const KoszulElement& b) {
    if (a.is_zero() && b.is_zero()) return {Proportionality::Kind::both_zero, Rational(0)};
    if (a.is_zero() || b.is_zero()) return {Proportionality::Kind::not_proportional, Rational(0)};
    if (a.terms().size() != b.terms().size())
        return {Proportionality::Kind::not_proportional, Rational(0)};
    std::optional<Rational> ratio;
    auto ib = b.terms().begin();
    for (auto ia = a.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return {Proportionality::Kind::not_proportional, Rational(0)};
        if (ia->second.terms().size() != ib->second.terms().size())
            return {Proportionality::Kind::not_proportional, Rational(0)};
        auto tb = ib->second.terms().begin();
        for (auto ta = ia->second.terms().begin(); ta != ia->second.terms().end(); ++ta, ++tb) {
            if (ta->first != tb->first)
                return {Proportionality::Kind::not_proportional, Rational(0)};
            Rational r = ta->second / tb->second;
            if (!ratio) ratio = r;
            else if (*ratio != r)
                return {Proportionality::Kind::not_proportional, Rational(0)};
        }
    }
    return {Proportionality::Kind::proportional, *ratio};
}

OracleComparison compare_generator_sets(const GeneratorSet& a, const GeneratorSet& b) {
    OracleComparison cmp;
    if (a.generators.size() != b.generators.size()) {
        cmp.notes.push_back("generator counts differ");
        return cmp;
    }
    std::optional<Rational> ratio;
    bool uniform = true;
    for (std::size_t j = 0; j < a.generators.size(); ++j) {
        for (std::size_t m = 0; m < a.generators[j].size(); ++m) {
            Proportionality p = proportionality(a.generators[j][m], b.generators[j][m]);
            if (p.kind == Proportionality::Kind::both_zero) continue;
            if (p.kind == Proportionality::Kind::not_proportional) {
                uniform = false;
                cmp.notes.push_back("generator " + std::to_string(j + 1) +
                                    ": not proportional");
                continue;
            }
            cmp.notes.push_back("generator " + std::to_string(j + 1) + ": ratio " +
                                p.ratio.str());
            if (!ratio) ratio = p.ratio;
            else if (*ratio != p.ratio) uniform = false;
        }
    }
    if (!ratio && uniform) { // everything zero
        cmp.proportional = true;
        cmp.sign_only = true;
        cmp.ratio = Rational(1);
        return cmp;
    }
    cmp.proportional = uniform && ratio.has_value();
    cmp.ratio = ratio;
    cmp.sign_only = cmp.proportional && (*ratio == Rational(1) || *ratio == Rational(-1));
    return cmp;
}

bool is_cycle_mod(const KoszulElement& z, const GFrame& F, const GroebnerBasis& gbI) {
    KoszulElement d = delta(z, F);
    for (const auto& [t, c] : d.terms())
        if (!nf(c, gbI).is_zero()) return false;
    return true;
}

void verify_generators(GeneratorSet& S, const FreeResolution& R, const GFrame& F,
                       const GroebnerBasis* gbI) {
    S.verification.ran = true;
    S.verification.cycle_ok = true;
    if (gbI && R.rank(0) == 1) {
        for (const auto& row : S.generators)
            for (const auto& z : row)
                if (!is_cycle_mod(z, F, *gbI)) S.verification.cycle_ok = false;
    }
    GeneratorSet oracle = generators_via_retract(R, F, S.degree, gbI);
    OracleComparison cmp = compare_generator_sets(S, oracle);
    S.verification.retract_match = cmp.sign_only;
    if (cmp.sign_only && cmp.ratio)
        S.verification.sign = cmp.ratio->sign() >= 0 ? 1 : -1;
}

} // namespace gwci
