#include "gwci/groebner.hpp"

#include <algorithm>
#include <set>

namespace gwci {

namespace {

struct Divider {
    const std::vector<Poly>& basis;
    const MonomialOrder& order;
    std::vector<Term> lts;

    explicit Divider(const std::vector<Poly>& b, const MonomialOrder& o) : basis(b), order(o) {
        lts.reserve(b.size());
        for (const Poly& p : b) lts.push_back(p.leading_term(o));
    }

    DivisionResult divide(const Poly& p) const {
        DivisionResult res;
        res.nf = Poly(p.nvars());
        res.cofactors.assign(basis.size(), Poly(p.nvars()));
        Poly r = p;
        while (!r.is_zero()) {
            Term t = r.leading_term(order);
            bool reduced = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!lts[i].mono.divides(t.mono)) continue;
                Monomial m = t.mono.divide_by(lts[i].mono);
                Rational c = t.coeff / lts[i].coeff;
                res.cofactors[i].add_term(m, c);
                r -= basis[i].times_term(m, c);
                reduced = true;
                break;
            }
            if (!reduced) {
                res.nf.add_term(t.mono, t.coeff);
                r.add_term(t.mono, -t.coeff);
            }
        }
        return res;
    }
};

} // namespace

GroebnerBasis buchberger(std::vector<Poly> gens, const MonomialOrder& order) {
    GroebnerBasis G;
    G.order = order;
    G.generators = gens;
    if (gens.empty()) fail(errc::schema_violation, "empty generator list");
    G.nvars = gens.front().nvars();
    std::size_t ngens = gens.size();

    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> rows;
    for (std::size_t i = 0; i < ngens; ++i) {
        if (gens[i].nvars() != G.nvars)
            fail(errc::variable_mismatch, "generators live in different rings");
        if (gens[i].is_zero()) continue;
        basis.push_back(gens[i]);
        std::vector<Poly> row(ngens, Poly(G.nvars));
        row[i] = Poly::constant(G.nvars, Rational(1));
        rows.push_back(std::move(row));
    }
    if (basis.empty()) fail(errc::schema_violation, "all generators are zero");

    auto row_combine = [&](const std::vector<Poly>& a, const Poly& f, const std::vector<Poly>& b,
                           const Poly& g) {
        std::vector<Poly> r(ngens, Poly(G.nvars));
        for (std::size_t j = 0; j < ngens; ++j) r[j] = a[j] * f - b[j] * g;
        return r;
    };

    // pending S-pairs, normal selection: smallest lcm first
    struct Pair {
        Monomial l;
        std::size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        if (a.l != b.l) return order.less(a.l, b.l);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pending;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Monomial li = basis[i].leading_term(order).mono;
            Monomial lk = basis[k].leading_term(order).mono;
            if (coprime(li, lk)) continue; // S-poly reduces to zero
            pending.push_back({lcm(li, lk), i, k});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);

        Term li = basis[pr.i].leading_term(order);
        Term lj = basis[pr.j].leading_term(order);
        Monomial l = lcm(li.mono, lj.mono);
        Poly mi = Poly::monomial(l.divide_by(li.mono), Rational(1) / li.coeff);
        Poly mj = Poly::monomial(l.divide_by(lj.mono), Rational(1) / lj.coeff);
        Poly s = basis[pr.i] * mi - basis[pr.j] * mj;
        if (s.is_zero()) continue;

        Divider div(basis, order);
        DivisionResult dr = div.divide(s);
        if (dr.nf.is_zero()) continue;

        std::vector<Poly> row = row_combine(rows[pr.i], mi, rows[pr.j], mj);
        for (std::size_t t = 0; t < basis.size(); ++t)
            for (std::size_t j = 0; j < ngens; ++j) row[j] -= dr.cofactors[t] * rows[t][j];
        basis.push_back(dr.nf);
        rows.push_back(std::move(row));
        push_pairs(basis.size() - 1);
    }

    // minimize: drop elements whose leading term another element's divides
    for (std::size_t i = 0; i < basis.size();) {
        Monomial li = basis[i].leading_term(order).mono;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == i) continue;
            Monomial lj = basis[j].leading_term(order).mono;
            if (lj.divides(li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            basis.erase(basis.begin() + i);
            rows.erase(rows.begin() + i);
        } else {
            ++i;
        }
    }

    // tail-reduce each element against the others
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Poly> others;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == i) continue;
            others.push_back(basis[j]);
            idx.push_back(j);
        }
        if (others.empty()) break;
        Divider div(others, order);
        DivisionResult dr = div.divide(basis[i]);
        basis[i] = dr.nf;
        for (std::size_t t = 0; t < others.size(); ++t)
            for (std::size_t j = 0; j < ngens; ++j) rows[i][j] -= dr.cofactors[t] * rows[idx[t]][j];
    }

    // monic + deterministic order (ascending leading terms)
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational lc = basis[i].leading_term(order).coeff;
        Rational inv = Rational(1) / lc;
        basis[i] = basis[i].scaled(inv);
        for (std::size_t j = 0; j < ngens; ++j) rows[i][j] = rows[i][j].scaled(inv);
    }
    std::vector<std::size_t> perm(basis.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order.less(basis[a].leading_term(order).mono, basis[b].leading_term(order).mono);
    });
    for (std::size_t i : perm) {
        G.basis.push_back(basis[i]);
        G.transform.push_back(rows[i]);
    }
    return G;
}

DivisionResult normal_form(const Poly& p, const GroebnerBasis& G) {
    if (p.nvars() != G.nvars) fail(errc::variable_mismatch, "polynomial is in a different ring");
    Divider div(G.basis, G.order);
    return div.divide(p);
}

Poly nf(const Poly& p, const GroebnerBasis& G) { return normal_form(p, G).nf; }

bool is_zero_dimensional(const GroebnerBasis& G) {
    for (std::size_t v = 0; v < G.nvars; ++v) {
        bool pure = false;
        for (const Poly& b : G.basis) {
            Monomial lt = b.leading_term(G.order).mono;
            if (lt.is_one()) return true; // unit ideal
            bool ok = lt.e[v] > 0;
            for (std::size_t w = 0; ok && w < G.nvars; ++w)
                if (w != v && lt.e[w] != 0) ok = false;
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
    if (!is_zero_dimensional(G))
        fail(errc::not_zero_dimensional, "standard monomial set is infinite");
    std::vector<Monomial> lts;
    for (const Poly& b : G.basis) {
        Monomial lt = b.leading_term(G.order).mono;
        if (lt.is_one()) return {}; // unit ideal: zero ring
        lts.push_back(lt);
    }
    std::vector<int> bound(G.nvars, 0);
    for (std::size_t v = 0; v < G.nvars; ++v) {
        for (const Monomial& lt : lts) {
            bool pure = lt.e[v] > 0;
            for (std::size_t w = 0; pure && w < G.nvars; ++w)
                if (w != v && lt.e[w] != 0) pure = false;
            if (pure && (bound[v] == 0 || lt.e[v] < bound[v])) bound[v] = lt.e[v];
        }
    }
    std::vector<Monomial> result;
    Monomial m = Monomial::one(G.nvars);
    while (true) {
        bool divisible = false;
        for (const Monomial& lt : lts)
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) result.push_back(m);
        std::size_t v = 0;
        while (v < G.nvars) {
            if (++m.e[v] < bound[v]) break;
            m.e[v] = 0;
            ++v;
        }
        if (v == G.nvars) break;
    }
    std::sort(result.begin(), result.end(),
              [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });
    return result;
}

std::vector<Poly> lift_to_generators(const Poly& p, const GroebnerBasis& G) {
    DivisionResult dr = normal_form(p, G);
    if (!dr.nf.is_zero()) fail(errc::not_in_ideal, "polynomial is not in the ideal");
    std::vector<Poly> a(G.generators.size(), Poly(G.nvars));
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
        if (dr.cofactors[i].is_zero()) continue;
        for (std::size_t j = 0; j < G.generators.size(); ++j)
            a[j] += dr.cofactors[i] * G.transform[i][j];
    }
    auto pdeg = p.homogeneous_degree();
    bool all_homog = pdeg.has_value();
    for (const Poly& g : G.generators)
        if (!g.homogeneous_degree()) all_homog = false;
    if (all_homog && !p.is_zero()) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            int d = *pdeg - *G.generators[j].homogeneous_degree();
            a[j] = d < 0 ? Poly(G.nvars) : a[j].homogeneous_component(d);
        }
    }
    return a;
}

bool ideal_contains(const GroebnerBasis& G, const Poly& p) { return nf(p, G).is_zero(); }

bool same_ideal(const GroebnerBasis& A, const GroebnerBasis& B) {
    if (A.order.equal_layout(B.order)) return A.basis == B.basis;
    for (const Poly& b : B.basis)
        if (!ideal_contains(A, b)) return false;
    for (const Poly& a : A.basis)
        if (!ideal_contains(B, a)) return false;
    return true;
}

} // namespace gwci
