#include "gwci/perturb.hpp"

namespace gwci {

TotalElement resolution_action(const TotalElement& w, const FreeResolution& R) {
    TotalElement out;
    for (const auto& [key, form] : w.entries) {
        auto [i, p] = key;
        if (i < 1) continue;
        for (int m = 0; m < R.rank(i - 1); ++m) {
            const Poly& f = R.entry(i, m, p);
            if (f.is_zero()) continue;
            out.add(i - 1, m, form.times(f));
        }
    }
    return out;
}

TotalElement twisted_h(const TotalElement& w, const GFrame& F) {
    TotalElement out;
    for (const auto& [key, form] : w.entries) {
        KoszulElement h = h_nabla(form, F);
        if (key.first % 2 == 0) h = -h;
        out.add(key.first, key.second, h);
    }
    return out;
}

TotalElement total_diff(const TotalElement& w, const FreeResolution& R, const GFrame& F) {
    TotalElement out = resolution_action(w, R);
    for (const auto& [key, form] : w.entries) {
        if (form.degree() == 0) continue;
        KoszulElement d = delta(form, F);
        if (key.first % 2 == 0) d = -d;
        out.add(key.first, key.second, d);
    }
    return out;
}

TotalElement sigma_tilde(const FreeResolution& R, const GFrame& F, int level, int j) {
    GwciReport rep = check_gwci(R, F);
    if (!rep.ok) fail(errc::not_gwci, "resolution differentials do not land in (g)");
    if (level < 0 || level > R.length() || j < 0 || j >= R.rank(level))
        fail(errc::degree_out_of_range, "no basis element at that level and index");
    TotalElement acc;
    KoszulElement one = KoszulElement::scalar(Poly::constant(F.nvars(), Rational(1)));
    acc.add(level, j, one);
    TotalElement cur = acc;
    for (int t = 1; t <= R.length() && !cur.is_zero(); ++t) {
        cur = twisted_h(resolution_action(cur, R), F);
        for (const auto& [key, form] : cur.entries) acc.add(key.first, key.second, form);
    }
    return acc;
}

RetractReport check_retract(const GFrame& F, const std::vector<KoszulElement>& samples) {
    RetractReport rep;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const KoszulElement& w = samples[k];
        ++rep.samples;
        auto note = [&](const std::string& what) {
            rep.violations.push_back("sample " + std::to_string(k) + ": " + what);
        };

        KoszulElement lhs = h_nabla(w, F);
        KoszulElement homotopy = delta(lhs, F);
        if (w.degree() > 0) homotopy += h_nabla(delta(w, F), F);
        KoszulElement rhs = sigma_pi(w, F) - w;
        if (homotopy != rhs) note("delta H + H delta != sigma pi - Id");

        if (!h_nabla(lhs, F).is_zero()) note("H^2 != 0");

        KoszulElement embedded = sigma_pi(w, F);
        if (!h_nabla(embedded, F).is_zero()) note("H sigma != 0");
        if (!sigma_pi(lhs, F).is_zero()) note("pi H != 0");
        if (sigma_pi(embedded, F) != embedded) note("pi sigma != Id");
    }
    return rep;
}

bool check_small(const FreeResolution& R, const GFrame& F) {
    int r = R.length();
    std::vector<std::vector<int>> forms; // every basis form dg_T, T subset of 1..s
    for (unsigned mask = 0; mask < (1u << F.s()); ++mask) {
        std::vector<int> t;
        for (std::size_t a = 0; a < F.s(); ++a)
            if (mask & (1u << a)) t.push_back(static_cast<int>(a));
        forms.push_back(std::move(t));
    }
    for (int i = 0; i <= r; ++i) {
        for (int j = 0; j < R.rank(i); ++j) {
            for (const auto& tuple : forms) {
                KoszulElement seed(static_cast<int>(tuple.size()), F.nvars());
                seed.add(tuple, Poly::constant(F.nvars(), Rational(1)));
                TotalElement w;
                w.add(i, j, seed);
                for (int k = 0; k <= r; ++k) w = resolution_action(twisted_h(w, F), R);
                if (!w.is_zero()) return false;
            }
        }
    }
    return true;
}

} // namespace gwci
