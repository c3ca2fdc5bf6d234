#include "gwci/resolution.hpp"

#include <algorithm>

namespace gwci {

FreeResolution load_resolution(std::vector<int> ranks, std::vector<PolyMatrix> diffs) {
    FreeResolution R;
    R.ranks = std::move(ranks);
    R.diffs = std::move(diffs);
    if (R.ranks.empty() || R.diffs.size() + 1 != R.ranks.size())
        fail(errc::shape_mismatch, "need one differential per pair of consecutive ranks");
    for (int r : R.ranks)
        if (r <= 0) fail(errc::shape_mismatch, "ranks must be positive");
    for (std::size_t i = 0; i < R.diffs.size(); ++i) {
        const PolyMatrix& M = R.diffs[i];
        if (static_cast<int>(M.size()) != R.ranks[i])
            fail(errc::shape_mismatch, "differential " + std::to_string(i + 1) + " has " +
                                           std::to_string(M.size()) + " rows, expected " +
                                           std::to_string(R.ranks[i]));
        for (const auto& row : M)
            if (static_cast<int>(row.size()) != R.ranks[i + 1])
                fail(errc::shape_mismatch,
                     "differential " + std::to_string(i + 1) + " has a row of length " +
                         std::to_string(row.size()) + ", expected " +
                         std::to_string(R.ranks[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < R.diffs.size(); ++i) {
        const PolyMatrix& A = R.diffs[i];     // b_i x b_{i+1}
        const PolyMatrix& B = R.diffs[i + 1]; // b_{i+1} x b_{i+2}
        for (int r = 0; r < R.ranks[i]; ++r) {
            for (int c = 0; c < R.ranks[i + 2]; ++c) {
                Poly acc = Poly::zero(A[r].front().nvars());
                for (int k = 0; k < R.ranks[i + 1]; ++k) acc += A[r][k] * B[k][c];
                if (!acc.is_zero())
                    fail(errc::not_a_complex, "d_" + std::to_string(i + 1) + " o d_" +
                                                  std::to_string(i + 2) +
                                                  " != 0 at entry (" + std::to_string(r) +
                                                  "," + std::to_string(c) + ")");
            }
        }
    }
    return R;
}

GwciReport check_gwci(const FreeResolution& R, const GFrame& F) {
    GwciReport rep;
    for (std::size_t i = 0; i < R.diffs.size(); ++i)
        for (std::size_t r = 0; r < R.diffs[i].size(); ++r)
            for (std::size_t c = 0; c < R.diffs[i][r].size(); ++c)
                if (!nf(R.diffs[i][r][c], F.gb_g).is_zero()) {
                    rep.ok = false;
                    rep.offending.emplace_back(static_cast<int>(i + 1), static_cast<int>(r),
                                               static_cast<int>(c));
                }
    return rep;
}

bool check_minimal(const FreeResolution& R) {
    for (const PolyMatrix& M : R.diffs)
        for (const auto& row : M)
            for (const Poly& p : row)
                if (p.has_constant_term()) return false;
    return true;
}

FreeResolution rewrite_in_g(const FreeResolution& R, const GFrame& F) {
    FreeResolution out = R;
    std::vector<std::vector<std::vector<GExpansion>>> exps;
    std::vector<int> zero_index(F.s(), 0);
    for (const PolyMatrix& M : R.diffs) {
        std::vector<std::vector<GExpansion>> mat;
        for (const auto& row : M) {
            std::vector<GExpansion> erow;
            for (const Poly& p : row) {
                GExpansion E = g_expand(p, F);
                if (E.coeffs.count(zero_index))
                    fail(errc::not_gwci, "entry has a nonzero normal form mod (g)");
                erow.push_back(std::move(E));
            }
            mat.push_back(std::move(erow));
        }
        exps.push_back(std::move(mat));
    }
    out.expansions = std::move(exps);
    return out;
}

int homology_rank(const FreeResolution& R, const GFrame& F, int level) {
    if (level < 0) fail(errc::degree_out_of_range, "negative homological degree");
    int s = static_cast<int>(F.s());
    for (int i = s + 1; i <= R.length(); ++i)
        if (R.rank(i) != 0)
            fail(errc::length_exceeds_s,
                 "nonzero module in homological degree " + std::to_string(i) +
                     " > s = " + std::to_string(s) + "; not a g-WCI resolution");
    return R.rank(level);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> tuple_lcm(const std::vector<std::vector<int>>& tuples,
                           const std::vector<int>& subset, std::size_t s) {
    std::vector<int> l(s, 0);
    for (int i : subset)
        for (std::size_t k = 0; k < s; ++k) l[k] = std::max(l[k], tuples[i][k]);
    return l;
}

} // namespace

FreeResolution taylor_resolution(const std::vector<std::vector<int>>& tuples, const GFrame& F) {
    std::size_t t = tuples.size();
    if (t == 0) fail(errc::schema_violation, "no exponent tuples given");
    for (std::size_t i = 0; i < t; ++i) {
        if (tuples[i].size() != F.s())
            fail(errc::shape_mismatch, "exponent tuple of wrong length");
        bool nonzero = false;
        for (int e : tuples[i]) {
            if (e < 0) fail(errc::schema_violation, "negative exponent");
            if (e > 0) nonzero = true;
        }
        if (!nonzero) fail(errc::schema_violation, "zero exponent tuple");
        for (std::size_t j = 0; j < i; ++j)
            if (tuples[j] == tuples[i]) fail(errc::schema_violation, "duplicate exponent tuple");
    }

    std::vector<int> ranks;
    std::vector<PolyMatrix> diffs;
    std::vector<std::vector<std::vector<int>>> levels;
    for (std::size_t p = 0; p <= t; ++p)
        levels.push_back(subsets_of_size(static_cast<int>(t), static_cast<int>(p)));
    for (const auto& lv : levels) ranks.push_back(static_cast<int>(lv.size()));

    for (std::size_t p = 1; p <= t; ++p) {
        const auto& rows = levels[p - 1];
        const auto& cols = levels[p];
        PolyMatrix M(rows.size(), std::vector<Poly>(cols.size(), Poly::zero(F.nvars())));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> lc = tuple_lcm(tuples, cols[c], F.s());
            for (std::size_t m = 0; m < cols[c].size(); ++m) {
                std::vector<int> sub = cols[c];
                sub.erase(sub.begin() + m);
                std::vector<int> ls = tuple_lcm(tuples, sub, F.s());
                std::vector<int> diff(F.s());
                for (std::size_t k = 0; k < F.s(); ++k) diff[k] = lc[k] - ls[k];
                Poly e = g_power(F, diff);
                if (m % 2 == 1) e = -e;
                std::size_t r = std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
                M[r][c] = e;
            }
        }
        diffs.push_back(std::move(M));
    }
    return load_resolution(std::move(ranks), std::move(diffs));
}

} // namespace gwci
