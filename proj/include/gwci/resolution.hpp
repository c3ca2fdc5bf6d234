#pragma once

#include "gwci/gframe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwci {

using PolyMatrix = std::vector<std::vector<Poly>>; // row-major

// Finite complex of free modules F_0 <- F_1 <- ... <- F_r. diffs[i] is the
// matrix of d_{i+1} : F_{i+1} -> F_i, of shape ranks[i] x ranks[i+1].
// Validation covers the complex property only; exactness of user-supplied
// resolutions is trusted, not verified.
struct FreeResolution {
    std::vector<int> ranks;
    std::vector<PolyMatrix> diffs;
    std::optional<std::vector<std::vector<std::vector<GExpansion>>>> expansions;

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    int rank(int i) const {
        return (i >= 0 && i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
    }
    // entry of d_i (1-based homological index), row m, column p (0-based)
    const Poly& entry(int i, int m, int p) const { return diffs[i - 1][m][p]; }
};

FreeResolution load_resolution(std::vector<int> ranks, std::vector<PolyMatrix> diffs);

struct GwciReport {
    bool ok = true;
    // (homological index i, row, col) of entries with nonzero normal form mod (g)
    std::vector<std::tuple<int, int, int>> offending;
};

GwciReport check_gwci(const FreeResolution& R, const GFrame& F);
bool check_minimal(const FreeResolution& R);

// Annotates every entry with its g-adic expansion; entries must have no N = 0
// term (throws not_gwci otherwise).
FreeResolution rewrite_in_g(const FreeResolution& R, const GFrame& F);

// b_l for a validated g-WCI resolution (0 beyond the length). Throws
// length_exceeds_s when a nonzero module sits above homological degree s.
int homology_rank(const FreeResolution& R, const GFrame& F, int level);

// Taylor complex on the g-monomials g^A for the given exponent tuples.
// Subsets ordered lexicographically; removing the m-th smallest element
// carries (-1)^(m+1).
FreeResolution taylor_resolution(const std::vector<std::vector<int>>& tuples, const GFrame& F);

} // namespace gwci
