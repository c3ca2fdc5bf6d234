#pragma once

#include "gwci/koszul.hpp"
#include "gwci/resolution.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gwci {

// Element of Tot(F (x) K): finite map from (homological level i, basis index
// p in 0..b_i-1) to Koszul elements. The Koszul slot of level i carries the
// sign twist (-1)^(i+1) on delta and on the homotopy, which makes the total
// differential square to zero.
struct TotalElement {
    std::map<std::pair<int, int>, KoszulElement> entries;

    bool is_zero() const { return entries.empty(); }
    void add(int level, int idx, const KoszulElement& w) {
        if (w.is_zero()) return;
        auto key = std::make_pair(level, idx);
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries.emplace(key, w);
        } else {
            it->second += w;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    KoszulElement component(int level, int idx) const {
        auto it = entries.find({level, idx});
        return it != entries.end() ? it->second : KoszulElement();
    }

    bool operator==(const TotalElement&) const = default;
};

// matrix action of the resolution differential alone: (i,p) -> (i-1,*)
TotalElement resolution_action(const TotalElement& w, const FreeResolution& R);

// row-twisted homotopy (-1)^(i+1) (1 (x) H_nabla)
TotalElement twisted_h(const TotalElement& w, const GFrame& F);

// d_F + (-1)^(i+1) delta; squares to zero
TotalElement total_diff(const TotalElement& w, const FreeResolution& R, const GFrame& F);

// sigma~ = sum_t ((1 (x) H) d_F)^t applied to h_j^level (x) 1. A cycle of the
// total complex whose (level, j) component is exactly h (x) 1. Requires the
// resolution to be g-WCI.
TotalElement sigma_tilde(const FreeResolution& R, const GFrame& F, int level, int j);

struct RetractReport {
    int samples = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// checks, on each sample w: delta H + H delta = sigma pi - Id; pi sigma = Id
// on Q/(g) representatives; H sigma = 0; pi H = 0; H^2 = 0
RetractReport check_retract(const GFrame& F, const std::vector<KoszulElement>& samples);

// (d_F (1 (x) H))^(r+1) annihilates every h_j^i (x) dg_I seed
bool check_small(const FreeResolution& R, const GFrame& F);

} // namespace gwci
