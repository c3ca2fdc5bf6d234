#pragma once

#include "gwci/generators.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwci {

// Groebner basis of the ideal generated by { d/dg_j(f) : f in I, j } from a
// finite derived generating set: the f_i themselves, their partials, and the
// product-rule correction terms over the standard monomial basis.
GroebnerBasis partial_ideal(const std::vector<Poly>& I_gens, const GFrame& F);

// brute-force comparison ideal: all d/dg_j(m * f_i) for monomials m of total
// degree <= bound (test utility)
GroebnerBasis partial_ideal_bruteforce(const std::vector<Poly>& I_gens, const GFrame& F,
                                       int degree_bound);

struct PropCheck {
    bool holds = false;
    // first product of derived-ideal generators found outside I, when !holds
    std::optional<Poly> witness;
    GroebnerBasis derived; // GB of d/dg(I)
};

// Tests d/dg(I)^2 <= I. When it holds, (g) is a weak complete intersection
// ideal in Q/I.
PropCheck check_prop_sufficient(const std::vector<Poly>& I_gens, const GFrame& F);

// label -> cycle; mu values on tuples of labels (absent tuples denote 0)
struct MasseyTable {
    std::map<std::string, KoszulElement> basis;
    std::map<std::vector<std::string>, KoszulElement> mu;
};

struct LabeledProduct {
    std::string left, right;
    KoszulElement value; // reduced mod I
};

std::vector<LabeledProduct> cycle_products(
    const std::vector<std::pair<std::string, KoszulElement>>& cycles, const GFrame& F,
    const GroebnerBasis& gbI);

struct MasseyReport {
    int tuples_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// checks d^K mu(l_1..l_p) = sum_j bar(mu(l_1..l_j)) mu(l_{j+1}..l_p) mod I
// for every tuple of length 2..max_p, with bar(a) = (-1)^(|a|+1) a
MasseyReport verify_massey(const MasseyTable& T, const GFrame& F, const GroebnerBasis& gbI,
                           int max_p);

struct ProductsResult {
    bool vanish = false;
    std::vector<LabeledProduct> table;
    MasseyTable certificate; // all-zero mu over the basis, when vanish
};

ProductsResult products_vanish(const std::vector<std::pair<std::string, KoszulElement>>& cycles,
                               const GFrame& F, const GroebnerBasis& gbI);

} // namespace gwci
