#pragma once

#include "gwci/groebner.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwci {

// The unique finite representation q = sum_N sigma(q_N) * g^N as a map from
// exponent multi-indices N in N^s to sigma-reduced nonzero coefficients.
struct GExpansion {
    std::size_t s = 0;
    std::map<std::vector<int>, Poly> coeffs;

    bool operator==(const GExpansion&) const = default;
};

// Validated context: polynomial ring, monomial order, the regular sequence g,
// Groebner data for (g), and the standard monomial basis of Q/(g). The
// splitting sigma is the normal-form map onto the span of the standard
// monomials. Since the g_i are n homogeneous polynomials in n variables with
// (g) zero-dimensional, they automatically form a regular sequence.
struct GFrame {
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<Poly> g;
    GroebnerBasis gb_g;
    std::vector<Monomial> std_basis;
    std::vector<int> degs;

    std::size_t nvars() const { return vars.size(); }
    std::size_t s() const { return g.size(); }

    Poly sigma(const Poly& q) const { return nf(q, gb_g); }
    bool sigma_reduced(const Poly& q) const { return sigma(q) == q; }
};

GFrame make_frame(std::vector<std::string> vars, const MonomialOrder& order,
                  std::vector<Poly> g);

// g^N, with g^N = 0 when N has a negative entry.
Poly g_power(const GFrame& F, const std::vector<int>& N);

GExpansion g_expand(const Poly& q, const GFrame& F);
Poly g_reconstruct(const GExpansion& E, const GFrame& F);

// d/dg_j (0-based j): sum_N N_j * sigma(q_N) * g^(N - e_j).
Poly partial(const Poly& q, std::size_t j, const GFrame& F);
Poly partial(const GExpansion& E, std::size_t j, const GFrame& F);

// hatted partial: sum_N (N_j/|N|) * sigma(q_N) * g^(N - e_j).
Poly hatted_partial(const Poly& q, std::size_t j, const GFrame& F);
Poly hatted_partial(const GExpansion& E, std::size_t j, const GFrame& F);

// Common |N| over the expansion, when q is homogeneous in g; 0 for q = 0 and
// for q in the span of the standard monomials.
std::optional<int> g_degree(const Poly& q, const GFrame& F);
std::optional<int> g_degree(const GExpansion& E);

} // namespace gwci
