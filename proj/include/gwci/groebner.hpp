#pragma once

#include "gwci/poly.hpp"

#include <vector>

namespace gwci {

// Reduced Groebner basis of an ideal together with a transform matrix writing
// each basis element as a combination of the input generators:
//   basis[i] = sum_j transform[i][j] * generators[j].
// Basis elements are monic and auto-reduced; the reduced basis is unique for
// a given ideal and order, so two ideals are equal iff their bases are.
struct GroebnerBasis {
    std::size_t nvars = 0;
    MonomialOrder order;
    std::vector<Poly> generators;
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> transform;
};

struct DivisionResult {
    Poly nf;
    std::vector<Poly> cofactors; // against basis: p = sum cofactors[i]*basis[i] + nf
};

GroebnerBasis buchberger(std::vector<Poly> gens, const MonomialOrder& order);

DivisionResult normal_form(const Poly& p, const GroebnerBasis& G);
Poly nf(const Poly& p, const GroebnerBasis& G);

bool is_zero_dimensional(const GroebnerBasis& G);

// Monomials outside the leading-term ideal, ascending in G's order.
// Throws not_zero_dimensional when infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G);

// Writes p = sum a_i * generators[i]; requires nf(p) == 0. When p and all
// generators are homogeneous, each a_i is truncated to its homogeneous
// component of degree deg(p) - deg(generators[i]), which still reconstructs p.
std::vector<Poly> lift_to_generators(const Poly& p, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const Poly& p);
bool same_ideal(const GroebnerBasis& A, const GroebnerBasis& B);

} // namespace gwci
