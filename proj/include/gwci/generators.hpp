#pragma once

#include "gwci/perturb.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwci {

struct GeneratorVerification {
    bool ran = false;
    bool cycle_ok = false;
    bool retract_match = false;
    int sign = 0; // epsilon relating the two oracles, when retract_match holds
};

// Basis representatives of H_level(g; M). For each j in 1..b_level there is
// one Koszul element per F_0 basis index; for cyclic M (b_0 = 1, the usual
// case) exactly one. Coefficients are reduced mod I when a basis of I is
// supplied and b_0 = 1.
struct GeneratorSet {
    int degree = 0;
    std::vector<std::vector<KoszulElement>> generators;
    std::string provenance;
    GeneratorVerification verification;

    std::size_t count() const { return generators.size(); }
    const KoszulElement& cycle(std::size_t j) const { return generators[j][0]; }
};

// Iterated hatted-partial formula: for each j1 the sum over all index chains
// and all k-tuples of
//   hat d_{k_l}( f^1 * hat d_{k_{l-1}}( f^2 * ... hat d_{k_1}(f^l) ... ) )
// attached to dg_{k_1} ^ ... ^ dg_{k_l}.
GeneratorSet generators_main(const FreeResolution& R, const GFrame& F, int level,
                             const GroebnerBasis* gbI);

// Independent oracle: the (level 0, form degree `level`) component of
// sigma_tilde for each basis element.
GeneratorSet generators_via_retract(const FreeResolution& R, const GFrame& F, int level,
                                    const GroebnerBasis* gbI);

// D_{j1..jl} for the chain's g-degrees, innermost entry first:
//   1/d_1 * 1/(d_1+d_2-1) * ... * 1/(d_1+...+d_l-l+1)
Rational d_constant(const std::vector<int>& degrees);

// Same chains as generators_main, with plain partials and a D-constant per
// chain. Requires every resolution entry to be homogeneous in g.
GeneratorSet generators_g_homogeneous(const FreeResolution& R, const GFrame& F, int level,
                                      const GroebnerBasis* gbI);

// Jacobian-determinant form, for resolutions whose entries expand with
// coefficients in k.
GeneratorSet generators_k_coeff(const FreeResolution& R, const GFrame& F, int level,
                                const GroebnerBasis* gbI);

// det of the i x i matrix (d/dg_{ks[j]} (fs[l]))_{j,l}
Poly jacobian_det(const std::vector<Poly>& fs, const std::vector<int>& ks, const GFrame& F);

struct Proportionality {
    enum class Kind { both_zero, proportional, not_proportional } kind;
    Rational ratio; // a = ratio * b when proportional
};
Proportionality proportionality(const KoszulElement& a, const KoszulElement& b);

struct OracleComparison {
    bool proportional = false;  // one scalar across the whole degree
    bool sign_only = false;     // that scalar is +-1
    std::optional<Rational> ratio;
    std::vector<std::string> notes; // per-generator ratios when not uniform
};
OracleComparison compare_generator_sets(const GeneratorSet& a, const GeneratorSet& b);

// fills verification flags on S: cycle check mod I, oracle agreement
void verify_generators(GeneratorSet& S, const FreeResolution& R, const GFrame& F,
                       const GroebnerBasis* gbI);

// every coefficient of delta(z) has normal form 0 mod I
bool is_cycle_mod(const KoszulElement& z, const GFrame& F, const GroebnerBasis& gbI);

} // namespace gwci
