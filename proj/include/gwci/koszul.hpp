#pragma once

#include "gwci/gframe.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gwci {

// Element of the Koszul exterior complex on dg_1..dg_s with Poly
// coefficients: finite map from strictly increasing index tuples (0-based)
// to nonzero coefficients. Unsorted input tuples are normalized by sorting
// with sign; tuples with a repeated index are dropped.
class KoszulElement {
public:
    KoszulElement() = default;
    KoszulElement(int degree, std::size_t nvars) : degree_(degree), nvars_(nvars) {}

    static KoszulElement scalar(const Poly& q) {
        KoszulElement w(0, q.nvars());
        w.add({}, q);
        return w;
    }

    int degree() const { return degree_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Poly>& terms() const { return terms_; }

    // sorts the tuple, tracking the sign; no-op on repeated indices
    void add(std::vector<int> tuple, const Poly& coeff);

    Poly coefficient(const std::vector<int>& sorted_tuple) const {
        auto it = terms_.find(sorted_tuple);
        return it != terms_.end() ? it->second : Poly::zero(nvars_);
    }

    KoszulElement& operator+=(const KoszulElement& o);
    KoszulElement& operator-=(const KoszulElement& o);
    friend KoszulElement operator+(KoszulElement a, const KoszulElement& b) { return a += b; }
    friend KoszulElement operator-(KoszulElement a, const KoszulElement& b) { return a -= b; }
    KoszulElement operator-() const { return scaled(Rational(-1)); }
    KoszulElement scaled(const Rational& c) const;
    KoszulElement times(const Poly& p) const;

    // coefficient-wise normal form
    KoszulElement reduced(const GroebnerBasis& G) const;

    // zero elements are equal regardless of their recorded degree
    friend bool operator==(const KoszulElement& a, const KoszulElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const KoszulElement& a, const KoszulElement& b) {
        return !(a == b);
    }

private:
    int degree_ = 0;
    std::size_t nvars_ = 0;
    std::map<std::vector<int>, Poly> terms_;
};

// Koszul differential: dg_i -> g_i with alternating signs.
KoszulElement delta(const KoszulElement& w, const GFrame& F);

// graded-anticommutative product; sign from sorting concatenated tuples
KoszulElement wedge(const KoszulElement& a, const KoszulElement& b);

// nabla(q dg_I) = sum_j d/dg_j(q) dg_j ^ dg_I  (new factors wedge on the left)
KoszulElement nabla(const KoszulElement& w, const GFrame& F);

// de Rham contraction. On an expansion term sigma(q_N) g^N dg_I with
// |I| = k it acts as
//   -sum_j (N_j / (|N|+k)) sigma(q_N) g^(N-e_j) dg_j ^ dg_I ,
// the sign fixed so that delta H + H delta = sigma pi - Id.
KoszulElement h_nabla(const KoszulElement& w, const GFrame& F);

// sigma pi: normal form on 0-form coefficients, zero on positive forms
KoszulElement sigma_pi(const KoszulElement& w, const GFrame& F);

} // namespace gwci
