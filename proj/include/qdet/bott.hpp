#pragma once

#include <vector>

#include "qdet/partition.hpp"

namespace qdet {

// Gr(s subspaces of k^r); q = r - s is the quotient rank.
struct GrassmannianShape {
    int r = 0;
    int s = 0;

    GrassmannianShape(int r_, int s_);
    int q() const { return r - s; }
    int dim() const { return s * q(); }
};

struct BottOutcome {
    bool zero = true;
    int cohom_degree = 0;      // l(sigma)
    DominantWeight result;     // weight of rank r
    bool dual = false;         // result lives on R^* instead of R

    static BottOutcome make_zero() { return {}; }
    static BottOutcome nonzero(int degree, DominantWeight w, bool dual = false) {
        return {false, degree, std::move(w), dual};
    }
};

/* Bott's algorithm for S^mu Q (x) S^nu S: sort lambda+rho by the unique
 * permutation, degree = inversion count, zero on repeats. */
BottOutcome bott(const GrassmannianShape& shape, const std::vector<int>& mu_on_Q,
                 const std::vector<int>& nu_on_S);

// H^*(Gr; S^mu S (x) det^w Q): nonzero only in degree q*t for the window t.
BottOutcome cohomology_S_twist(const GrassmannianShape& shape, const Partition& mu, int w);

// H^*(Gr; S^nu Q^* (x) det^w S^*): the mirror computation; nonzero degree is
// s*t and the resulting weight lives on R^*.
BottOutcome cohomology_Qdual_twist(const GrassmannianShape& shape, const Partition& nu, int w);

// (mu_1-q,...,mu_t-q,(t+w)^q,mu_{t+1},...,mu_s), the sorted rho-shift of (w^q,mu)
DominantWeight bott_circ_weight(const Partition& mu, int t, int w, int q, int s);

}  // namespace qdet
