#pragma once

#include <vector>

#include <gmpxx.h>

#include "qdet/partition.hpp"

namespace qdet {

// Conjugacy class of S_n, given by its cycle type.
struct CycleType {
    Partition rho;
    int n = 0;

    explicit CycleType(Partition r) : rho(std::move(r)), n(rho.size()) {}
};

struct KroneckerQuery {
    Partition lambda, mu, nu;

    KroneckerQuery(Partition l, Partition m, Partition n);
};

// z_rho = prod_i i^{m_i} m_i!; the class size is n!/z_rho.
mpz_class centralizer_order(const CycleType& rho);

// chi^lambda(rho) by the Murnaghan-Nakayama rule, memoized on
// (lambda, remaining cycle type).  Thread-safe.
mpz_class character(const Partition& lambda, const CycleType& rho);

// g_{mu,nu}^lambda by the class sum, with cheap vanishing tests and a memo in
// front.  Exact; throws logic_error if the sum is not a non-negative integer.
mpz_class kronecker(const KroneckerQuery& q);

// Same class sum without memo or shortcut paths; for cross-checks.
mpz_class kronecker_class_sum(const KroneckerQuery& q);

/* Independent route: expand S^lambda of a product alphabet x_i y_j
 * (a = parts(mu)+1, b = parts(nu)+1 variables) into monomial-pair coefficients
 * via Kostka numbers and contingency tables, then peel off Schur-pair leading
 * terms.  Never touches symmetric-group characters. */
mpz_class kronecker_oracle(const KroneckerQuery& q);

// number of SSYT of the given shape and content (content entries >= 0)
mpz_class kostka(const Partition& shape, const std::vector<int>& content);

}  // namespace qdet
