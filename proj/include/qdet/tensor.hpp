#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdet/partition.hpp"
#include "qdet/quiver.hpp"

namespace qdet {

// Subspace variety of a 3-tensor: gamma_i-dimensional subspaces of k^{alpha_i}.
struct TensorSetting {
    std::array<int, 3> alpha{};
    std::array<int, 3> gamma{};

    TensorSetting(std::array<int, 3> a, std::array<int, 3> g);
    std::array<int, 3> beta() const;
    long long koszul_rank() const;    // gamma1 * gamma2 * gamma3
    long long pairing() const;        // <<gamma,beta>> = <gamma,beta>_0 - g1 g2 g3
};

struct LineWeight3 {
    int w1 = 0, w2 = 0, w3 = 0;
    auto operator<=>(const LineWeight3&) const = default;
};

struct TensorSummand {
    std::array<DominantWeight, 3> slot;  // ranks alpha_1..alpha_3
    mpz_class mult;                      // g with the conjugate of slot 1's partition
    int degree = 0;                      // common size |lambda_k|

    mpz_class rank(const TensorSetting& st) const;
};

struct TensorComplex {
    TensorSetting setting;
    LineWeight3 weight;
    std::map<int, std::vector<TensorSummand>> terms;

    std::optional<int> min_index() const;
    std::optional<int> max_index() const;
    mpz_class term_rank(int i) const;
    bool has_negative_terms() const;
};

TensorComplex tensor_complex(const TensorSetting& st, const LineWeight3& w);

LineWeight3 tensor_dual_weight(const TensorSetting& st, const LineWeight3& w);

bool tensor_nonneg_admissible(const TensorSetting& st, const LineWeight3& w);

struct CodimFiber {
    long long e = 0;          // codimension, read off the untwisted complex length
    long long h = 0;          // generic fiber dimension, e + <<gamma,beta>>
    bool proper = true;       // false: the subspace variety is everything
    bool probe_agrees = true; // randomized Jacobian cross-check
    long long probe_h = 0;
};

CodimFiber codim_and_fiber(const TensorSetting& st, uint64_t seed = 1,
                           uint64_t prime = 2147483647);

/* deg(q) * deg(R) by the Euler characteristic of the untwisted complex, with
 * r = codimension taken from the complex length. */
mpz_class tensor_degree(const TensorSetting& st);

struct VanishingReport {
    long long checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> sharpness_witnesses;
};

// exhaustive check of the two Kronecker vanishing statements on small windows
VanishingReport kron_vanishing_check(const TensorSetting& st, int max_size,
                                     const std::array<int, 3>& w = {0, 0, 0});

std::string render_term(const std::vector<TensorSummand>& term);
std::string render_complex(const TensorComplex& c);
std::string render_json(const TensorComplex& c);

}  // namespace qdet
