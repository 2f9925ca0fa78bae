#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdet {

// Finite quiver; parallel arrows and loops allowed.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (tail, head)

    static Quiver kronecker(int m);  // 2 vertices, m arrows 0 -> 1
    // "K3" or an arrow list "0-1,0-1,1-2"
    static Quiver parse(const std::string& text);
};

using DimVector = std::vector<int>;

struct EulerForm {
    long long part0 = 0;   // dot product <g,b>_0
    long long part1 = 0;   // sum over arrows g(ta) b(ha)
    long long value = 0;   // part0 - part1
};

EulerForm euler_form(const Quiver& q, const DimVector& gamma, const DimVector& beta);

struct GenericHomExt {
    long long hom = 0;
    long long ext = 0;
    long long euler = 0;
    int samples_used = 0;
    uint64_t field_prime = 0;
};

struct SampleOptions {
    int samples = 5;
    uint64_t prime = 2147483647;  // 2^31 - 1
    uint64_t seed = 1;
};

/* hom is the minimum over random representation pairs of dim Hom(M,N) over
 * F_prime; ext = hom - <gamma,beta>.  A probabilistic upper bound on hom that
 * is exact with overwhelming probability. */
GenericHomExt generic_hom_ext(const Quiver& q, const DimVector& gamma, const DimVector& beta,
                              const SampleOptions& opts = {});

// hom(gamma, alpha-gamma) == 0 and <gamma, alpha-gamma> < 0
bool homext_condition(const Quiver& q, const DimVector& gamma, const DimVector& alpha,
                      const SampleOptions& opts = {});

enum class BirationalReason { certified, hom_nonzero, inconclusive };

struct BirationalResult {
    bool birational = false;  // true certifies; false is inconclusive
    BirationalReason reason = BirationalReason::inconclusive;
};

/* Sufficient numeric criterion: for every delta strictly below gamma with
 * 2*gamma-delta <= alpha, either <2g-d, b-g+d> < <g,b> or <g,b> < <d, b-g+d>. */
BirationalResult birational_check(const Quiver& q, const DimVector& gamma, const DimVector& alpha,
                                  const SampleOptions& opts = {});

// rank of a matrix over F_p (row-major, rows x cols)
int rank_mod_p(std::vector<uint64_t> mat, int rows, int cols, uint64_t p);

}  // namespace qdet
