#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdet/partition.hpp"
#include "qdet/quiver.hpp"

namespace qdet {

// K_m with dimension vectors gamma <= alpha on the two vertices; beta = alpha - gamma.
struct KroneckerSetting {
    int m = 1;
    int alpha1 = 0, alpha2 = 0;
    int gamma1 = 0, gamma2 = 0;

    KroneckerSetting(int m_, std::pair<int, int> alpha, std::pair<int, int> gamma);
    int beta1() const { return alpha1 - gamma1; }
    int beta2() const { return alpha2 - gamma2; }
    long long euler() const;           // <gamma, beta>
    long long koszul_rank() const;     // <gamma, beta>_1 = m * gamma1 * beta2
    Quiver quiver() const { return Quiver::kronecker(m); }
    DimVector gamma_vec() const { return {gamma1, gamma2}; }
    DimVector beta_vec() const { return {beta1(), beta2()}; }
};

struct LineWeight2 {
    int w1 = 0, w2 = 0;
    auto operator<=>(const LineWeight2&) const = default;
};

/* One equivariant free summand g * S^{mu_circ}R_1 (x) S^{nu_circ}R_2^*
 * (x) S^{lambda_conj}R_12 (x) A(-degree). */
struct Summand {
    DominantWeight mu_circ;    // rank alpha1
    DominantWeight nu_circ;    // rank alpha2, on R_2^*
    Partition lambda_conj;     // at most m parts
    mpz_class mult;            // g_{mu,nu}^lambda >= 1
    int degree = 0;            // |lambda|

    mpz_class rank(int m) const;  // mult * product of the three Schur dimensions
};

struct KLWComplex {
    KroneckerSetting setting;
    LineWeight2 weight;
    std::map<int, std::vector<Summand>> terms;  // homological index -> summands

    std::optional<int> min_index() const;
    std::optional<int> max_index() const;      // the length when terms exist
    mpz_class term_rank(int i) const;
    bool has_negative_terms() const;
};

KLWComplex complex(const KroneckerSetting& setting, const LineWeight2& w);

LineWeight2 dual_weight(const KroneckerSetting& setting, const LineWeight2& w);

// sufficient test for "no negative-degree term"
bool nonneg_admissible(const KroneckerSetting& setting, const LineWeight2& w);

enum class CMCertificate { theorem, direct };

struct CMWeight {
    LineWeight2 weight;
    CMCertificate certificate;
};

struct WeightBox {
    int w1_min = 0, w1_max = 0, w2_min = 0, w2_max = 0;
};

struct CMSearchResult {
    std::vector<CMWeight> weights;
    bool hom_ok = true;   // false: hom(gamma,beta) != 0, search not meaningful
};

CMSearchResult cm_weight_search(const KroneckerSetting& setting, const WeightBox& box,
                                const SampleOptions& opts = {});

// deg(q) * deg(Rep) from the Euler characteristic of the untwisted complex
mpz_class degree(const KroneckerSetting& setting);

/* Text form.  One term renders as summands joined by "+", a summand as
 * [MULT](mu;nu;lambda') with runs of lambda's sharing (mu;nu) wrapped in
 * parentheses.  parse_term accepts "+", the circled-plus sign, and "\oplus". */
std::string render_term(const std::vector<Summand>& term);
std::string render_complex(const KLWComplex& c);     // "F_i = ..." lines
std::string render_json(const KLWComplex& c);

struct ParsedSummand {
    std::vector<int> slot1, slot2, slot3;  // raw entries, trailing zeros dropped
    mpz_class mult = 1;
};

struct ParseNote {
    std::string message;
};

/* Parses a printed term.  When a summand has too few slots the splitter tries
 * every comma split of the overfull slot into two weakly decreasing pieces;
 * a unique valid split is applied and reported, anything else throws. */
std::vector<ParsedSummand> parse_term(const std::string& text, int expected_slots,
                                      std::vector<ParseNote>* notes = nullptr);

struct TermReading {
    std::vector<ParsedSummand> summands;
    std::string note;  // empty for the strict reading
};

// every reading of a golden term: strict parse and/or delimiter-fix variants
std::vector<TermReading> parse_term_readings(const std::string& text, int expected_slots);

// canonical text of a parsed golden term (sorted the same way render_term sorts)
std::string canonical_term_text(std::vector<ParsedSummand> summands);

std::string summand_text(const Summand& s);

}  // namespace qdet
