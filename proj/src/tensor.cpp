#include "qdet/tensor.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qdet/bott.hpp"
#include "qdet/characters.hpp"
#include "qdet/klw.hpp"

namespace qdet {

TensorSetting::TensorSetting(std::array<int, 3> a, std::array<int, 3> g) : alpha(a), gamma(g) {
    for (int k = 0; k < 3; ++k) {
        if (gamma[k] < 0 || gamma[k] > alpha[k])
            throw std::invalid_argument("need 0 <= gamma <= alpha componentwise");
    }
}

std::array<int, 3> TensorSetting::beta() const {
    return {alpha[0] - gamma[0], alpha[1] - gamma[1], alpha[2] - gamma[2]};
}

long long TensorSetting::koszul_rank() const { return 1LL * gamma[0] * gamma[1] * gamma[2]; }

long long TensorSetting::pairing() const {
    auto b = beta();
    long long dot = 0;
    for (int k = 0; k < 3; ++k) dot += 1LL * gamma[k] * b[k];
    return dot - koszul_rank();
}

mpz_class TensorSummand::rank(const TensorSetting&) const {
    mpz_class r = mult;
    for (const auto& w : slot) r *= schur_dim(w);
    return r;
}

std::optional<int> TensorComplex::min_index() const {
    for (const auto& [i, list] : terms)
        if (!list.empty()) return i;
    return std::nullopt;
}

std::optional<int> TensorComplex::max_index() const {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        if (!it->second.empty()) return it->first;
    return std::nullopt;
}

mpz_class TensorComplex::term_rank(int i) const {
    mpz_class r = 0;
    auto it = terms.find(i);
    if (it == terms.end()) return r;
    for (const auto& s : it->second) r += s.rank(setting);
    return r;
}

bool TensorComplex::has_negative_terms() const {
    auto lo = min_index();
    return lo && *lo < 0;
}

static std::vector<int> stripped(const std::vector<int>& v) {
    std::vector<int> out(v);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

static bool tsummand_less(const TensorSummand& a, const TensorSummand& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int k = 0; k < 3; ++k) {
        auto sa = stripped(a.slot[k].entries()), sb = stripped(b.slot[k].entries());
        if (sa != sb) return sa < sb;
    }
    return false;
}

TensorComplex tensor_complex(const TensorSetting& st, const LineWeight3& w) {
    TensorComplex out{st, w, {}};
    const auto b = st.beta();
    const std::array<int, 3> ws{w.w1, w.w2, w.w3};
    const int N = static_cast<int>(st.koszul_rank());
    for (int t1 = 0; t1 <= st.gamma[0]; ++t1) {
        for (int t2 = 0; t2 <= st.gamma[1]; ++t2) {
            for (int t3 = 0; t3 <= st.gamma[2]; ++t3) {
                const std::array<int, 3> ts{t1, t2, t3};
                int base = 0;
                for (int k = 0; k < 3; ++k) base += b[k] * ts[k];
                for (int n = 0; n <= N; ++n) {
                    std::array<std::vector<Partition>, 3> cands;
                    bool any_empty = false;
                    for (int k = 0; k < 3; ++k) {
                        cands[k] = enumerate_P(PWindow{st.gamma[k], b[k], ts[k], ws[k]}, n);
                        if (cands[k].empty()) { any_empty = true; break; }
                    }
                    if (any_empty) continue;
                    for (const auto& l1 : cands[0]) {
                        Partition l1c = l1.conjugate();
                        for (const auto& l2 : cands[1]) {
                            for (const auto& l3 : cands[2]) {
                                mpz_class g = kronecker(KroneckerQuery(l1c, l2, l3));
                                if (g == 0) continue;
                                TensorSummand s;
                                const std::array<const Partition*, 3> ls{&l1, &l2, &l3};
                                for (int k = 0; k < 3; ++k)
                                    s.slot[k] =
                                        bott_circ_weight(*ls[k], ts[k], ws[k], b[k], st.gamma[k]);
                                s.mult = g;
                                s.degree = n;
                                out.terms[n - base].push_back(std::move(s));
                            }
                        }
                    }
                }
            }
        }
    }
    for (auto& [i, list] : out.terms) std::sort(list.begin(), list.end(), tsummand_less);
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

LineWeight3 tensor_dual_weight(const TensorSetting& st, const LineWeight3& w) {
    const auto& g = st.gamma;
    return {g[1] * g[2] - st.alpha[0] - w.w1, g[0] * g[2] - st.alpha[1] - w.w2,
            g[0] * g[1] - st.alpha[2] - w.w3};
}

bool tensor_nonneg_admissible(const TensorSetting& st, const LineWeight3& w) {
    const auto b = st.beta();
    const std::array<int, 3> ws{w.w1, w.w2, w.w3};
    long long sq = 0;
    for (int k = 0; k < 3; ++k) {
        long long d = 2LL * b[k] - ws[k];
        sq += d * d;
    }
    if (sq < 12) return true;
    if (sq > 12) return false;
    if (!(b[0] == b[1] && b[1] == b[2])) return true;
    if (!(ws[0] == ws[1] && ws[1] == ws[2])) return true;
    for (int i = 0; i < 3; ++i) {
        long long others = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) others += ws[j];
        if (others > st.alpha[i] - 3) return true;
    }
    return false;
}

namespace {

// one random solution of C x = 0 over F_p (C has full row rank in our use)
std::vector<uint64_t> random_kernel_vector(std::vector<uint64_t> mat, int rows, int cols,
                                           uint64_t p, std::mt19937_64& rng) {
    auto at = [&](int r, int c) -> uint64_t& { return mat[static_cast<size_t>(r) * cols + c]; };
    auto inv_mod = [p](uint64_t a) {
        uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<uint64_t>((__uint128_t)r * b % p);
            b = static_cast<uint64_t>((__uint128_t)b * b % p);
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c) % p != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int cc = 0; cc < cols; ++cc) std::swap(at(pr, cc), at(rank, cc));
        uint64_t inv = inv_mod(at(rank, c));
        for (int cc = c; cc < cols; ++cc)
            at(rank, cc) = static_cast<uint64_t>((__uint128_t)(at(rank, cc) % p) * inv % p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint64_t f = at(r, c) % p;
            if (f == 0) continue;
            for (int cc = c; cc < cols; ++cc) {
                uint64_t sub = static_cast<uint64_t>((__uint128_t)f * at(rank, cc) % p);
                at(r, cc) = (at(r, cc) % p + p - sub) % p;
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<uint64_t> x(cols, 0);
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) x[c] = rng() % p;
    for (int r = rank - 1; r >= 0; --r) {
        uint64_t acc = 0;
        for (int c = 0; c < cols; ++c) {
            if (c == pivot_col[r] || at(r, c) == 0) continue;
            acc = (acc + static_cast<uint64_t>((__uint128_t)at(r, c) * x[c] % p)) % p;
        }
        x[pivot_col[r]] = (p - acc) % p;
    }
    return x;
}

}  // namespace

CodimFiber codim_and_fiber(const TensorSetting& st, uint64_t seed, uint64_t prime) {
    const auto b = st.beta();
    if (b[0] == 0 && b[1] == 0 && b[2] == 0)
        throw std::invalid_argument("codim_and_fiber: gamma = alpha is degenerate");

    CodimFiber out;
    TensorComplex c = tensor_complex(st, LineWeight3{0, 0, 0});
    auto top = c.max_index();
    out.e = top ? *top : 0;
    out.h = out.e + st.pairing();
    out.proper = out.e > 0;

    // Jacobian probe at a random point of Z over F_prime
    const uint64_t p = prime;
    std::mt19937_64 rng(seed);
    const int a1 = st.alpha[0], a2 = st.alpha[1], a3 = st.alpha[2];
    const int g1 = st.gamma[0], g2 = st.gamma[1], g3 = st.gamma[2];

    // subspace L_k = span of u^k_c = e_c + sum_d A_k[d][c] e_{gamma_k + d}
    std::array<std::vector<uint64_t>, 3> A;
    for (int k = 0; k < 3; ++k) {
        A[k].assign(static_cast<size_t>(b[k]) * st.gamma[k], 0);
        for (auto& v : A[k]) v = rng() % p;
    }
    auto basis_entry = [&](int k, int c, int x) -> uint64_t {
        if (x == c) return 1;
        if (x >= st.gamma[k]) return A[k][static_cast<size_t>(x - st.gamma[k]) * st.gamma[k] + c];
        return 0;
    };

    // constraints M(u^1_{c1}, u^2_{c2}, u^3_{c3}) = 0 cut out the fiber of Z
    const int rows = g1 * g2 * g3;
    const int cols = a1 * a2 * a3;
    std::vector<uint64_t> C(static_cast<size_t>(std::max(rows, 1)) * cols, 0);
    for (int c1 = 0; c1 < g1; ++c1)
        for (int c2 = 0; c2 < g2; ++c2)
            for (int c3 = 0; c3 < g3; ++c3) {
                int row = (c1 * g2 + c2) * g3 + c3;
                for (int x1 = 0; x1 < a1; ++x1) {
                    uint64_t e1 = basis_entry(0, c1, x1);
                    if (!e1) continue;
                    for (int x2 = 0; x2 < a2; ++x2) {
                        uint64_t e2 = basis_entry(1, c2, x2);
                        if (!e2) continue;
                        uint64_t e12 = static_cast<uint64_t>((__uint128_t)e1 * e2 % p);
                        for (int x3 = 0; x3 < a3; ++x3) {
                            uint64_t e3 = basis_entry(2, c3, x3);
                            if (!e3) continue;
                            int col = (x1 * a2 + x2) * a3 + x3;
                            C[static_cast<size_t>(row) * cols + col] =
                                static_cast<uint64_t>((__uint128_t)e12 * e3 % p);
                        }
                    }
                }
            }
    std::vector<uint64_t> M =
        rows == 0 ? std::vector<uint64_t>(cols, 0) : random_kernel_vector(C, rows, cols, p, rng);
    if (rows == 0)
        for (auto& v : M) v = rng() % p;

    // dq kernel directions: subspace motions fixing M; dPhi columns per (k,d,c)
    auto m_at = [&](int x1, int x2, int x3) { return M[(x1 * a2 + x2) * a3 + x3]; };
    int acols = 0;
    for (int k = 0; k < 3; ++k) acols += b[k] * st.gamma[k];
    std::vector<uint64_t> Nmat(static_cast<size_t>(std::max(rows, 1)) * std::max(acols, 1), 0);
    auto eval_with = [&](int k, int d, int c1, int c2, int c3) {
        // M(u, u, u) with slot k's vector replaced by the complement basis vector d
        uint64_t acc = 0;
        for (int x1 = 0; x1 < a1; ++x1) {
            uint64_t e1 = k == 0 ? (x1 == g1 + d ? 1 : 0) : basis_entry(0, c1, x1);
            if (!e1) continue;
            for (int x2 = 0; x2 < a2; ++x2) {
                uint64_t e2 = k == 1 ? (x2 == g2 + d ? 1 : 0) : basis_entry(1, c2, x2);
                if (!e2) continue;
                uint64_t e12 = static_cast<uint64_t>((__uint128_t)e1 * e2 % p);
                for (int x3 = 0; x3 < a3; ++x3) {
                    uint64_t e3 = k == 2 ? (x3 == g3 + d ? 1 : 0) : basis_entry(2, c3, x3);
                    if (!e3) continue;
                    uint64_t prod = static_cast<uint64_t>((__uint128_t)e12 * e3 % p);
                    prod = static_cast<uint64_t>((__uint128_t)prod * m_at(x1, x2, x3) % p);
                    acc = (acc + prod) % p;
                }
            }
        }
        return acc;
    };
    int col0 = 0;
    for (int k = 0; k < 3; ++k) {
        for (int d = 0; d < b[k]; ++d) {
            for (int c = 0; c < st.gamma[k]; ++c) {
                int col = col0 + d * st.gamma[k] + c;
                for (int c1 = 0; c1 < g1; ++c1)
                    for (int c2 = 0; c2 < g2; ++c2)
                        for (int c3 = 0; c3 < g3; ++c3) {
                            std::array<int, 3> cs{c1, c2, c3};
                            if (cs[k] != c) continue;
                            int row = (c1 * g2 + c2) * g3 + c3;
                            Nmat[static_cast<size_t>(row) * acols + col] =
                                eval_with(k, d, c1, c2, c3);
                        }
            }
        }
        col0 += b[k] * st.gamma[k];
    }
    int nrank = rows == 0 || acols == 0 ? 0 : rank_mod_p(Nmat, rows, acols, p);
    out.probe_h = acols - nrank;
    out.probe_agrees = out.probe_h == out.h;
    return out;
}

mpz_class tensor_degree(const TensorSetting& st) {
    TensorComplex c = tensor_complex(st, LineWeight3{0, 0, 0});
    auto top = c.max_index();
    if (!top || *top <= 0)
        throw std::invalid_argument("tensor_degree: subspace variety is not a proper subvariety");
    const long long r = *top;  // codimension; equals -<<gamma,beta>> when h = 0
    mpz_class r_fact;
    mpz_fac_ui(r_fact.get_mpz_t(), static_cast<unsigned long>(r));
    mpq_class sum = 0;
    for (const auto& [i, list] : c.terms) {
        for (const auto& s : list) {
            mpz_class npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(s.degree),
                          static_cast<unsigned long>(r));
            mpq_class term(npow * s.rank(st), r_fact);
            term.canonicalize();
            long long sign = i + r;
            if (((sign % 2) + 2) % 2 == 1) sum -= term; else sum += term;
        }
    }
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0)
        throw std::logic_error("tensor_degree: Euler sum is not a non-negative integer");
    return sum.get_num();
}

VanishingReport kron_vanishing_check(const TensorSetting& st, int max_size,
                                     const std::array<int, 3>& w) {
    VanishingReport report;
    const auto b = st.beta();
    CodimFiber cf = codim_and_fiber(st);

    auto describe = [](const Partition& l1, const Partition& l2, const Partition& l3,
                       const std::array<int, 3>& ts) {
        std::ostringstream os;
        os << "t=(" << ts[0] << "," << ts[1] << "," << ts[2] << ") (" << to_text(l1) << ";"
           << to_text(l2) << ";" << to_text(l3) << ")";
        return os.str();
    };

    // part 1 with the stated weights, part 2 with their duals
    LineWeight3 lw{w[0], w[1], w[2]};
    LineWeight3 dw = tensor_dual_weight(st, lw);
    const std::array<int, 3> ws1{w[0], w[1], w[2]};
    const std::array<int, 3> ws2{dw.w1, dw.w2, dw.w3};

    for (int part = 1; part <= 2; ++part) {
        const auto& ws = part == 1 ? ws1 : ws2;
        for (int t1 = 0; t1 <= st.gamma[0]; ++t1)
            for (int t2 = 0; t2 <= st.gamma[1]; ++t2)
                for (int t3 = 0; t3 <= st.gamma[2]; ++t3) {
                    std::array<int, 3> ts{t1, t2, t3};
                    long long base = 0;
                    for (int k = 0; k < 3; ++k) base += 1LL * b[k] * ts[k];
                    for (int n = 0; n <= max_size; ++n) {
                        bool beyond = part == 1 ? n > base + cf.e : n < base - cf.h;
                        bool at_edge = part == 1 && n == base + cf.e;
                        if (!beyond && !at_edge) continue;
                        std::array<std::vector<Partition>, 3> cands;
                        bool any_empty = false;
                        for (int k = 0; k < 3; ++k) {
                            cands[k] = enumerate_P(PWindow{st.gamma[k], b[k], ts[k], ws[k]}, n);
                            if (cands[k].empty()) { any_empty = true; break; }
                        }
                        if (any_empty) continue;
                        for (const auto& l1 : cands[0]) {
                            Partition l1c = l1.conjugate();
                            for (const auto& l2 : cands[1])
                                for (const auto& l3 : cands[2]) {
                                    ++report.checked;
                                    mpz_class g = kronecker(KroneckerQuery(l1c, l2, l3));
                                    if (beyond && g != 0)
                                        report.counterexamples.push_back(
                                            "part " + std::to_string(part) + " " +
                                            describe(l1c, l2, l3, ts));
                                    if (at_edge && g != 0)
                                        report.sharpness_witnesses.push_back(
                                            describe(l1c, l2, l3, ts));
                                }
                        }
                    }
                }
    }
    return report;
}

/* ---- rendering ---- */

static ParsedSummand to_parsed(const TensorSummand& s) {
    ParsedSummand p;
    p.slot1 = stripped(s.slot[0].entries());
    p.slot2 = stripped(s.slot[1].entries());
    p.slot3 = stripped(s.slot[2].entries());
    p.mult = s.mult;
    return p;
}

std::string render_term(const std::vector<TensorSummand>& term) {
    std::vector<ParsedSummand> entries;
    for (const auto& s : term) entries.push_back(to_parsed(s));
    return canonical_term_text(std::move(entries));
}

std::string render_complex(const TensorComplex& c) {
    std::ostringstream out;
    for (const auto& [i, list] : c.terms) {
        if (list.empty()) continue;
        out << "F_" << i << " = " << render_term(list) << "\n";
    }
    return out.str();
}

std::string render_json(const TensorComplex& c) {
    nlohmann::json j;
    j["setting"] = {{"alpha", c.setting.alpha}, {"gamma", c.setting.gamma}};
    j["weight"] = {c.weight.w1, c.weight.w2, c.weight.w3};
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [i, list] : c.terms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : list) {
            arr.push_back({{"slots",
                            {s.slot[0].entries(), s.slot[1].entries(), s.slot[2].entries()}},
                           {"mult", static_cast<long>(s.mult.get_si())},
                           {"degree", s.degree}});
        }
        terms[std::to_string(i)] = std::move(arr);
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

}  // namespace qdet
