#include "qdet/quiver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qdet {

Quiver Quiver::kronecker(int m) {
    if (m < 1) throw std::invalid_argument("K_m needs m >= 1");
    Quiver q;
    q.vertices = 2;
    q.arrows.assign(m, {0, 1});
    return q;
}

Quiver Quiver::parse(const std::string& text) {
    if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'k')) {
        int m = std::stoi(text.substr(1));
        return kronecker(m);
    }
    Quiver q;
    size_t i = 0;
    while (i < text.size()) {
        size_t dash = text.find('-', i);
        if (dash == std::string::npos) throw std::invalid_argument("bad arrow list: " + text);
        size_t comma = text.find(',', dash);
        if (comma == std::string::npos) comma = text.size();
        int ta = std::stoi(text.substr(i, dash - i));
        int ha = std::stoi(text.substr(dash + 1, comma - dash - 1));
        if (ta < 0 || ha < 0) throw std::invalid_argument("vertex ids must be >= 0");
        q.arrows.emplace_back(ta, ha);
        q.vertices = std::max({q.vertices, ta + 1, ha + 1});
        i = comma == text.size() ? comma : comma + 1;
    }
    if (q.arrows.empty()) throw std::invalid_argument("empty arrow list");
    return q;
}

static void check_dims(const Quiver& q, const DimVector& d, const char* name) {
    if (static_cast<int>(d.size()) != q.vertices)
        throw std::invalid_argument(std::string(name) + ": dimension vector size mismatch");
    for (int v : d)
        if (v < 0) throw std::invalid_argument(std::string(name) + ": negative dimension");
}

EulerForm euler_form(const Quiver& q, const DimVector& gamma, const DimVector& beta) {
    check_dims(q, gamma, "euler_form gamma");
    check_dims(q, beta, "euler_form beta");
    EulerForm e;
    for (int v = 0; v < q.vertices; ++v) e.part0 += 1LL * gamma[v] * beta[v];
    for (auto [ta, ha] : q.arrows) e.part1 += 1LL * gamma[ta] * beta[ha];
    e.value = e.part0 - e.part1;
    return e;
}

int rank_mod_p(std::vector<uint64_t> mat, int rows, int cols, uint64_t p) {
    auto at = [&](int r, int c) -> uint64_t& { return mat[static_cast<size_t>(r) * cols + c]; };
    auto inv_mod = [p](uint64_t a) {
        // p is prime, so a^(p-2) mod p
        uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<uint64_t>((__uint128_t)r * b % p);
            b = static_cast<uint64_t>((__uint128_t)b * b % p);
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c) % p != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int cc = 0; cc < cols; ++cc) std::swap(at(pivot, cc), at(rank, cc));
        uint64_t inv = inv_mod(at(rank, c) % p);
        for (int r = rank + 1; r < rows; ++r) {
            uint64_t f = at(r, c) % p;
            if (f == 0) continue;
            uint64_t scale = static_cast<uint64_t>((__uint128_t)f * inv % p);
            for (int cc = c; cc < cols; ++cc) {
                uint64_t sub = static_cast<uint64_t>((__uint128_t)scale * (at(rank, cc) % p) % p);
                at(r, cc) = (at(r, cc) % p + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

GenericHomExt generic_hom_ext(const Quiver& q, const DimVector& gamma, const DimVector& beta,
                              const SampleOptions& opts) {
    check_dims(q, gamma, "generic_hom_ext gamma");
    check_dims(q, beta, "generic_hom_ext beta");
    if (opts.samples < 1) throw std::invalid_argument("generic_hom_ext: samples >= 1");

    const uint64_t p = opts.prime;
    long long dom = 0;
    for (int v = 0; v < q.vertices; ++v) dom += 1LL * gamma[v] * beta[v];
    long long codom = 0;
    for (auto [ta, ha] : q.arrows) codom += 1LL * gamma[ta] * beta[ha];

    std::mt19937_64 rng(opts.seed);
    auto rnd = [&] { return rng() % p; };

    long long best = dom;  // hom is at most the full Hom space
    for (int s = 0; s < opts.samples; ++s) {
        // random gamma- and beta-dimensional representations
        std::vector<std::vector<uint64_t>> M, N;
        for (auto [ta, ha] : q.arrows) {
            std::vector<uint64_t> m(static_cast<size_t>(gamma[ha]) * gamma[ta]);
            for (auto& x : m) x = rnd();
            M.push_back(std::move(m));
            std::vector<uint64_t> n(static_cast<size_t>(beta[ha]) * beta[ta]);
            for (auto& x : n) x = rnd();
            N.push_back(std::move(n));
        }
        if (dom == 0) { best = 0; break; }

        // column offsets of phi_v inside the domain
        std::vector<long long> voff(q.vertices + 1, 0);
        for (int v = 0; v < q.vertices; ++v) voff[v + 1] = voff[v] + 1LL * gamma[v] * beta[v];

        std::vector<uint64_t> mat(static_cast<size_t>(std::max(codom, 1LL)) * dom, 0);
        long long row0 = 0;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [ta, ha] = q.arrows[a];
            // block rows: entries (x,y) of phi_ha M_a - N_a phi_ta, x < beta[ha], y < gamma[ta]
            for (int x = 0; x < beta[ha]; ++x) {
                for (int y = 0; y < gamma[ta]; ++y) {
                    long long row = row0 + 1LL * x * gamma[ta] + y;
                    // + (phi_ha)_{x,z} (M_a)_{z,y}
                    for (int z = 0; z < gamma[ha]; ++z) {
                        long long col = voff[ha] + 1LL * x * gamma[ha] + z;
                        uint64_t& cell = mat[static_cast<size_t>(row) * dom + col];
                        cell = (cell + M[a][static_cast<size_t>(z) * gamma[ta] + y]) % p;
                    }
                    // - (N_a)_{x,z} (phi_ta)_{z,y}
                    for (int z = 0; z < beta[ta]; ++z) {
                        long long col = voff[ta] + 1LL * z * gamma[ta] + y;
                        uint64_t& cell = mat[static_cast<size_t>(row) * dom + col];
                        uint64_t sub = N[a][static_cast<size_t>(x) * beta[ta] + z];
                        cell = (cell + p - sub % p) % p;
                    }
                }
            }
            row0 += 1LL * beta[ha] * gamma[ta];
        }
        long long kernel =
            dom - rank_mod_p(std::move(mat), static_cast<int>(codom), static_cast<int>(dom), p);
        best = std::min(best, kernel);
    }

    GenericHomExt out;
    out.hom = best;
    out.euler = euler_form(q, gamma, beta).value;
    out.ext = out.hom - out.euler;
    out.samples_used = opts.samples;
    out.field_prime = p;
    return out;
}

bool homext_condition(const Quiver& q, const DimVector& gamma, const DimVector& alpha,
                      const SampleOptions& opts) {
    DimVector beta(alpha);
    for (size_t i = 0; i < beta.size(); ++i) {
        beta[i] -= gamma[i];
        if (beta[i] < 0) throw std::invalid_argument("gamma must be componentwise <= alpha");
    }
    auto he = generic_hom_ext(q, gamma, beta, opts);
    return he.hom == 0 && he.euler < 0;
}

BirationalResult birational_check(const Quiver& q, const DimVector& gamma, const DimVector& alpha,
                                  const SampleOptions& opts) {
    check_dims(q, gamma, "birational_check gamma");
    check_dims(q, alpha, "birational_check alpha");
    DimVector beta(alpha);
    for (size_t i = 0; i < beta.size(); ++i) {
        beta[i] -= gamma[i];
        if (beta[i] < 0) throw std::invalid_argument("gamma must be componentwise <= alpha");
    }
    if (generic_hom_ext(q, gamma, beta, opts).hom != 0)
        return {false, BirationalReason::hom_nonzero};

    const long long gb = euler_form(q, gamma, beta).value;
    // walk all delta strictly below gamma
    std::vector<int> delta(gamma.size(), 0);
    auto advance = [&]() {
        for (size_t i = 0; i < delta.size(); ++i) {
            if (delta[i] < gamma[i]) { ++delta[i]; return true; }
            delta[i] = 0;
        }
        return false;
    };
    do {
        if (delta == gamma) continue;
        bool inside = true;
        DimVector two_g_minus_d(gamma.size()), b_minus_g_plus_d(gamma.size());
        for (size_t i = 0; i < gamma.size(); ++i) {
            two_g_minus_d[i] = 2 * gamma[i] - delta[i];
            b_minus_g_plus_d[i] = beta[i] - gamma[i] + delta[i];
            if (two_g_minus_d[i] > alpha[i]) inside = false;
        }
        if (!inside) continue;
        long long lhs = euler_form(q, two_g_minus_d, b_minus_g_plus_d).value;
        long long rhs = euler_form(q, delta, b_minus_g_plus_d).value;
        if (!(lhs < gb || gb < rhs)) return {false, BirationalReason::inconclusive};
    } while (advance());
    return {true, BirationalReason::certified};
}

}  // namespace qdet
