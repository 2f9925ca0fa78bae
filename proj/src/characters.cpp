#include "qdet/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qdet {

KroneckerQuery::KroneckerQuery(Partition l, Partition m, Partition n)
    : lambda(std::move(l)), mu(std::move(m)), nu(std::move(n)) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("kronecker: partitions must share one size");
}

mpz_class centralizer_order(const CycleType& rho) {
    mpz_class z = 1;
    const auto& parts = rho.rho.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class mult_fact;
        mpz_fac_ui(mult_fact.get_mpz_t(), static_cast<unsigned long>(j - i));
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                      static_cast<unsigned long>(j - i));
        z *= mult_fact * power;
        i = j;
    }
    return z;
}

namespace {

struct VecPairHash {
    size_t operator()(const std::pair<std::vector<int>, std::vector<int>>& k) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](int v) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        mix(static_cast<int>(k.first.size()));
        for (int v : k.first) mix(v);
        mix(-1);
        for (int v : k.second) mix(v);
        return h;
    }
};

std::unordered_map<std::pair<std::vector<int>, std::vector<int>>, mpz_class, VecPairHash> chi_memo;
std::shared_mutex chi_mutex;

// Murnaghan-Nakayama over beta numbers.  `cycles` is sorted weakly decreasing;
// idx points at the next cycle to strip off.
mpz_class mn(const std::vector<int>& lambda, const std::vector<int>& cycles, size_t idx) {
    if (lambda.empty()) return 1;

    std::pair<std::vector<int>, std::vector<int>> key(
        lambda, std::vector<int>(cycles.begin() + idx, cycles.end()));
    {
        std::shared_lock lock(chi_mutex);
        auto it = chi_memo.find(key);
        if (it != chi_memo.end()) return it->second;
    }

    const int k = cycles[idx];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);  // strictly decreasing first-column hook lengths
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

    mpz_class total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i] - k;
        if (b < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == b) { clash = true; break; }
            if (beta[j] > b && beta[j] < beta[i]) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> sub(len);
        for (int j = 0; j < len; ++j) sub[j] = nb[j] - (len - 1 - j);
        while (!sub.empty() && sub.back() == 0) sub.pop_back();
        mpz_class rec = mn(sub, cycles, idx + 1);
        if (jumped % 2)
            total -= rec;
        else
            total += rec;
    }

    std::unique_lock lock(chi_mutex);
    return chi_memo.emplace(std::move(key), std::move(total)).first->second;
}

}  // namespace

mpz_class character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.n)
        throw std::invalid_argument("character: |lambda| must equal n of the cycle type");
    return mn(lambda.parts(), rho.rho.parts(), 0);
}

mpz_class kronecker_class_sum(const KroneckerQuery& q) {
    const int n = q.lambda.size();
    mpq_class sum = 0;
    for (const auto& rho : partitions_of(n)) {
        CycleType c(rho);
        mpz_class prod = character(q.lambda, c) * character(q.mu, c) * character(q.nu, c);
        if (prod == 0) continue;
        mpq_class term(prod);
        term /= mpq_class(centralizer_order(c));
        sum += term;
    }
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0)
        throw std::logic_error("kronecker: class sum is not a non-negative integer");
    return sum.get_num();
}

namespace {

// g != 0 forces a_1 >= b_1 + c_1 - n for every arrangement of the three slots
// (Littlewood-Murnaghan), also in the two-conjugated variants.
bool lm_rules_out(const Partition& a, const Partition& b, const Partition& c) {
    const int n = a.size();
    auto bad = [n](const Partition& x, const Partition& y, const Partition& z) {
        return x.part(1) < y.part(1) + z.part(1) - n;
    };
    if (bad(a, b, c) || bad(b, a, c) || bad(c, a, b)) return true;
    Partition ac = a.conjugate(), bc = b.conjugate(), cc = c.conjugate();
    if (bad(a, bc, cc) || bad(bc, a, cc) || bad(cc, a, bc)) return true;
    if (bad(b, ac, cc) || bad(ac, b, cc) || bad(cc, b, ac)) return true;
    if (bad(c, ac, bc) || bad(ac, c, bc) || bad(bc, c, ac)) return true;
    return false;
}

std::unordered_map<std::pair<std::vector<int>, std::vector<int>>, mpz_class, VecPairHash> kron_memo;
std::shared_mutex kron_mutex;

}  // namespace

mpz_class kronecker(const KroneckerQuery& q) {
    const int n = q.lambda.size();
    if (n == 0) return 1;

    // single row keeps only equal pairs, single column conjugated pairs
    auto special = [n](const Partition& x, const Partition& y,
                       const Partition& z) -> std::pair<bool, int> {
        if (x.length() == 1) return {true, y == z ? 1 : 0};
        if (x.part(1) == 1 && x.length() == n) return {true, y == z.conjugate() ? 1 : 0};
        return {false, 0};
    };
    for (auto [found, val] : {special(q.lambda, q.mu, q.nu), special(q.mu, q.lambda, q.nu),
                              special(q.nu, q.lambda, q.mu)})
        if (found) return val;

    if (lm_rules_out(q.lambda, q.mu, q.nu)) return 0;

    std::vector<std::vector<int>> sorted{q.lambda.parts(), q.mu.parts(), q.nu.parts()};
    std::sort(sorted.begin(), sorted.end());
    std::pair<std::vector<int>, std::vector<int>> key(sorted[0], sorted[1]);
    for (int v : sorted[2]) key.second.push_back(-v - 1);  // delimit third slot
    {
        std::shared_lock lock(kron_mutex);
        auto it = kron_memo.find(key);
        if (it != kron_memo.end()) return it->second;
    }
    mpz_class g = kronecker_class_sum(q);
    std::unique_lock lock(kron_mutex);
    return kron_memo.emplace(std::move(key), std::move(g)).first->second;
}

/* ---- Kostka numbers and the character-free oracle ---- */

namespace {

// all partitions obtained from `base` by adding a horizontal strip of `count`
// boxes, staying inside `limit`
void add_strip(const std::vector<int>& base, const std::vector<int>& limit, int count,
               std::vector<int>& acc, size_t row, int prev_row_old, std::vector<std::vector<int>>& out) {
    if (row == acc.size()) {
        if (count == 0) out.push_back(acc);
        return;
    }
    int old = row < base.size() ? base[row] : 0;
    int hi = std::min({prev_row_old, static_cast<int>(limit[row]), old + count});
    for (int v = old; v <= hi; ++v) {
        acc[row] = v;
        add_strip(base, limit, count - (v - old), acc, row + 1, old, out);
    }
    acc[row] = old;
}

}  // namespace

mpz_class kostka(const Partition& shape, const std::vector<int>& content) {
    const std::vector<int>& target = shape.parts();
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("kostka: negative content");
        total += c;
    }
    if (total != shape.size()) return 0;

    std::map<std::vector<int>, mpz_class> states;
    states[{}] = 1;
    for (int c : content) {
        if (c == 0) continue;
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [p, cnt] : states) {
            std::vector<int> acc(target.size(), 0);
            for (size_t i = 0; i < p.size(); ++i) acc[i] = p[i];
            std::vector<std::vector<int>> results;
            std::vector<int> base(p);
            add_strip(base, target, c, acc, 0, target.empty() ? 0 : target[0], results);
            for (auto& r : results) {
                while (!r.empty() && r.back() == 0) r.pop_back();
                next[r] += cnt;
            }
        }
        states = std::move(next);
    }
    auto it = states.find(target);
    return it == states.end() ? mpz_class(0) : it->second;
}

namespace {

// contingency tables with the given row and column margins
void tables(const std::vector<int>& rows, std::vector<int>& cols_left, size_t r,
            std::vector<int>& flat, const std::function<void(const std::vector<int>&)>& sink) {
    const size_t ncols = cols_left.size();
    if (r == rows.size()) {
        sink(flat);
        return;
    }
    // distribute rows[r] over the columns
    std::vector<int> row(ncols, 0);
    std::function<void(size_t, int)> rec = [&](size_t c, int left) {
        if (c == ncols) {
            if (left == 0) {
                for (size_t j = 0; j < ncols; ++j) flat[r * ncols + j] = row[j];
                tables(rows, cols_left, r + 1, flat, sink);
            }
            return;
        }
        int hi = std::min(left, cols_left[c]);
        for (int v = 0; v <= hi; ++v) {
            row[c] = v;
            cols_left[c] -= v;
            rec(c + 1, left - v);
            cols_left[c] += v;
        }
        row[c] = 0;
    };
    rec(0, rows[r]);
}

}  // namespace

mpz_class kronecker_oracle(const KroneckerQuery& q) {
    const int n = q.lambda.size();
    if (n == 0) return 1;
    const int a = q.mu.length() + 1;
    const int b = q.nu.length() + 1;
    if (q.lambda.length() > a * b)
        throw std::invalid_argument("kronecker_oracle: alphabet too small to see lambda");

    std::vector<Partition> us = partitions_bounded(n, a, n);
    std::vector<Partition> vs = partitions_bounded(n, b, n);
    // descending lex so dominance-larger pairs are handled first
    auto desc = [](const Partition& x, const Partition& y) { return y < x; };
    std::sort(us.begin(), us.end(), desc);
    std::sort(vs.begin(), vs.end(), desc);

    // monomial-pair coefficients of S^lambda(x (x) y)
    std::map<std::pair<Partition, Partition>, mpz_class> coef;
    for (const auto& u : us) {
        for (const auto& v : vs) {
            std::vector<int> rows(u.parts());
            rows.resize(a, 0);
            std::vector<int> cols(v.parts());
            cols.resize(b, 0);
            mpz_class c = 0;
            std::vector<int> flat(static_cast<size_t>(a) * b, 0);
            tables(rows, cols, 0, flat, [&](const std::vector<int>& m) {
                c += kostka(q.lambda, m);
            });
            if (c != 0) coef[{u, v}] = c;
        }
    }

    // triangular reduction: subtract s_p(x) s_q(y) expansions from the top
    std::map<std::pair<Partition, Partition>, mpz_class> g;
    for (const auto& u : us) {
        for (const auto& v : vs) {
            mpz_class c = 0;
            if (auto it = coef.find({u, v}); it != coef.end()) c = it->second;
            for (const auto& [pq, gval] : g)
                c -= gval * kostka(pq.first, u.parts()) * kostka(pq.second, v.parts());
            if (c != 0) g[{u, v}] = c;
        }
    }

    auto it = g.find({q.mu, q.nu});
    mpz_class result = it == g.end() ? mpz_class(0) : it->second;
    if (result < 0) throw std::logic_error("kronecker_oracle: negative multiplicity");
    return result;
}

}  // namespace qdet
