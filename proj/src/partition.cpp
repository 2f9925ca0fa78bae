#include "qdet/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdet {

static void check_weakly_decreasing(const std::vector<int>& v, const char* what) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) throw std::invalid_argument(std::string(what) + " must be weakly decreasing");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    check_weakly_decreasing(parts_, "partition");
    if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("partition parts must be positive");
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int k) const {
    if (k < 1) throw std::invalid_argument("part index is 1-based");
    return k <= length() ? parts_[k - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

DominantWeight::DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    check_weakly_decreasing(entries_, "dominant weight");
}

DominantWeight::DominantWeight(const Partition& p, int rank) {
    if (p.length() > rank) throw std::invalid_argument("partition does not fit in rank");
    entries_ = p.parts();
    entries_.resize(rank, 0);
}

int DominantWeight::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool in_P(const Partition& mu, const PWindow& win) {
    if (win.t < 0 || win.t > win.s) return false;
    if (mu.length() > win.s) return false;
    if (win.t >= 1 && mu.part(win.t) < win.q + win.t + win.w) return false;
    if (win.t < win.s && mu.part(win.t + 1) > win.t + win.w) return false;
    return true;
}

int bott_t(const Partition& mu, int s, int q, int w) {
    if (mu.length() > s) return -1;
    for (int t = s; t >= 0; --t)
        if (in_P(mu, PWindow{s, q, t, w})) return t;
    return -1;
}

/* Partitions of n with at most max_parts parts, parts between lo and hi,
 * first part at most `cap`.  Descending lex order. */
static void gen_bounded(int n, int max_parts, int lo, int cap, std::vector<int>& acc,
                        std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0 || cap < lo) return;
    for (int p = std::min(n, cap); p >= lo; --p) {
        if (p * max_parts < n) break;  // cannot reach n even using every slot
        acc.push_back(p);
        gen_bounded(n - p, max_parts - 1, lo, p, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_bounded(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> acc;
    gen_bounded(n, max_parts, 1, max_part, acc, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_bounded(n, n, n); }

std::vector<Partition> enumerate_P(const PWindow& win, int size) {
    std::vector<Partition> out;
    if (size < 0 || win.t < 0 || win.t > win.s) return out;
    const int lower = win.q + win.t + win.w;  // every padded part 1..t must reach it
    const int upper = win.t + win.w;          // parts t+1.. must not exceed it
    const bool has_upper = win.t < win.s;

    if (has_upper && upper < 0) return out;  // padded entries are already 0 > upper

    if (lower >= 1) {
        // Composition of a t-row top block (parts >= lower) with an (s-t)-row
        // bottom block (parts <= upper); independent since upper = lower - q.
        const int top_min = win.t * lower;
        for (int bottom = 0; bottom <= size - top_min; ++bottom) {
            if (win.t == win.s && bottom > 0) break;
            std::vector<Partition> bottoms =
                has_upper ? partitions_bounded(bottom, win.s - win.t, upper)
                          : std::vector<Partition>{Partition{}};
            if (bottoms.empty()) continue;
            const int top = size - bottom;
            for (const auto& tp : partitions_bounded(top - top_min, win.t, top)) {
                std::vector<int> head(win.t, lower);
                for (int i = 0; i < tp.length(); ++i) head[i] += tp.parts()[i];
                for (const auto& bp : bottoms) {
                    if (win.t > 0 && bp.length() > 0 && head.back() < bp.parts()[0]) continue;
                    std::vector<int> parts = head;
                    parts.insert(parts.end(), bp.parts().begin(), bp.parts().end());
                    out.emplace_back(std::move(parts));
                }
            }
        }
    } else {
        // Degenerate lower bound: it also admits fewer than t stored parts, so
        // scan every partition of `size` with at most s parts.
        for (const auto& p : partitions_bounded(size, win.s, std::max(size, 1)))
            if (in_P(p, win)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

mpz_class schur_dim(const DominantWeight& eta) {
    const auto& e = eta.entries();
    const int n = eta.rank();
    if (n == 0) return 1;
    // shift to a partition; the dimension only depends on differences
    int shift = e.back() < 0 ? -e.back() : 0;
    std::vector<int> lam(e);
    for (int& x : lam) x += shift;
    // hook content formula over the (possibly empty) shifted diagram
    mpz_class num = 1, den = 1;
    std::vector<int> conj;  // column lengths
    if (lam[0] > 0) {
        conj.assign(lam[0], 0);
        for (int r : lam)
            for (int j = 0; j < r; ++j) conj[j]++;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < lam[i]; ++j) {
            num *= n + j - i;
            den *= (lam[i] - j) + (conj[j] - i) - 1;  // hook length
        }
    }
    mpz_class d = num / den;
    if (d * den != num) throw std::logic_error("schur_dim: hook content product not integral");
    return d;
}

mpz_class schur_dim(const Partition& p, int rank) { return schur_dim(DominantWeight(p, rank)); }

std::string to_text(const Partition& p) {
    std::vector<int> e = p.parts();
    return to_text(DominantWeight(std::move(e)));
}

std::string to_text(const DominantWeight& w) {
    std::vector<int> e = w.entries();
    while (!e.empty() && e.back() == 0) e.pop_back();
    if (e.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < e.size();) {
        size_t j = i;
        while (j < e.size() && e[j] == e[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(e[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<int> parse_int_sequence(const std::string& text) {
    std::vector<int> entries;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("bad integer in partition text: " + text);
        return std::stoi(text.substr(start, i - start));
    };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty partition text");
    while (true) {
        int v = read_int();
        int rep = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            rep = read_int();
            if (rep < 1) throw std::invalid_argument("bad exponent in partition text: " + text);
        }
        entries.insert(entries.end(), rep, v);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        break;
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing junk in partition text: " + text);
    if (entries.size() == 1 && entries[0] == 0) entries.clear();
    return entries;
}

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_sequence(text));
}

}  // namespace qdet
