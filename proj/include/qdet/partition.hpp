#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdet {

/* Weakly decreasing sequence of positive integers; trailing zeros are never
 * stored, so the empty partition is parts() == {}. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // |lambda|, the sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // k is 1-based; parts beyond the stored length read as 0
    int part(int k) const;

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/* Weakly decreasing integer sequence of a fixed GL-rank; zeros (and negative
 * entries) are stored explicitly because the rank matters for dimensions. */
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> entries);
    DominantWeight(const Partition& p, int rank);   // pad with zeros

    const std::vector<int>& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    int sum() const;

    auto operator<=>(const DominantWeight&) const = default;

private:
    std::vector<int> entries_;
};

/* Bott admissibility window P(s,q,t,w): partitions with at most s parts,
 * mu_t >= q+t+w and mu_{t+1} <= t+w (the upper condition is vacuous at t=s,
 * where the weight has no (t+1)-th entry; missing parts read as 0). */
struct PWindow {
    int s = 0;
    int q = 0;
    int t = 0;
    int w = 0;
};

Partition conjugate(const Partition& p);

bool in_P(const Partition& mu, const PWindow& win);

// The unique t in 0..s with in_P(mu, (s,q,t,w)), or -1 when no t works.
int bott_t(const Partition& mu, int s, int q, int w);

// All partitions of `size` in the window, lexicographically descending.
std::vector<Partition> enumerate_P(const PWindow& win, int size);

// Dimension of the irreducible GL_rank representation with highest weight eta.
mpz_class schur_dim(const DominantWeight& eta);
mpz_class schur_dim(const Partition& p, int rank);

/* Plain enumeration helpers. */
// partitions of n with at most max_parts parts and every part <= max_part
std::vector<Partition> partitions_bounded(int n, int max_parts, int max_part);
// all partitions of n
std::vector<Partition> partitions_of(int n);

/* Text form, exponent shorthand: "2,1^2" is (2,1,1), "0" is empty. */
std::string to_text(const Partition& p);
std::string to_text(const DominantWeight& w);   // trailing zeros dropped
Partition parse_partition(const std::string& text);
// parses entries that may be negative or non-monotone hidden by ^-groups
std::vector<int> parse_int_sequence(const std::string& text);

}  // namespace qdet
