#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "qdet/partition.hpp"

using namespace qdet;

namespace {

// brute-force SSYT count, independent of the hook content product
long count_ssyt(const Partition& shape, int max_entry) {
    const auto& rows = shape.parts();
    if (rows.empty()) return 1;
    std::vector<std::vector<int>> t(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) t[i].assign(rows[i], 0);
    long count = 0;
    std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
        if (r == t.size()) {
            ++count;
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc >= t[r].size()) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);                      // weak rows
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);  // strict cols
        for (int v = lo; v <= max_entry; ++v) {
            t[r][c] = v;
            fill(nr, nc);
        }
    };
    fill(0, 0);
    return count;
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{4}.conjugate() == Partition{1, 1, 1, 1});
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition invariants") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}).length() == 2);  // trailing zeros never stored
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{3, 1}.part(5) == 0);
}

TEST_CASE("schur_dim basics") {
    CHECK(schur_dim(DominantWeight({1, 1, 0})) == 3);  // second exterior power of a 3-space
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 5; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n + k - 1, k);
            CHECK(schur_dim(Partition{k}, n) == binom);  // symmetric power
        }
    }
    CHECK(schur_dim(DominantWeight({2, 1, 0})) == 8);
    CHECK(schur_dim(DominantWeight(std::vector<int>{})) == 1);
}

TEST_CASE("schur_dim shift invariance and SSYT oracle") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : partitions_of(n)) {
            for (int rank = std::max(p.length(), 1); rank <= 5; ++rank) {
                mpz_class d = schur_dim(p, rank);
                CHECK(d == count_ssyt(p, rank));
                for (int shift : {-3, -1, 2}) {
                    std::vector<int> e(p.parts());
                    e.resize(rank, 0);
                    for (int& x : e) x += shift;
                    CHECK(schur_dim(DominantWeight(e)) == d);
                }
            }
        }
    }
}

TEST_CASE("in_P worked examples") {
    CHECK(in_P(Partition{3, 1}, PWindow{2, 1, 1, 0}));
    CHECK(in_P(Partition{4}, PWindow{2, 1, 1, 0}));
    CHECK(!in_P(Partition{1}, PWindow{2, 1, 1, 0}));
}

TEST_CASE("enumerate_P worked examples") {
    auto got = enumerate_P(PWindow{2, 1, 1, 0}, 4);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Partition{4});
    CHECK(got[1] == Partition{3, 1});

    CHECK(enumerate_P(PWindow{3, 2, 0, 1}, 0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_P(PWindow{2, 1, 1, 0}, 1).empty());
}

TEST_CASE("enumerate_P equals brute-force filter") {
    for (int s = 0; s <= 3; ++s) {
        for (int q = 0; q <= 3; ++q) {
            for (int t = 0; t <= s; ++t) {
                for (int w = -3; w <= 3; ++w) {
                    for (int n = 0; n <= 8; ++n) {
                        PWindow win{s, q, t, w};
                        std::set<Partition> expect;
                        for (const auto& p : partitions_bounded(n, s, std::max(n, 1)))
                            if (in_P(p, win)) expect.insert(p);
                        if (n == 0 && in_P(Partition{}, win)) expect.insert(Partition{});
                        auto got = enumerate_P(win, n);
                        std::set<Partition> got_set(got.begin(), got.end());
                        CHECK(got_set == expect);
                        CHECK(got.size() == got_set.size());
                        // descending lex order
                        for (size_t i = 1; i < got.size(); ++i) CHECK(got[i] < got[i - 1]);
                    }
                }
            }
        }
    }
}

TEST_CASE("uniqueness of Bott's t") {
    for (int s = 0; s <= 4; ++s) {
        for (int q = 0; q <= 3; ++q) {
            for (int w = -3; w <= 3; ++w) {
                for (int n = 0; n <= 8; ++n) {
                    for (const auto& p : partitions_bounded(n, s, q + s + std::abs(w) + n)) {
                        int hits = 0, hit_t = -1;
                        for (int t = 0; t <= s; ++t)
                            if (in_P(p, PWindow{s, q, t, w})) { ++hits; hit_t = t; }
                        CHECK(hits <= 1);
                        CHECK(bott_t(p, s, q, w) == (hits == 1 ? hit_t : -1));
                        if (hits == 1) {
                            // the admissible t is the largest t with mu_t >= q+t+w
                            int largest = 0;
                            for (int t = 1; t <= s; ++t)
                                if (p.part(t) >= q + t + w) largest = t;
                            CHECK(hit_t == largest);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("partition text round trip") {
    CHECK(to_text(Partition{2, 1, 1}) == "2,1^2");
    CHECK(to_text(Partition{}) == "0");
    CHECK(to_text(DominantWeight({2, 0, 0})) == "2");
    CHECK(to_text(DominantWeight({3, 3, 3})) == "3^3");
    CHECK(parse_partition("2,1^2") == Partition{2, 1, 1});
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("4") == Partition{4});
    CHECK(parse_int_sequence("1,0,-2") == std::vector<int>{1, 0, -2});
    CHECK_THROWS_AS(parse_partition("1,,2"), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(parse_partition(to_text(p)) == p);
}
