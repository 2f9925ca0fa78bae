#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "qdet/characters.hpp"

using namespace qdet;

TEST_CASE("centralizer orders in S_3") {
    CHECK(centralizer_order(CycleType(Partition{1, 1, 1})) == 6);
    CHECK(centralizer_order(CycleType(Partition{3})) == 3);
    CHECK(centralizer_order(CycleType(Partition{2, 1})) == 2);
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 1; n <= 8; ++n) {
        mpz_class nfact, sum = 0;
        mpz_fac_ui(nfact.get_mpz_t(), n);
        for (const auto& rho : partitions_of(n)) sum += nfact / centralizer_order(CycleType(rho));
        CHECK(sum == nfact);
    }
}

TEST_CASE("character basics") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& rho : partitions_of(n)) {
            CycleType c(rho);
            CHECK(character(Partition{n}, c) == 1);  // trivial representation
            int sign = (n - rho.length()) % 2 ? -1 : 1;
            std::vector<int> col(n, 1);
            CHECK(character(Partition(col), c) == sign);  // sign representation
        }
    }
    CHECK(character(Partition{2, 1}, CycleType(Partition{1, 1, 1})) == 2);
    CHECK_THROWS_AS(character(Partition{2}, CycleType(Partition{3})), std::invalid_argument);
}

TEST_CASE("column orthogonality of characters") {
    // sum over lambda of chi(rho) chi(sigma) = z_rho [rho == sigma]
    for (int n = 1; n <= 6; ++n) {
        auto classes = partitions_of(n);
        for (const auto& rho : classes) {
            for (const auto& sig : classes) {
                mpz_class sum = 0;
                for (const auto& lam : partitions_of(n))
                    sum += character(lam, CycleType(rho)) * character(lam, CycleType(sig));
                CHECK(sum == (rho == sig ? centralizer_order(CycleType(rho)) : mpz_class(0)));
            }
        }
    }
}

TEST_CASE("kronecker worked examples") {
    for (int n = 1; n <= 6; ++n)
        CHECK(kronecker(KroneckerQuery(Partition{n}, Partition{n}, Partition{n})) == 1);
    CHECK(kronecker(KroneckerQuery(Partition{3, 1}, Partition{3, 1}, Partition{4})) == 1);
    CHECK(kronecker(KroneckerQuery(Partition{2, 2, 2, 2}, Partition{4, 4}, Partition{4, 4})) == 1);
    CHECK(kronecker(KroneckerQuery(Partition{}, Partition{}, Partition{})) == 1);
    CHECK_THROWS_AS(KroneckerQuery(Partition{2}, Partition{1}, Partition{1}),
                    std::invalid_argument);
}

TEST_CASE("oracle worked examples") {
    CHECK(kronecker_oracle(KroneckerQuery(Partition{2, 1}, Partition{2, 1}, Partition{2, 1})) == 1);
    CHECK(kronecker_oracle(KroneckerQuery(Partition{2}, Partition{2}, Partition{1, 1})) == 0);
    CHECK(kronecker_oracle(KroneckerQuery(Partition{1, 1}, Partition{1, 1}, Partition{1, 1})) == 0);
    // lambda needs at most (parts(mu)+1)(parts(nu)+1) parts
    CHECK_THROWS_AS(
        kronecker_oracle(KroneckerQuery(Partition{1, 1, 1, 1, 1}, Partition{5}, Partition{5})),
        std::invalid_argument);
}

TEST_CASE("kronecker agrees with the oracle up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const auto& l : ps)
            for (const auto& m : ps)
                for (const auto& v : ps) {
                    // the oracle wants lambda inside an (a x b) alphabet; put the
                    // shortest partition in that slot (g is S_3-symmetric)
                    std::array<const Partition*, 3> t{&l, &m, &v};
                    std::sort(t.begin(), t.end(), [](const Partition* x, const Partition* y) {
                        return x->length() < y->length();
                    });
                    KroneckerQuery q(*t[0], *t[1], *t[2]);
                    CHECK(kronecker(KroneckerQuery(l, m, v)) == kronecker_oracle(q));
                }
    }
}

TEST_CASE("S_3 symmetry and Littlewood-Murnaghan up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (const auto& l : ps) {
            for (const auto& m : ps) {
                for (const auto& v : ps) {
                    mpz_class g = kronecker_class_sum(KroneckerQuery(l, m, v));
                    CHECK(g == kronecker(KroneckerQuery(l, v, m)));
                    CHECK(g == kronecker(KroneckerQuery(m, l, v)));
                    CHECK(g == kronecker(KroneckerQuery(m, v, l)));
                    CHECK(g == kronecker(KroneckerQuery(v, l, m)));
                    CHECK(g == kronecker(KroneckerQuery(v, m, l)));
                    if (g != 0) CHECK(l.part(1) >= m.part(1) + v.part(1) - n);
                }
            }
        }
    }
}

TEST_CASE("row and column extraction rules up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        std::vector<int> col(n, 1);
        Partition onecol(col);
        for (const auto& l : ps) {
            for (const auto& m : ps) {
                CHECK(kronecker_class_sum(KroneckerQuery(l, m, Partition{n})) == (l == m ? 1 : 0));
                CHECK(kronecker_class_sum(KroneckerQuery(l, m, onecol)) ==
                      (l == m.conjugate() ? 1 : 0));
            }
        }
    }
}

TEST_CASE("tensor square dimension count up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        CycleType id(Partition(std::vector<int>(n, 1)));
        for (const auto& m : ps) {
            for (const auto& v : ps) {
                mpz_class lhs = 0;
                for (const auto& l : ps)
                    lhs += kronecker(KroneckerQuery(l, m, v)) * character(l, id);
                CHECK(lhs == character(m, id) * character(v, id));
            }
        }
    }
}
