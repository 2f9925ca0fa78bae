#include "qdet/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdet {

GrassmannianShape::GrassmannianShape(int r_, int s_) : r(r_), s(s_) {
    if (s < 0 || s > r) throw std::invalid_argument("Grassmannian needs 0 <= s <= r");
}

BottOutcome bott(const GrassmannianShape& shape, const std::vector<int>& mu_on_Q,
                 const std::vector<int>& nu_on_S) {
    if (static_cast<int>(mu_on_Q.size()) != shape.q() ||
        static_cast<int>(nu_on_S.size()) != shape.s)
        throw std::invalid_argument("bott: weight lengths must be (q, s)");
    for (const auto* seq : {&mu_on_Q, &nu_on_S})
        for (size_t i = 1; i < seq->size(); ++i)
            if ((*seq)[i - 1] < (*seq)[i])
                throw std::invalid_argument("bott: weights must be weakly decreasing");

    const int r = shape.r;
    std::vector<int> shifted(r);
    for (int i = 0; i < r; ++i) {
        int v = i < shape.q() ? mu_on_Q[i] : nu_on_S[i - shape.q()];
        shifted[i] = v + (r - 1 - i);  // lambda + rho
    }

    int inversions = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (shifted[i] == shifted[j]) return BottOutcome::make_zero();
            if (shifted[i] < shifted[j]) ++inversions;
        }

    std::sort(shifted.begin(), shifted.end(), std::greater<int>());
    for (int i = 0; i < r; ++i) shifted[i] -= r - 1 - i;
    return BottOutcome::nonzero(inversions, DominantWeight(std::move(shifted)));
}

DominantWeight bott_circ_weight(const Partition& mu, int t, int w, int q, int s) {
    std::vector<int> e;
    e.reserve(q + s);
    for (int i = 1; i <= t; ++i) e.push_back(mu.part(i) - q);
    e.insert(e.end(), q, t + w);
    for (int i = t + 1; i <= s; ++i) e.push_back(mu.part(i));
    return DominantWeight(std::move(e));
}

BottOutcome cohomology_S_twist(const GrassmannianShape& shape, const Partition& mu, int w) {
    if (mu.length() > shape.s)
        throw std::invalid_argument("cohomology_S_twist: mu needs at most s parts");
    int t = bott_t(mu, shape.s, shape.q(), w);
    if (t < 0) return BottOutcome::make_zero();
    return BottOutcome::nonzero(shape.q() * t, bott_circ_weight(mu, t, w, shape.q(), shape.s));
}

BottOutcome cohomology_Qdual_twist(const GrassmannianShape& shape, const Partition& nu, int w) {
    if (nu.length() > shape.q())
        throw std::invalid_argument("cohomology_Qdual_twist: nu needs at most q parts");
    int t = bott_t(nu, shape.q(), shape.s, w);
    if (t < 0) return BottOutcome::make_zero();
    return BottOutcome::nonzero(shape.s * t, bott_circ_weight(nu, t, w, shape.s, shape.q()), true);
}

}  // namespace qdet
