#include "qdet/klw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qdet/bott.hpp"
#include "qdet/characters.hpp"

namespace qdet {

KroneckerSetting::KroneckerSetting(int m_, std::pair<int, int> alpha, std::pair<int, int> gamma)
    : m(m_), alpha1(alpha.first), alpha2(alpha.second), gamma1(gamma.first), gamma2(gamma.second) {
    if (m < 1) throw std::invalid_argument("K_m needs m >= 1");
    if (gamma1 < 0 || gamma2 < 0 || gamma1 > alpha1 || gamma2 > alpha2)
        throw std::invalid_argument("need 0 <= gamma <= alpha componentwise");
}

long long KroneckerSetting::euler() const {
    return 1LL * gamma1 * beta1() + 1LL * gamma2 * beta2() - 1LL * m * gamma1 * beta2();
}

long long KroneckerSetting::koszul_rank() const { return 1LL * m * gamma1 * beta2(); }

mpz_class Summand::rank(int m) const {
    return mult * schur_dim(mu_circ) * schur_dim(nu_circ) * schur_dim(lambda_conj, m);
}

std::optional<int> KLWComplex::min_index() const {
    for (const auto& [i, list] : terms)
        if (!list.empty()) return i;
    return std::nullopt;
}

std::optional<int> KLWComplex::max_index() const {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        if (!it->second.empty()) return it->first;
    return std::nullopt;
}

mpz_class KLWComplex::term_rank(int i) const {
    mpz_class r = 0;
    auto it = terms.find(i);
    if (it == terms.end()) return r;
    for (const auto& s : it->second) r += s.rank(setting.m);
    return r;
}

bool KLWComplex::has_negative_terms() const {
    auto lo = min_index();
    return lo && *lo < 0;
}

static std::vector<int> stripped(const std::vector<int>& v) {
    std::vector<int> out(v);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// canonical summand order: degree, then the three slots (trailing zeros ignored)
static bool summand_less(const Summand& a, const Summand& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto sa = stripped(a.mu_circ.entries()), sb = stripped(b.mu_circ.entries());
    if (sa != sb) return sa < sb;
    sa = stripped(a.nu_circ.entries());
    sb = stripped(b.nu_circ.entries());
    if (sa != sb) return sa < sb;
    return a.lambda_conj.parts() < b.lambda_conj.parts();
}

KLWComplex complex(const KroneckerSetting& st, const LineWeight2& w) {
    KLWComplex out{st, w, {}};
    const int N = static_cast<int>(st.koszul_rank());
    for (int t1 = 0; t1 <= st.gamma1; ++t1) {
        for (int t2 = 0; t2 <= st.beta2(); ++t2) {
            const int base = st.beta1() * t1 + st.gamma2 * t2;
            for (int n = 0; n <= N; ++n) {
                auto mus = enumerate_P(PWindow{st.gamma1, st.beta1(), t1, w.w1}, n);
                if (mus.empty()) continue;
                auto nus = enumerate_P(PWindow{st.beta2(), st.gamma2, t2, w.w2}, n);
                if (nus.empty()) continue;
                auto lams = partitions_bounded(n, n, st.m);  // lambda_1 <= m
                for (const auto& mu : mus) {
                    for (const auto& nu : nus) {
                        for (const auto& lam : lams) {
                            mpz_class g = kronecker(KroneckerQuery(lam, mu, nu));
                            if (g == 0) continue;
                            Summand s;
                            s.mu_circ = bott_circ_weight(mu, t1, w.w1, st.beta1(), st.gamma1);
                            s.nu_circ = bott_circ_weight(nu, t2, w.w2, st.gamma2, st.beta2());
                            s.lambda_conj = lam.conjugate();
                            s.mult = g;
                            s.degree = n;
                            out.terms[n - base].push_back(std::move(s));
                        }
                    }
                }
            }
        }
    }
    for (auto& [i, list] : out.terms) std::sort(list.begin(), list.end(), summand_less);
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

LineWeight2 dual_weight(const KroneckerSetting& st, const LineWeight2& w) {
    return {st.m * st.beta2() - st.alpha1 - w.w1, st.m * st.gamma1 - st.alpha2 - w.w2};
}

bool nonneg_admissible(const KroneckerSetting& st, const LineWeight2& w) {
    long long a = st.beta1() - w.w1;
    long long b = st.gamma2 - w.w2;
    long long sq = a * a + b * b;
    if (sq < 8) return true;
    if (sq > 8) return false;
    return st.beta1() != st.gamma2 || w.w1 != w.w2 || w.w1 + w.w2 > st.m - 3;
}

CMSearchResult cm_weight_search(const KroneckerSetting& st, const WeightBox& box,
                                const SampleOptions& opts) {
    CMSearchResult out;
    auto he = generic_hom_ext(st.quiver(), st.gamma_vec(), st.beta_vec(), opts);
    if (he.hom != 0) {
        out.hom_ok = false;
        return out;
    }
    const long long ext = -st.euler();  // hom = 0
    for (int w1 = box.w1_min; w1 <= box.w1_max; ++w1) {
        for (int w2 = box.w2_min; w2 <= box.w2_max; ++w2) {
            LineWeight2 w{w1, w2};
            if (nonneg_admissible(st, w) && nonneg_admissible(st, dual_weight(st, w))) {
                out.weights.push_back({w, CMCertificate::theorem});
                continue;
            }
            KLWComplex c = complex(st, w);
            auto top = c.max_index();
            if (!c.has_negative_terms() && top && *top == ext)
                out.weights.push_back({w, CMCertificate::direct});
        }
    }
    return out;
}

mpz_class degree(const KroneckerSetting& st) {
    const long long r = -st.euler();
    if (r <= 0) throw std::invalid_argument("degree: needs <gamma,beta> < 0");
    KLWComplex c = complex(st, LineWeight2{0, 0});
    mpz_class r_fact;
    mpz_fac_ui(r_fact.get_mpz_t(), static_cast<unsigned long>(r));
    mpq_class sum = 0;
    for (const auto& [i, list] : c.terms) {
        for (const auto& s : list) {
            mpz_class npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(s.degree),
                          static_cast<unsigned long>(r));
            mpq_class term(npow * s.rank(st.m), r_fact);
            term.canonicalize();
            long long sign = i + r;
            if (((sign % 2) + 2) % 2 == 1) sum -= term; else sum += term;
        }
    }
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0)
        throw std::logic_error("degree: Euler sum is not a non-negative integer");
    return sum.get_num();
}

/* ---- rendering ---- */

static const char* kOplus = "⊕";

static std::string weight_text(const std::vector<int>& entries) {
    return to_text(DominantWeight(std::vector<int>(entries)));
}

std::string summand_text(const Summand& s) {
    std::string out;
    if (s.mult != 1) out += s.mult.get_str();
    out += "(" + to_text(s.mu_circ) + ";" + to_text(s.nu_circ) + ";" + to_text(s.lambda_conj) + ")";
    return out;
}

struct RenderEntry {
    std::vector<int> slot1, slot2, slot3;
    mpz_class mult;
    int degree;
};

static std::string render_entries(std::vector<RenderEntry> entries) {
    auto key = [](const RenderEntry& e) { return std::tie(e.degree, e.slot1, e.slot2, e.slot3); };
    std::sort(entries.begin(), entries.end(),
              [&](const RenderEntry& a, const RenderEntry& b) { return key(a) < key(b); });
    std::string out;
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        bool all_one = true;
        while (j < entries.size() && entries[j].slot1 == entries[i].slot1 &&
               entries[j].slot2 == entries[i].slot2) {
            if (entries[j].mult != 1) all_one = false;
            ++j;
        }
        if (!out.empty()) out += kOplus;
        if (j - i >= 2 && all_one) {
            out += "(" + weight_text(entries[i].slot1) + ";" + weight_text(entries[i].slot2) + ";(";
            for (size_t k = i; k < j; ++k) {
                if (k > i) out += kOplus;
                out += weight_text(entries[k].slot3);
            }
            out += "))";
            i = j;
        } else {
            const RenderEntry& e = entries[i];
            if (e.mult != 1) out += e.mult.get_str();
            out += "(" + weight_text(e.slot1) + ";" + weight_text(e.slot2) + ";" +
                   weight_text(e.slot3) + ")";
            ++i;
        }
    }
    return out;
}

std::string render_term(const std::vector<Summand>& term) {
    std::vector<RenderEntry> entries;
    for (const auto& s : term)
        entries.push_back({stripped(s.mu_circ.entries()), stripped(s.nu_circ.entries()),
                           s.lambda_conj.parts(), s.mult, s.degree});
    return render_entries(std::move(entries));
}

std::string render_complex(const KLWComplex& c) {
    std::ostringstream out;
    for (const auto& [i, list] : c.terms) {
        if (list.empty()) continue;
        out << "F_" << i << " = " << render_term(list) << "\n";
    }
    return out.str();
}

std::string render_json(const KLWComplex& c) {
    nlohmann::json j;
    j["setting"] = {{"m", c.setting.m},
                    {"alpha", {c.setting.alpha1, c.setting.alpha2}},
                    {"gamma", {c.setting.gamma1, c.setting.gamma2}}};
    j["weight"] = {c.weight.w1, c.weight.w2};
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [i, list] : c.terms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : list) {
            arr.push_back({{"mu", s.mu_circ.entries()},
                           {"nu", s.nu_circ.entries()},
                           {"lambdaConj", s.lambda_conj.parts()},
                           {"mult", static_cast<long>(s.mult.get_si())},
                           {"degree", s.degree}});
        }
        terms[std::to_string(i)] = std::move(arr);
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

/* ---- parsing ---- */

namespace {

// split at top-level occurrences of "+", the UTF-8 circled plus, or "\oplus"
std::vector<std::string> split_oplus(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, kOplus) == 0 && depth == 0) {
            out.push_back(cur);
            cur.clear();
            i += 3;
        } else if (text[i] == '+' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            ++i;
        } else if (text.compare(i, 6, "\\oplus") == 0 && depth == 0) {
            out.push_back(cur);
            cur.clear();
            i += 6;
        } else {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            cur += text[i];
            ++i;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

bool weakly_decreasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

// all ways to cut a comma list into two weakly decreasing halves
std::vector<std::pair<std::vector<int>, std::vector<int>>> valid_splits(const std::string& text) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != ',') continue;
        try {
            auto left = parse_int_sequence(text.substr(0, i));
            auto right = parse_int_sequence(text.substr(i + 1));
            if (weakly_decreasing(left) && weakly_decreasing(right))
                out.emplace_back(std::move(left), std::move(right));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

struct RawSummand {
    mpz_class mult = 1;
    std::vector<std::string> slots;  // raw slot texts; last may be a wrapped group
};

RawSummand parse_raw(const std::string& text) {
    RawSummand out;
    std::string s = trim(text);
    size_t i = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0) out.mult = mpz_class(s.substr(0, i));
    if (i >= s.size() || s[i] != '(') throw std::invalid_argument("summand must start with '(': " + text);
    if (s.back() != ')') throw std::invalid_argument("summand must end with ')': " + text);
    std::string body = s.substr(i + 1, s.size() - i - 2);
    std::string cur;
    int depth = 0;
    for (char ch : body) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ';' && depth == 0) {
            out.slots.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.slots.push_back(trim(cur));
    return out;
}

}  // namespace

namespace {

// expand fixed slot texts into summands (the last slot may be a wrapped group)
std::vector<ParsedSummand> expand_summand(const std::vector<std::string>& slot_texts,
                                          const mpz_class& mult, int expected_slots) {
    std::vector<ParsedSummand> out;
    std::string last = slot_texts.back();
    std::vector<std::string> lams;
    if (!last.empty() && last.front() == '(') {
        if (last.back() != ')') throw std::invalid_argument("bad wrapped group: " + last);
        for (const auto& lam : split_oplus(last.substr(1, last.size() - 2)))
            lams.push_back(trim(lam));
    } else {
        lams.push_back(last);
    }
    for (const auto& lam : lams) {
        ParsedSummand ps;
        ps.mult = mult;
        std::vector<std::vector<int>*> dst{&ps.slot1, &ps.slot2, &ps.slot3};
        for (int k = 0; k < expected_slots; ++k) {
            const std::string& txt = k + 1 < expected_slots ? slot_texts[k] : lam;
            auto v = parse_int_sequence(txt);
            if (!weakly_decreasing(v))
                throw std::invalid_argument("slot is not weakly decreasing: " + txt);
            while (!v.empty() && v.back() == 0) v.pop_back();
            *dst[k] = std::move(v);
        }
        out.push_back(std::move(ps));
    }
    return out;
}

struct SummandReading {
    std::vector<ParsedSummand> summands;
    bool fixed = false;  // a delimiter normalization was applied
};

std::vector<SummandReading> summand_readings(const std::string& piece, int expected_slots) {
    RawSummand raw = parse_raw(piece);
    std::vector<SummandReading> out;
    if (static_cast<int>(raw.slots.size()) == expected_slots) {
        out.push_back({expand_summand(raw.slots, raw.mult, expected_slots), false});
    } else if (static_cast<int>(raw.slots.size()) == expected_slots - 1) {
        // one semicolon was printed as a comma; try every valid re-split
        for (size_t k = 0; k < raw.slots.size(); ++k) {
            if (!raw.slots[k].empty() && raw.slots[k].front() == '(') continue;
            for (auto& [l, r] : valid_splits(raw.slots[k])) {
                std::vector<std::string> cand = raw.slots;
                cand[k] = to_text(DominantWeight(std::vector<int>(l)));
                cand.insert(cand.begin() + k + 1, to_text(DominantWeight(std::vector<int>(r))));
                try {
                    out.push_back({expand_summand(cand, raw.mult, expected_slots), true});
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    if (out.empty())
        throw std::invalid_argument("summand '" + piece + "' has no valid reading with " +
                                    std::to_string(expected_slots) + " slots");
    return out;
}

}  // namespace

std::vector<ParsedSummand> parse_term(const std::string& text, int expected_slots,
                                      std::vector<ParseNote>* notes) {
    std::vector<ParsedSummand> out;
    std::string body = trim(text);
    if (body.empty()) return out;
    for (const auto& piece : split_oplus(body)) {
        auto readings = summand_readings(piece, expected_slots);
        if (readings.size() != 1)
            throw std::invalid_argument("summand '" + trim(piece) +
                                        "' is ambiguous: " + std::to_string(readings.size()) +
                                        " delimiter fixes");
        if (readings[0].fixed && notes)
            notes->push_back({"normalized delimiter in '" + trim(piece) + "'"});
        for (auto& s : readings[0].summands) out.push_back(std::move(s));
    }
    return out;
}

std::vector<TermReading> parse_term_readings(const std::string& text, int expected_slots) {
    std::vector<TermReading> out{{{}, ""}};
    std::string body = trim(text);
    if (body.empty()) return out;
    for (const auto& piece : split_oplus(body)) {
        auto readings = summand_readings(piece, expected_slots);
        std::vector<TermReading> next;
        for (const auto& base : out) {
            for (const auto& r : readings) {
                TermReading t = base;
                for (const auto& s : r.summands) t.summands.push_back(s);
                if (r.fixed) {
                    if (!t.note.empty()) t.note += "; ";
                    t.note += "normalized delimiter in '" + trim(piece) + "'";
                }
                next.push_back(std::move(t));
            }
        }
        if (next.size() > 64)
            throw std::invalid_argument("too many candidate readings for term: " + text);
        out = std::move(next);
    }
    return out;
}

std::string canonical_term_text(std::vector<ParsedSummand> summands) {
    std::vector<RenderEntry> entries;
    for (auto& s : summands) {
        int degree = 0;
        for (int v : s.slot3) degree += v;
        entries.push_back({s.slot1, s.slot2, s.slot3, s.mult, degree});
    }
    return render_entries(std::move(entries));
}

}  // namespace qdet
