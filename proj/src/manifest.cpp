#include "qdet/manifest.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qdet/bott.hpp"
#include "qdet/characters.hpp"
#include "qdet/klw.hpp"
#include "qdet/quiver.hpp"
#include "qdet/tensor.hpp"

namespace qdet {

using nlohmann::json;

bool ManifestReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string ManifestReport::text() const {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " #" << r.index << " " << r.kind;
        if (!r.title.empty()) os << " " << r.title;
        for (const auto& n : r.notes) os << " [" << n << "]";
        os << "\n";
        if (!r.pass && !r.detail.empty()) {
            std::istringstream lines(r.detail);
            std::string line;
            while (std::getline(lines, line)) os << "    " << line << "\n";
        }
        if (r.pass) ++passed;
    }
    os << passed << "/" << results.size() << " jobs passed\n";
    return os.str();
}

namespace {

SampleOptions job_opts(const json& job) {
    SampleOptions o;
    if (job.contains("seed")) o.seed = job["seed"].get<uint64_t>();
    if (job.contains("samples")) o.samples = job["samples"].get<int>();
    return o;
}

/* Compares one computed term against a golden string.  Accepts the strict
 * reading or a unique-matching delimiter fix; reports the fix as a note. */
bool match_term(const std::string& computed, const std::string& golden, int slots,
                std::vector<std::string>& notes, std::string& detail) {
    std::vector<TermReading> readings;
    try {
        readings = parse_term_readings(golden, slots);
    } catch (const std::exception& e) {
        detail = std::string("golden does not parse: ") + e.what();
        return false;
    }
    const TermReading* hit = nullptr;
    for (const auto& r : readings) {
        if (canonical_term_text(r.summands) == computed) { hit = &r; break; }
    }
    if (!hit) {
        detail = "expected: " + canonical_term_text(readings[0].summands) +
                 "\n  actual: " + computed;
        return false;
    }
    if (!hit->note.empty()) notes.push_back(hit->note);
    return true;
}

template <typename Complex>
void check_terms(const Complex& c, const json& job, int slots, JobResult& out) {
    const json& expected = job.at("expected_terms");
    bool exact_range = job.value("exact_range", true);
    std::ostringstream diff;
    bool ok = true;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
        int idx = std::stoi(it.key());
        auto term = c.terms.find(idx);
        std::string computed =
            term == c.terms.end() ? "" : render_term(term->second);
        if (computed.empty()) {
            ok = false;
            diff << "F_" << idx << " is empty, golden is not\n";
            continue;
        }
        std::string detail;
        if (match_term(computed, it.value().template get<std::string>(), slots, out.notes, detail))
            continue;
        // declared erratum: the corrected golden must match instead, and the
        // applied fix is reported loudly
        if (job.contains("errata") && job["errata"].contains(it.key())) {
            const json& fix = job["errata"][it.key()];
            std::string fix_detail;
            if (match_term(computed, fix.at("corrected").get<std::string>(), slots, out.notes,
                           fix_detail)) {
                out.notes.push_back("erratum applied to F_" + it.key() + ": " +
                                    fix.value("reason", "declared"));
                continue;
            }
            ok = false;
            diff << "F_" << idx << " matches neither the printed golden nor its erratum\n"
                 << detail << "\n" << fix_detail << "\n";
            continue;
        }
        ok = false;
        diff << "F_" << idx << " mismatch\n" << detail << "\n";
    }
    if (exact_range) {
        for (const auto& [idx, list] : c.terms) {
            if (list.empty()) continue;
            if (!expected.contains(std::to_string(idx))) {
                ok = false;
                diff << "unexpected nonzero F_" << idx << " = " << render_term(list) << "\n";
            }
        }
    }
    out.pass = ok;
    if (!ok) out.detail = diff.str();
}

KroneckerSetting job_setting(const json& job) {
    auto a = job.at("alpha");
    auto g = job.at("gamma");
    return KroneckerSetting(job.at("m").get<int>(), {a[0], a[1]}, {g[0], g[1]});
}

TensorSetting job_tsetting(const json& job) {
    auto a = job.at("alpha");
    auto g = job.at("gamma");
    return TensorSetting({a[0], a[1], a[2]}, {g[0], g[1], g[2]});
}

JobResult run_job(int index, const json& job) {
    JobResult out;
    out.index = index;
    out.kind = job.value("kind", "?");
    out.title = job.value("title", "");
    try {
        if (out.kind == "complex") {
            auto st = job_setting(job);
            LineWeight2 w{0, 0};
            if (job.contains("weight")) w = {job["weight"][0], job["weight"][1]};
            check_terms(complex(st, w), job, 3, out);
        } else if (out.kind == "tcomplex") {
            auto st = job_tsetting(job);
            LineWeight3 w{0, 0, 0};
            if (job.contains("weight")) w = {job["weight"][0], job["weight"][1], job["weight"][2]};
            check_terms(tensor_complex(st, w), job, 3, out);
        } else if (out.kind == "degree") {
            mpz_class d = degree(job_setting(job));
            mpz_class want(job.at("expected").get<long>());
            out.pass = d == want;
            if (!out.pass) out.detail = "expected " + want.get_str() + ", got " + d.get_str();
        } else if (out.kind == "tdegree") {
            mpz_class d = tensor_degree(job_tsetting(job));
            mpz_class want(job.at("expected").get<long>());
            out.pass = d == want;
            if (!out.pass) out.detail = "expected " + want.get_str() + ", got " + d.get_str();
        } else if (out.kind == "kron") {
            KroneckerQuery q(parse_partition(job.at("lambda").get<std::string>()),
                             parse_partition(job.at("mu").get<std::string>()),
                             parse_partition(job.at("nu").get<std::string>()));
            mpz_class g = kronecker(q);
            mpz_class want(job.at("expected").get<long>());
            out.pass = g == want;
            if (!out.pass) out.detail = "expected " + want.get_str() + ", got " + g.get_str();
        } else if (out.kind == "ext") {
            Quiver q = Quiver::parse(job.at("quiver").get<std::string>());
            DimVector gamma = job.at("gamma").get<DimVector>();
            DimVector beta = job.at("beta").get<DimVector>();
            auto he = generic_hom_ext(q, gamma, beta, job_opts(job));
            const json& want = job.at("expected");
            out.pass = true;
            std::ostringstream diff;
            if (want.contains("hom") && want["hom"].get<long long>() != he.hom) {
                out.pass = false;
                diff << "hom: expected " << want["hom"] << ", got " << he.hom << "\n";
            }
            if (want.contains("ext") && want["ext"].get<long long>() != he.ext) {
                out.pass = false;
                diff << "ext: expected " << want["ext"] << ", got " << he.ext << "\n";
            }
            if (want.contains("euler") && want["euler"].get<long long>() != he.euler) {
                out.pass = false;
                diff << "euler: expected " << want["euler"] << ", got " << he.euler << "\n";
            }
            out.detail = diff.str();
        } else if (out.kind == "bott") {
            GrassmannianShape shape(job.at("r").get<int>(), job.at("s").get<int>());
            BottOutcome res;
            if (job.contains("qweight")) {
                res = bott(shape, job.at("qweight").get<std::vector<int>>(),
                           job.at("sweight").get<std::vector<int>>());
            } else if (job.contains("s_twist")) {
                res = cohomology_S_twist(shape, parse_partition(job["s_twist"].get<std::string>()),
                                         job.value("w", 0));
            } else {
                res = cohomology_Qdual_twist(
                    shape, parse_partition(job.at("qdual_twist").get<std::string>()),
                    job.value("w", 0));
            }
            const json& want = job.at("expected");
            if (want.is_string() && want.get<std::string>() == "zero") {
                out.pass = res.zero;
                if (!out.pass) out.detail = "expected zero cohomology";
            } else {
                bool ok = !res.zero && res.cohom_degree == want.at("degree").get<int>() &&
                          res.result.entries() == want.at("weight").get<std::vector<int>>();
                if (want.contains("dual")) ok = ok && res.dual == want["dual"].get<bool>();
                out.pass = ok;
                if (!ok) {
                    std::ostringstream diff;
                    if (res.zero)
                        diff << "got zero";
                    else {
                        diff << "got degree " << res.cohom_degree << " weight "
                             << to_text(res.result) << (res.dual ? " (dual)" : "");
                    }
                    out.detail = diff.str();
                }
            }
        } else if (out.kind == "cm-search") {
            auto st = job_setting(job);
            auto b = job.at("box");
            WeightBox box{b[0], b[1], b[2], b[3]};
            auto res = cm_weight_search(st, box, job_opts(job));
            out.pass = true;
            std::ostringstream diff;
            for (const auto& want : job.at("expect_contains")) {
                LineWeight2 w{want.at("weight")[0], want.at("weight")[1]};
                std::string cert = want.value("certificate", "");
                bool found = false;
                for (const auto& got : res.weights) {
                    if (got.weight != w) continue;
                    if (cert.empty() ||
                        (cert == "theorem") == (got.certificate == CMCertificate::theorem)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    out.pass = false;
                    diff << "missing weight (" << w.w1 << ";" << w.w2 << ")";
                    if (!cert.empty()) diff << " with certificate " << cert;
                    diff << "\n";
                }
            }
            if (!res.hom_ok) {
                out.pass = false;
                diff << "hom(gamma,beta) != 0\n";
            }
            out.detail = diff.str();
        } else {
            out.pass = false;
            out.detail = "unknown job kind";
        }
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    return out;
}

}  // namespace

ManifestReport run_manifest_json(const json& doc, int jobs) {
    const json& list = doc.contains("jobs") ? doc.at("jobs") : doc;
    if (!list.is_array()) throw std::invalid_argument("manifest: expected a job array");

    ManifestReport report;
    report.results.resize(list.size());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= list.size()) break;
            report.results[i] = run_job(static_cast<int>(i), list[i]);
        }
    };
    if (jobs == 1 || list.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

ManifestReport run_manifest(const std::string& path, int jobs) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + path);
    json doc = json::parse(in);
    return run_manifest_json(doc, jobs);
}

}  // namespace qdet
