#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdet/bott.hpp"
#include "qdet/characters.hpp"
#include "qdet/klw.hpp"
#include "qdet/manifest.hpp"
#include "qdet/quiver.hpp"
#include "qdet/tensor.hpp"

using namespace qdet;

namespace {

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i <= s.size()) {
        size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

KroneckerSetting make_setting(int m, const std::string& alpha, const std::string& gamma) {
    auto a = parse_csv_ints(alpha);
    auto g = parse_csv_ints(gamma);
    if (a.size() != 2 || g.size() != 2)
        throw CLI::ValidationError("alpha and gamma must be two comma-separated integers");
    return KroneckerSetting(m, {a[0], a[1]}, {g[0], g[1]});
}

TensorSetting make_tsetting(const std::string& alpha, const std::string& gamma) {
    auto a = parse_csv_ints(alpha);
    auto g = parse_csv_ints(gamma);
    if (a.size() != 3 || g.size() != 3)
        throw CLI::ValidationError("alpha and gamma must be three comma-separated integers");
    return TensorSetting({a[0], a[1], a[2]}, {g[0], g[1], g[2]});
}

struct Output {
    std::string file;
    void write(const std::string& text) const {
        if (file.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(file);
        out << text;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for Kempf-Lascoux-Weyman complexes of quiver "
                 "determinantal varieties and 3-tensor subspace varieties"};
    app.require_subcommand(1);

    std::string format = "shorthand";
    uint64_t seed = 1;
    int jobs = 1;
    Output output;
    app.add_option("--format", format, "shorthand|json")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized hom/ext sampling")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for `run`")->capture_default_str();
    app.add_option("--output", output.file, "write output to a file instead of stdout");

    // kron LAMBDA MU NU
    std::string lam_s, mu_s, nu_s;
    bool use_oracle = false;
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient g_{mu,nu}^lambda");
    kron_cmd->add_option("lambda", lam_s)->required();
    kron_cmd->add_option("mu", mu_s)->required();
    kron_cmd->add_option("nu", nu_s)->required();
    kron_cmd->add_flag("--oracle", use_oracle, "use the Schur-expansion oracle route");

    // bott R,S [--q ...] [--s ...] | [--s-twist MU --w W] | [--qdual-twist NU --w W]
    std::string shape_s, qw_s, sw_s, stw_s, qtw_s;
    int det_w = 0;
    auto* bott_cmd = app.add_subcommand("bott", "Borel-Weil-Bott on a Grassmannian");
    bott_cmd->add_option("shape", shape_s, "r,s")->required();
    bott_cmd->add_option("--q", qw_s, "weight on Q (length r-s)");
    bott_cmd->add_option("--s", sw_s, "weight on S (length s)");
    bott_cmd->add_option("--s-twist", stw_s, "partition mu for S^mu S (x) det^w Q");
    bott_cmd->add_option("--qdual-twist", qtw_s, "partition nu for S^nu Q^* (x) det^w S^*");
    bott_cmd->add_option("--w", det_w, "determinant twist");

    // ext QUIVER GAMMA BETA
    std::string quiver_s, gamma_s, beta_s;
    auto* ext_cmd = app.add_subcommand("ext", "generic hom/ext between dimension vectors");
    ext_cmd->add_option("quiver", quiver_s, "Km or arrow list 0-1,0-1")->required();
    ext_cmd->add_option("gamma", gamma_s)->required();
    ext_cmd->add_option("beta", beta_s)->required();

    // complex M ALPHA GAMMA [--weight w1,w2]
    int m = 0;
    std::string alpha_s, gamma2_s, weight_s;
    auto* complex_cmd = app.add_subcommand("complex", "terms of the K_m KLW complex");
    complex_cmd->add_option("m", m)->required();
    complex_cmd->add_option("alpha", alpha_s)->required();
    complex_cmd->add_option("gamma", gamma2_s)->required();
    complex_cmd->add_option("--weight", weight_s, "line weight w1,w2 (default 0,0)");

    auto* degree_cmd = app.add_subcommand("degree", "deg(q) deg(Rep) for a K_m setting");
    degree_cmd->add_option("m", m)->required();
    degree_cmd->add_option("alpha", alpha_s)->required();
    degree_cmd->add_option("gamma", gamma2_s)->required();

    std::string box_s;
    auto* cm_cmd = app.add_subcommand("cm-search", "Cohen-Macaulay weight search in a box");
    cm_cmd->add_option("m", m)->required();
    cm_cmd->add_option("alpha", alpha_s)->required();
    cm_cmd->add_option("gamma", gamma2_s)->required();
    cm_cmd->add_option("--box", box_s, "w1min,w1max,w2min,w2max")->required();

    auto* dual_cmd = app.add_subcommand("dual-weight", "dual line weight of a K_m setting");
    dual_cmd->add_option("m", m)->required();
    dual_cmd->add_option("alpha", alpha_s)->required();
    dual_cmd->add_option("gamma", gamma2_s)->required();
    dual_cmd->add_option("--weight", weight_s, "line weight w1,w2")->required();

    auto* tcomplex_cmd = app.add_subcommand("tcomplex", "terms of the 3-tensor KLW complex");
    tcomplex_cmd->add_option("alpha", alpha_s)->required();
    tcomplex_cmd->add_option("gamma", gamma2_s)->required();
    tcomplex_cmd->add_option("--weight", weight_s, "line weight w1,w2,w3 (default 0,0,0)");

    auto* tdegree_cmd = app.add_subcommand("tdegree", "deg(q) deg(R) for a tensor setting");
    tdegree_cmd->add_option("alpha", alpha_s)->required();
    tdegree_cmd->add_option("gamma", gamma2_s)->required();

    auto* tcodim_cmd = app.add_subcommand("tcodim", "codimension and generic fiber dimension");
    tcodim_cmd->add_option("alpha", alpha_s)->required();
    tcodim_cmd->add_option("gamma", gamma2_s)->required();

    std::string manifest_path;
    auto* run_cmd = app.add_subcommand("run", "run a manifest of jobs against goldens");
    run_cmd->add_option("manifest", manifest_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kron_cmd) {
            KroneckerQuery q(parse_partition(lam_s), parse_partition(mu_s), parse_partition(nu_s));
            mpz_class g = use_oracle ? kronecker_oracle(q) : kronecker(q);
            output.write(g.get_str() + "\n");
        } else if (*bott_cmd) {
            auto rs = parse_csv_ints(shape_s);
            if (rs.size() != 2) throw std::invalid_argument("shape must be r,s");
            GrassmannianShape shape(rs[0], rs[1]);
            BottOutcome res;
            if (!stw_s.empty())
                res = cohomology_S_twist(shape, parse_partition(stw_s), det_w);
            else if (!qtw_s.empty())
                res = cohomology_Qdual_twist(shape, parse_partition(qtw_s), det_w);
            else
                res = bott(shape, parse_csv_ints(qw_s.empty() ? "0" : qw_s),
                           parse_csv_ints(sw_s.empty() ? "0" : sw_s));
            if (res.zero)
                output.write("zero\n");
            else
                output.write("H^" + std::to_string(res.cohom_degree) + " = S^(" +
                             to_text(res.result) + ") " + (res.dual ? "R*" : "R") + "\n");
        } else if (*ext_cmd) {
            Quiver q = Quiver::parse(quiver_s);
            SampleOptions opts;
            opts.seed = seed;
            auto he = generic_hom_ext(q, parse_csv_ints(gamma_s), parse_csv_ints(beta_s), opts);
            std::ostringstream os;
            os << "hom = " << he.hom << "\next = " << he.ext << "\neuler = " << he.euler
               << "\nhom=0 and euler<0: " << (he.hom == 0 && he.euler < 0 ? "yes" : "no") << "\n";
            output.write(os.str());
        } else if (*complex_cmd) {
            auto st = make_setting(m, alpha_s, gamma2_s);
            auto w = weight_s.empty() ? std::vector<int>{0, 0} : parse_csv_ints(weight_s);
            KLWComplex c = complex(st, LineWeight2{w.at(0), w.at(1)});
            output.write(format == "json" ? render_json(c) + "\n" : render_complex(c));
        } else if (*degree_cmd) {
            output.write(degree(make_setting(m, alpha_s, gamma2_s)).get_str() + "\n");
        } else if (*cm_cmd) {
            auto st = make_setting(m, alpha_s, gamma2_s);
            auto b = parse_csv_ints(box_s);
            if (b.size() != 4) throw std::invalid_argument("box must be w1min,w1max,w2min,w2max");
            SampleOptions opts;
            opts.seed = seed;
            auto res = cm_weight_search(st, WeightBox{b[0], b[1], b[2], b[3]}, opts);
            std::ostringstream os;
            if (!res.hom_ok) {
                os << "hom(gamma,beta) != 0; no Cohen-Macaulay weights\n";
            } else {
                for (const auto& cw : res.weights)
                    os << "(" << cw.weight.w1 << ";" << cw.weight.w2 << ") "
                       << (cw.certificate == CMCertificate::theorem ? "theorem" : "direct") << "\n";
            }
            output.write(os.str());
        } else if (*dual_cmd) {
            auto st = make_setting(m, alpha_s, gamma2_s);
            auto w = parse_csv_ints(weight_s);
            LineWeight2 d = dual_weight(st, LineWeight2{w.at(0), w.at(1)});
            output.write("(" + std::to_string(d.w1) + ";" + std::to_string(d.w2) + ")\n");
        } else if (*tcomplex_cmd) {
            auto st = make_tsetting(alpha_s, gamma2_s);
            auto w = weight_s.empty() ? std::vector<int>{0, 0, 0} : parse_csv_ints(weight_s);
            TensorComplex c = tensor_complex(st, LineWeight3{w.at(0), w.at(1), w.at(2)});
            output.write(format == "json" ? render_json(c) + "\n" : render_complex(c));
        } else if (*tdegree_cmd) {
            output.write(tensor_degree(make_tsetting(alpha_s, gamma2_s)).get_str() + "\n");
        } else if (*tcodim_cmd) {
            auto cf = codim_and_fiber(make_tsetting(alpha_s, gamma2_s), seed);
            std::ostringstream os;
            if (!cf.proper) os << "subspace variety is everything\n";
            os << "e = " << cf.e << "\nh = " << cf.h << "\n";
            if (!cf.probe_agrees)
                os << "warning: Jacobian probe disagrees (probe h = " << cf.probe_h << ")\n";
            output.write(os.str());
        } else if (*run_cmd) {
            ManifestReport report = run_manifest(manifest_path, jobs);
            output.write(report.text());
            return report.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
