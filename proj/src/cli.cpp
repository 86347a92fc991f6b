#include "rexosc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "rexosc/coherent.hpp"
#include "rexosc/families.hpp"
#include "rexosc/json_io.hpp"
#include "rexosc/ladder.hpp"

namespace rexosc {

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("cannot parse integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

struct DiagramOptions {
    std::string flips;
    std::string partition;
    long sigma = 0;
    bool sigma_set = false;
    long shift = 0;

    void attach(CLI::App* cmd, bool with_shift = false) {
        cmd->add_option("--flips", flips, "index set K; the diagram is f_K(Z_-), e.g. --flips 2,3");
        cmd->add_option("--partition", partition, "partition parts, e.g. --partition 2,2");
        cmd->add_option("--sigma", sigma, "translation offset used with --partition (default 0)")
            ->each([this](const std::string&) { sigma_set = true; });
        if (with_shift) cmd->add_option("--shift", shift, "translate the diagram by n");
    }

    MayaDiagram build() const {
        if (!flips.empty() && !partition.empty())
            throw CLI::ValidationError("--flips and --partition are mutually exclusive");
        MayaDiagram m;
        if (!flips.empty()) {
            if (sigma_set) throw CLI::ValidationError("--sigma requires --partition");
            m = MayaDiagram::from_index_set(IndexSet(parse_long_list(flips)));
        } else {
            m = MayaDiagram::from_partition(Partition(parse_long_list(partition)), sigma);
        }
        return m.shifted(shift);
    }
};

json header() { return json{{"tool", "rexosc"}, {"version", kVersion}}; }

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// ---- verify -------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

bool eigen_relation_holds(const RationalExtension& ext, long m) {
    QuasiRational psi = eigenfunction(ext, m);
    return ext.t.apply(psi) == Scalar(2 * m + 1) * psi;
}

CheckResult check_eigen_relations(const MayaDiagram& m) {
    RationalExtension ext = RationalExtension::build(m);
    long lo = m.first_empty() - 2;
    long hi = m.sigma() + m.partition().part(1) + 4;
    long count = 0;
    for (long level = lo; level <= hi; ++level) {
        if (!eigen_relation_holds(ext, level))
            return {"eigen_relations", false, "failed at m=" + std::to_string(level)};
        ++count;
    }
    return {"eigen_relations", true, std::to_string(count) + " levels in [" + std::to_string(lo) +
                                         "," + std::to_string(hi) + "]"};
}

bool intertwining_on_basis(const MayaDiagram& m, const IndexSet& k) {
    RationalExtension src = RationalExtension::build(m);
    Intertwiner a = intertwiner(m, k);
    RationalExtension dst = RationalExtension::build(a.target);
    long lo = m.first_empty() - 2;
    long hi = m.sigma() + m.partition().part(1) + 3;
    for (long level = lo; level <= hi; ++level) {
        QuasiRational psi = eigenfunction(src, level);
        if (a.op.apply(src.t.apply(psi)) != dst.t.apply(a.op.apply(psi))) return false;
    }
    return true;
}

CheckResult check_intertwining(const MayaDiagram& m) {
    long qc = threshold_degree(m.partition());
    for (long n : {1L, -1L, qc}) {
        if (n == 0) continue;
        if (!intertwining_on_basis(m, ladder_index_set(m, n)))
            return {"intertwining", false, "A T_M != T_target A for n=" + std::to_string(n)};
    }
    return {"intertwining", true, "ladder flips n in {1,-1," + std::to_string(qc) + "}"};
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
    std::vector<long> out;
    for (long v : a.elems())
        if (b.contains(v)) out.push_back(v);
    return IndexSet(out);
}

bool composition_law_holds(const MayaDiagram& m1, const IndexSet& k1, const IndexSet& k2) {
    RationalExtension ext1 = RationalExtension::build(m1);
    Intertwiner a1 = intertwiner(m1, k1);
    Intertwiner a2 = intertwiner(a1.target, k2);
    Intertwiner direct = intertwiner(m1, sym_diff(k1, k2));
    Poly p{Scalar(1)};
    for (long k : intersect(k1, k2).elems())
        p = p * (Poly(Scalar(2 * k + 1)) - Poly::x());
    DiffOperator p_of_t = DiffOperator::poly_of(p, ext1.t);
    long lo = m1.first_empty() - 1;
    long hi = m1.sigma() + m1.partition().part(1) + 2;
    for (long level = lo; level <= hi; ++level) {
        QuasiRational psi = eigenfunction(ext1, level);
        QuasiRational lhs = a2.op.apply(a1.op.apply(psi));
        QuasiRational rhs = direct.op.apply(p_of_t.apply(psi));
        if (lhs != rhs) return false;
    }
    return true;
}

CheckResult check_composition(const MayaDiagram& m, unsigned long seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pos(-2, 4);
    std::uniform_int_distribution<int> sz(0, 2);
    for (int c = 0; c < cases; ++c) {
        std::vector<long> k1, k2;
        for (int i = sz(rng); i > 0; --i) k1.push_back(pos(rng));
        for (int i = sz(rng); i > 0; --i) k2.push_back(pos(rng));
        if (!composition_law_holds(m, IndexSet(k1), IndexSet(k2)))
            return {"composition_law", false,
                    "failed for K1=" + IndexSet(k1).str() + " K2=" + IndexSet(k2).str()};
    }
    return {"composition_law", true, std::to_string(cases) + " randomized cases"};
}

CheckResult check_gamma_action(const MayaDiagram& m) {
    long qc = threshold_degree(m.partition());
    long checked = 0;
    for (long q = 1; q <= qc + 2; ++q) {
        if (!is_q_core(m, q)) continue;
        Intertwiner ladder = ladder_operator(m, q);
        RationalExtension ext = RationalExtension::build(m);
        Poly gamma = gamma_polynomial(m, q);
        Scalar two_q = pow(Scalar(2), q);
        for (long level = m.first_empty(); level <= m.last_filled() + q + 2; ++level) {
            if (m.contains(level)) continue;
            QuasiRational lhs = ladder.op.apply(eigenfunction(ext, level));
            QuasiRational rhs =
                (two_q * gamma.eval(Scalar(level))) * eigenfunction(ext, level - q);
            if (lhs != rhs)
                return {"gamma_action", false,
                        "q=" + std::to_string(q) + " m=" + std::to_string(level)};
            ++checked;
        }
    }
    return {"gamma_action", true, std::to_string(checked) + " (q,m) pairs"};
}

CheckResult check_translation(const MayaDiagram& m) {
    Poly h = normalized_pseudo_wronskian(m);
    RationalFunction u = potential(m);
    IndexSet k = ladder_index_set(m, 1);
    DiffOperator a = intertwiner(m, k).op;
    for (long n = -2; n <= 2; ++n) {
        MayaDiagram shifted = m.shifted(n);
        if (normalized_pseudo_wronskian(shifted) != h)
            return {"translation_invariance", false, "H_hat changed under shift " + std::to_string(n)};
        if (potential(shifted) != u + RationalFunction(Scalar(2 * n)))
            return {"translation_invariance", false, "U_M+2n failed at n=" + std::to_string(n)};
        std::vector<long> kk = k.elems();
        for (auto& v : kk) v += n;
        if (intertwiner(shifted, IndexSet(kk)).op != a)
            return {"translation_invariance", false, "A_{M+n,K+n} changed at n=" + std::to_string(n)};
    }
    return {"translation_invariance", true, "shifts in [-2,2]"};
}

CheckResult check_schur(const MayaDiagram& m) {
    const Partition& lambda = m.partition();
    Scalar c = Scalar(pow(Scalar(2), lambda.weight()) * factorial(lambda.weight())) /
               Scalar(d_lambda(lambda));
    Poly lhs = normalized_pseudo_wronskian(m);
    Poly rhs = c * schur_hermite_point(lambda);
    bool ok = lhs == rhs;
    return {"schur_correspondence", ok, ok ? "H_hat = (2^N N!/d) S(x,-1/4,0,...)" : "mismatch"};
}

CheckResult check_series_pde(const MayaDiagram& m, long trunc) {
    const Partition& lambda = m.partition();
    trunc = std::max(trunc, threshold_degree(lambda));
    GeneratingSeries gs = generating_series(lambda, trunc);
    RationalExtension ext = RationalExtension::build(MayaDiagram::from_partition(lambda, 0));
    auto lhs = gs.series.map([&](const QuasiRational& c) { return ext.t.apply(c); });
    auto rhs = scale(gs.series.z_ddz(), Scalar(2)) + scale(gs.series, Scalar(1));
    bool ok = agree_through(lhs, rhs, trunc - 1);
    return {"series_pde", ok, "T Psi = (2 z d/dz + 1 + 2 sigma) Psi through z^" +
                                  std::to_string(trunc - 1)};
}

CheckResult check_series_eigen(const MayaDiagram& m, long trunc) {
    const Partition& lambda = m.partition();
    long qc = threshold_degree(lambda);
    trunc = std::max(trunc, qc + 2);
    GeneratingSeries gs = generating_series(lambda, trunc);
    MayaDiagram canonical = MayaDiagram::from_partition(lambda, 0);
    for (long q = qc; q <= qc + 1; ++q) {
        if (!is_q_core(canonical, q)) return {"series_eigenrelation", false, "threshold not a core"};
        Intertwiner ladder = ladder_operator(canonical, q);
        auto lhs = gs.series.map([&](const QuasiRational& c) { return ladder.op.apply(c); });
        auto rhs = gs.series.shifted(q);
        if (!agree_through(lhs, rhs, trunc - q))
            return {"series_eigenrelation", false, "L^(q) Psi != z^q Psi at q=" + std::to_string(q)};
    }
    return {"series_eigenrelation", true,
            "q in {" + std::to_string(qc) + "," + std::to_string(qc + 1) + "}"};
}

CheckResult check_krein_adler(const MayaDiagram& m) {
    Poly h = pseudo_wronskian(m);
    long roots = sturm_root_count(h, Scalar(-100), Scalar(100));
    bool regular = krein_adler_regular(m);
    bool ok = regular ? roots == 0 : roots > 0;
    return {"krein_adler_sturm", ok,
            "regular=" + std::string(regular ? "true" : "false") + ", real roots in (-100,100): " +
                std::to_string(roots)};
}

int run_verify(const MayaDiagram& m, long trunc, unsigned long seed, std::ostream& out) {
    std::vector<CheckResult> results;
    results.push_back(check_eigen_relations(m));
    results.push_back(check_intertwining(m));
    results.push_back(check_composition(m, seed, 8));
    results.push_back(check_gamma_action(m));
    results.push_back(check_translation(m));
    results.push_back(check_schur(m));
    results.push_back(check_series_pde(m, trunc));
    results.push_back(check_series_eigen(m, trunc));
    results.push_back(check_krein_adler(m));
    json j = header();
    j["diagram"] = to_json(m);
    j["seed"] = seed;
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
    }
    j["checks"] = checks;
    j["pass"] = all;
    emit(j, out);
    return all ? 0 : 1;
}

// ---- subcommand payloads -------------------------------------------------

json partition_report(const Partition& p) {
    json j = header();
    j["partition"] = to_json(p);
    j["weight"] = p.weight();
    j["length"] = p.length();
    j["conjugate"] = to_json(p.conjugate());
    json hooks = json::array();
    for (const auto& row : hook_lengths(p)) hooks.push_back(row);
    j["hooks"] = hooks;
    j["d_lambda"] = d_lambda(p).get_str();
    return j;
}

std::string window_picture(const MayaDiagram& m) {
    std::string s;
    long lo = m.first_empty() - 2;
    long hi = m.last_filled() + 2;
    for (long p = lo; p <= hi; ++p) s += m.contains(p) ? '#' : '.';
    return s;
}

json maya_report(const MayaDiagram& m) {
    json j = header();
    j["partition"] = to_json(m.partition());
    j["sigma"] = m.sigma();
    j["index_set"] = to_json(m.index_set());
    j["first_empty"] = m.first_empty();
    j["last_filled"] = m.last_filled();
    j["regular"] = krein_adler_regular(m);
    j["window"] = window_picture(m);
    j["window_start"] = m.first_empty() - 2;
    return j;
}

json extension_report(const MayaDiagram& m) {
    RationalExtension ext = RationalExtension::build(m);
    json j = header();
    j["index_set"] = to_json(m.index_set());
    j["partition"] = to_json(m.partition());
    j["sigma"] = m.sigma();
    j["H_M"] = to_json(ext.h);
    j["H_M_pretty"] = ext.h.str();
    j["H_M_normalized"] = to_json(ext.h_hat);
    j["H_M_normalized_pretty"] = ext.h_hat.str();
    j["U_M"] = to_json(ext.u);
    j["regular"] = krein_adler_regular(m);
    return j;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rational extensions of the harmonic oscillator"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    long trunc = 12;
    unsigned long seed = 20240101;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--format", format, "json or csv (csv: states, series, coherent)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--trunc", trunc, "series truncation order (default 12)");
    app.add_option("--seed", seed, "seed for randomized checks");

    // partition
    auto* cmd_partition = app.add_subcommand("partition", "hooklengths and tableau count");
    std::string parts_arg;
    cmd_partition->add_option("--parts", parts_arg, "partition parts, e.g. 2,2")->required();

    // maya
    auto* cmd_maya = app.add_subcommand("maya", "canonical form, index set, flips");
    DiagramOptions maya_opts;
    maya_opts.attach(cmd_maya, /*with_shift=*/true);
    std::string flip_arg;
    cmd_maya->add_option("--flip", flip_arg, "extra positions to flip, e.g. 0,5");

    // degrees
    auto* cmd_degrees = app.add_subcommand("degrees", "critical degrees and threshold");
    DiagramOptions degree_opts;
    degree_opts.attach(cmd_degrees);
    long qmax = 10;
    cmd_degrees->add_option("--qmax", qmax, "largest degree to test (default 10)");

    // extension
    auto* cmd_extension = app.add_subcommand("extension", "pseudo-Wronskian, potential, regularity");
    DiagramOptions ext_opts;
    ext_opts.attach(cmd_extension, /*with_shift=*/true);

    // states
    auto* cmd_states = app.add_subcommand("states", "eigenfunction table");
    DiagramOptions state_opts;
    state_opts.attach(cmd_states);
    std::string levels_arg;
    cmd_states->add_option("--m", levels_arg, "levels, e.g. 0,1,4,5,6")->required();

    // ladder
    auto* cmd_ladder = app.add_subcommand("ladder", "intertwiners and ladder operators");
    DiagramOptions ladder_opts;
    ladder_opts.attach(cmd_ladder);
    long ladder_n = 0;
    std::string ladder_k;
    cmd_ladder->add_option("--n", ladder_n, "energy shift; builds L_M^(n)");
    cmd_ladder->add_option("--K", ladder_k, "explicit flip set for A_{M,K}");

    // series
    auto* cmd_series = app.add_subcommand("series", "generating-function prefactor and coefficients");
    DiagramOptions series_opts;
    series_opts.attach(cmd_series);

    // coherent
    auto* cmd_coherent = app.add_subcommand("coherent", "coherent-state evaluation and residuals");
    DiagramOptions coherent_opts;
    coherent_opts.attach(cmd_coherent);
    double alpha_re = 1.0, alpha_im = 0.0;
    EvalGrid grid{-5.0, 5.0, 201, 0.0, 1.0, 201};
    long n_samples = 100;
    cmd_coherent->add_option("--alpha-re", alpha_re, "Re alpha (default 1)");
    cmd_coherent->add_option("--alpha-im", alpha_im, "Im alpha (default 0)");
    cmd_coherent->add_option("--x-min", grid.x_min);
    cmd_coherent->add_option("--x-max", grid.x_max);
    cmd_coherent->add_option("--nx", grid.n_x);
    cmd_coherent->add_option("--t-min", grid.t_min);
    cmd_coherent->add_option("--t-max", grid.t_max);
    cmd_coherent->add_option("--nt", grid.n_t);
    cmd_coherent->add_option("--samples", n_samples, "sample count for eigen-residuals");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the identity suites for a diagram");
    DiagramOptions verify_opts;
    verify_opts.attach(cmd_verify);
    bool verify_all = false;
    cmd_verify->add_flag("--all", verify_all, "run every suite (default)");

    std::vector<const char*> argv;
    argv.push_back("rexosc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << "\n";
            return 1;
        }
        sink = &file;
    }

    try {
        if (cmd_partition->parsed()) {
            emit(partition_report(Partition(parse_long_list(parts_arg))), *sink);
            return 0;
        }
        if (cmd_maya->parsed()) {
            MayaDiagram m = maya_opts.build();
            json j = maya_report(m);
            if (!flip_arg.empty()) {
                IndexSet k(parse_long_list(flip_arg));
                MayaDiagram flipped = multi_flip(m, k);
                j["flipped"] = maya_report(flipped);
                j["flipped"].erase("tool");
                j["flipped"].erase("version");
                j["symmetric_difference"] = to_json(symmetric_difference(m, flipped));
            }
            emit(j, *sink);
            return 0;
        }
        if (cmd_degrees->parsed()) {
            MayaDiagram m = degree_opts.build();
            CriticalDegrees cd = critical_degrees(m.partition(), qmax);
            json j = header();
            j["partition"] = to_json(m.partition());
            j["q_c"] = cd.q_c;
            j["degrees"] = json::array();
            for (long q : cd.degrees) j["degrees"].push_back(q);
            emit(j, *sink);
            return 0;
        }
        if (cmd_extension->parsed()) {
            emit(extension_report(ext_opts.build()), *sink);
            return 0;
        }
        if (cmd_states->parsed()) {
            MayaDiagram m = state_opts.build();
            RationalExtension ext = RationalExtension::build(m);
            std::vector<long> levels = parse_long_list(levels_arg);
            if (format == "csv") {
                *sink << "m,eigenvalue,gauss,numerator,denominator\n";
                for (long level : levels) {
                    QuasiRational psi = eigenfunction(ext, level);
                    *sink << level << "," << (2 * level + 1) << "," << psi.gauss() << ",\""
                          << eigenfunction_numerator(m, level).str() << "\",\"" << ext.h_hat.str()
                          << "\"\n";
                }
            } else {
                json j = header();
                j["diagram"] = to_json(m);
                j["H_M_normalized"] = to_json(ext.h_hat);
                json states = json::array();
                for (long level : levels) {
                    QuasiRational psi = eigenfunction(ext, level);
                    json s;
                    s["m"] = level;
                    s["eigenvalue"] = 2 * level + 1;
                    s["bound"] = !m.contains(level);
                    s["numerator"] = to_json(eigenfunction_numerator(m, level));
                    s["numerator_pretty"] = eigenfunction_numerator(m, level).str();
                    s["psi"] = to_json(psi);
                    states.push_back(s);
                }
                j["states"] = states;
                emit(j, *sink);
            }
            return 0;
        }
        if (cmd_ladder->parsed()) {
            MayaDiagram m = ladder_opts.build();
            json j = header();
            j["diagram"] = to_json(m);
            if (!ladder_k.empty()) {
                Intertwiner a = intertwiner(m, IndexSet(parse_long_list(ladder_k)));
                j["intertwiner"] = to_json(a);
            }
            if (ladder_n != 0) {
                Intertwiner l = ladder_operator(m, ladder_n);
                j["ladder"] = to_json(l);
                j["ladder"]["n"] = ladder_n;
                if (ladder_n >= 1 && is_q_core(m, ladder_n)) {
                    j["ladder"]["gamma"] = to_json(gamma_polynomial(m, ladder_n));
                    j["ladder"]["gamma_pretty"] = gamma_polynomial(m, ladder_n).str();
                }
            }
            if (ladder_k.empty() && ladder_n == 0)
                throw CLI::ValidationError("ladder: need --n or --K");
            emit(j, *sink);
            return 0;
        }
        if (cmd_series->parsed()) {
            MayaDiagram m = series_opts.build();
            GeneratingSeries gs = generating_series(m.partition(), trunc);
            if (format == "csv") {
                *sink << "exponent,coefficient_numerator,coefficient_denominator,gauss\n";
                for (long e = gs.series.is_zero() ? 0 : gs.series.low(); e <= trunc; ++e) {
                    QuasiRational c = gs.series.coefficient(e);
                    *sink << e << ",\"" << c.rat().num().str() << "\",\"" << c.rat().den().str()
                          << "\"," << c.gauss() << "\n";
                }
            } else {
                json j = header();
                j["partition"] = to_json(gs.lambda);
                j["trunc"] = gs.trunc;
                json pref = json::array();
                for (size_t k = 0; k < gs.prefactor.size(); ++k) {
                    json p;
                    p["z_exponent"] = -static_cast<long>(k);
                    p["coefficient"] = to_json(gs.prefactor[k]);
                    pref.push_back(p);
                }
                j["prefactor"] = pref;
                json coeffs = json::array();
                for (long e = gs.series.is_zero() ? 0 : gs.series.low(); e <= trunc; ++e) {
                    json c;
                    c["z_exponent"] = e;
                    c["coefficient"] = to_json(gs.series.coefficient(e));
                    coeffs.push_back(c);
                }
                j["coefficients"] = coeffs;
                emit(j, *sink);
            }
            return 0;
        }
        if (cmd_coherent->parsed()) {
            MayaDiagram m = coherent_opts.build();
            std::complex<double> alpha(alpha_re, alpha_im);
            if (format == "csv") {
                CoherentState state(m, alpha);
                *sink << "x,t,re_phi,im_phi,abs2\n";
                for (long ix = 0; ix < grid.n_x; ++ix) {
                    double x = grid.x_min + (grid.x_max - grid.x_min) * static_cast<double>(ix) /
                                                static_cast<double>(grid.n_x - 1);
                    for (long it = 0; it < grid.n_t; ++it) {
                        double t = grid.t_min + (grid.t_max - grid.t_min) * static_cast<double>(it) /
                                                    static_cast<double>(grid.n_t - 1);
                        std::complex<double> v = state.value(x, t);
                        *sink << fmt_double(x) << "," << fmt_double(t) << ","
                              << fmt_double(v.real()) << "," << fmt_double(v.imag()) << ","
                              << fmt_double(std::norm(v)) << "\n";
                    }
                }
                return 0;
            }
            json j = header();
            j["diagram"] = to_json(m);
            j["alpha"] = {alpha_re, alpha_im};
            j["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"n_x", grid.n_x},
                         {"t_min", grid.t_min}, {"t_max", grid.t_max}, {"n_t", grid.n_t}};
            j["tdse_residual"] = tdse_residual(m, alpha, grid);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> ux(grid.x_min, grid.x_max);
            std::uniform_real_distribution<double> ut(grid.t_min, grid.t_max);
            std::vector<std::pair<double, double>> samples;
            samples.reserve(static_cast<size_t>(n_samples));
            for (long i = 0; i < n_samples; ++i) samples.emplace_back(ux(rng), ut(rng));
            long qc = threshold_degree(m.partition());
            json eigenres;
            for (long q = qc; q <= qc + 1; ++q)
                eigenres[std::to_string(q)] = annihilator_eigen_residual(m, q, alpha, samples);
            j["eigen_residuals"] = eigenres;
            emit(j, *sink);
            return 0;
        }
        if (cmd_verify->parsed()) {
            return run_verify(verify_opts.build(), trunc, seed, *sink);
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace rexosc
