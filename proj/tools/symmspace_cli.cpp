// Command line entry point: verification suites and table generation with
// machine-readable output. Exit codes: 0 all checks within tolerance, 1 check
// failure, 2 configuration error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "symmspace/basis2.hpp"
#include "symmspace/generators.hpp"
#include "symmspace/io.hpp"
#include "symmspace/mehler_fock.hpp"
#include "symmspace/spherical.hpp"

using namespace symmspace;

namespace {

struct Common {
    int dim = 2;
    std::uint64_t seed = 12345;
    bool seed_given = false;
    std::string out;
    std::string format = "json";
};

std::uint64_t effective_seed(const Common& c) {
    if (c.seed_given) return c.seed;
    if (const char* env = std::getenv("SYMM_SEED")) return std::stoull(env);
    return c.seed;
}

void emit(const json& report, const std::string& out) {
    std::string text = report.dump(2);
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot write " + out);
        f << text << "\n";
    }
}

SpectralParameter parse_lambda(const std::string& text, int d) {
    if (text.empty()) {
        Eigen::VectorXd v(d);
        for (int i = 0; i < d; ++i) v(i) = (d - 1 - 2.0 * i) / 2.0;
        return SpectralParameter(v);
    }
    Eigen::VectorXd v = parse_double_list(text);
    if (v.size() != d) throw std::invalid_argument("--lambda: expected " + std::to_string(d) +
                                                   " entries");
    return SpectralParameter(v - Eigen::VectorXd::Constant(d, v.mean()));
}

SphericalEvaluator make_evaluator(const SpectralParameter& lam, int nodes, int samples,
                                  std::uint64_t seed) {
    return lam.dim() == 2 ? SphericalEvaluator::so2_gauss(lam, nodes)
                          : SphericalEvaluator::haar_mc(lam, samples, seed);
}

int run_verify_algebra(const Common& c, int trials, double tol) {
    WallTimer timer;
    AlgebraReport rep = verify_algebra(c.dim, trials, effective_seed(c));
    json out = {
        {"command", "verify-algebra"},
        {"config", {{"dim", c.dim}, {"trials", trials}, {"seed", rep.seed}, {"tol", tol}}},
        {"family", "gl(d,R) metric-momentum generators"},
        {"residuals",
         {{"lie", rep.max_residual_lie},
          {"covariance", rep.max_residual_covariance},
          {"scaling", rep.max_residual_scaling}}},
        {"max_residual", std::max({rep.max_residual_lie, rep.max_residual_covariance,
                                   rep.max_residual_scaling})},
        {"trials", rep.trials},
        {"seed", rep.seed},
        {"pass", rep.ok(tol)},
    };
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return rep.ok(tol) ? 0 : 1;
}

int run_root_system(const Common& c) {
    WallTimer timer;
    RestrictedRootSystem rs = RestrictedRootSystem::make(c.dim);
    json roots = json::array(), positives = json::array(), simples = json::array();
    for (const auto& a : rs.roots) roots.push_back(vector_json(a));
    for (const auto& a : rs.positives) positives.push_back(vector_json(a));
    for (const auto& a : rs.simples) simples.push_back(vector_json(a));
    json out = {
        {"command", "root-system"},
        {"config", {{"dim", c.dim}}},
        {"roots", roots},
        {"positives", positives},
        {"simples", simples},
        {"multiplicity", 1},
        {"rank", rs.rank()},
        {"rho", vector_json(rho(c.dim).entries())},
        {"positive_chamber", "strictly decreasing entries t_1 > t_2 > ... > t_d"},
        {"pass", true},
    };
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return 0;
}

int run_decompose(const Common& c, const std::string& mode, const std::string& matrix_text,
                  const std::string& in_path, double tol) {
    WallTimer timer;
    std::string text = matrix_text;
    if (text.empty() && !in_path.empty()) text = slurp(in_path);
    if (text.empty()) throw std::invalid_argument("decompose: need --matrix or --in");
    Eigen::MatrixXd m = matrix_from_json(json::parse(text));
    if (m.rows() != m.cols()) throw std::invalid_argument("decompose: matrix not square");

    json out = {{"command", "decompose"},
                {"config", {{"mode", mode}, {"tol", tol}}},
                {"input", matrix_json(m)}};
    double resid = 0.0;
    if (mode == "polar") {
        if (!sylvester_positive(m))
            throw std::invalid_argument("decompose: polar input must be positive definite");
        double det = m.determinant();
        Eigen::MatrixXd q = m * std::pow(det, -1.0 / m.rows());
        PolarFactors f = polar(MetricPoint(q));
        resid = (f.reconstruct() - q).norm() / q.norm();
        out["det_rescale"] = det;
        out["o"] = matrix_json(f.o.matrix());
        out["a"] = vector_json(f.a.entries());
    } else {
        double det = m.determinant();
        GroupElement g = GroupElement::special(m);
        out["det_rescale"] = det;
        if (mode == "iwasawa") {
            IwasawaFactors f = iwasawa(g);
            resid = (f.reconstruct() - g.matrix()).norm() / g.matrix().norm();
            out["O"] = matrix_json(f.O.matrix());
            out["H"] = vector_json(f.H.entries());
            out["N"] = matrix_json(f.N.matrix());
        } else if (mode == "cartan") {
            CartanFactors f = cartan(g);
            resid = (f.reconstruct() - g.matrix()).norm() / g.matrix().norm();
            out["O1"] = matrix_json(f.O1.matrix());
            out["aplus"] = vector_json(f.aplus.entries());
            out["O2"] = matrix_json(f.O2.matrix());
        } else {
            throw std::invalid_argument("decompose: mode must be iwasawa|cartan|polar");
        }
    }
    out["reconstruction_residual"] = resid;
    out["pass"] = resid < tol;
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return resid < tol ? 0 : 1;
}

int run_spherical_table(const Common& c, const std::string& lambda_text, int nodes, int samples,
                        const std::string& points_file) {
    WallTimer timer;
    SpectralParameter lam = parse_lambda(lambda_text, c.dim);
    SphericalEvaluator ev = make_evaluator(lam, nodes, samples, effective_seed(c));
    std::vector<Eigen::MatrixXd> points;
    if (points_file.empty()) {
        points.push_back(Eigen::MatrixXd::Identity(c.dim, c.dim));
    } else {
        json j = json::parse(slurp(points_file));
        for (const auto& entry : j) points.push_back(matrix_from_json(entry));
    }
    std::stringstream csv;
    csv << "# g_id,re_phi,im_phi,stderr\n";
    csv.precision(15);
    for (size_t k = 0; k < points.size(); ++k) {
        SphericalValue v = ev(GroupElement::special(points[k]));
        csv << k << "," << v.value.real() << "," << v.value.imag() << "," << v.std_error
            << "\n";
    }
    if (c.format == "csv") {
        if (c.out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(c.out);
            f << csv.str();
        }
    } else {
        json out = {{"command", "spherical-table"},
                    {"config",
                     {{"dim", c.dim},
                      {"lambda", vector_json(lam.entries())},
                      {"nodes", nodes},
                      {"samples", samples},
                      {"seed", effective_seed(c)}}},
                    {"csv", csv.str()},
                    {"pass", true}};
        out["wall_time_s"] = timer.seconds();
        emit(out, c.out);
    }
    return 0;
}

int run_radial_check(const Common& c, const std::string& lambda_text, int nodes, int samples,
                     double tol) {
    WallTimer timer;
    SpectralParameter lam = parse_lambda(lambda_text, c.dim);
    SphericalEvaluator ev = make_evaluator(lam, nodes, samples, effective_seed(c));
    std::vector<Eigen::VectorXd> grid;
    if (c.dim == 2) {
        for (double tau : {0.8, 1.4, 2.2}) {
            Eigen::VectorXd t(2);
            t << tau / 2.0, -tau / 2.0;
            grid.push_back(t);
        }
    } else {
        Eigen::VectorXd t(c.dim);
        for (int i = 0; i < c.dim; ++i) t(i) = 0.45 * (c.dim - 1 - 2.0 * i) + 0.05 * i * i;
        grid.push_back(CartanVector::project(t).entries());
    }
    RadialCheckReport rep = radial_laplacian_check(ev, grid);
    bool pass = rep.max_residual < tol;
    json out = {{"command", "radial-check"},
                {"config",
                 {{"dim", c.dim},
                  {"lambda", vector_json(lam.entries())},
                  {"nodes", nodes},
                  {"samples", samples},
                  {"seed", effective_seed(c)},
                  {"tol", tol}}},
                {"expected_eigenvalue", rep.expected_eigenvalue},
                {"mean_measured_eigenvalue", rep.mean_measured_eigenvalue},
                {"max_residual", rep.max_residual},
                {"pass", pass}};
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return pass ? 0 : 1;
}

int run_basis_eval(const Common& c, const std::string& family, double r, double s, int m,
                   double t, const std::string& coords_text, double tol) {
    WallTimer timer;
    Eigen::VectorXd coords = parse_double_list(coords_text);
    if (coords.size() != 3)
        throw std::invalid_argument("basis-eval: coords are q11,q12,q22");
    MetricPoint q = MetricPoint::from_coords(coords, 2);
    if (!sylvester_positive(q.matrix()))
        throw std::invalid_argument("basis-eval: point not positive definite");

    WaveFunction psi;
    if (family == "compact") {
        psi = basis_compact(BasisLabelCompact{r, s, m});
    } else if (family == "noncompact") {
        psi = basis_noncompact(BasisLabelNoncompact{r, s, t});
    } else {
        throw std::invalid_argument("basis-eval: family must be compact|noncompact");
    }
    Jet2 j = psi(coords);
    cplx value = j.value;
    // eigen-residual diagnostics relative to the state amplitude
    double scale = std::max(std::abs(value), 1e-300);
    double tt_resid =
        std::abs(apply(trace_T(2), j, coords).value - r * value) / scale;
    double c2_resid =
        std::abs(casimir2_apply(2, psi, q) - (0.25 + s * s) * value) / scale;
    bool pass = tt_resid < tol && c2_resid < tol;
    json out = {{"command", "basis-eval"},
                {"config",
                 {{"family", family},
                  {"r", r},
                  {"s", s},
                  {"m", m},
                  {"t", t},
                  {"coords", vector_json(coords)},
                  {"tol", tol}}},
                {"value", {{"re", value.real()}, {"im", value.imag()}}},
                {"residuals", {{"trace_eigen", tt_resid}, {"casimir_eigen", c2_resid}}},
                {"pass", pass}};
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return pass ? 0 : 1;
}

int run_mehler_fock(const Common& c, const std::string& direction, const std::string& in_path,
                    int order, double tol) {
    WallTimer timer;
    MehlerFockGrid grid;
    grid.m = order;
    MehlerFockTransform tr(grid);
    if (in_path.empty()) {
        // no input: run the built-in round-trip diagnostics
        auto f1 = [](double u) { return std::exp(-(u - 1.0)); };
        auto f2 = [](double u) { return std::exp(-2.0 * (u - 1.0)) / (1.0 + u); };
        auto f3 = [](double u) { return (u - 1.0) * std::exp(-(u - 1.0)); };
        json checks = json::array();
        bool pass = true;
        int id = 0;
        for (auto f : {std::function<double(double)>(f1), std::function<double(double)>(f2),
                       std::function<double(double)>(f3)}) {
            double eu = tr.roundtrip_u_error(f);
            double es = tr.roundtrip_s_error(tr.forward(f));
            double pl = tr.plancherel_ratio(f);
            pass = pass && eu < tol && es < tol && std::abs(pl - 1.0) < 0.01;
            checks.push_back({{"function", id++},
                              {"roundtrip_u_error", eu},
                              {"roundtrip_s_error", es},
                              {"plancherel_ratio", pl}});
        }
        json out = {{"command", "mehler-fock"},
                    {"config", {{"m", order}, {"tol", tol}, {"mode", "diagnostics"}}},
                    {"checks", checks},
                    {"pass", pass}};
        out["wall_time_s"] = timer.seconds();
        emit(out, c.out);
        return pass ? 0 : 1;
    }

    std::ifstream in(in_path);
    if (!in) throw std::invalid_argument("cannot open " + in_path);
    auto rows = read_csv2(in);
    if (rows.size() < 2) throw std::invalid_argument("mehler-fock: need a two-column CSV");
    std::sort(rows.begin(), rows.end());
    auto interp = [&rows](double x) {
        if (x <= rows.front().first || x >= rows.back().first) return 0.0;
        auto it = std::lower_bound(rows.begin(), rows.end(), std::make_pair(x, 0.0));
        auto lo = it - 1;
        double w = (x - lo->first) / (it->first - lo->first);
        return (1.0 - w) * lo->second + w * it->second;
    };

    std::stringstream csv;
    csv.precision(15);
    if (direction == "forward") {
        Eigen::VectorXd F = tr.forward(interp);
        csv << "# s,F\n";
        for (size_t i = 0; i < tr.s_nodes().size(); ++i)
            csv << tr.s_nodes()[i] << "," << F(i) << "\n";
    } else if (direction == "inverse") {
        Eigen::VectorXd Fs(tr.s_nodes().size());
        for (size_t i = 0; i < tr.s_nodes().size(); ++i) Fs(i) = interp(tr.s_nodes()[i]);
        Eigen::VectorXd f = tr.inverse(Fs);
        csv << "# u,f\n";
        for (size_t j = 0; j < tr.u_nodes().size(); ++j)
            csv << tr.u_nodes()[j] << "," << f(j) << "\n";
    } else {
        throw std::invalid_argument("mehler-fock: direction must be forward|inverse");
    }
    if (c.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(c.out);
        f << csv.str();
    }
    return 0;
}

int run_properties(const Common& c, const std::string& lambda_text, int nodes, int samples,
                   int elements, double tol) {
    WallTimer timer;
    SpectralParameter lam = parse_lambda(lambda_text, c.dim);
    int quad = c.dim == 2 ? nodes : samples;
    PropertyReport rep = check_properties(lam, quad, elements, effective_seed(c));
    bool pass = rep.ok(tol);
    json out = {{"command", "properties"},
                {"config",
                 {{"dim", c.dim},
                  {"lambda", vector_json(lam.entries())},
                  {"nodes", nodes},
                  {"samples", samples},
                  {"elements", elements},
                  {"seed", effective_seed(c)},
                  {"tol", tol}}},
                {"conjugation_symmetry", rep.conjugation_symmetry},
                {"bi_invariance", rep.bi_invariance},
                {"functional_equation", rep.functional_equation},
                {"boundedness_excess", rep.boundedness_excess},
                {"gram_min_eigenvalue", rep.gram_min_eigenvalue},
                {"continuity", rep.continuity},
                {"weyl_invariance", rep.weyl_invariance},
                {"error_scale", rep.error_scale}};
    if (c.dim == 2) {
        double conv = convolution_eigen_residual(std::abs(lam(0)) > 1e-12 ? std::abs(lam(0))
                                                                          : 1.0);
        out["convolution_residual"] = conv;
        pass = pass && conv < 1e-2;
    }
    out["pass"] = pass;
    out["wall_time_s"] = timer.seconds();
    emit(out, c.out);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for the metric operator algebra and harmonic "
                 "analysis on SL(d,R)/SO(d)"};
    app.require_subcommand(1);

    Common c;
    int trials = 100, nodes = 512, samples = 20000, elements = 20, m = 0;
    double tol = -1.0, r = 0.0, s = 1.0, tparam = 0.0;
    std::string mode = "iwasawa", matrix_text, in_path, points_file, lambda_text, family =
        "compact", direction = "forward", coords_text = "1.3,0.2,0.9";

    auto add_common = [&](CLI::App* sub, bool with_dim = true) {
        if (with_dim) sub->add_option("--dim", c.dim, "matrix dimension d");
        sub->add_option("--seed", c.seed, "RNG seed (overrides SYMM_SEED)")
            ->each([&](const std::string&) { c.seed_given = true; });
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--format", c.format, "json|csv");
        sub->add_option("--tol", tol, "pass/fail tolerance");
    };

    CLI::App* va = app.add_subcommand("verify-algebra", "commutator and scaling relations");
    add_common(va);
    va->add_option("--trials", trials, "random SPD evaluation points");

    CLI::App* rs = app.add_subcommand("root-system", "restricted root data");
    add_common(rs);

    CLI::App* dc = app.add_subcommand("decompose", "Iwasawa/Cartan/polar factorization");
    add_common(dc, false);
    dc->add_option("--mode", mode, "iwasawa|cartan|polar");
    dc->add_option("--matrix", matrix_text, "row-major JSON matrix");
    dc->add_option("--in", in_path, "path to a JSON matrix");

    CLI::App* st = app.add_subcommand("spherical-table", "spherical function values");
    add_common(st);
    st->add_option("--lambda", lambda_text, "spectral parameter, comma separated");
    st->add_option("--nodes", nodes, "circle quadrature nodes (d = 2)");
    st->add_option("--samples", samples, "Haar Monte Carlo samples (d >= 3)");
    st->add_option("--points-file", points_file, "JSON list of matrices");

    CLI::App* rc = app.add_subcommand("radial-check", "radial Laplacian eigencheck");
    add_common(rc);
    rc->add_option("--lambda", lambda_text, "spectral parameter, comma separated");
    rc->add_option("--nodes", nodes, "circle quadrature nodes (d = 2)");
    rc->add_option("--samples", samples, "Haar Monte Carlo samples (d >= 3)");

    CLI::App* be = app.add_subcommand("basis-eval", "explicit d = 2 basis states");
    add_common(be, false);
    be->add_option("--family", family, "compact|noncompact");
    be->add_option("--r", r, "trace eigenvalue");
    be->add_option("--s", s, "spectral parameter");
    be->add_option("--m", m, "angular momentum (compact family)");
    be->add_option("--t", tparam, "noncompact Cartan eigenvalue");
    be->add_option("--coords", coords_text, "metric point q11,q12,q22");

    CLI::App* mf = app.add_subcommand("mehler-fock", "Mehler-Fock transform");
    add_common(mf, false);
    mf->add_option("--direction", direction, "forward|inverse");
    mf->add_option("--in", in_path, "two-column CSV input (omit for diagnostics)");
    mf->add_option("--m", m, "transform order");

    CLI::App* pr = app.add_subcommand("properties", "spherical function property report");
    add_common(pr);
    pr->add_option("--lambda", lambda_text, "spectral parameter, comma separated");
    pr->add_option("--nodes", nodes, "circle quadrature nodes (d = 2)");
    pr->add_option("--samples", samples, "Haar Monte Carlo samples (d >= 3)");
    pr->add_option("--elements", elements, "random group elements tested");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        json err = {{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (va->parsed())
            return run_verify_algebra(c, trials, tol > 0 ? tol : 1e-9);
        if (rs->parsed()) return run_root_system(c);
        if (dc->parsed())
            return run_decompose(c, mode, matrix_text, in_path, tol > 0 ? tol : 1e-11);
        if (st->parsed())
            return run_spherical_table(c, lambda_text, nodes, samples, points_file);
        if (rc->parsed())
            return run_radial_check(c, lambda_text, nodes, samples,
                                    tol > 0 ? tol : (c.dim == 2 ? 1e-3 : 5e-2));
        if (be->parsed())
            return run_basis_eval(c, family, r, s, m, tparam, coords_text,
                                  tol > 0 ? tol : 1e-5);
        if (mf->parsed()) return run_mehler_fock(c, direction, in_path, m, tol > 0 ? tol : 1e-3);
        if (pr->parsed())
            return run_properties(c, lambda_text, nodes, samples, elements,
                                  tol > 0 ? tol : 1e-8);
    } catch (const std::exception& e) {
        json err = {{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
