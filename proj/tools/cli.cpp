// Copyright 2026 The lggm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "lggm/campaign.hpp"
#include "lggm/error.hpp"
#include "lggm/ggm.hpp"
#include "lggm/localize.hpp"
#include "lggm/qstate.hpp"
#include "lggm/spin.hpp"
#include "lggm/state_io.hpp"

namespace lggm::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string &text, char sep = ',') {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw InvalidArgument("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw InvalidArgument("not a number: '" + s + "'");
    }
    return v;
}

std::vector<double> parse_doubles(const std::string &text) {
    std::vector<double> out;
    for (const auto &p : split(text)) {
        out.push_back(parse_double(p));
    }
    return out;
}

std::vector<int> parse_ints(const std::string &text) {
    std::vector<int> out;
    for (const auto &p : split(text)) {
        const double v = parse_double(p);
        if (v != std::floor(v)) {
            throw InvalidArgument("not an integer: '" + p + "'");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

/// "a:b:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(const std::string &text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        return parse_doubles(text);
    }
    const double a = parse_double(parts[0]);
    const double b = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || b < a) {
        return {};
    }
    const long count = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> grid;
    for (long i = 0; i < count; ++i) {
        // Round to suppress accumulated binary noise in printed parameters.
        grid.push_back(std::round((a + i * step) * 1e12) / 1e12);
    }
    return grid;
}

std::string fmt9(double v) {
    return fmt::format("{:.9g}", v);
}

json angles_json(const std::vector<Angle> &angles) {
    json arr = json::array();
    for (const auto &a : angles) {
        arr.push_back({{"theta", a.theta}, {"phi", a.phi}});
    }
    return arr;
}

std::string cut_string(const Cut &cut) {
    std::string s = "{";
    for (std::size_t i = 0; i < cut.size(); ++i) {
        s += (i ? "," : "") + std::to_string(cut[i]);
    }
    return s + "}";
}

CutPolicy parse_policy(const std::string &name) {
    if (name == "all") {
        return AllCuts{};
    }
    if (name.rfind("max", 0) == 0) {
        const auto k = parse_ints(name.substr(3));
        if (k.size() != 1 || k[0] < 1) {
            throw InvalidArgument("cut policy maxK needs a positive K");
        }
        return MaxCutSize{k[0]};
    }
    throw InvalidArgument("cut policy must be 'all' or 'maxK', got '" + name + "'");
}

struct OptimizerOptions {
    int grid = 24;
    int refine = 200;
    double tolerance = 1e-7;

    void add(CLI::App *app) {
        app->add_option("--grid", grid, "Grid points per angle");
        app->add_option("--refine", refine, "Nelder-Mead iterations (0 disables refinement)");
        app->add_option("--refine-tol", tolerance, "Nelder-Mead simplex tolerance");
    }
    OptimizerSettings settings() const {
        OptimizerSettings s;
        s.grid_points_per_angle = grid;
        s.refine_iterations = refine;
        s.refine_tolerance = tolerance;
        return s;
    }
};

// ---------------------------------------------------------------------------
// measure

struct MeasureOptions {
    std::string state;
    std::string state_file;
    int n = 3;
    int k = 1;
    int class_index = 1;
    std::string coeffs;
    std::optional<double> a2_sq;
    double a = 0.25;
    std::uint64_t seed = 1;
    std::string measure = "ggm";
    std::string positions = "1";
    int m = 1;
    std::string cuts = "all";
    std::string save_state;
    bool json_output = false;
    OptimizerOptions optimizer;
};

PureState make_state(const MeasureOptions &o) {
    if (!o.state_file.empty()) {
        return read_state_file(o.state_file);
    }
    const auto coeffs = parse_doubles(o.coeffs);
    auto complex_coeffs = [&] {
        std::vector<Complex> c;
        for (double x : coeffs) {
            c.emplace_back(x);
        }
        return c;
    };
    if (o.state == "ghz") {
        if (o.a2_sq) {
            if (*o.a2_sq < 0.0 || *o.a2_sq > 1.0) {
                throw InvalidArgument("--a2sq must lie in [0, 1]");
            }
            return build(GhzSpec{o.n, Complex{std::sqrt(1.0 - *o.a2_sq)}, Complex{std::sqrt(*o.a2_sq)}});
        }
        check_dimension(o.n);
        return ghz_state(o.n);
    }
    if (o.state == "w") {
        check_dimension(o.n);
        return w_state(o.n);
    }
    if (o.state == "gw") {
        // Squared weights |a_i|^2 on qubits 1..N.
        std::vector<Complex> a;
        for (double w : coeffs) {
            if (w < 0.0) {
                throw InvalidArgument("gw weights must be non-negative");
            }
            a.emplace_back(std::sqrt(w));
        }
        return build(GeneralizedWSpec{a});
    }
    if (o.state == "dicke") {
        check_dimension(o.n);
        return build(DickeSpec{o.n, o.k});
    }
    if (o.state == "dicke-superposition") {
        return build(DickeSuperpositionSpec{complex_coeffs()});
    }
    if (o.state == "wclass") {
        if (coeffs.size() != 3) {
            throw InvalidArgument("wclass needs --coeffs a1,a2,a3");
        }
        return build(WClassSpec{coeffs[0], coeffs[1], coeffs[2]});
    }
    if (o.state == "fourq") {
        FourQubitClassSpec s{o.class_index, {}};
        if (coeffs.size() > 4) {
            throw InvalidArgument("fourq takes at most four coefficients");
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            s.a[i] = coeffs[i];
        }
        return build(s);
    }
    if (o.state == "example4" || o.state == "example5") {
        return build(MeasurementExampleSpec{o.state == "example4" ? 4 : 5, o.a});
    }
    if (o.state == "haar") {
        check_dimension(o.n);
        return haar_random(o.n, o.seed);
    }
    throw InvalidArgument("unknown state family '" + o.state + "'");
}

int cmd_measure(const MeasureOptions &o, std::ostream &out) {
    const auto state = make_state(o);
    if (!o.save_state.empty()) {
        write_state_file(state, o.save_state);
    }
    const auto policy = parse_policy(o.cuts);
    const auto settings = o.optimizer.settings();
    json result;
    result["n_qubits"] = state.n_qubits();
    std::vector<std::string> lines;
    for (const auto &what : split(o.measure)) {
        if (what == "ggm") {
            const auto g = ggm(state, policy);
            result["G"] = g.value;
            result["argmax_cut"] = g.argmax_cut;
            lines.push_back("G = " + fmt9(g.value));
            lines.push_back("argmax_cut = " + cut_string(g.argmax_cut));
        } else if (what == "lggm") {
            const auto positions = parse_ints(o.positions);
            const auto r = lggm(state, positions, settings, policy);
            const std::string label = "EL" + cut_string(positions);
            json entry = {{"positions", positions}, {"value", r.value}, {"angles", angles_json(r.optimal_angles)}};
            json outcomes = json::array();
            for (const auto &pv : r.per_outcome) {
                outcomes.push_back({{"probability", pv.probability}, {"ggm", pv.ggm}});
            }
            entry["outcomes"] = outcomes;
            result["lggm"].push_back(entry);
            lines.push_back(label + " = " + fmt9(r.value));
            for (std::size_t j = 0; j < r.optimal_angles.size(); ++j) {
                lines.push_back(fmt::format("  qubit {}: theta = {}, phi = {}", positions[j],
                                            fmt9(r.optimal_angles[j].theta), fmt9(r.optimal_angles[j].phi)));
            }
        } else if (what == "global") {
            const auto r = global_lggm(state, o.m, settings, policy);
            result["global"] = {{"m", o.m},
                                {"value", r.best.value},
                                {"positions", r.best.positions},
                                {"angles", angles_json(r.best.optimal_angles)},
                                {"symmetric", r.symmetric}};
            lines.push_back("EGL = " + fmt9(r.best.value) + " at " + cut_string(r.best.positions));
        } else {
            throw InvalidArgument("unknown measure '" + what + "' (use ggm, lggm, global)");
        }
    }
    if (o.json_output) {
        out << result.dump(2) << '\n';
    } else {
        for (const auto &l : lines) {
            out << l << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// campaign

struct CampaignOptions {
    std::string family = "haar";
    int n = 3;
    int class_index = 1;
    int samples = 10000;
    std::uint64_t seed = 1;
    std::string measure = "G,EL1";
    double tolerance = 1e-4;
    std::string cuts = "all";
    std::string csv;
    std::string summary;
    int workers = 0;
    OptimizerOptions optimizer;
};

int cmd_campaign(const CampaignOptions &o, std::ostream &out) {
    CampaignSpec spec;
    const auto family = parse_family(o.family);
    if (!family) {
        throw InvalidArgument("unknown family '" + o.family + "'");
    }
    spec.family = *family;
    spec.n_qubits = o.n;
    spec.class_index = o.class_index;
    spec.n_samples = o.samples;
    spec.seed = o.seed;
    spec.equality_tolerance = o.tolerance;
    spec.optimizer = o.optimizer.settings();
    spec.policy = parse_policy(o.cuts);
    spec.workers = o.workers;
    spec.measure_g = spec.measure_el1 = false;
    for (const auto &m : split(o.measure)) {
        if (m == "G") {
            spec.measure_g = true;
        } else if (m == "EL1") {
            spec.measure_el1 = true;
        } else if (m == "EL12") {
            spec.measure_el12 = true;
        } else if (m == "global") {
            spec.measure_global = true;
        } else if (m == "conjecture") {
            spec.check_conjecture = true;
        } else {
            throw InvalidArgument("unknown measure '" + m + "' (use G, EL1, EL12, global, conjecture)");
        }
    }
    check_campaign_spec(spec);
    const auto rows = run_campaign(spec);
    const auto summary = summarize(rows, spec.equality_tolerance);
    const auto summary_text = summary_json(spec, summary);
    if (o.csv.empty()) {
        write_campaign_csv(out, rows);
    } else {
        std::ofstream f(o.csv);
        write_campaign_csv(f, rows);
        if (!f) {
            throw std::runtime_error("cannot write " + o.csv);
        }
    }
    if (o.summary.empty()) {
        out << summary_text << '\n';
    } else {
        std::ofstream f(o.summary);
        f << summary_text << '\n';
        if (!f) {
            throw std::runtime_error("cannot write " + o.summary);
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// spin

struct SpinOptions {
    std::string model = "ising";
    int n = 8;
    std::string lambda;
    std::string delta;
    double anisotropy = 0.5;
    double field = 0.0;
    std::string measure = "G,EL1";
    std::string cuts = "max2";
    std::string csv;
    std::string report;
    bool no_warm_start = false;
    OptimizerOptions optimizer{4, 100, 1e-6};
};

json extremum_json(const SweepResult &r, SpinMeasure m, ExtremumKind kind) {
    try {
        const auto e = locate_extremum(r, m, kind);
        return {{"parameter", e.parameter}, {"index", e.index}, {"sharpness", e.sharpness}};
    } catch (const FlatSeriesError &) {
        return nullptr;
    }
}

int cmd_spin(const SpinOptions &o, std::ostream &out) {
    SpinModelSpec base;
    base.n_sites = o.n;
    SweepSettings settings;
    if (o.model == "ising") {
        base.model = IsingModel{};
        if (o.lambda.empty() || !o.delta.empty()) {
            throw InvalidArgument("the Ising sweep takes --lambda");
        }
    } else if (o.model == "xxz") {
        base.model = XxzModel{1.0, o.anisotropy, o.field};
        if (o.lambda.empty() == o.delta.empty()) {
            throw InvalidArgument("the XXZ sweep takes exactly one of --lambda and --delta");
        }
    } else {
        throw InvalidArgument("unknown model '" + o.model + "' (use ising or xxz)");
    }
    settings.parameter = o.lambda.empty() ? SweepParameter::Delta : SweepParameter::Lambda;
    settings.grid = parse_grid(o.lambda.empty() ? o.delta : o.lambda);
    if (settings.grid.empty()) {
        throw InvalidArgument("parameter grid is empty");
    }
    check_dimension(o.n);
    settings.measures.clear();
    for (const auto &m : split(o.measure)) {
        if (m == "G") {
            settings.measures.push_back(SpinMeasure::G);
        } else if (m == "EL1") {
            settings.measures.push_back(SpinMeasure::EL1);
        } else if (m == "EL12") {
            settings.measures.push_back(SpinMeasure::EL12);
        } else {
            throw InvalidArgument("unknown measure '" + m + "' (use G, EL1, EL12)");
        }
    }
    settings.policy = parse_policy(o.cuts);
    settings.optimizer = o.optimizer.settings();
    settings.warm_start = !o.no_warm_start;

    const auto result = sweep(base, settings);
    const auto grid = result.grid();

    std::ostringstream csv;
    csv << "param,energy,G,EL1,EL12,dG,dEL1,dEL12\n";
    std::vector<std::vector<double>> derivs(3);
    const SpinMeasure all[] = {SpinMeasure::G, SpinMeasure::EL1, SpinMeasure::EL12};
    std::vector<bool> have(3, false);
    for (int i = 0; i < 3; ++i) {
        have[i] = std::find(settings.measures.begin(), settings.measures.end(), all[i]) != settings.measures.end();
        if (have[i] && grid.size() >= 3) {
            derivs[i] = result.derivative(all[i]);
        }
    }
    for (std::size_t p = 0; p < result.points.size(); ++p) {
        const auto &pt = result.points[p];
        csv << fmt9(pt.parameter) << ',' << fmt9(pt.energy);
        for (const auto &v : {pt.g, pt.el1, pt.el12}) {
            csv << ',' << (v ? fmt9(*v) : "");
        }
        for (int i = 0; i < 3; ++i) {
            const bool interior = p >= 1 && p + 1 < grid.size() && !derivs[i].empty();
            csv << ',' << (interior ? fmt9(derivs[i][p - 1]) : "");
        }
        csv << '\n';
    }

    json report;
    report["model"] = o.model;
    report["n_sites"] = o.n;
    report["parameter"] = settings.parameter == SweepParameter::Lambda ? "lambda" : "delta";
    report["grid"] = grid;
    std::vector<int> sectors;
    std::vector<bool> degenerate;
    for (const auto &pt : result.points) {
        sectors.push_back(pt.sector);
        degenerate.push_back(pt.degenerate);
    }
    report["sectors"] = sectors;
    report["degenerate"] = degenerate;
    for (int i = 0; i < 3; ++i) {
        if (!have[i] || grid.size() < 3) {
            continue;
        }
        report["extrema"][to_string(all[i])] = {
            {"derivative_max", extremum_json(result, all[i], ExtremumKind::DerivativeMax)},
            {"series_min", extremum_json(result, all[i], ExtremumKind::SeriesMin)},
            {"cusp", extremum_json(result, all[i], ExtremumKind::Cusp)},
        };
    }

    if (o.csv.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(o.csv);
        f << csv.str();
        if (!f) {
            throw std::runtime_error("cannot write " + o.csv);
        }
    }
    if (o.report.empty()) {
        out << report.dump(2) << '\n';
    } else {
        std::ofstream f(o.report);
        f << report.dump(2) << '\n';
        if (!f) {
            throw std::runtime_error("cannot write " + o.report);
        }
    }
    return kOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Genuine multipartite entanglement (GGM) and its localizable version (LGGM)"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    MeasureOptions mo;
    auto *measure = app.add_subcommand("measure", "GGM / LGGM of one state");
    measure->add_option("--state", mo.state,
                        "ghz, w, gw, dicke, dicke-superposition, wclass, fourq, example4, example5, haar");
    measure->add_option("--state-file", mo.state_file, "State JSON file");
    measure->add_option("--n", mo.n, "Number of qubits");
    measure->add_option("--k", mo.k, "Dicke excitations");
    measure->add_option("--class", mo.class_index, "Four-qubit class index 1..9");
    measure->add_option("--coeffs", mo.coeffs, "Comma-separated family coefficients");
    measure->add_option("--a2sq", mo.a2_sq, "gGHZ weight |a2|^2");
    measure->add_option("--a", mo.a, "Example-state parameter");
    measure->add_option("--seed", mo.seed, "Haar seed");
    measure->add_option("--measure", mo.measure, "Comma list of ggm, lggm, global");
    measure->add_option("--positions", mo.positions, "Measured qubits for lggm");
    measure->add_option("--m", mo.m, "Measured-qubit count for global");
    measure->add_option("--cuts", mo.cuts, "Cut policy: all or maxK");
    measure->add_option("--save-state", mo.save_state, "Write the state as JSON");
    measure->add_flag("--json", mo.json_output, "JSON output");
    mo.optimizer.add(measure);

    CampaignOptions co;
    auto *campaign = app.add_subcommand("campaign", "Random-state sampling campaign");
    campaign->add_option("--family", co.family, "haar, gw, dicke-superposition, wclass, ghzclass, fourq, mixed3");
    campaign->add_option("--n", co.n, "Number of qubits");
    campaign->add_option("--class", co.class_index, "Four-qubit class index");
    campaign->add_option("--samples", co.samples, "Number of samples");
    campaign->add_option("--seed", co.seed, "Campaign seed");
    campaign->add_option("--measure", co.measure, "Comma list of G, EL1, EL12, global, conjecture");
    campaign->add_option("--tolerance", co.tolerance, "Equality tolerance");
    campaign->add_option("--cuts", co.cuts, "Cut policy: all or maxK");
    campaign->add_option("--csv", co.csv, "CSV output file (default stdout)");
    campaign->add_option("--summary", co.summary, "Summary JSON file (default stdout)");
    campaign->add_option("--workers", co.workers, "Worker threads (default LGGM_THREADS or all cores)");
    co.optimizer.add(campaign);

    SpinOptions so;
    auto *spin = app.add_subcommand("spin", "Ising / XXZ ground-state sweep");
    spin->add_option("--model", so.model, "ising or xxz");
    spin->add_option("--n", so.n, "Number of sites");
    spin->add_option("--lambda", so.lambda, "Grid a:b:step or list; Ising J/h, XXZ h'/J'");
    spin->add_option("--delta", so.delta, "XXZ anisotropy grid a:b:step or list");
    spin->add_option("--aniso", so.anisotropy, "XXZ anisotropy for lambda sweeps");
    spin->add_option("--field", so.field, "XXZ h'/J' for delta sweeps");
    spin->add_option("--measure", so.measure, "Comma list of G, EL1, EL12");
    spin->add_option("--cuts", so.cuts, "Cut policy: all or maxK");
    spin->add_option("--csv", so.csv, "CSV output file (default stdout)");
    spin->add_option("--report", so.report, "Extremum report JSON file (default stdout)");
    spin->add_flag("--no-warm-start", so.no_warm_start, "Do not reuse the previous optimum");
    so.optimizer.add(spin);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (measure->parsed()) {
            if (mo.state.empty() == mo.state_file.empty()) {
                throw InvalidArgument("give exactly one of --state and --state-file");
            }
            return cmd_measure(mo, out);
        }
        if (campaign->parsed()) {
            return cmd_campaign(co, out);
        }
        return cmd_spin(so, out);
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << '\n';
        return kDimension;
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace lggm::cli
