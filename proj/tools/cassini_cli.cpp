// cassini: plan bistatic radar barriers and probe their weak spots.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cassini/error.hpp"
#include "cassini/intrusion.hpp"
#include "cassini/io.hpp"
#include "cassini/line_vulnerability.hpp"
#include "cassini/oracles.hpp"
#include "cassini/planner.hpp"
#include "cassini/render.hpp"
#include "cassini/spacing.hpp"

using namespace cassini;
using nlohmann::json;

namespace {

unsigned env_threads() {
    const char* v = std::getenv("CASSINI_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0) throw InputError("CASSINI_THREADS must be a nonnegative integer");
    return static_cast<unsigned>(n);
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string positions_line(const std::vector<double>& xs) {
    std::string s;
    for (double x : xs) s += (s.empty() ? "" : " ") + fmt("%.6f", x);
    return s;
}

// A deployment file may hold a radar set or a line deployment.
struct LoadedDeployment {
    std::optional<LineDeployment> line;
    std::optional<RadarSet> radars;
};

LoadedDeployment load_deployment(const std::string& path) {
    const auto text = io::read_file(path);
    LoadedDeployment out;
    if (io::is_line_deployment(text)) {
        out.line = io::parse_line_deployment(text);
    } else {
        out.radars = io::parse_radar_set(text);
    }
    return out;
}

json points_json(const std::vector<Point>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back({p.x, p.y});
    return a;
}

// ---- plan ----

struct PlanArgs {
    std::size_t tx = 0;
    std::size_t rx = 0;
    double length = 0.0;
    std::string scheme = "opt";
    bool json = false;
};

int run_plan(const PlanArgs& a) {
    LineDeployment dep;
    if (a.scheme == "opt") {
        dep = plan(a.tx, a.rx, a.length).deployment;
    } else if (a.scheme == "heu1") {
        dep = heu1(a.tx, a.rx, a.length);
    } else {
        dep = heu2(a.tx, a.rx, a.length);
    }
    const double q = vulnerability(dep).q;
    if (a.json) {
        std::cout << io::to_json(dep, q);
        return 0;
    }
    std::cout << "scheme: " << a.scheme << "\n"
              << "order: " << format_order(dep.order) << "\n"
              << "c: " << fmt("%.10g", q) << "\n"
              << "positions: " << positions_line(dep.positions) << "\n";
    return 0;
}

// ---- spacings ----

struct SpacingArgs {
    std::vector<double> c{1.0, 5.0, 10.0, 20.0};
    std::size_t k = 4;
    bool json = false;
};

int run_spacings(const SpacingArgs& a) {
    if (a.json) {
        json rows = json::array();
        for (double c : a.c) rows.push_back({{"c", c}, {"e", ladder(c, a.k).values}});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    std::string header = "c";
    header.resize(8, ' ');
    for (std::size_t j = 0; j <= a.k; ++j) {
        std::string col = "e_" + std::to_string(j) + "(c)";
        col.resize(10, ' ');
        header += col;
    }
    while (header.back() == ' ') header.pop_back();
    std::cout << header << "\n";
    for (double c : a.c) {
        std::string row = fmt("%g", c);
        row.resize(8, ' ');
        for (double e : ladder(c, a.k).values) {
            std::string col = fmt("%.4f", e);
            col.resize(10, ' ');
            row += col;
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        std::cout << row << "\n";
    }
    return 0;
}

// ---- eval ----

struct EvalArgs {
    std::string deployment;
    std::optional<double> oracle_step;
    bool json = false;
};

int run_eval(const EvalArgs& a) {
    const auto dep = io::parse_line_deployment(io::read_file(a.deployment));
    const auto rep = vulnerability(dep);
    std::optional<double> oracle;
    if (a.oracle_step) oracle = vulnerability_oracle(dep, *a.oracle_step);
    if (a.json) {
        json out = json::parse(io::to_json(rep));
        if (oracle) out["oracle"] = *oracle;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "q: " << fmt("%.10g", rep.q) << "\n";
    if (oracle) std::cout << "oracle: " << fmt("%.10g", *oracle) << " (step " << fmt("%g", *a.oracle_step) << ")\n";
    std::cout << "witnesses:\n";
    for (const auto& w : rep.witnesses) std::cout << "  " << fmt("%12.6f", w.position) << "  " << fmt("%.10g", w.value) << "\n";
    return 0;
}

// ---- shared scene setup ----

Scene base_scene(const RadarSet& radars, const RectField& field) {
    Scene s;
    s.bounds = {0.0, 0.0, field.width, field.height};
    s.transmitters = radars.transmitters();
    s.receivers = radars.receivers();
    return s;
}

// ---- worst-path ----

struct WorstPathArgs {
    std::string field;
    std::string deployment;
    double epsilon = 0.0;
    std::optional<double> delta;
    std::string svg;
    bool json = false;
};

int run_worst_path(const WorstPathArgs& a) {
    const RectField field = io::parse_field_dims(a.field);
    const auto loaded = load_deployment(a.deployment);
    const RadarSet radars = loaded.line ? io::radars_on_midline(*loaded.line, field) : *loaded.radars;
    const double delta = a.delta.value_or(default_delta(field, radars, a.epsilon));
    const auto res = worst_case_path(field, radars, a.epsilon, delta, env_threads());

    if (!a.svg.empty()) {
        Scene scene = base_scene(radars, field);
        scene.path = res.path;
        if (res.weight > 0.0) scene.levels = {res.weight / 4, res.weight / 2, res.weight};
        if (loaded.line) {
            const double y = field.height / 2;
            scene.barrier = Segment{{0.0, y}, {loaded.line->h, y}};
        }
        scene.title = "worst-case path, W = " + fmt("%.4f", res.weight);
        io::write_file(a.svg, render_svg(scene));
    }
    if (a.json) {
        std::cout << io::to_json(res);
        return 0;
    }
    std::cout << "weight: " << fmt("%.10g", res.weight) << "\n"
              << "delta: " << fmt("%g", delta) << "\n"
              << "cells on path: " << res.path.size() << "\n";
    if (loaded.line) std::cout << "barrier Q: " << fmt("%.10g", vulnerability(*loaded.line).q) << "\n";
    if (!a.svg.empty()) std::cout << "svg: " << a.svg << "\n";
    return 0;
}

// ---- oracle ----

struct ExhaustiveArgs {
    std::size_t tx = 0;
    std::size_t rx = 0;
    double length = 0.0;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_exhaustive(const ExhaustiveArgs& a) {
    const auto r = exhaustive_plan(a.tx, a.rx, a.length, a.seed);
    const double planned = plan(a.tx, a.rx, a.length).c;
    if (a.json) {
        json ties = json::array();
        for (const auto& o : r.ties) ties.push_back(format_order(o));
        std::cout << json{{"best_order", format_order(r.best_order)},
                          {"best_c", r.best_c},
                          {"best_is_candidate", r.best_is_candidate},
                          {"plan_c", planned},
                          {"ties", ties},
                          {"orders_examined", r.orders_examined},
                          {"candidate_orders", r.candidate_orders}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "best order: " << format_order(r.best_order) << (r.best_is_candidate ? "" : " (non-candidate)") << "\n"
              << "best c: " << fmt("%.10g", r.best_c) << "\n"
              << "plan c: " << fmt("%.10g", planned) << "\n"
              << "orders: " << r.orders_examined << " (" << r.candidate_orders << " candidates)\n";
    for (const auto& o : r.ties) std::cout << "tie: " << format_order(o) << "\n";
    return 0;
}

struct PerturbArgs {
    std::string deployment;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_perturb(const PerturbArgs& a) {
    const auto dep = io::parse_line_deployment(io::read_file(a.deployment));
    const auto r = perturbation_check(dep, a.trials, a.seed);
    if (a.json) {
        std::cout << json{{"holds", r.holds}, {"reference", r.reference}, {"min_observed", r.min_observed},
                          {"trials", r.trials}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "holds: " << (r.holds ? "true" : "false") << "\n"
              << "reference q: " << fmt("%.10g", r.reference) << "\n"
              << "min observed: " << fmt("%.10g", r.min_observed) << "\n"
              << "trials: " << r.trials << "\n";
    return 0;
}

// ---- render ----

struct RenderArgs {
    std::string input;
    std::string svg;
    std::string field;
    std::vector<double> levels;
    std::string path;
    bool json = false;
};

int run_render(const RenderArgs& a) {
    const auto loaded = load_deployment(a.input);
    Scene scene;
    if (!a.field.empty()) {
        const RectField field = io::parse_field_dims(a.field);
        const RadarSet radars = loaded.line ? io::radars_on_midline(*loaded.line, field) : *loaded.radars;
        scene = base_scene(radars, field);
        if (loaded.line) {
            scene.barrier = Segment{{0.0, field.height / 2}, {loaded.line->h, field.height / 2}};
        }
    } else if (loaded.line) {
        // Strip around the barrier, nodes on y = 0.
        const double h = loaded.line->h;
        for (double x : loaded.line->positions_of(NodeKind::Transmitter)) scene.transmitters.push_back({x, 0.0});
        for (double x : loaded.line->positions_of(NodeKind::Receiver)) scene.receivers.push_back({x, 0.0});
        scene.bounds = {0.0, -h / 4, h, h / 4};
        scene.barrier = Segment{{0.0, 0.0}, {h, 0.0}};
    } else {
        double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
        for (const auto* list : {&loaded.radars->transmitters(), &loaded.radars->receivers()}) {
            for (const auto& p : *list) {
                x0 = std::min(x0, p.x), y0 = std::min(y0, p.y);
                x1 = std::max(x1, p.x), y1 = std::max(y1, p.y);
            }
        }
        const double pad = 0.1 * std::max({x1 - x0, y1 - y0, 1.0});
        scene.bounds = {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
        scene.transmitters = loaded.radars->transmitters();
        scene.receivers = loaded.radars->receivers();
    }
    scene.levels = a.levels;
    if (scene.levels.empty() && loaded.line) scene.levels = {vulnerability(*loaded.line).q};
    if (!a.path.empty()) scene.path = io::parse_path_result(io::read_file(a.path)).path;
    io::write_file(a.svg, render_svg(scene));
    if (a.json) {
        std::cout << json{{"svg", a.svg}, {"levels", scene.levels}, {"transmitters", points_json(scene.transmitters)},
                          {"receivers", points_json(scene.receivers)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "svg: " << a.svg << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bistatic radar barrier planning and worst-case intrusion search"};
    app.require_subcommand(1);
    int rc = 0;

    PlanArgs plan_args;
    auto* plan_cmd = app.add_subcommand("plan", "Place M transmitters and N receivers on a barrier of length h");
    plan_cmd->add_option("--tx", plan_args.tx, "transmitter count M")->required()->check(CLI::PositiveNumber);
    plan_cmd->add_option("--rx", plan_args.rx, "receiver count N")->required()->check(CLI::PositiveNumber);
    plan_cmd->add_option("--length", plan_args.length, "barrier length h")->required()->check(CLI::PositiveNumber);
    plan_cmd->add_option("--scheme", plan_args.scheme, "opt, heu1 or heu2")
        ->check(CLI::IsMember({"opt", "heu1", "heu2"}));
    plan_cmd->add_flag("--json", plan_args.json, "emit JSON");
    plan_cmd->callback([&] { rc = run_plan(plan_args); });

    SpacingArgs sp_args;
    auto* sp_cmd = app.add_subcommand("spacings", "Print the balanced spacing ladder e_0(c)..e_k(c)");
    sp_cmd->add_option("--c", sp_args.c, "one or more levels c")->check(CLI::PositiveNumber);
    sp_cmd->add_option("--k", sp_args.k, "last rung index");
    sp_cmd->add_flag("--json", sp_args.json, "emit JSON");
    sp_cmd->callback([&] { rc = run_spacings(sp_args); });

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "Vulnerability of a line deployment");
    eval_cmd->add_option("--deployment", eval_args.deployment, "line deployment JSON")->required();
    eval_cmd->add_option("--oracle-step", eval_args.oracle_step, "also report a dense-sampling check at this step");
    eval_cmd->add_flag("--json", eval_args.json, "emit JSON");
    eval_cmd->callback([&] { rc = run_eval(eval_args); });

    WorstPathArgs wp_args;
    auto* wp_cmd = app.add_subcommand("worst-path", "Worst-case intrusion path through a rectangular field");
    wp_cmd->add_option("--field", wp_args.field, "field size WxH")->required();
    wp_cmd->add_option("--deployment", wp_args.deployment, "radar set or line deployment JSON")->required();
    wp_cmd->add_option("--epsilon", wp_args.epsilon, "band width")->required();
    wp_cmd->add_option("--delta", wp_args.delta, "cell size");
    wp_cmd->add_option("--svg", wp_args.svg, "write a picture here");
    wp_cmd->add_flag("--json", wp_args.json, "emit JSON");
    wp_cmd->callback([&] { rc = run_worst_path(wp_args); });

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross checks");
    oracle_cmd->require_subcommand(1);
    ExhaustiveArgs ex_args;
    auto* ex_cmd = oracle_cmd->add_subcommand("exhaustive", "Try every order of M T's and N R's");
    ex_cmd->add_option("--tx", ex_args.tx, "transmitter count M")->required();
    ex_cmd->add_option("--rx", ex_args.rx, "receiver count N")->required();
    ex_cmd->add_option("--length", ex_args.length, "barrier length h")->required()->check(CLI::PositiveNumber);
    ex_cmd->add_option("--seed", ex_args.seed, "restart seed");
    ex_cmd->add_flag("--json", ex_args.json, "emit JSON");
    ex_cmd->callback([&] { rc = run_exhaustive(ex_args); });
    PerturbArgs pt_args;
    auto* pt_cmd = oracle_cmd->add_subcommand("perturb", "Jitter a deployment and look for a lower vulnerability");
    pt_cmd->add_option("--deployment", pt_args.deployment, "line deployment JSON")->required();
    pt_cmd->add_option("--trials", pt_args.trials, "number of trials");
    pt_cmd->add_option("--seed", pt_args.seed, "master seed");
    pt_cmd->add_flag("--json", pt_args.json, "emit JSON");
    pt_cmd->callback([&] { rc = run_perturb(pt_args); });

    RenderArgs r_args;
    auto* r_cmd = app.add_subcommand("render", "Draw radars, Cassini contours and an optional path");
    r_cmd->add_option("--input", r_args.input, "radar set or line deployment JSON")->required();
    r_cmd->add_option("--svg", r_args.svg, "output SVG")->required();
    r_cmd->add_option("--field", r_args.field, "field size WxH; line deployments go on its midline");
    r_cmd->add_option("--levels", r_args.levels, "contour levels (default: the barrier's Q)");
    r_cmd->add_option("--path", r_args.path, "path result JSON to overlay");
    r_cmd->add_flag("--json", r_args.json, "emit JSON");
    r_cmd->callback([&] { rc = run_render(r_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
