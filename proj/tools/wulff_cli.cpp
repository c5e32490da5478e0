#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wulff/commands.hpp"
#include "wulff/errors.hpp"

using namespace wulff;

namespace {

struct Flags {
    std::string spec;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<double> tol;
    std::optional<std::size_t> threads;
    std::string out;
    std::string svg;
    std::string csv;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

ShapeSpec load_spec(const Flags& f) {
    ShapeSpec s = parse_shape_spec(read_file(f.spec));
    if (f.k) {
        if (*f.k < 8) fail(ErrorCode::InvalidArgument, "--k: direction count must be at least 8");
        s.k = *f.k;
    }
    return s;
}

void check_tol(const Flags& f) {
    if (f.tol && !(*f.tol >= 0.0)) fail(ErrorCode::InvalidArgument, "--tol: must be non-negative");
}

int run_check(const Flags& f) {
    check_tol(f);
    RunConfig rc;
    std::optional<ShapeSpec> shape;
    if (!f.spec.empty()) {
        const std::string text = read_file(f.spec);
        // a shape spec names its kind; anything else is a run config
        bool is_shape = false;
        try {
            const Json j = Json::parse(text);
            is_shape = j.is_object() && j.contains("kind");
        } catch (const Json::parse_error&) {
        }
        if (is_shape) {
            shape = parse_shape_spec(text);
        } else {
            rc = parse_run_config(text);
        }
    }
    SuiteConfig& c = rc.suite;
    if (f.seed) c.seed = *f.seed;
    if (f.trials) c.trials = *f.trials;
    if (f.tol) c.tol = *f.tol;
    if (f.threads) c.threads = *f.threads;
    if (f.k) {
        if (*f.k < 8) fail(ErrorCode::InvalidArgument, "--k: direction count must be at least 8");
        c.samples = *f.k;
        if (shape) shape->k = *f.k;
    }
    if (!f.out.empty()) rc.out = f.out;
    const CommandOutput result = shape ? cmd_check(*shape, c) : cmd_check(rc);
    emit(result.text, rc.out.value_or(""));
    return result.status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wulff shapes, their spherical lifts, duality and width checks"};
    app.require_subcommand(1);
    Flags f;

    auto spec_opt = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--spec", f.spec, "shape spec JSON file");
        if (required) o->required();
        cmd->add_option("--k", f.k, "direction count");
    };
    auto out_opt = [&](CLI::App* cmd) { cmd->add_option("--out", f.out, "output file (default stdout)"); };

    CLI::App* build = app.add_subcommand("build", "Wulff polygon of a support function");
    spec_opt(build, true);
    out_opt(build);

    CLI::App* dual = app.add_subcommand("dual", "dual Wulff shape and self-duality verdict");
    spec_opt(dual, true);
    dual->add_option("--tol", f.tol, "self-duality tolerance");
    out_opt(dual);

    CLI::App* metrics = app.add_subcommand("metrics", "width, thickness and diameter of the spherical lift");
    spec_opt(metrics, true);
    metrics->add_option("--tol", f.tol, "constancy tolerance");
    out_opt(metrics);

    CLI::App* check = app.add_subcommand("check", "run the checks on the preset suite, a config or one shape");
    check->add_option("--spec", f.spec, "shape spec or run config JSON file");
    check->add_option("--k", f.k, "direction count");
    check->add_option("--seed", f.seed, "master seed");
    check->add_option("--trials", f.trials, "random polygons per ensemble");
    check->add_option("--tol", f.tol, "tolerance for every check");
    check->add_option("--threads", f.threads, "worker threads, 0 for all cores");
    out_opt(check);

    CLI::App* render = app.add_subcommand("render", "SVG of the Wulff shape and its dual");
    spec_opt(render, true);
    render->add_option("--svg", f.svg, "SVG output (default stdout)");
    render->add_option("--csv", f.csv, "CSV of boundary samples");
    render->add_option("--out", f.svg, "same as --svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("UsageError", e.what());
        return kExitInputError;
    }

    try {
        if (*build) {
            emit(cmd_build(load_spec(f)), f.out);
        } else if (*dual) {
            check_tol(f);
            emit(cmd_dual(load_spec(f), {f.tol}), f.out);
        } else if (*metrics) {
            check_tol(f);
            emit(cmd_metrics(load_spec(f), {f.tol}), f.out);
        } else if (*check) {
            return run_check(f);
        } else if (*render) {
            const RenderOutput r = cmd_render(load_spec(f));
            emit(r.svg, f.svg);
            if (!f.csv.empty()) write_file(f.csv, r.csv);
        }
    } catch (const GeometryError& e) {
        std::cerr << error_json(error_code_name(e.code()), e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << error_json("InternalError", e.what());
        return kExitInputError;
    }
    return kExitOk;
}
