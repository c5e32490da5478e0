#include "wulff/theorem_suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "wulff/numeric.hpp"
#include "wulff/presets.hpp"
#include "wulff/width_metrics.hpp"

namespace wulff {

namespace {

// Consecutive boundary samples whose chords turn by less than this lie on one great circle.
constexpr double kCollinearTurn = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void finish(CheckReport& r, bool ok) { r.status = ok ? CheckStatus::Pass : CheckStatus::Fail; }

void not_applicable(CheckReport& r, std::string why) {
    r.status = CheckStatus::NotApplicable;
    r.note = std::move(why);
}

void add_vertices(CheckReport& r, const SphericalPolygon& p) {
    for (const Vec3& v : p.vertices()) r.witnesses.emplace_back(SphericalPoint(v));
}

std::string verdict(bool a) { return a ? "true" : "false"; }

}  // namespace

std::uint64_t check_seed(std::uint64_t master, std::string_view name) { return splitmix64(master ^ fnv1a(name)); }

std::string_view check_family(std::string_view name) { return name.substr(0, name.find('/')); }

CheckReport check_constant_width_polytope(std::size_t trials, std::uint64_t seed, double tol) {
    if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
    CheckReport r;
    r.name = "constant_width_polytope";
    r.seed = seed;
    r.trials = trials;
    Rng rng(seed);
    std::size_t constant = 0;
    std::size_t violations = 0;
    double min_spread = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        const SphericalPolygon p = random_spherical_polygon(rng);
        const WidthReport w = is_constant_width(p, tol);
        min_spread = std::min(min_spread, w.max_width - w.min_width);
        if (!w.constant) continue;
        ++constant;
        if (std::abs(w.delta - kHalfPi) > tol) {
            if (violations == 0) add_vertices(r, p);
            ++violations;
        }
    }
    bool ok = r.add("constant_width_not_half_pi", static_cast<double>(violations), 0.0);
    r.measure("constant_width_instances", static_cast<double>(constant));
    r.measure("non_constant_instances", static_cast<double>(trials - constant));
    r.measure("smallest_width_spread", min_spread);

    // the octant and random rotations of it
    const SphericalPolygon octant = octant_polygon();
    double worst_delta = 0.0;
    double worst_spread = 0.0;
    std::optional<SphericalPolygon> worst;
    for (int i = 0; i <= 20; ++i) {
        const SphericalPolygon p = i == 0 ? octant : random_rotation(octant, rng);
        const WidthReport w = is_constant_width(p, tol);
        const double d = std::abs(w.delta - kHalfPi);
        const double s = w.max_width - w.min_width;
        if (d > worst_delta || s > worst_spread || !worst) worst = p;
        worst_delta = std::max(worst_delta, d);
        worst_spread = std::max(worst_spread, s);
    }
    const bool octants = r.add("octant_delta_error", worst_delta, tol) && r.add("octant_width_spread", worst_spread, tol);
    if (!octants) add_vertices(r, *worst);
    finish(r, ok && octants);
    return r;
}

CheckReport check_selfdual_equivalences(const PlanarConvexBody& w, double tol, std::size_t samples) {
    CheckReport r;
    r.name = "selfdual_equivalences";
    r.trials = 1;
    const WulffPair pair = is_self_dual(w, tol);
    const SphericalBody lifted = spherical_wulff(w, samples);
    const WidthReport cw = is_constant_width(lifted, tol);
    const DiameterReport cd = is_constant_diameter(lifted, tol);
    const bool a = pair.self_dual;
    const bool b = cw.constant && std::abs(cw.delta - kHalfPi) <= tol;
    const bool c = cd.constant && std::abs(cd.diameter - kHalfPi) <= tol;
    r.measure("self_dual_hausdorff", pair.hausdorff_distance);
    r.measure("min_width", cw.min_width);
    r.measure("max_width", cw.max_width);
    r.measure("diameter", cd.diameter);
    r.measure("min_farthest", cd.min_farthest);
    r.note = "self_dual=" + verdict(a) + " constant_width_half_pi=" + verdict(b) +
             " constant_diameter_half_pi=" + verdict(c);
    const int mismatches = (a != b) + (b != c) + (a != c);
    const bool ok = r.add("verdict_mismatches", mismatches, 0.0);
    if (!ok) {
        r.witnesses.emplace_back(cw.argmin_center);
        r.witnesses.emplace_back(cw.argmax_center);
        r.witnesses.emplace_back(cd.worst_point);
    }
    finish(r, ok);
    return r;
}

CheckReport check_width_duality(const SphericalBody& body, double tol) {
    CheckReport r;
    r.name = "width_duality";
    r.trials = 1;
    const WidthReport w = is_constant_width(body, tol);
    r.measure("width_spread", w.max_width - w.min_width);
    if (!w.constant) {
        not_applicable(r, "body is not of constant width");
        return r;
    }
    const WidthReport p = is_constant_width(polar(body), tol);
    r.measure("delta", w.delta);
    r.measure("polar_delta", p.delta);
    bool ok = r.add("polar_width_spread", p.max_width - p.min_width, tol);
    ok = r.add("delta_sum_minus_pi", w.delta + p.delta - kPi, tol) && ok;
    if (!ok) {
        r.witnesses.emplace_back(p.argmin_center);
        r.witnesses.emplace_back(p.argmax_center);
    }
    finish(r, ok);
    return r;
}

CheckReport check_strict_convexity(const SphericalBody& body, double tol) {
    CheckReport r;
    r.name = "strict_convexity";
    r.trials = 1;
    const WidthReport w = is_constant_width(body, tol);
    r.measure("width_spread", w.max_width - w.min_width);
    const bool below = w.constant && w.delta < kHalfPi - tol;
    if (const auto* p = std::get_if<SphericalPolygon>(&body)) {
        // polygon edges are great-circle arcs, so a polygon can only have constant width pi/2
        if (w.constant && !below) {
            not_applicable(r, "constant width pi/2; great-circle edges are allowed");
            return r;
        }
        const bool ok = r.add("polygon_constant_width_below_half_pi", below ? 1.0 : 0.0, 0.0);
        if (!ok) add_vertices(r, *p);
        finish(r, ok);
        return r;
    }
    if (!below) {
        not_applicable(r, w.constant ? "constant width not below pi/2" : "body is not of constant width");
        return r;
    }
    const auto& s = std::get<SampledSphericalBody>(body);
    const std::size_t n = s.size();
    std::vector<Vec3> normals(n);
    for (std::size_t k = 0; k < n; ++k) normals[k] = normalized(cross(s.sample(k), s.sample(k + 1)));
    // longest run of chords joined by (numerically) zero turning
    double longest = 0.0;
    double run = 0.0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        const std::size_t i = k % n;
        const double turn = distance(normals[(i + n - 1) % n], normals[i]);
        const double chord = distance(s.sample(i), s.sample(i + 1));
        if (turn <= kCollinearTurn) {
            run = run == 0.0 ? distance(s.sample(i + n - 1), s.sample(i)) + chord : run + chord;
            if (run > longest) {
                longest = std::min(run, kTwoPi);
                at = i;
            }
        } else {
            run = 0.0;
        }
    }
    const bool ok = r.add("longest_great_circle_arc", longest, tol);
    if (!ok) r.witnesses.emplace_back(SphericalPoint(s.sample(at)));
    finish(r, ok);
    return r;
}

CheckReport check_strict_convexity_ensemble(std::size_t trials, std::uint64_t seed, double tol) {
    CheckReport r;
    r.name = "strict_convexity";
    r.seed = seed;
    r.trials = trials;
    Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const SphericalPolygon p = random_spherical_polygon(rng);
        const CheckReport one = check_strict_convexity(p, tol);
        if (one.status == CheckStatus::Fail) {
            if (bad == 0) r.witnesses = one.witnesses;
            ++bad;
        }
    }
    finish(r, r.add("polygons_constant_width_below_half_pi", static_cast<double>(bad), 0.0));
    return r;
}

CheckReport check_arc_interior(const SphericalBody& body, std::size_t samples, double tol) {
    CheckReport r;
    r.name = "arc_interior";
    r.trials = samples;
    if (!is_smooth(body, tol)) {
        not_applicable(r, "body is not smooth");
        return r;
    }
    const auto& s = std::get<SampledSphericalBody>(body);
    std::size_t misses = 0;
    double shallowest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec3 p = s.boundary_at(kTwoPi * static_cast<double>(i) / static_cast<double>(samples));
        const Vec3 q = supporting_hemisphere_at(body, SphericalPoint(p)).hemispheres.front().center.vec();
        // arc from P towards Q; Q is at distance pi/2 from P
        const Vec3 t = normalized(q - p * dot(q, p));
        auto depth = [&](double a) { return signed_boundary_distance(body, p * std::cos(a) + t * std::sin(a)); };
        // midpoint first, then a widening sweep; stop at the first interior point
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 63 && best >= -tol; ++j) {
            const int off = (j + 1) / 2 * (j % 2 == 1 ? 1 : -1);
            best = std::min(best, depth(kHalfPi * (32 + off) / 64.0));
        }
        shallowest = std::max(shallowest, best);
        if (best >= -tol) {
            if (misses == 0) {
                r.witnesses.emplace_back(SphericalPoint(p));
                r.witnesses.emplace_back(SphericalPoint(q));
            }
            ++misses;
        }
    }
    r.measure("shallowest_arc_depth", shallowest);  // of the first interior point found
    finish(r, r.add("arcs_missing_interior", static_cast<double>(misses), 0.0));
    return r;
}

CheckReport check_blowup_property(const SphericalBody& body, std::size_t interior_samples, double tol,
                                  std::uint64_t seed) {
    CheckReport r;
    r.name = "blowup_property";
    r.seed = seed;
    r.trials = interior_samples;
    if (!is_smooth(body, tol)) {
        not_applicable(r, "body is not smooth");
        return r;
    }
    if (contains(body, kNorthPole, tol) != Containment::Interior) {
        not_applicable(r, "north pole is not interior");
        return r;
    }
    const SphericalPoint center = interior_point(body);
    const Frame frame(center);
    double reach = 0.0;
    for (const Vec3& b : boundary_samples(body)) reach = std::max(reach, distance(center.vec(), b));
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
        for (;;) {
            // area-uniform point of the bounding cap
            const double phi = kTwoPi * unit(rng);
            const double z = 1.0 - unit(rng) * (1.0 - std::cos(reach));
            const Vec3 m = frame.point(phi, std::acos(z));
            if (signed_boundary_distance(body, m) <= -kInteriorMargin) return SphericalPoint(m);
        }
    };
    std::size_t empty = 0;
    double worst = 0.0;
    std::size_t points = 0;
    for (std::size_t i = 0; i < interior_samples; ++i) {
        const SphericalPoint m = draw();
        const auto support = boundary_support_intersection(body, m);
        if (support.empty()) {
            if (r.witnesses.empty()) r.witnesses.emplace_back(m);
            ++empty;
            continue;
        }
        for (const SphericalPoint& p : support) {
            ++points;
            const double d = std::abs(signed_boundary_distance(body, blow_up(m, p).vec()));
            if (d > worst) {
                worst = d;
                if (d > tol) r.witnesses = {m, p, blow_up(m, p)};
            }
        }
    }
    r.measure("support_points", static_cast<double>(points));
    bool ok = r.add("empty_intersections", static_cast<double>(empty), 0.0);
    ok = r.add("blowup_boundary_distance", worst, tol) && ok;
    if (ok) {
        const DiameterReport d = diameter(body);
        if (!r.add("diameter_minus_half_pi", d.diameter - kHalfPi, tol)) {
            r.witnesses = {d.witness_p, d.witness_q};
            ok = false;
        }
    }
    finish(r, ok);
    return r;
}

CheckReport check_thickness_diameter_duality(const SphericalBody& body, double tol) {
    CheckReport r;
    r.name = "thickness_diameter_duality";
    r.trials = 1;
    const double th = thickness(body);
    const DiameterReport d = diameter(polar(body));
    r.measure("thickness", th);
    r.measure("polar_diameter", d.diameter);
    const bool ok = r.add("sum_minus_pi", th + d.diameter - kPi, tol);
    if (!ok) r.witnesses = {d.witness_p, d.witness_q};
    finish(r, ok);
    return r;
}

CheckReport check_thickness_diameter_ensemble(std::size_t polygons, std::uint64_t seed, double tol) {
    CheckReport r;
    r.name = "thickness_diameter_duality";
    r.seed = seed;
    r.trials = polygons;
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < polygons; ++t) {
        const SphericalPolygon p = random_spherical_polygon(rng);
        const double e = std::abs(thickness(p) + diameter(polar(p)).diameter - kPi);
        if (e > worst) {
            worst = e;
            if (e > tol) {
                r.witnesses.clear();
                add_vertices(r, p);
            }
        }
    }
    finish(r, r.add("sum_minus_pi", worst, tol));
    return r;
}

std::vector<std::string> check_families() {
    return {"constant_width_polytope", "selfdual_equivalences", "width_duality",     "strict_convexity",
            "arc_interior",            "blowup_property",       "diameter_support", "thickness_diameter_duality"};
}

namespace {

struct Task {
    std::string name;
    double default_tol;
    std::function<CheckReport(double tol, std::uint64_t seed)> run;
};

double resolve_tol(const SuiteConfig& c, const Task& t) {
    if (auto it = c.tolerances.find(t.name); it != c.tolerances.end()) return it->second;
    if (auto it = c.tolerances.find(std::string(check_family(t.name))); it != c.tolerances.end()) return it->second;
    if (c.tol) return *c.tol;
    return t.default_tol;
}

bool selected(const SuiteConfig& c, std::string_view name) {
    if (c.only.empty()) return true;
    const auto fam = check_family(name);
    return std::any_of(c.only.begin(), c.only.end(), [&](const std::string& o) { return o == fam || o == name; });
}

// Blow-up property on a preset that is a Wulff shape: the property must hold
// exactly when the shape is self-dual.
CheckReport blowup_equivalence(const SphericalBody& body, const PlanarConvexBody& w, const SuiteConfig& c,
                               double tol, double sd_tol, std::uint64_t seed) {
    const CheckReport raw = check_blowup_property(body, c.interior_samples, tol, seed);
    if (raw.status == CheckStatus::NotApplicable) return raw;
    const WulffPair pair = is_self_dual(w, sd_tol);
    CheckReport r;
    r.name = raw.name;
    r.seed = raw.seed;
    r.trials = raw.trials;
    r.witnesses = raw.witnesses;
    for (const auto& res : raw.residuals) r.measure(res.label, res.value);
    for (const auto& m : raw.measurements) r.measurements.push_back(m);
    r.measure("self_dual_hausdorff", pair.hausdorff_distance);
    const bool holds = raw.status == CheckStatus::Pass;
    r.note = "property " + std::string(holds ? "holds" : "fails") + ", self_dual=" + verdict(pair.self_dual);
    finish(r, r.add("property_selfdual_mismatch", holds == pair.self_dual ? 0.0 : 1.0, 0.0));
    return r;
}

void add_body_tasks(std::vector<Task>& tasks, const SuiteConfig& c, const BodyUnderTest& b) {
    const auto body = std::make_shared<SphericalBody>(b.body);
    const auto w = b.wulff ? std::make_shared<PlanarConvexBody>(*b.wulff) : nullptr;
    const std::size_t k = c.samples;
    const double sd_tol = b.selfdual_tol;
    const std::string& name = b.label;
    if (w) {
        tasks.push_back({"selfdual_equivalences/" + name, sd_tol, [w, k](double tol, std::uint64_t) {
                             return check_selfdual_equivalences(*w, tol, k);
                         }});
    }
    tasks.push_back({"width_duality/" + name, b.tol,
                     [body](double tol, std::uint64_t) { return check_width_duality(*body, tol); }});
    tasks.push_back({"strict_convexity/" + name, b.tol,
                     [body](double tol, std::uint64_t) { return check_strict_convexity(*body, tol); }});
    tasks.push_back({"arc_interior/" + name, b.tol, [body, &c](double tol, std::uint64_t) {
                         return check_arc_interior(*body, c.arc_samples, tol);
                     }});
    tasks.push_back({"blowup_property/" + name, b.tol, [body, w, &c, sd_tol](double tol, std::uint64_t seed) {
                         if (w) return blowup_equivalence(*body, *w, c, tol, sd_tol, seed);
                         return check_blowup_property(*body, c.interior_samples, tol, seed);
                     }});
    tasks.push_back({"diameter_support/" + name, 1e-8,
                     [body](double tol, std::uint64_t) { return diameter_support_check(*body, tol); }});
    tasks.push_back({"thickness_diameter_duality/" + name, 1e-8,
                     [body](double tol, std::uint64_t) { return check_thickness_diameter_duality(*body, tol); }});
}

std::vector<Task> build_tasks(const SuiteConfig& c) {
    std::vector<Task> tasks;
    const std::size_t k = c.samples;
    tasks.push_back({"constant_width_polytope", kExactTol,
                     [&c](double tol, std::uint64_t seed) { return check_constant_width_polytope(c.trials, seed, tol); }});
    for (const std::string& name : preset_suite()) add_body_tasks(tasks, c, preset_under_test(*find_preset(name), k));
    tasks.push_back({"strict_convexity/random_polygons", kExactTol, [&c](double tol, std::uint64_t seed) {
                         return check_strict_convexity_ensemble(c.trials, seed, tol);
                     }});
    tasks.push_back({"thickness_diameter_duality/random_polygons", 1e-8, [&c](double tol, std::uint64_t seed) {
                         return check_thickness_diameter_ensemble(c.duality_polygons, seed, tol);
                     }});
    return tasks;
}

void validate(const SuiteConfig& config) {
    if (config.tol && !(*config.tol >= 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be non-negative");
    for (const auto& [key, value] : config.tolerances) {
        if (!(value >= 0.0)) fail(ErrorCode::InvalidArgument, "tolerance for " + key + " must be non-negative");
    }
    if (config.trials == 0) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
    if (config.samples < 8) fail(ErrorCode::InvalidArgument, "at least 8 samples are needed");
}

std::vector<CheckReport> run_tasks(const SuiteConfig& config, std::vector<Task> all) {
    std::vector<Task> tasks;
    for (Task& t : all) {
        if (selected(config, t.name)) tasks.push_back(std::move(t));
    }
    std::vector<CheckReport> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            const double tol = resolve_tol(config, t);
            const std::uint64_t seed = check_seed(config.seed, t.name);
            CheckReport r;
            try {
                r = t.run(tol, seed);
            } catch (const GeometryError& e) {
                r.status = CheckStatus::Fail;
                r.note = std::string(error_code_name(e.code())) + ": " + e.what();
            }
            r.name = t.name;
            r.seed = seed;
            if (r.status == CheckStatus::Fail && tol == 0.0) {
                r.note += r.note.empty() ? "" : "; ";
                r.note += "zero tolerance: failure is a floating-point artifact";
            }
            out[i] = std::move(r);
        }
    };
    std::size_t threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    threads = std::min(threads, std::max<std::size_t>(1, tasks.size()));
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();
    return out;
}

}  // namespace

BodyUnderTest preset_under_test(const Preset& preset, std::size_t samples) {
    // sampled Wulff polygons approximate the shape to second order in the mesh
    const double mesh_tol = 10.0 * std::pow(kTwoPi / static_cast<double>(samples), 2);
    const bool smoothed = preset.name == "reuleaux_smoothed";
    BodyUnderTest b{preset.name, preset.body(samples), std::nullopt, smoothed ? kSmoothedTol : kExactTol, kExactTol};
    if (preset.gamma) {
        b.wulff = wulff_shape(*preset.gamma, samples);
    } else if (preset.name == "octant") {
        std::vector<Vec2> proj;
        const SphericalPolygon octant = centered_octant();
        for (const Vec3& v : octant.vertices()) proj.push_back(central_project(SphericalPoint(v)).vec());
        b.wulff = PlanarConvexBody(proj);
    }
    if (smoothed) {
        b.selfdual_tol = kSmoothedTol;
    } else if (b.wulff && b.wulff->size() > kMaxLiftedPolygon) {
        b.selfdual_tol = mesh_tol;
    }
    return b;
}

BodyUnderTest wulff_under_test(const std::string& label, const PlanarConvexBody& w, std::size_t samples) {
    const double mesh_tol = 10.0 * std::pow(kTwoPi / static_cast<double>(samples), 2);
    const double tol = w.size() > kMaxLiftedPolygon ? mesh_tol : kExactTol;
    return {label, spherical_wulff(w, samples), w, tol, tol};
}

std::vector<CheckReport> run_all(const SuiteConfig& config) {
    validate(config);
    return run_tasks(config, build_tasks(config));
}

std::vector<CheckReport> run_body_checks(const BodyUnderTest& body, const SuiteConfig& config) {
    validate(config);
    std::vector<Task> tasks;
    add_body_tasks(tasks, config, body);
    return run_tasks(config, std::move(tasks));
}

}  // namespace wulff
