#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "slicereg/bundle.hpp"
#include "slicereg/command_table.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/harmonic.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/verify.hpp"
#include "slicereg/zeros.hpp"

namespace {

using namespace slicereg;

Json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open input file: " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("input misses field \"") + key + "\"");
    return j[key];
}

int int_field(const Json& j, const char* key, int fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw ValidationError(std::string(key) + " must be an integer");
    return j[key].get<int>();
}

double num_field(const Json& j, const char* key, double fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ValidationError(std::string(key) + " must be a number");
    return j[key].get<double>();
}

// ----------------------------------------------------------------- handlers

Json run_eval(const Json& in) {
    return encode(eval(decode_series(field(in, "series")), decode_quaternion(field(in, "point"))));
}

Json run_quat(const std::string& op, const Json& in) {
    if (op == "mul")
        return encode(qmul(decode_quaternion(field(in, "a")), decode_quaternion(field(in, "b"))));
    if (op == "unit-of") return encode(imaginary_unit_of(decode_quaternion(field(in, "q"))));
    if (op == "rotate")
        return encode(rotate(UnitQuaternion(decode_quaternion(field(in, "u"))),
                             decode_quaternion(field(in, "w"))));
    // rotate-frame
    return encode(rotate_frame(UnitQuaternion(decode_quaternion(field(in, "u"))),
                               decode_frame(field(in, "frame"))));
}

Json run_series(const std::string& op, const Json& in) {
    if (op == "split") {
        const SlicePair g = split(decode_series(field(in, "series")), decode_frame(field(in, "frame")));
        return Json{{"frame", encode(g.frame)},
                    {"radius", g.radius},
                    {"f1", encode(HarmonicPoly{g.f1})},
                    {"f2", encode(HarmonicPoly{g.f2})}};
    }
    if (op == "extend") {
        const SlicePair g = split(decode_series(field(in, "series")), decode_frame(field(in, "frame")));
        return encode(extend(g, decode_quaternion(field(in, "point"))));
    }
    if (op == "representation") {
        return encode(representation(
            decode_quaternion(field(in, "f_plus")), decode_quaternion(field(in, "f_minus")),
            decode_imaginary_unit(field(in, "i")), decode_imaginary_unit(field(in, "target")),
            num_field(in, "x", 0.0), num_field(in, "y", 0.0)));
    }
    if (op == "dcomponents") {
        const DComponents d =
            d_components(decode_series(field(in, "series")), decode_frame(field(in, "frame")));
        return Json{{"frame", encode(d.frame)},
                    {"d1", encode(HarmonicPoly{d.d1})},
                    {"d2", encode(HarmonicPoly{d.d2})},
                    {"d3", encode(HarmonicPoly{d.d3})},
                    {"d4", encode(HarmonicPoly{d.d4})}};
    }
    if (op == "identities") {
        const auto [rp, rm] =
            slice_identities_check(decode_series(field(in, "series")),
                                   decode_frame(field(in, "frame")), decode_complex(field(in, "z")));
        return Json{{"residual_plus", rp}, {"residual_minus", rm}};
    }
    if (op == "star")
        return encode(star_product(decode_series(field(in, "f")), decode_series(field(in, "g"))));
    if (op == "bullet")
        return encode(bullet_product(decode_series(field(in, "f")), decode_series(field(in, "g")),
                                     decode_frame(field(in, "frame"))));
    if (op == "derivative") return encode(derivative(decode_series(field(in, "series"))));
    // roundtrip
    return Json{{"residual", roundtrip_pq(decode_series(field(in, "series")),
                                          decode_frame(field(in, "frame")),
                                          int_field(in, "points", 50))}};
}

Json run_conjugate(const std::string& op, const Json& in) {
    const double rho = num_field(in, "rho", std::numeric_limits<double>::infinity());
    if (op == "value") {
        return Json{{"value", conjugate_harmonic(decode_harmonic(field(in, "u")),
                                                 decode_path(field(in, "path")), rho)}};
    }
    return Json{{"residual", path_independence_residual(decode_harmonic(field(in, "u")),
                                                        decode_path(field(in, "path_a")),
                                                        decode_path(field(in, "path_b")), rho)}};
}

Json run_schwarz(const std::string& op, const Json& in) {
    if (op == "complex") {
        return encode(schwarz_complex(decode_trace(field(in, "trace")),
                                      decode_complex(field(in, "z")),
                                      num_field(in, "lambda", 0.0)));
    }
    const BoundaryTrace a = decode_trace(field(in, "a"));
    const BoundaryTrace c = decode_trace(field(in, "c"));
    const Frame fr = decode_frame(field(in, "frame"));
    const int nmax = int_field(in, "nmax", kMaxDegree);
    if (op == "coeffs") return encode(quaternionic_schwarz_coeffs(a, c, fr, nmax));
    return encode(quaternionic_schwarz_eval(a, c, fr, decode_quaternion(field(in, "q")),
                                            num_field(in, "lambda1", 0.0),
                                            num_field(in, "lambda2", 0.0), nmax));
}

Json run_bundle(const std::string& op, const Json& in) {
    if (op == "project")
        return encode(project(decode_total_element(in), num_field(in, "radius", 1.0)).rep);
    if (op == "section") {
        const BaseClass fcl = BaseClass::normalized(decode_series(field(in, "class")));
        return encode(section(decode_frame(field(in, "frame")), fcl));
    }
    if (op == "trivialize") {
        const BaseClass fcl = BaseClass::normalized(decode_series(field(in, "class")));
        return encode(trivialize(UnitQuaternion(decode_quaternion(field(in, "u"))), fcl,
                                 decode_frame(field(in, "frame"))));
    }
    if (op == "compatibility") {
        const BaseClass fcl = BaseClass::normalized(decode_series(field(in, "class")));
        return Json{{"residual",
                     compatibility_residual(UnitQuaternion(decode_quaternion(field(in, "u"))),
                                            UnitQuaternion(decode_quaternion(field(in, "v"))),
                                            fcl, decode_frame(field(in, "frame")))}};
    }
    if (op == "add")
        return encode(add(decode_total_element(field(in, "a_el")),
                          decode_total_element(field(in, "b_el"))));
    if (op == "derive") return encode(deriv_total(decode_total_element(field(in, "el"))));
    if (op == "rotate")
        return encode(rotate_total(UnitQuaternion(decode_quaternion(field(in, "u"))),
                                   decode_total_element(field(in, "el"))));
    // fiber
    const BaseClass fcl = BaseClass::normalized(decode_series(field(in, "class")));
    Json out = Json::array();
    for (const auto& el : fiber_of(fcl, frame_grid(int_field(in, "frames", 16))))
        out.push_back(encode(el));
    return out;
}

Json roots_json(const std::vector<RootCluster>& roots) {
    Json out = Json::array();
    for (const auto& r : roots)
        out.push_back(Json::array({r.z.real(), r.z.imag(), r.multiplicity}));
    return out;
}

Json run_zeros(const std::string& op, const Json& in) {
    if (op == "components")
        return encode(component_zero_sets(decode_polynomial(field(in, "poly")),
                                          decode_frame(field(in, "frame"))));
    if (op == "reconstruct") {
        const ZeroData zd = decode_zero_data(field(in, "data"));
        return encode(zero_bundle_project(zd, int_field(in, "degree", 0)));
    }
    if (op == "slice")
        return roots_json(slice_zero_set(decode_polynomial(field(in, "poly")),
                                         decode_imaginary_unit(field(in, "slice"))));
    if (op == "uniqueness") {
        const bool holds = bullet_uniqueness_check(
            decode_polynomial(field(in, "f")), decode_polynomial(field(in, "g")),
            decode_frame(field(in, "frame1")), decode_frame(field(in, "frame2")),
            decode_complex(field(in, "c1")), decode_complex(field(in, "c2")));
        return Json{{"holds", holds}};
    }
    if (op == "roots") {
        CPoly p;
        for (const auto& c : field(in, "poly_complex")) p.push_back(decode_complex(c));
        return roots_json(complex_roots(p));
    }
    // psrb
    return Json{{"psrb", is_psrb(decode_polynomial(field(in, "poly")))}};
}

Json run_hull(const Json& in) {
    std::vector<Point2> pts;
    for (const auto& p : field(in, "points")) {
        if (!p.is_array() || p.size() != 2) throw ValidationError("points must be [x, y] pairs");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    Json verts = Json::array();
    for (const auto& v : convex_hull_2d(pts)) verts.push_back(Json::array({v[0], v[1]}));
    return Json{{"vertices", verts}};
}

Json run_skull(const Json& in) {
    const SlicePolynomial f = decode_polynomial(field(in, "poly"));
    Json out = Json::array();
    for (const auto& h : skull(f, sphere_grid(int_field(in, "slices", 16)))) out.push_back(encode(h));
    return out;
}

Json run_gauss_lucas(const Json& in) {
    return Json{{"holds", gauss_lucas_check(decode_polynomial(field(in, "poly")),
                                            decode_frame(field(in, "frame")))}};
}

Json run_morphism(const Json& in) {
    const MorphismResult m =
        morphism_gamma(decode_polynomial(field(in, "poly")), decode_frame(field(in, "frame")),
                       int_field(in, "slices", 16));
    Json skull_direct = Json::array();
    for (const auto& h : m.skull_direct) skull_direct.push_back(encode(h));
    return Json{{"hull_i", encode(m.hull_i)},
                {"hull_j", encode(m.hull_j)},
                {"skull", skull_direct},
                {"diagram_residual", m.diagram_residual},
                {"reconstruction_residual", m.reconstruction_residual},
                {"gauss_lucas", m.gauss_lucas_ok}};
}

// ----------------------------------------------------------------- csv

void csv_points(std::ostream& os, const Json& rows, const char* header) {
    os << header << "\n";
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k].dump();
        os << "\n";
    }
}

/// CSV stays restricted to point clouds: roots, hull vertices, skulls.
bool write_csv(const std::string& sub, const std::string& op, const Json& result,
               std::ostream& os) {
    if (sub == "hull") {
        csv_points(os, result["vertices"], "x,y");
        return true;
    }
    if (sub == "skull") {
        os << "slice_x,slice_y,slice_z,x,y\n";
        for (const auto& h : result)
            for (const auto& v : h["vertices"])
                os << h["slice"][0].dump() << "," << h["slice"][1].dump() << ","
                   << h["slice"][2].dump() << "," << v[0].dump() << "," << v[1].dump() << "\n";
        return true;
    }
    if (sub == "zeros" && (op == "slice" || op == "roots")) {
        csv_points(os, result, "re,im,multiplicity");
        return true;
    }
    if (sub == "zeros" && op == "components") {
        os << "set,re,im,multiplicity\n";
        for (const char* key : {"s1", "s2", "s3", "s4"}) {
            if (result[key].is_null()) continue;
            for (const auto& r : result[key])
                os << key << "," << r[0].dump() << "," << r[1].dump() << "," << r[2].dump()
                   << "\n";
        }
        return true;
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slicereg: numerical slice regular functions on quaternionic balls"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string format = "json";
    std::string op;

    struct SubSpec {
        const char* name;
        const char* help;
        std::vector<std::string> ops;
    };
    const std::vector<SubSpec> subs = {
        {"eval", "evaluate a series at a point", {}},
        {"quat", "quaternion arithmetic", {"mul", "unit-of", "rotate", "rotate-frame"}},
        {"series",
         "slice power-series operators",
         {"split", "extend", "representation", "dcomponents", "identities", "star", "bullet",
          "derivative", "roundtrip"}},
        {"conjugate", "conjugate harmonic line integrals", {"value", "independence"}},
        {"schwarz", "Schwarz reconstructions", {"complex", "coeffs", "eval"}},
        {"bundle",
         "fiber-bundle operations",
         {"project", "section", "trivialize", "compatibility", "add", "derive", "rotate",
          "fiber"}},
        {"zeros",
         "zero sets of slice polynomials",
         {"components", "reconstruct", "slice", "uniqueness", "roots", "psrb"}},
        {"hull", "planar convex hull", {}},
        {"skull", "slice hulls of a polynomial's zero sets", {}},
        {"gauss-lucas", "Gauss-Lucas containment check", {}},
        {"morphism", "zero-set bundle morphism", {}},
    };

    std::map<std::string, CLI::App*> parsed;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--in", in_path, "input JSON file ('-' for stdin)");
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        if (!s.ops.empty())
            sub->add_option("--op", op, "operation")->required()->check(CLI::IsMember(s.ops));
        parsed[s.name] = sub;
    }

    RunConfig cfg;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "run every invariant suite");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--samples", cfg.samples, "case-count multiplier (>= 1)");
    verify->add_option("--quadrature-n", cfg.quadrature_n, "boundary samples (power of two >= 16)");
    verify->add_option("--suite", cfg.only, "run only the named suites (repeatable)");
    verify->add_option("--format", verify_format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::map<std::string, double> tol_values;
    for (const auto& spec : verification_suites()) {
        tol_values[spec.name] = spec.default_tol;
        verify->add_option("--tol." + spec.name, tol_values[spec.name],
                           "tolerance override for " + spec.name);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            for (const auto& spec : verification_suites())
                if (verify->count("--tol." + spec.name) > 0)
                    cfg.tol_overrides[spec.name] = tol_values[spec.name];
            const auto results = run_verification(cfg);
            std::cout << (verify_format == "json" ? format_report_json(results)
                                                  : format_report_text(results));
            for (const auto& r : results) {
                char line[128];
                std::snprintf(line, sizeof line, "timing: %-26s %.3fs\n", r.name.c_str(),
                              r.seconds);
                std::cerr << line;
            }
            return all_passed(results) ? 0 : 1;
        }

        std::string sub_name;
        for (const auto& s : subs)
            if (parsed[s.name]->parsed()) sub_name = s.name;
        const Json in = read_input(in_path);

        Json result;
        if (sub_name == "eval") result = run_eval(in);
        else if (sub_name == "quat") result = run_quat(op, in);
        else if (sub_name == "series") result = run_series(op, in);
        else if (sub_name == "conjugate") result = run_conjugate(op, in);
        else if (sub_name == "schwarz") result = run_schwarz(op, in);
        else if (sub_name == "bundle") result = run_bundle(op, in);
        else if (sub_name == "zeros") result = run_zeros(op, in);
        else if (sub_name == "hull") result = run_hull(in);
        else if (sub_name == "skull") result = run_skull(in);
        else if (sub_name == "gauss-lucas") result = run_gauss_lucas(in);
        else if (sub_name == "morphism") result = run_morphism(in);

        if (format == "csv") {
            if (!write_csv(sub_name, op, result, std::cout))
                throw ValidationError("CSV output is restricted to point clouds");
        } else {
            std::cout << result.dump() << "\n";
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
