#include "slicereg/json_io.hpp"

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

double number_at(const Json& j, std::size_t k) {
    if (!j[k].is_number()) throw ValidationError("expected a number");
    return j[k].get<double>();
}

void expect_array(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw ValidationError(std::string("expected a ") + std::to_string(n) + "-element array for " + what);
}

}  // namespace

Json encode(const Quaternion& q) { return Json::array({q.x0, q.x1, q.x2, q.x3}); }

Json encode(const ImaginaryUnit& v) { return Json::array({v.vec().x, v.vec().y, v.vec().z}); }

Json encode(const Frame& fr) { return Json{{"i", encode(fr.i())}, {"j", encode(fr.j())}}; }

Json encode(const QPowerSeries& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(encode(c));
    return Json{{"radius", f.radius}, {"coeffs", coeffs}};
}

Json encode(const HarmonicPoly& u) {
    Json j = Json::array();
    for (const auto& c : u.coeffs) j.push_back(Json::array({c.real(), c.imag()}));
    return j;
}

Json encode(const PlanarPath& p) {
    Json j = Json::array();
    for (const auto& v : p.vertices) j.push_back(Json::array({v[0], v[1]}));
    return j;
}

Json encode(const BoundaryTrace& t) { return Json{{"rho", t.rho}, {"samples", t.samples}}; }

Json encode(const TotalElement& el) {
    return Json{{"a", encode(el.a.rep)}, {"c", encode(el.c.rep)}, {"frame", encode(el.frame)}};
}

Json encode(const SlicePolynomial& f) {
    Json j = Json::array();
    for (const auto& c : f.full_coeffs()) j.push_back(encode(c));
    return j;
}

Json encode(const RootSet& s) {
    if (s.identically_zero) return Json();  // null marks an identically-zero component
    Json j = Json::array();
    for (const auto& r : s.roots)
        j.push_back(Json::array({r.z.real(), r.z.imag(), r.multiplicity}));
    return j;
}

Json encode(const ZeroData& zd) {
    return Json{{"frame", encode(zd.frame)},
                {"s1", encode(zd.s1)},
                {"s2", encode(zd.s2)},
                {"s3", encode(zd.s3)},
                {"s4", encode(zd.s4)}};
}

Json encode(const SliceHull& h) {
    Json verts = Json::array();
    for (const auto& v : h.vertices) verts.push_back(Json::array({v[0], v[1]}));
    return Json{{"slice", encode(h.slice)}, {"vertices", verts}};
}

Json encode(Complex z) { return Json::array({z.real(), z.imag()}); }

Quaternion decode_quaternion(const Json& j) {
    expect_array(j, 4, "a quaternion");
    return {number_at(j, 0), number_at(j, 1), number_at(j, 2), number_at(j, 3)};
}

ImaginaryUnit decode_imaginary_unit(const Json& j) {
    expect_array(j, 3, "an imaginary unit");
    return ImaginaryUnit(number_at(j, 0), number_at(j, 1), number_at(j, 2));
}

Frame decode_frame(const Json& j) {
    if (!j.is_object() || !j.contains("i") || !j.contains("j"))
        throw ValidationError("frame needs fields i and j");
    return Frame(decode_imaginary_unit(j["i"]), decode_imaginary_unit(j["j"]));
}

QPowerSeries decode_series(const Json& j) {
    if (!j.is_object() || !j.contains("radius") || !j.contains("coeffs"))
        throw ValidationError("series needs fields radius and coeffs");
    if (!j["coeffs"].is_array()) throw ValidationError("series coeffs must be an array");
    std::vector<Quaternion> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(decode_quaternion(c));
    return QPowerSeries(j["radius"].get<double>(), std::move(coeffs));
}

HarmonicPoly decode_harmonic(const Json& j) {
    if (!j.is_array()) throw ValidationError("harmonic polynomial must be an array of [re, im]");
    CPoly coeffs;
    for (const auto& c : j) {
        expect_array(c, 2, "a complex coefficient");
        coeffs.emplace_back(number_at(c, 0), number_at(c, 1));
    }
    return HarmonicPoly{std::move(coeffs)};
}

PlanarPath decode_path(const Json& j) {
    if (!j.is_array()) throw ValidationError("path must be an array of [x, y]");
    std::vector<std::array<double, 2>> verts;
    for (const auto& v : j) {
        expect_array(v, 2, "a path vertex");
        verts.push_back({number_at(v, 0), number_at(v, 1)});
    }
    return PlanarPath(std::move(verts));
}

BoundaryTrace decode_trace(const Json& j) {
    if (!j.is_object() || !j.contains("rho") || !j.contains("samples"))
        throw ValidationError("trace needs fields rho and samples");
    if (!j["samples"].is_array()) throw ValidationError("trace samples must be an array");
    std::vector<double> samples;
    for (const auto& v : j["samples"]) {
        if (!v.is_number()) throw ValidationError("trace samples must be numbers");
        samples.push_back(v.get<double>());
    }
    return BoundaryTrace(j["rho"].get<double>(), std::move(samples));
}

TotalElement decode_total_element(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("c") || !j.contains("frame"))
        throw ValidationError("total element needs fields a, c, frame");
    return TotalElement{HarmonicClass::normalized(decode_harmonic(j["a"])),
                        HarmonicClass::normalized(decode_harmonic(j["c"])),
                        decode_frame(j["frame"])};
}

SlicePolynomial decode_polynomial(const Json& j) {
    if (!j.is_array() || j.size() < 2)
        throw ValidationError("polynomial must be an ascending coefficient list, degree >= 1");
    std::vector<Quaternion> coeffs;
    for (const auto& c : j) coeffs.push_back(decode_quaternion(c));
    if ((coeffs.back() - Quaternion::one()).norm() > kEpsVec)
        throw ValidationError("polynomial must be monic (leading coefficient [1,0,0,0])");
    coeffs.pop_back();
    return SlicePolynomial(std::move(coeffs));
}

RootSet decode_rootset(const Json& j) {
    if (j.is_null()) return RootSet{true, {}};
    if (!j.is_array()) throw ValidationError("root set must be null or an array of [re, im, mult]");
    RootSet s;
    for (const auto& r : j) {
        expect_array(r, 3, "a root entry");
        const int mult = r[2].get<int>();
        if (mult < 1) throw ValidationError("root multiplicity must be positive");
        s.roots.push_back({Complex(number_at(r, 0), number_at(r, 1)), mult});
    }
    return s;
}

ZeroData decode_zero_data(const Json& j) {
    if (!j.is_object()) throw ValidationError("zero data must be an object");
    for (const char* key : {"frame", "s1", "s2", "s3", "s4"})
        if (!j.contains(key)) throw ValidationError("zero data misses a field");
    return ZeroData{decode_frame(j["frame"]), decode_rootset(j["s1"]), decode_rootset(j["s2"]),
                    decode_rootset(j["s3"]), decode_rootset(j["s4"])};
}

Complex decode_complex(const Json& j) {
    expect_array(j, 2, "a complex number");
    return {number_at(j, 0), number_at(j, 1)};
}

}  // namespace slicereg
