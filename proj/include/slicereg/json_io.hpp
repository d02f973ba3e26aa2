#pragma once

#include <json.hpp>

#include "slicereg/bundle.hpp"
#include "slicereg/harmonic.hpp"
#include "slicereg/hull.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

using Json = nlohmann::json;

Json encode(const Quaternion& q);
Json encode(const ImaginaryUnit& v);
Json encode(const Frame& fr);
Json encode(const QPowerSeries& f);
Json encode(const HarmonicPoly& u);
Json encode(const PlanarPath& p);
Json encode(const BoundaryTrace& t);
Json encode(const TotalElement& el);
Json encode(const SlicePolynomial& f);
Json encode(const RootSet& s);
Json encode(const ZeroData& zd);
Json encode(const SliceHull& h);
Json encode(Complex z);

Quaternion decode_quaternion(const Json& j);
ImaginaryUnit decode_imaginary_unit(const Json& j);
Frame decode_frame(const Json& j);
QPowerSeries decode_series(const Json& j);
HarmonicPoly decode_harmonic(const Json& j);
PlanarPath decode_path(const Json& j);
BoundaryTrace decode_trace(const Json& j);
TotalElement decode_total_element(const Json& j);
SlicePolynomial decode_polynomial(const Json& j);
RootSet decode_rootset(const Json& j);
ZeroData decode_zero_data(const Json& j);
Complex decode_complex(const Json& j);

}  // namespace slicereg
