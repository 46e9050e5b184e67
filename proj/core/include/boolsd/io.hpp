#ifndef BOOLSD_IO_HPP
#define BOOLSD_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "boolsd/measure.hpp"
#include "boolsd/sd_analysis.hpp"
#include "boolsd/transforms.hpp"

namespace boolsd::io {

using nlohmann::json;

/// Measure description:
/// {"atoms":[{"x":..,"w":..}], "density":{"kind":"<catalog-id>"|"table", ...},
///  "support":[[lo,hi],...], "mass":1.0}
/// - kind "table" takes "x" and "v" arrays (linear interpolation);
/// - a catalog kind borrows that family's density (its remaining keys are the
///   family parameters); atoms/support/mass still come from this description.
/// Infinite endpoints spell "-inf" / "inf".
SpectralMeasure measure_from_json(const json& j);
SpectralMeasure load_measure(const std::string& path);
json measure_to_json(const SpectralMeasure& mu, int density_samples = 257);

/// CSV with 17 significant digits, '.' decimal separator, LF line endings.
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);
std::string format_double(double v);  // %.17g

void write_boundary_profile_csv(const std::string& path, const BoundaryProfile& bp);
void write_kprofile_csv(const std::string& path, const KProfile& p);

json sd_report_to_json(const sd::SdReport& rep);
json census_to_json(const sd::AtomCensus& census);
json shift_threshold_to_json(const sd::ShiftThresholdReport& rep);
json normal_threshold_to_json(const sd::NormalThresholdReport& rep);

/// Minimal SVG polyline chart (axes + one polyline per series); deterministic
/// output, no timestamps or external dependencies.
struct Series {
    std::string label;
    std::vector<double> x, y;
};
void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<Series>& series, int width = 640, int height = 420);

}  // namespace boolsd::io

#endif
