#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ect/complex.hpp"
#include "ect/euler_curve.hpp"
#include "ect/nets.hpp"
#include "ect/persistence.hpp"
#include "ect/reconstruction.hpp"
#include "ect/shape_stats.hpp"
#include "ect/strata.hpp"

namespace ect::io {

using Json = nlohmann::json;

// OFF triangle mesh in R^3: "OFF", a count line "nv nf ne", nv vertex lines,
// nf face lines "3 i j k". Blank lines and '#' comments are skipped. Faces are
// closed under subsets and the result is validated. Throws ParseError (with
// the 1-based line number) or Validation.
SimplicialComplex parse_off(std::string_view text);

// {"d": int, "vertices": [[..]], "simplices": [[..]]}. Simplices are closed
// under faces. Throws Parse or Validation.
SimplicialComplex parse_complex_json(std::string_view text);
Json complex_to_json(const SimplicialComplex& complex);

// By extension: ".off" is OFF, anything else JSON.
SimplicialComplex load_shape(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// "1,0,0" -> normalized direction. Throws Parse.
Direction parse_direction(std::string_view text);

// Shortest round-trip decimal form.
std::string format_double(double x);

// Rows "t,value": one per jump, value from t onward.
std::string curve_to_csv(const EulerCurve& curve);
// {"jumps": [[t, delta], ...], "terminal": chi}
Json curve_to_json(const EulerCurve& curve);
EulerCurve curve_from_json(const Json& j);

Json direction_to_json(const Direction& v);
Direction direction_from_json(const Json& j);

// List of {birth, death, degree, multiplicity}; infinite deaths as "inf".
Json diagram_to_json(const PersistenceDiagram& diagram);

Json net_to_json(const DirectionNet& net);
Json representatives_to_json(const std::vector<StratumRepresentative>& reps);

Json report_to_json(const ReconstructionReport& report,
                    const std::vector<EctOracle::Record>& transcript);
std::vector<EctOracle::Record> transcript_from_json(const Json& report);

// {statistic, null_quantiles: {q50, q90, q95}, null_distances, decision}
Json invariance_to_json(const InvarianceReport& report);
// Rows "shape,index,jumps,first,last,terminal" for both samples.
std::string sample_summary_csv(const CurveSample& a, const CurveSample& b);

}  // namespace ect::io
