#ifndef TWISTPROD_JSON_IO_HPP
#define TWISTPROD_JSON_IO_HPP

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "twistprod/builtins.hpp"
#include "twistprod/curvature.hpp"
#include "twistprod/finite_group.hpp"
#include "twistprod/twisted_lie.hpp"

namespace twistprod {

/// JSON input that cannot be interpreted. Carries file/position context in
/// the message where available.
struct ParseError : Error {
  using Error::Error;
};

// Lie algebra files: {"dim": n, "labels": [...], "constants": [[i,j,k,v], ...]}
// with 1-based indices, i < j only; the writer emits constants sorted by
// (i, j, k) with shortest round-trip decimal values.
LieAlgebra lie_algebra_from_json(const nlohmann::json& j);
nlohmann::json lie_algebra_to_json(const LieAlgebra& alg);

// Action files: {"acting_dim": m, "target_dim": n, "matrices": [[[...]], ...]},
// one row-major matrix per acting basis vector.
InfinitesimalAction action_from_json(const nlohmann::json& j);
nlohmann::json action_to_json(const InfinitesimalAction& action);

// Twist files: {"g": <algebra or path>, "h": ..., "L": <action or path>, "M": ...};
// string values are paths resolved against `base_dir`.
TwistSpec twist_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
nlohmann::json twist_spec_to_json(const TwistSpec& spec);

// Group files: {"order": n, "labels": [...], "table": [[...], ...]}, 0-based.
CayleyGroup cayley_group_from_json(const nlohmann::json& j);
nlohmann::json cayley_group_to_json(const CayleyGroup& g);

// Action-map files: {"maps": [[...], ...]} indexed by source element, 0-based.
GroupAction group_action_from_json(const nlohmann::json& j, const CayleyGroup& source,
                                   const CayleyGroup& target);
nlohmann::json group_action_to_json(const GroupAction& action);

nlohmann::json curvature_report_to_json(const CurvatureReport& report);
nlohmann::json six_rho_report_to_json(const SixRhoReport& report);
nlohmann::json validation_report_to_json(const ValidationReport& report);

/// Golden-file rendering of a builtin bundle: the algebra, the twist when
/// present (inline), and the frozen expected values.
nlohmann::json bundle_to_json(const BuiltinBundle& bundle);

/// Parse with position-annotated ParseError on malformed text.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin = "<input>");
nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace twistprod

#endif
