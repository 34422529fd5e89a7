#pragma once

#include <string>
#include <vector>

#include "hypflute/curves.hpp"
#include "hypflute/selection.hpp"

namespace hypflute {

// Declarative scene: curves with style classes plus labeled points,
// rendered to standalone SVG. The y axis is flipped to screen
// orientation; an optional log scale in y keeps widely separated
// semicircles visible. Output is deterministic (fixed formatting).
struct SceneItem {
    Curve curve;
    std::string cls;   // css class: "bisector", "axis", "ray", "guide", ...
    std::string label; // optional
};

struct SceneAnnotation {
    ExtendedPoint at;
    std::string text;
};

struct SceneDescription {
    std::vector<SceneItem> items;
    std::vector<SceneAnnotation> annotations;
    double x_min = -10.0, x_max = 10.0;
    double y_min = 0.01, y_max = 10.0; // y_min only used for log scale
    bool log_y = false;
    int width = 900, height = 520;
};

// Scene for a constructed group: which = "bisectors", "axes", "ray",
// "domain" or "all".
SceneDescription scene_for_spec(const GroupSpec& spec, const std::string& which, bool log_y);

std::string render_svg(const SceneDescription& scene);

} // namespace hypflute
