#pragma once

#include "fraclab/geometry.hpp"

#include <filesystem>
#include <string>

namespace fraclab {

// Fractal config format (key = value):
//   name = sierpinski_gasket
//   scaling_factor = 2
//   translation.1 = 0, 0
//   translation.2 = 1/2, 0
//   translation.3 = 1/4, sqrt3/4
//   isometry = 1, 0, 0, 1            (optional, row-major)
//   walk_dimension = log(5)/log(2)   (number, log(a)/log(b), or estimate)
//   chemical_exponent = walk         (number, or walk to reuse d_w)
//   open_set_condition = asserted
struct LoadedFractal {
    FractalSystem system;
    std::string source_text;
    std::string fingerprint;  // SHA-256 of source_text
    bool walk_dimension_estimated = false;
};

LoadedFractal parse_fractal(const std::string& text, const std::string& origin);
LoadedFractal load_fractal(const std::filesystem::path& path);

/// Parses "2.32", "log(5)/log(2)" and similar.
double parse_dimension(const std::string& text);

}  // namespace fraclab
