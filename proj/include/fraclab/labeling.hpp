#pragma once

#include "fraclab/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace fraclab {

// Rotations about the barycenter of K^<M> that permute its essential vertices.
struct RotationGroup {
    Point barycenter;
    std::vector<Mat2> elements;                // elements[0] is the identity
    std::vector<std::vector<int>> permutations;  // R_r(v_i) = v_{permutations[r][i]}

    int size() const { return static_cast<int>(elements.size()); }
    Point apply(int r, const Point& p) const;
    Point apply_inverse(int r, const Point& p) const;
    /// Index of the element equal to elements[a] * elements[b].
    int compose(int a, int b) const;
};

RotationGroup rotation_group(const FractalSystem& system, int M);

struct LabeledComplex {
    CellAddress address;
    int rotation = 0;
    std::vector<Point> corners;  // nu + L^M v_i
    std::vector<int> corner_labels;
};

// Good labeling of the M-complex vertices inside the window K^<M'>, with the
// rotation R_Delta chosen per complex so that l(v) = l(R_Delta(v - nu_Delta)).
class LabelMap {
public:
    int M = 0;
    int window = 0;
    RotationGroup group;
    std::vector<LabeledComplex> complexes;  // BFS order from the base complex
    std::map<Point, int, PointLess> labels;
    std::vector<Point> base_corners;        // L^M v_i; label i
    std::vector<int> by_address;            // enumerate_cells order -> index into complexes

    int label_of(const Point& v) const;
    /// Complexes (indices into `complexes`) that contain p, tested exactly.
    std::vector<int> complexes_containing(const Point& p, const FractalSystem& system) const;
    Point fold(int complex_index, const Point& p) const;
    Point unfold(int complex_index, const Point& p) const;
};

/// Throws GlpError naming the offending complex if propagation hits a conflict.
LabelMap build_good_labeling(const FractalSystem& system, int M, int window);

/// pi_M(x); throws ConfigError if x is outside the window.
Point project_point(const LabelMap& labels, const FractalSystem& system, const Point& x);

struct Preimages {
    std::vector<Point> points;
    std::vector<int> ranks;  // number of window complexes containing each point
};

Preimages preimages_and_rank(const LabelMap& labels, const Point& y);

// Vertex-level folding between the window graph and the base graph at the same n.
struct GraphFolding {
    std::vector<int> image;                     // window vertex -> base vertex
    std::vector<std::vector<int>> preimages;    // base vertex -> window vertices
    std::vector<int> rank;                      // per window vertex
    int conflicts = 0;                          // window vertices with inconsistent images
};

/// Folds every vertex through each complex containing it; throws GlpError if
/// two complexes disagree.
GraphFolding fold_graph(const LabelMap& labels, const VertexGraph& window, const VertexGraph& base);

/// Text dump: complexes with rotations, then a vertex -> label table.
std::string dump_labeling(const LabelMap& labels);

}  // namespace fraclab
