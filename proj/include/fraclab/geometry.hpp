#pragma once

#include "fraclab/exact.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fraclab {

// Psi(x) = scale * U(x) + translation, with scale = 1/L.
struct Similitude {
    Rational scale;
    Mat2 isometry;
    Point translation;

    Point apply(const Point& p) const;
    Point apply_inverse(const Point& p) const;
};

// Records that essential vertex `point` satisfies Psi_i(point) = Psi_j(other).
struct EssentialWitness {
    int map_i = 0;
    int map_j = 0;
    int other_fixed_point = 0;
    Point image;
};

struct EssentialPoint {
    int fixed_point_index = 0;
    Point point;
    std::vector<EssentialWitness> witnesses;
};

/// Definition of a system before validation, as read from a fractal config.
struct FractalSpec {
    std::string name;
    Rational scaling_factor;  // L
    Mat2 isometry;
    std::vector<Point> translations;
    bool osc_asserted = false;
};

class FractalSystem {
public:
    /// Validates contraction, common isometry and nu_1 = 0, then determines the
    /// essential fixed points. Throws SnfError if fewer than two exist.
    static FractalSystem from_spec(const FractalSpec& spec);

    const std::string& name() const { return name_; }
    const std::vector<Similitude>& maps() const { return maps_; }
    const Rational& scaling_factor() const { return L_; }
    double scaling_factor_double() const { return L_.convert_to<double>(); }
    int map_count() const { return static_cast<int>(maps_.size()); }
    int essential_count() const { return static_cast<int>(essential_.size()); }
    const std::vector<Point>& fixed_points() const { return fixed_points_; }
    const std::vector<EssentialPoint>& essential_points() const { return essential_; }
    /// V_0^<0> in fixed-point order.
    const std::vector<Point>& essential_vertices() const { return essential_vertices_; }
    bool isometry_is_identity() const { return maps_.front().isometry.is_identity(); }
    bool osc_asserted() const { return osc_asserted_; }

    double hausdorff_dim() const;
    double walk_dim() const { return walk_dim_; }
    double chemical_exp() const { return chemical_exp_; }
    double spectral_dim() const { return 2.0 * hausdorff_dim() / walk_dim_; }
    void set_dimensions(double walk_dim, double chemical_exp);
    bool has_dimensions() const;

    /// Point-membership in K^<M> for points that are vertices of some
    /// approximation level up to `max_depth` below M.
    bool contains(int M, const Point& p, int max_depth = 24) const;

private:
    std::string name_;
    std::vector<Similitude> maps_;
    Rational L_;
    std::vector<Point> fixed_points_;
    std::vector<EssentialPoint> essential_;
    std::vector<Point> essential_vertices_;
    std::vector<Point> hull_;
    double walk_dim_ = 0.0;
    double chemical_exp_ = 0.0;
    bool osc_asserted_ = false;
};

std::vector<Point> fixed_points(const std::vector<Similitude>& maps);
/// Fixed points x with Psi_i(x) = Psi_j(y) for another fixed point y and i != j.
std::vector<EssentialPoint> essential_fixed_points(const std::vector<Similitude>& maps);

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string detail;
    std::optional<Point> witness;
};

struct SnfReport {
    int depth = 0;
    std::vector<AxiomResult> axioms;

    bool all_pass() const;
    const AxiomResult& axiom(const std::string& name) const;
};

/// Nesting is checked on the exact outer approximation of each first-level cell
/// by the hulls of its depth-level subcells; the open set condition is taken
/// from the configuration.
SnfReport validate_snf(const FractalSystem& system, int depth);

// Delta = K^<level> + offset with offset = sum_{j=level+1}^{M} L^j nu_{word[j-level-1]}.
struct CellAddress {
    int level = 0;
    std::vector<int> word;
    Point offset;
};

/// All N^(M-n) n-cells of K^<M>, coarsest index varying slowest. n may be negative.
std::vector<CellAddress> enumerate_cells(const FractalSystem& system, int M, int n);

struct VertexGraph {
    int level = 0;   // smallest cells have scale L^-level
    int domain = 0;  // graph of K^<domain>
    std::vector<Point> vertices;
    std::vector<std::array<double, 2>> coords;
    std::vector<std::vector<int>> adjacency;
    struct Edge {
        int u = 0;
        int v = 0;
        int shared_cells = 0;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cells;
    std::vector<int> incident_cells;
    std::vector<Rational> measure_exact;
    std::vector<double> measure;

    int size() const { return static_cast<int>(vertices.size()); }
    /// Index of an exact point, or -1.
    int index_of(const Point& p) const;
    bool connected() const;
    double distance(int a, int b) const;

private:
    friend VertexGraph build_vertex_graph(const FractalSystem&, int, int);
    std::map<Point, int, PointLess> index_;
};

/// Graph of K^<M> whose smallest cells are the (-n)-cells; vertex mass is
/// (incident cells) * N^-n / K, so the total is N^M.
VertexGraph build_vertex_graph(const FractalSystem& system, int M, int n);

/// Exact convex hull (counter-clockwise, no collinear interior points).
std::vector<Point> convex_hull(std::vector<Point> points);

/// Exact intersection of two convex hulls (possibly degenerate); returns the
/// distinct vertices of the intersection polygon.
std::vector<Point> intersect_convex(const std::vector<Point>& a, const std::vector<Point>& b);

bool hull_contains(const std::vector<Point>& hull, const Point& p);

}  // namespace fraclab
