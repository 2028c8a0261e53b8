#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fraclab {

using Rational = boost::multiprecision::cpp_rational;

// Element a + b*sqrt(3) of the quadratic field Q(sqrt 3). Every coordinate of
// the shipped fractals (and of their rotations by multiples of 60 degrees)
// lives here, so vertex identification never needs a tolerance.
class Surd {
public:
    Surd() = default;
    Surd(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design of the field embedding
    Surd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    Surd(int a) : a_(a) {}  // NOLINT

    const Rational& rational_part() const { return a_; }
    const Rational& root3_part() const { return b_; }

    Surd operator-() const { return {-a_, -b_}; }
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd l, const Surd& r) { return l += r; }
    friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
    friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
    friend Surd operator/(Surd l, const Surd& r) { return l /= r; }

    friend bool operator==(const Surd& l, const Surd& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

    /// Exact sign of the real number a + b*sqrt(3).
    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    double to_double() const;
    std::string str() const;

    /// Lexicographic on (a, b); a total order for containers, not the numeric order.
    static bool lex_less(const Surd& l, const Surd& r);

private:
    Rational a_{0};
    Rational b_{0};
};

/// Numeric comparison: negative, zero or positive as l <, =, > r.
int compare(const Surd& l, const Surd& r);
Surd sqrt3();
Surd pow(const Surd& base, int exponent);

/// Parses expressions like "1/4", "-0.01", "1/4*sqrt3", "1/2 + sqrt3/6".
Surd parse_surd(std::string_view text);

struct Point {
    Surd x;
    Surd y;

    Point& operator+=(const Point& o) { x += o.x; y += o.y; return *this; }
    Point& operator-=(const Point& o) { x -= o.x; y -= o.y; return *this; }
    friend Point operator+(Point l, const Point& r) { return l += r; }
    friend Point operator-(Point l, const Point& r) { return l -= r; }
    friend Point operator*(const Surd& s, const Point& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point& l, const Point& r) = default;

    std::pair<double, double> to_double() const { return {x.to_double(), y.to_double()}; }
    std::string str() const;
};

struct PointLess {
    bool operator()(const Point& l, const Point& r) const;
};

Surd dot(const Point& a, const Point& b);
Surd cross(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

/// 2x2 matrix [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
    Surd a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    Point apply(const Point& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 transpose() const { return {a, c, b, d}; }
    bool is_identity() const;
    bool is_orthogonal() const;
    friend bool operator==(const Mat2& l, const Mat2& r) = default;
};

/// Rotation by k * 60 degrees; exact in Q(sqrt 3).
Mat2 rotation_sixths(int k);

}  // namespace fraclab
