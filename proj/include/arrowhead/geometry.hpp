#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrowhead {

/// A point in R^d. The coordinate count is the ambient dimension.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
};

double distance(const Point& a, const Point& b);
bool approx_equal(const Point& a, const Point& b, double tol);

/// A composition of contractions, written outermost digit first.
/// The rightmost stored digit is applied first ("last entry").
/// An empty digit list is the identity composition (level 0).
struct Address {
    std::vector<std::uint8_t> digits;

    Address() = default;
    explicit Address(std::vector<std::uint8_t> d) : digits(std::move(d)) {}

    std::size_t length() const { return digits.size(); }
    std::uint8_t last_entry() const { return digits.back(); }

    friend bool operator==(const Address&, const Address&) = default;
};

/// Text form: digits concatenated for dimension <= 9 ("021"),
/// comma-separated integers for dimension >= 10 ("0,12,1").
std::string format_digits(std::span<const std::uint8_t> digits, int dimension);
std::string format_address(const Address& a, int dimension);
Address parse_address(std::string_view text, int dimension);

/// The regular d-simplex used as the contraction attractor.
/// Vertices 0..d-1 are the standard basis points; vertex d is
/// ((1+sqrt(d+1))/d) * (1,...,1). All edges have length sqrt(2).
class SimplexGeometry {
public:
    explicit SimplexGeometry(int dimension);

    int dimension() const { return dimension_; }
    const Point& vertex(int i) const;
    const std::vector<Point>& vertices() const { return vertices_; }

    /// f_i(x) = (x + p_i) / 2.
    Point contract(int i, const Point& x) const;

    /// Evaluates f_{t_{n-1}} o ... o f_{t_0}(p_v): the rightmost digit is
    /// applied first.
    Point apply_address(std::span<const std::uint8_t> digits, int v) const;
    Point apply_address(const Address& a, int v) const;

    /// All d+1 vertices of the contracted simplex named by the address,
    /// in vertex-index order.
    std::vector<Point> simplex_vertices(std::span<const std::uint8_t> digits) const;

    /// The unique vertex index of the contracted simplex whose point lies
    /// within tol of q, or nullopt. Throws if two vertices match (tol too
    /// large for the level).
    std::optional<int> vertex_index_of_point(std::span<const std::uint8_t> digits,
                                             const Point& q, double tol) const;

private:
    int dimension_;
    std::vector<Point> vertices_;
};

} // namespace arrowhead
