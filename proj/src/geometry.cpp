#include "arrowhead/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arrowhead {

double distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("distance: dimension mismatch");
    }
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

bool approx_equal(const Point& a, const Point& b, double tol) {
    return a.dim() == b.dim() && distance(a, b) <= tol;
}

std::string format_digits(std::span<const std::uint8_t> digits, int dimension) {
    std::string out;
    if (dimension <= 9) {
        out.reserve(digits.size());
        for (std::uint8_t t : digits) {
            out.push_back(static_cast<char>('0' + t));
        }
    } else {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(static_cast<int>(digits[i]));
        }
    }
    return out;
}

std::string format_address(const Address& a, int dimension) {
    return format_digits(a.digits, dimension);
}

Address parse_address(std::string_view text, int dimension) {
    Address a;
    if (text.empty()) {
        return a;
    }
    if (dimension <= 9) {
        a.digits.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("parse_address: invalid character '" +
                                            std::string(1, c) + "'");
            }
            const int value = c - '0';
            if (value > dimension) {
                throw std::invalid_argument("parse_address: digit " + std::to_string(value) +
                                            " out of range for dimension " +
                                            std::to_string(dimension));
            }
            a.digits.push_back(static_cast<std::uint8_t>(value));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string token(text.substr(pos, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - pos));
            std::size_t consumed = 0;
            int value = -1;
            try {
                value = std::stoi(token, &consumed);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_address: invalid token '" + token + "'");
            }
            if (consumed != token.size() || value < 0 || value > dimension) {
                throw std::invalid_argument("parse_address: invalid token '" + token + "'");
            }
            a.digits.push_back(static_cast<std::uint8_t>(value));
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    return a;
}

SimplexGeometry::SimplexGeometry(int dimension) : dimension_(dimension) {
    if (dimension < 2) {
        throw std::invalid_argument("SimplexGeometry: dimension must be >= 2, got " +
                                    std::to_string(dimension));
    }
    const std::size_t d = static_cast<std::size_t>(dimension);
    vertices_.reserve(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        Point p;
        p.coords.assign(d, 0.0);
        p.coords[i] = 1.0;
        vertices_.push_back(std::move(p));
    }
    const double c = (1.0 + std::sqrt(static_cast<double>(dimension + 1))) / dimension;
    Point apex;
    apex.coords.assign(d, c);
    vertices_.push_back(std::move(apex));
}

const Point& SimplexGeometry::vertex(int i) const {
    if (i < 0 || i > dimension_) {
        throw std::out_of_range("vertex index " + std::to_string(i) +
                                " out of range for dimension " + std::to_string(dimension_));
    }
    return vertices_[static_cast<std::size_t>(i)];
}

Point SimplexGeometry::contract(int i, const Point& x) const {
    const Point& p = vertex(i);
    if (x.dim() != dimension_) {
        throw std::invalid_argument("contract: point has dimension " +
                                    std::to_string(x.dim()) + ", expected " +
                                    std::to_string(dimension_));
    }
    Point out;
    out.coords.resize(static_cast<std::size_t>(dimension_));
    for (int k = 0; k < dimension_; ++k) {
        out[k] = 0.5 * (x[k] + p[k]);
    }
    return out;
}

Point SimplexGeometry::apply_address(std::span<const std::uint8_t> digits, int v) const {
    Point x = vertex(v);
    // Rightmost digit is innermost: apply it first.
    for (std::size_t i = digits.size(); i-- > 0;) {
        x = contract(digits[i], x);
    }
    return x;
}

Point SimplexGeometry::apply_address(const Address& a, int v) const {
    return apply_address(std::span<const std::uint8_t>(a.digits), v);
}

std::vector<Point> SimplexGeometry::simplex_vertices(std::span<const std::uint8_t> digits) const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(dimension_) + 1);
    for (int v = 0; v <= dimension_; ++v) {
        out.push_back(apply_address(digits, v));
    }
    return out;
}

std::optional<int> SimplexGeometry::vertex_index_of_point(std::span<const std::uint8_t> digits,
                                                          const Point& q, double tol) const {
    if (tol <= 0.0) {
        throw std::invalid_argument("vertex_index_of_point: tol must be > 0");
    }
    std::optional<int> found;
    for (int v = 0; v <= dimension_; ++v) {
        if (approx_equal(apply_address(digits, v), q, tol)) {
            if (found) {
                std::ostringstream msg;
                msg << "vertex_index_of_point: vertices " << *found << " and " << v
                    << " of simplex " << format_digits(digits, dimension_)
                    << " both match within tol " << tol << " (tol too large for the level)";
                throw std::runtime_error(msg.str());
            }
            found = v;
        }
    }
    return found;
}

} // namespace arrowhead
