#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrowhead/geometry.hpp"
#include "arrowhead/rules.hpp"

namespace arrowhead {

/// Default bound on (d+1)^n cells for expansion and related operations.
inline constexpr std::uint64_t default_cell_cap = 10'000'000;

/// (d+1)^level with overflow checking.
std::uint64_t cell_count(int dimension, int level);

/// The ordered address list of one level, grouped in consecutive blocks of
/// d+1 addresses sharing their full prefix. Stored as a flat digit buffer.
class AddressSequence {
public:
    AddressSequence(int dimension, int level, std::vector<std::uint8_t> flat_digits);

    int dimension() const { return dimension_; }
    int level() const { return level_; }
    std::size_t count() const;

    /// Digits of the k-th address (0-indexed), outermost first.
    std::span<const std::uint8_t> address(std::size_t k) const;
    std::uint8_t last_digit(std::size_t k) const;
    Address address_copy(std::size_t k) const;

private:
    int dimension_;
    int level_;
    std::vector<std::uint8_t> flat_;
};

/// One block of d+1 addresses reproduces d+1 child blocks: child block i
/// takes the full i-th parent address as prefix, and its last entries are
/// rule row i with symbol a_j replaced by the parent block's j-th last entry.
std::vector<std::vector<Address>> reproduce_block(const ReproductionRule& rule,
                                                  std::span<const Address> block);

/// Sequential reproduction from the initial block (0,...,d). Level 1 is the
/// initial block itself; each further level reproduces every block in order.
AddressSequence expand_addresses(const ReproductionRule& rule, int level,
                                 std::uint64_t max_cells = default_cell_cap);

/// Names one contracted simplex point: the address at `address_index` in the
/// generating sequence, contracting simplex point `vertex`. The closing ref
/// reuses the final address index.
struct CurvePointRef {
    std::size_t address_index = 0;
    std::uint8_t vertex = 0;

    friend bool operator==(const CurvePointRef&, const CurvePointRef&) = default;
};

/// The (d+1)^n + 1 curve point refs. At 1-indexed list position k, the
/// vertex is the address's own last entry when k = 1 (mod d+1), and the
/// previous address's last entry otherwise; the closing ref repeats the
/// final address with its own last entry.
std::vector<CurvePointRef> curve_point_refs(const AddressSequence& seq);

std::string format_ref(const AddressSequence& seq, const CurvePointRef& ref);

/// The two curve-incident vertex indices of one contracted simplex.
struct ActivityPair {
    std::uint8_t enter = 0;
    std::uint8_t exit = 0;

    friend bool operator==(const ActivityPair&, const ActivityPair&) = default;
};

/// Per-simplex (enter, exit) pairs. enter(k) follows the point-ref rule;
/// exit(k) is the next address's last entry inside a block, and the simplex's
/// own last entry at block transitions and at the end of the list.
std::vector<ActivityPair> simplex_activity(const AddressSequence& seq);

/// Piecewise linear curve through the evaluated point refs.
struct Polyline {
    int dimension = 0;
    int level = 0;
    std::vector<double> coords; // point j at [j*dimension, (j+1)*dimension)

    std::size_t point_count() const {
        return dimension > 0 ? coords.size() / static_cast<std::size_t>(dimension) : 0;
    }
    std::span<const double> point(std::size_t j) const {
        return std::span<const double>(coords).subspan(
            j * static_cast<std::size_t>(dimension), static_cast<std::size_t>(dimension));
    }
    Point point_at(std::size_t j) const {
        const auto p = point(j);
        return Point(std::vector<double>(p.begin(), p.end()));
    }
};

Polyline curve_points(const SimplexGeometry& geom, const AddressSequence& seq,
                      std::span<const CurvePointRef> refs);
Polyline curve_polyline(const SimplexGeometry& geom, const AddressSequence& seq);

/// Geometric check of the construction: both boundary points of every
/// simplex's segment must be vertices of that simplex, the matched vertex
/// indices must equal the combinatorial activity pair, and every segment
/// must have length sqrt(2)/2^n within tol. Failures are data, not errors.
struct CurveVerification {
    struct Failure {
        std::size_t simplex = 0;
        std::string what;
    };
    std::size_t simplices_checked = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

CurveVerification verify_curve(const SimplexGeometry& geom, const AddressSequence& seq,
                               double tol);

/// {"dimension": d, "level": n, "points": [[...],...]}
std::string polyline_to_json(const Polyline& poly);
/// One point per row, comma-separated coordinates.
std::string polyline_to_csv(const Polyline& poly);

} // namespace arrowhead
