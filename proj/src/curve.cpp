#include "arrowhead/curve.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace arrowhead {

namespace {

void require_level(int level) {
    if (level < 1) {
        throw std::invalid_argument("level must be >= 1, got " + std::to_string(level));
    }
}

// Last entries of child block i: rule row i with symbol a_j replaced by the
// parent block's j-th last entry.
void child_last_entries(const ReproductionRule& rule, std::span<const std::uint8_t> parent_last,
                        int i, std::span<std::uint8_t> out) {
    const auto row = rule.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = parent_last[row[j]];
    }
}

} // namespace

std::uint64_t cell_count(int dimension, int level) {
    if (dimension < 2) {
        throw std::invalid_argument("cell_count: dimension must be >= 2");
    }
    if (level < 0) {
        throw std::invalid_argument("cell_count: level must be >= 0");
    }
    const std::uint64_t base = static_cast<std::uint64_t>(dimension) + 1;
    std::uint64_t cells = 1;
    for (int i = 0; i < level; ++i) {
        if (cells > UINT64_MAX / base) {
            throw std::overflow_error("cell_count: (d+1)^n exceeds 64-bit range");
        }
        cells *= base;
    }
    return cells;
}

AddressSequence::AddressSequence(int dimension, int level, std::vector<std::uint8_t> flat_digits)
    : dimension_(dimension), level_(level), flat_(std::move(flat_digits)) {
    if (dimension < 2) {
        throw std::invalid_argument("AddressSequence: dimension must be >= 2");
    }
    require_level(level);
    const std::uint64_t expected =
        cell_count(dimension, level) * static_cast<std::uint64_t>(level);
    if (flat_.size() != expected) {
        throw std::invalid_argument("AddressSequence: digit buffer has " +
                                    std::to_string(flat_.size()) + " entries, expected " +
                                    std::to_string(expected));
    }
    for (std::uint8_t t : flat_) {
        if (t > dimension) {
            throw std::invalid_argument("AddressSequence: digit out of range");
        }
    }
}

std::size_t AddressSequence::count() const {
    return flat_.size() / static_cast<std::size_t>(level_);
}

std::span<const std::uint8_t> AddressSequence::address(std::size_t k) const {
    return std::span<const std::uint8_t>(flat_).subspan(k * static_cast<std::size_t>(level_),
                                                        static_cast<std::size_t>(level_));
}

std::uint8_t AddressSequence::last_digit(std::size_t k) const {
    return flat_[(k + 1) * static_cast<std::size_t>(level_) - 1];
}

Address AddressSequence::address_copy(std::size_t k) const {
    const auto digits = address(k);
    return Address(std::vector<std::uint8_t>(digits.begin(), digits.end()));
}

std::vector<std::vector<Address>> reproduce_block(const ReproductionRule& rule,
                                                  std::span<const Address> block) {
    const std::size_t side = static_cast<std::size_t>(rule.side());
    if (block.size() != side) {
        throw std::invalid_argument("reproduce_block: block must hold d+1 addresses");
    }
    std::vector<std::uint8_t> parent_last(side);
    std::vector<bool> seen(side, false);
    for (std::size_t j = 0; j < side; ++j) {
        if (block[j].digits.empty()) {
            throw std::invalid_argument("reproduce_block: empty address in block");
        }
        const std::uint8_t last = block[j].last_entry();
        if (last >= side || seen[last]) {
            throw std::invalid_argument(
                "reproduce_block: block last entries must be a permutation");
        }
        seen[last] = true;
        parent_last[j] = last;
        if (block[j].digits.size() != block[0].digits.size()) {
            throw std::invalid_argument("reproduce_block: block addresses differ in length");
        }
    }

    std::vector<std::vector<Address>> children(side);
    std::vector<std::uint8_t> last_entries(side);
    for (std::size_t i = 0; i < side; ++i) {
        child_last_entries(rule, parent_last, static_cast<int>(i), last_entries);
        children[i].reserve(side);
        for (std::size_t j = 0; j < side; ++j) {
            Address child = block[i];
            child.digits.push_back(last_entries[j]);
            children[i].push_back(std::move(child));
        }
    }
    return children;
}

AddressSequence expand_addresses(const ReproductionRule& rule, int level,
                                 std::uint64_t max_cells) {
    require_level(level);
    const int d = rule.dimension;
    const std::uint64_t cells = cell_count(d, level);
    if (cells > max_cells) {
        throw std::length_error("expand_addresses: level " + std::to_string(level) +
                                " in dimension " + std::to_string(d) + " needs " +
                                std::to_string(cells) + " cells, exceeding the cap of " +
                                std::to_string(max_cells));
    }
    const std::size_t side = static_cast<std::size_t>(d) + 1;

    // Level 1 is the initial block, no reproduction.
    std::vector<std::uint8_t> current(side);
    for (std::size_t j = 0; j < side; ++j) {
        current[j] = static_cast<std::uint8_t>(j);
    }

    std::vector<std::uint8_t> last_entries(side);
    std::vector<std::uint8_t> parent_last(side);
    for (int n = 1; n < level; ++n) {
        const std::size_t addr_len = static_cast<std::size_t>(n);
        const std::size_t parent_count = current.size() / addr_len;
        const std::size_t block_count = parent_count / side;
        std::vector<std::uint8_t> next(parent_count * side * (addr_len + 1));

        std::size_t write = 0;
        for (std::size_t b = 0; b < block_count; ++b) {
            const std::uint8_t* block_base = current.data() + b * side * addr_len;
            for (std::size_t j = 0; j < side; ++j) {
                parent_last[j] = block_base[(j + 1) * addr_len - 1];
            }
            for (std::size_t i = 0; i < side; ++i) {
                child_last_entries(rule, parent_last, static_cast<int>(i), last_entries);
                const std::uint8_t* prefix = block_base + i * addr_len;
                for (std::size_t j = 0; j < side; ++j) {
                    std::copy(prefix, prefix + addr_len, next.begin() +
                              static_cast<std::ptrdiff_t>(write));
                    write += addr_len;
                    next[write++] = last_entries[j];
                }
            }
        }
        current = std::move(next);
    }
    return AddressSequence(d, level, std::move(current));
}

std::vector<CurvePointRef> curve_point_refs(const AddressSequence& seq) {
    const std::size_t side = static_cast<std::size_t>(seq.dimension()) + 1;
    const std::size_t n = seq.count();
    std::vector<CurvePointRef> refs;
    refs.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint8_t vertex =
            (k % side == 0) ? seq.last_digit(k) : seq.last_digit(k - 1);
        refs.push_back({k, vertex});
    }
    refs.push_back({n - 1, seq.last_digit(n - 1)});
    return refs;
}

std::string format_ref(const AddressSequence& seq, const CurvePointRef& ref) {
    return format_digits(seq.address(ref.address_index), seq.dimension()) + "(" +
           std::to_string(static_cast<int>(ref.vertex)) + ")";
}

std::vector<ActivityPair> simplex_activity(const AddressSequence& seq) {
    const std::size_t side = static_cast<std::size_t>(seq.dimension()) + 1;
    const std::size_t n = seq.count();
    std::vector<ActivityPair> activity;
    activity.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        ActivityPair pair;
        pair.enter = (k % side == 0) ? seq.last_digit(k) : seq.last_digit(k - 1);
        const bool next_in_block = (k + 1 < n) && ((k + 1) % side != 0);
        pair.exit = next_in_block ? seq.last_digit(k + 1) : seq.last_digit(k);
        activity.push_back(pair);
    }
    return activity;
}

Polyline curve_points(const SimplexGeometry& geom, const AddressSequence& seq,
                      std::span<const CurvePointRef> refs) {
    if (geom.dimension() != seq.dimension()) {
        throw std::invalid_argument("curve_points: geometry dimension " +
                                    std::to_string(geom.dimension()) +
                                    " does not match sequence dimension " +
                                    std::to_string(seq.dimension()));
    }
    Polyline poly;
    poly.dimension = seq.dimension();
    poly.level = seq.level();
    poly.coords.reserve(refs.size() * static_cast<std::size_t>(poly.dimension));
    for (const CurvePointRef& ref : refs) {
        const Point p = geom.apply_address(seq.address(ref.address_index), ref.vertex);
        poly.coords.insert(poly.coords.end(), p.coords.begin(), p.coords.end());
    }
    return poly;
}

Polyline curve_polyline(const SimplexGeometry& geom, const AddressSequence& seq) {
    const auto refs = curve_point_refs(seq);
    return curve_points(geom, seq, refs);
}

CurveVerification verify_curve(const SimplexGeometry& geom, const AddressSequence& seq,
                               double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("verify_curve: tol must be > 0");
    }
    const Polyline poly = curve_polyline(geom, seq);
    const auto activity = simplex_activity(seq);
    const double expected_len =
        std::sqrt(2.0) / std::pow(2.0, static_cast<double>(seq.level()));

    CurveVerification report;
    report.simplices_checked = seq.count();
    for (std::size_t k = 0; k < seq.count(); ++k) {
        const auto digits = seq.address(k);
        const Point entry = poly.point_at(k);
        const Point exit = poly.point_at(k + 1);

        auto match = [&](const Point& q, std::uint8_t expected,
                         const char* label) {
            std::optional<int> idx;
            try {
                idx = geom.vertex_index_of_point(digits, q, tol);
            } catch (const std::exception& e) {
                report.failures.push_back({k, std::string(label) + ": " + e.what()});
                return;
            }
            if (!idx) {
                report.failures.push_back(
                    {k, std::string(label) + " point is not a vertex of simplex " +
                            format_digits(digits, seq.dimension())});
            } else if (*idx != static_cast<int>(expected)) {
                report.failures.push_back(
                    {k, std::string(label) + " vertex " + std::to_string(*idx) +
                            " does not match activity index " + std::to_string(expected)});
            }
        };
        match(entry, activity[k].enter, "enter");
        match(exit, activity[k].exit, "exit");

        const double len = distance(entry, exit);
        if (std::abs(len - expected_len) > tol) {
            report.failures.push_back(
                {k, "segment length " + std::to_string(len) + " deviates from " +
                        std::to_string(expected_len)});
        }
    }
    return report;
}

std::string polyline_to_json(const Polyline& poly) {
    nlohmann::ordered_json doc;
    doc["dimension"] = poly.dimension;
    doc["level"] = poly.level;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < poly.point_count(); ++j) {
        const auto p = poly.point(j);
        points.push_back(std::vector<double>(p.begin(), p.end()));
    }
    doc["points"] = std::move(points);
    return doc.dump() + "\n";
}

std::string polyline_to_csv(const Polyline& poly) {
    std::string out;
    char buffer[64];
    for (std::size_t j = 0; j < poly.point_count(); ++j) {
        const auto p = poly.point(j);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            std::snprintf(buffer, sizeof(buffer), "%.12g", p[i]);
            out += buffer;
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace arrowhead
