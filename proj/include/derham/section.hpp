#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

/// Affine plane {point + s * dir_s + t * dir_t} in Q^n.
struct Plane2 {
    std::vector<Rational> point;
    std::vector<Rational> dir_s;
    std::vector<Rational> dir_t;

    std::size_t dimension() const noexcept { return point.size(); }
    /// Directions are linearly independent.
    bool is_proper() const;
};

/// "p;u;w", each a comma-separated list of n rationals (integers or a/b).
Plane2 parse_plane(std::string_view spec, std::size_t n);
std::string format_plane(const Plane2& plane);

/// Integer entries in [-5, 5]; directions are resampled until independent.
Plane2 random_plane(std::size_t n, std::mt19937_64& rng);

/// Q(s, t) = P(point + s * dir_s + t * dir_t), a polynomial of arity 2.
Polynomial restrict_to_plane(const Polynomial& P, const Plane2& plane);

struct SectionComparison {
    Plane2 plane;
    Polynomial section;
    std::size_t ambient_count = 0;
    /// Empty when the section is degenerate (constant or not reduced).
    std::optional<std::size_t> section_count;
    std::string degenerate_reason;

    bool equal() const { return section_count && *section_count == ambient_count; }
};

/// Restricts P to the plane and counts the factors of the section.
/// Degenerate sections are reported through degenerate_reason, not thrown.
SectionComparison compare_section(const Polynomial& P, std::size_t ambient_count, const Plane2& plane);

}  // namespace derham
