#include "derham/section.hpp"

#include "derham/genericity.hpp"
#include "derham/linalg.hpp"
#include "derham/parse.hpp"
#include "derham/ruppert.hpp"

namespace derham {

bool Plane2::is_proper() const {
    if (dir_s.size() != point.size() || dir_t.size() != point.size()) return false;
    return rank(RationalMatrix{dir_s, dir_t}) == 2;
}

namespace {

std::vector<Rational> parse_vector(std::string_view text, std::size_t n) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::string item(text.substr(start, end - start));
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw Error("empty entry in plane specification");
        item = item.substr(first, last - first + 1);
        out.push_back(parse_rational(item));
        start = end + 1;
    }
    if (out.size() != n)
        throw Error("plane vector has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
    return out;
}

}  // namespace

Plane2 parse_plane(std::string_view spec, std::size_t n) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = spec.find(';', start);
        parts.push_back(spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (parts.size() != 3) throw Error("plane specification needs three ';'-separated vectors");
    Plane2 plane{parse_vector(parts[0], n), parse_vector(parts[1], n), parse_vector(parts[2], n)};
    if (!plane.is_proper()) throw DegeneratePlane("plane directions are linearly dependent");
    return plane;
}

std::string format_plane(const Plane2& plane) {
    std::string out;
    for (const auto* v : {&plane.point, &plane.dir_s, &plane.dir_t}) {
        if (!out.empty()) out += ';';
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (i) out += ',';
            out += format_rational((*v)[i]);
        }
    }
    return out;
}

Plane2 random_plane(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-5, 5);
    auto draw = [&] {
        std::vector<Rational> v(n);
        for (auto& x : v) x = dist(rng);
        return v;
    };
    Plane2 plane;
    plane.point = draw();
    do {
        plane.dir_s = draw();
        plane.dir_t = draw();
    } while (!plane.is_proper());
    return plane;
}

Polynomial restrict_to_plane(const Polynomial& P, const Plane2& plane) {
    const std::size_t n = P.arity();
    if (plane.dimension() != n) throw ArityMismatch("plane dimension does not match polynomial arity");
    if (!plane.is_proper()) throw DegeneratePlane("plane directions are linearly dependent");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::constant(2, plane.point[i]);
        img.add_term(Monomial::variable(2, 0), plane.dir_s[i]);
        img.add_term(Monomial::variable(2, 1), plane.dir_t[i]);
        images.push_back(std::move(img));
    }
    return substitute(P, images);
}

SectionComparison compare_section(const Polynomial& P, std::size_t ambient_count, const Plane2& plane) {
    SectionComparison out;
    out.plane = plane;
    out.ambient_count = ambient_count;
    out.section = restrict_to_plane(P, plane);
    if (out.section.is_constant()) {
        out.degenerate_reason = "section is constant";
        return out;
    }
    try {
        out.section_count = count_factors(out.section);
    } catch (const NotReduced&) {
        out.degenerate_reason = "section is not reduced";
    }
    return out;
}

}  // namespace derham
