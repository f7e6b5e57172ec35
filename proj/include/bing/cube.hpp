#pragma once

#include "bing/geom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bing {

// Closed axis-aligned cube origin + [0, side]^3; origin is a lattice multiple
// of side in every coordinate.
struct Cube {
    Vec3 origin;
    Rational side;

    Cube() = default;
    Cube(Vec3 o, Rational s);

    friend bool operator==(const Cube&, const Cube&) = default;
    Int3 cell() const; // origin / side, exact
    Vec3 center() const;
    std::array<Vec3, 8> vertices() const;
    bool contains(const Vec3& p) const;          // closed
    bool strictly_contains(const Vec3& p) const; // open
    bool intersects(const Cube& o) const;        // closed intersection nonempty
};

bool adjacent(const Cube& a, const Cube& b); // share a full 2-face (equal sides)

// Finite set of distinct cubes on one lattice with a common side.
class CubeCollection {
public:
    CubeCollection() = default;
    CubeCollection(Rational side, std::vector<Int3> cells);

    static CubeCollection from_cubes(const std::vector<Cube>& cubes); // throws on mixed sides

    const Rational& side() const { return side_; }
    const std::vector<Int3>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); } // cubical length
    Cube cube(std::size_t i) const;
    bool contains_cell(const Int3& c) const { return index_of(c).has_value(); }
    std::optional<std::size_t> index_of(const Int3& c) const;

    // Closed point membership in the union; ties on shared faces resolve to the
    // lexicographically smallest containing cell.
    bool covers(const Vec3& p) const;
    std::optional<Int3> cell_of_point(const Vec3& p) const;

    Rational volume() const; // size * side^3

private:
    Rational side_ = Rational(1);
    std::vector<Int3> cells_;
    std::vector<std::uint32_t> sorted_; // indices into cells_, lexicographic
};

enum class CubeRole { I, Corner, Terminal, Other };

struct AdjacencyGraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j

    std::vector<std::vector<std::size_t>> neighbor_lists() const;
    bool is_cycle() const;        // connected and 2-regular
    bool is_path() const;         // connected, two degree-1 vertices, rest degree 2
};

AdjacencyGraph adjacency_graph(const CubeCollection& c);

// Role of cube i within the collection (Defs of I-cube / corner / terminal).
CubeRole classify(const CubeCollection& c, std::size_t i);

// All cubes of c meeting cube i, including i itself.
std::vector<std::size_t> cubical_neighborhood(const CubeCollection& c, std::size_t i);

// Plane {x : n.x = off}; n has one or two nonzero entries in {-1,0,1}.
struct SymmetryPlane {
    Vec3 n;
    Rational off;

    bool contains(const Vec3& p) const { return dot(n, p) == off; }
    Vec3 reflect(const Vec3& p) const; // n normalized to |n|^2 in {1,2}
    friend bool operator==(const SymmetryPlane&, const SymmetryPlane&) = default;
};

// The unique plane splitting |N_c(i)| into two congruent 3-cells; i must be an
// I-cube or corner. Throws std::domain_error otherwise.
SymmetryPlane symmetry_plane(const CubeCollection& c, std::size_t i);

} // namespace bing
