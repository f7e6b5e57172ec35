#pragma once

#include "bing/cube.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bing {

// First failed condition plus witness cube origins (in lattice cells).
struct Violation {
    std::string condition;
    std::string detail;
    std::vector<Int3> witnesses;
};

template <typename T>
using Validated = std::variant<T, Violation>;

template <typename T>
bool ok(const Validated<T>& v) { return std::holds_alternative<T>(v); }
template <typename T>
const T& get_value(const Validated<T>& v) { return std::get<T>(v); }
template <typename T>
const Violation& get_violation(const Validated<T>& v) { return std::get<Violation>(v); }

// Cubical loop: every cube an I-cube or corner, adjacency graph a single
// cycle, corner neighborhoods mutually disjoint. Stores the cyclic order.
class CubicalLoop {
public:
    const CubeCollection& collection() const { return coll_; }
    const std::vector<std::size_t>& order() const { return order_; } // cyclic, indices into coll_
    std::size_t size() const { return coll_.size(); }
    const Rational& side() const { return coll_.side(); }
    Cube cube_at(std::size_t pos) const { return coll_.cube(order_[pos % order_.size()]); }
    Int3 cell_at(std::size_t pos) const { return coll_.cells()[order_[pos % order_.size()]]; }
    std::vector<std::size_t> corner_positions() const; // positions in the cyclic order
    bool is_model_loop() const;                        // exactly four corners
    bool is_planar_slab() const;                       // all cubes in one z/x/y slab
    CubeRole role_at(std::size_t pos) const;

    static Validated<CubicalLoop> validate(const CubeCollection& c);
    // Keeps the collection's own cell order as the cyclic order (it must
    // already walk the cycle); used by parsers for lossless round-trips.
    static Validated<CubicalLoop> validate_ordered(const CubeCollection& c);

private:
    CubeCollection coll_;
    std::vector<std::size_t> order_;
};

// Cubical arc: two terminal cubes, interior cubes I or corner, corner
// neighborhoods mutually disjoint. Stores the linear order terminal-to-terminal.
class CubicalArc {
public:
    const CubeCollection& collection() const { return coll_; }
    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t size() const { return coll_.size(); }
    const Rational& side() const { return coll_.side(); }
    Cube cube_at(std::size_t pos) const { return coll_.cube(order_.at(pos)); }
    Int3 cell_at(std::size_t pos) const { return coll_.cells()[order_.at(pos)]; }
    bool is_segment() const; // no corners
    CubeRole role_at(std::size_t pos) const;

    static Validated<CubicalArc> validate(const CubeCollection& c);

private:
    CubeCollection coll_;
    std::vector<std::size_t> order_;
};

// Maximal run of consecutive I-cubes (positions along the stored order).
struct IBlock {
    std::vector<std::size_t> positions;         // full block
    std::vector<std::size_t> reduced_positions; // block minus its end cubes
};

std::vector<IBlock> i_blocks(const CubicalLoop& l);
std::vector<IBlock> i_blocks(const CubicalArc& a);

// Nested pair per the four conditions; `uniform` additionally requires
// dist(|L'|, boundary |L|) >= side(L').
struct NestedPair {
    CubicalLoop outer;
    CubicalLoop inner;
    std::vector<std::size_t> inclusion; // inner order position -> outer order position
    bool uniform = false;
};

Validated<NestedPair> validate_nested_pair(const CubicalLoop& outer, const CubicalLoop& inner,
                                           bool require_uniform);

// Exact Euclidean-squared distance between |inner| and the boundary of |outer|,
// both unions of cubes; used by the uniformity check.
Rational dist2_to_boundary(const CubicalLoop& outer, const CubicalLoop& inner);

struct Splitting {
    CubicalArc plus;
    CubicalArc minus;
    Int3 t1, t2; // shared terminal cells
};

Validated<Splitting> split_loop(const CubicalLoop& l, const Int3& t1, const Int3& t2);

// Proper nesting of a loop inside an arc (four conditions).
Validated<std::monostate> validate_proper_nesting(const CubicalArc& arc, const CubicalLoop& inner);

// Orientation-preserving cyclic shift of the inner loop of a nested pair.
struct Rotation {
    std::size_t loop_size = 0;
    std::int64_t shift = 0; // cube positions, mod loop_size

    std::size_t apply(std::size_t pos) const {
        std::int64_t n = static_cast<std::int64_t>(loop_size);
        std::int64_t r = (static_cast<std::int64_t>(pos) + shift) % n;
        if (r < 0) r += n;
        return static_cast<std::size_t>(r);
    }
    Rotation compose(const Rotation& o) const { return {loop_size, shift + o.shift}; }
    bool is_identity() const { return loop_size == 0 || shift % static_cast<std::int64_t>(loop_size) == 0; }
};

Rotation induced_rotation(const NestedPair& p, std::int64_t k);

// Concentric middle-third ring of a loop: three side/3 cubes per cube of l,
// following the core. Always a valid loop; returned with its cyclic order.
CubicalLoop middle_third_ring(const CubicalLoop& l);

} // namespace bing
