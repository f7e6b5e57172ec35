#include "bing/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace bing {

Cube::Cube(Vec3 o, Rational s) : origin(std::move(o)), side(std::move(s)) {
    if (side.sign() <= 0) throw std::invalid_argument("Cube: side must be positive");
    for (int i = 0; i < 3; ++i)
        if (!(origin[i] / side).is_integer())
            throw std::invalid_argument("Cube: origin not lattice-aligned");
}

Int3 Cube::cell() const {
    return {(origin.x / side).to_int64(), (origin.y / side).to_int64(), (origin.z / side).to_int64()};
}

Vec3 Cube::center() const {
    Rational h = side / Rational(2);
    return Vec3(origin.x + h, origin.y + h, origin.z + h);
}

std::array<Vec3, 8> Cube::vertices() const {
    std::array<Vec3, 8> v;
    for (int i = 0; i < 8; ++i) {
        v[i] = origin;
        if (i & 1) v[i].x += side;
        if (i & 2) v[i].y += side;
        if (i & 4) v[i].z += side;
    }
    return v;
}

bool Cube::contains(const Vec3& p) const {
    for (int i = 0; i < 3; ++i)
        if (p[i] < origin[i] || p[i] > origin[i] + side) return false;
    return true;
}

bool Cube::strictly_contains(const Vec3& p) const {
    for (int i = 0; i < 3; ++i)
        if (p[i] <= origin[i] || p[i] >= origin[i] + side) return false;
    return true;
}

bool Cube::intersects(const Cube& o) const {
    for (int i = 0; i < 3; ++i) {
        if (origin[i] + side < o.origin[i]) return false;
        if (o.origin[i] + o.side < origin[i]) return false;
    }
    return true;
}

bool adjacent(const Cube& a, const Cube& b) {
    if (a.side != b.side) return false;
    Int3 d = b.cell() - a.cell();
    return std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1;
}

namespace {
bool cells_adjacent(const Int3& a, const Int3& b) {
    Int3 d = b - a;
    return std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1;
}
bool cells_meet(const Int3& a, const Int3& b) { return linf(b - a) <= 1; }
bool cell_less(const Int3& a, const Int3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}
} // namespace

CubeCollection::CubeCollection(Rational side, std::vector<Int3> cells)
    : side_(std::move(side)), cells_(std::move(cells)) {
    if (side_.sign() <= 0) throw std::invalid_argument("CubeCollection: side must be positive");
    sorted_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) sorted_[i] = static_cast<std::uint32_t>(i);
    std::sort(sorted_.begin(), sorted_.end(),
              [&](std::uint32_t a, std::uint32_t b) { return cell_less(cells_[a], cells_[b]); });
    for (std::size_t i = 1; i < sorted_.size(); ++i)
        if (cells_[sorted_[i - 1]] == cells_[sorted_[i]])
            throw std::invalid_argument("CubeCollection: duplicate cube");
}

CubeCollection CubeCollection::from_cubes(const std::vector<Cube>& cubes) {
    if (cubes.empty()) return CubeCollection();
    Rational s = cubes.front().side;
    std::vector<Int3> cells;
    cells.reserve(cubes.size());
    for (const auto& c : cubes) {
        if (c.side != s) throw std::invalid_argument("CubeCollection: mixed side lengths");
        cells.push_back(c.cell());
    }
    return CubeCollection(s, std::move(cells));
}

Cube CubeCollection::cube(std::size_t i) const {
    const Int3& c = cells_.at(i);
    return Cube(Vec3(side_ * Rational(c.x), side_ * Rational(c.y), side_ * Rational(c.z)), side_);
}

std::optional<std::size_t> CubeCollection::index_of(const Int3& c) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), c,
                               [&](std::uint32_t a, const Int3& v) { return cell_less(cells_[a], v); });
    if (it == sorted_.end() || !(cells_[*it] == c)) return std::nullopt;
    return static_cast<std::size_t>(*it);
}

std::optional<Int3> CubeCollection::cell_of_point(const Vec3& p) const {
    // Candidate cells: floor(p/side) and, on lattice planes, the lower neighbors.
    Int3 base;
    bool on_plane[3];
    for (int i = 0; i < 3; ++i) {
        Rational q = p[i] / side_;
        base[i] = q.floor_int64();
        on_plane[i] = q.is_integer();
    }
    std::optional<Int3> best;
    for (int dx = 0; dx <= (on_plane[0] ? 1 : 0); ++dx)
        for (int dy = 0; dy <= (on_plane[1] ? 1 : 0); ++dy)
            for (int dz = 0; dz <= (on_plane[2] ? 1 : 0); ++dz) {
                Int3 cand{base.x - dx, base.y - dy, base.z - dz};
                if (!contains_cell(cand)) continue;
                if (!best || cell_less(cand, *best)) best = cand;
            }
    return best;
}

bool CubeCollection::covers(const Vec3& p) const { return cell_of_point(p).has_value(); }

Rational CubeCollection::volume() const {
    return Rational(static_cast<long>(cells_.size())) * side_ * side_ * side_;
}

std::vector<std::vector<std::size_t>> AdjacencyGraph::neighbor_lists() const {
    std::vector<std::vector<std::size_t>> nb(vertices);
    for (auto [i, j] : edges) {
        nb[i].push_back(j);
        nb[j].push_back(i);
    }
    return nb;
}

namespace {
bool connected(const std::vector<std::vector<std::size_t>>& nb) {
    if (nb.empty()) return false;
    std::vector<char> seen(nb.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : nb[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == nb.size();
}
} // namespace

bool AdjacencyGraph::is_cycle() const {
    auto nb = neighbor_lists();
    if (nb.size() < 3) return false;
    for (const auto& l : nb)
        if (l.size() != 2) return false;
    return connected(nb);
}

bool AdjacencyGraph::is_path() const {
    auto nb = neighbor_lists();
    if (nb.empty()) return false;
    if (nb.size() == 1) return true;
    int deg1 = 0;
    for (const auto& l : nb) {
        if (l.size() == 1)
            ++deg1;
        else if (l.size() != 2)
            return false;
    }
    return deg1 == 2 && connected(nb);
}

AdjacencyGraph adjacency_graph(const CubeCollection& c) {
    AdjacencyGraph g;
    g.vertices = c.size();
    static const Int3 dirs[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& d : dirs) {
            auto j = c.index_of(c.cells()[i] + d);
            if (j) g.edges.emplace_back(i, *j);
        }
    return g;
}

CubeRole classify(const CubeCollection& c, std::size_t i) {
    if (i >= c.size()) throw std::out_of_range("classify: cube not in collection");
    const Int3& me = c.cells()[i];
    std::vector<Int3> adj;
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (const auto& d : dirs)
        if (c.contains_cell(me + d)) adj.push_back(me + d);
    if (adj.size() == 1) return CubeRole::Terminal;
    if (adj.size() != 2) return CubeRole::Other;
    return cells_meet(adj[0], adj[1]) ? CubeRole::Corner : CubeRole::I;
}

std::vector<std::size_t> cubical_neighborhood(const CubeCollection& c, std::size_t i) {
    if (i >= c.size()) throw std::out_of_range("cubical_neighborhood: cube not in collection");
    const Int3& me = c.cells()[i];
    std::vector<std::size_t> out;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dz = -1; dz <= 1; ++dz) {
                auto j = c.index_of(me + Int3{dx, dy, dz});
                if (j) out.push_back(*j);
            }
    std::sort(out.begin(), out.end());
    return out;
}

Vec3 SymmetryPlane::reflect(const Vec3& p) const {
    Rational nn = dot(n, n); // 1 or 2
    Rational t = (dot(n, p) - off) / nn;
    return p - n * (t * Rational(2));
}

SymmetryPlane symmetry_plane(const CubeCollection& c, std::size_t i) {
    CubeRole role = classify(c, i);
    const Int3& me = c.cells()[i];
    std::vector<Int3> adj;
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (const auto& d : dirs)
        if (c.contains_cell(me + d)) adj.push_back(me + d);
    Cube q = c.cube(i);
    Vec3 ctr = q.center();
    if (role == CubeRole::I) {
        // Row direction e: plane through the center, normal e.
        Int3 e = adj[0] - me;
        Vec3 n = Vec3(Rational(e.x), Rational(e.y), Rational(e.z));
        return SymmetryPlane{n, dot(n, ctr)};
    }
    if (role == CubeRole::Corner) {
        // Plane swapping the two arms: normal a - b for arm directions a, b.
        Int3 a = adj[0] - me, b = adj[1] - me;
        Int3 d = a - b;
        Vec3 n = Vec3(Rational(d.x), Rational(d.y), Rational(d.z));
        return SymmetryPlane{n, dot(n, ctr)};
    }
    throw std::domain_error("symmetry_plane: undefined for terminal/other cubes");
}

} // namespace bing
