#include "bing/mesh.hpp"

#include <cstdio>
#include <map>
#include <ostream>

namespace bing {

TriMesh boundary_mesh(const CubeCollection& c) {
    TriMesh m;
    std::map<std::array<std::int64_t, 3>, int> vid;
    double s = c.side().to_double();
    auto vert = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        auto key = std::array<std::int64_t, 3>{x, y, z};
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(m.vertices.size());
        m.vertices.push_back({x * s, y * s, z * s});
        vid.emplace(key, id);
        return id;
    };
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (const auto& cell : c.cells()) {
        for (const auto& d : dirs) {
            if (c.contains_cell(cell + d)) continue;
            int ax = d.x != 0 ? 0 : (d.y != 0 ? 1 : 2);
            int u = (ax + 1) % 3, v = (ax + 2) % 3;
            Int3 base = cell;
            if (d[ax] > 0) base[ax] += 1;
            // quad corners in the (u, v) plane, counter-clockwise seen from +ax
            std::array<Int3, 4> q;
            for (int i = 0; i < 4; ++i) q[i] = base;
            q[1][u] += 1;
            q[2][u] += 1;
            q[2][v] += 1;
            q[3][v] += 1;
            if (d[ax] < 0) std::swap(q[1], q[3]); // flip for outward -ax normal
            int a = vert(q[0].x, q[0].y, q[0].z);
            int b = vert(q[1].x, q[1].y, q[1].z);
            int cc = vert(q[2].x, q[2].y, q[2].z);
            int e = vert(q[3].x, q[3].y, q[3].z);
            m.faces.push_back({a, b, cc});
            m.faces.push_back({a, cc, e});
        }
    }
    return m;
}

void write_obj(std::ostream& os, const TriMesh& m) {
    char buf[128];
    for (const auto& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        os << buf;
    }
    for (const auto& f : m.faces) os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

MeshStats analyze_mesh(const TriMesh& m) {
    MeshStats st;
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& f : m.faces)
        for (int e = 0; e < 3; ++e) {
            int a = f[e], b = f[(e + 1) % 3];
            edge_count[{std::min(a, b), std::max(a, b)}]++;
        }
    st.closed_manifold = true;
    for (const auto& [e, n] : edge_count)
        if (n != 2) st.closed_manifold = false;
    st.euler = static_cast<long>(m.vertices.size()) - static_cast<long>(edge_count.size()) +
               static_cast<long>(m.faces.size());
    // components over shared vertices
    std::vector<int> parent(m.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& f : m.faces) {
        int a = find(f[0]);
        parent[find(f[1])] = a;
        parent[find(f[2])] = find(a);
    }
    std::map<int, int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots[find(static_cast<int>(i))] = 1;
    st.components = static_cast<int>(roots.size());
    return st;
}

} // namespace bing
