#include "slfem/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace slfem {

namespace {

// Base grid node index, column i in [0, n], row j in [0, n].
int grid_id(int n, int i, int j) { return j * (n + 1) + i; }

CrackMesh build_grid(int n) {
    CrackMesh mesh;
    mesh.n_div = n;
    mesh.nodes.reserve(static_cast<size_t>(n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
    mesh.quads.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            mesh.quads.push_back(
                {grid_id(n, i, j), grid_id(n, i + 1, j), grid_id(n, i + 1, j + 1), grid_id(n, i, j + 1)});
    return mesh;
}

void add_outer_facets(CrackMesh& mesh, int n) {
    for (int i = 0; i < n; ++i)
        mesh.facets.push_back({grid_id(n, i, 0), grid_id(n, i + 1, 0), BoundaryMarker::Bottom});
    for (int j = 0; j < n; ++j)
        mesh.facets.push_back({grid_id(n, n, j), grid_id(n, n, j + 1), BoundaryMarker::Right});
    for (int i = 0; i < n; ++i)
        mesh.facets.push_back({grid_id(n, i, n), grid_id(n, i + 1, n), BoundaryMarker::Top});
    for (int j = 0; j < n; ++j)
        mesh.facets.push_back({grid_id(n, 0, j), grid_id(n, 0, j + 1), BoundaryMarker::Left});
}

}  // namespace

CrackMesh build_uncracked_square(int n_div) {
    if (n_div < 1) throw std::invalid_argument("build_uncracked_square: n_div must be >= 1");
    CrackMesh mesh = build_grid(n_div);
    add_outer_facets(mesh, n_div);
    mesh.cracked = false;
    return mesh;
}

CrackMesh build_cracked_square(int n_div) {
    if (n_div < 4 || n_div % 2 != 0)
        throw std::invalid_argument("build_cracked_square: n_div must be even and >= 4");
    const int n = n_div;
    const int half = n / 2;
    CrackMesh mesh = build_grid(n);
    mesh.cracked = true;

    // Upper-flank duplicates of the seam nodes at x = 0.5 + k/n, k = 1..n/2.
    // dup(k) is referenced by elements whose bottom edge lies on the seam.
    std::vector<int> dup(half + 1, -1);
    dup[0] = grid_id(n, half, half);  // shared tip, never duplicated
    for (int k = 1; k <= half; ++k) {
        dup[k] = mesh.n_nodes();
        mesh.nodes.push_back(mesh.nodes[grid_id(n, half + k, half)]);
    }

    // Rewire the element row just above the seam to the duplicates.
    for (int i = half; i < n; ++i) {
        auto& q = mesh.quads[static_cast<size_t>(half) * n + i];  // corners: bl, br, tr, tl
        if (i > half) q[0] = dup[i - half];
        q[1] = dup[i + 1 - half];
    }

    add_outer_facets(mesh, n);
    // The right-boundary facet starting at (1, 0.5) belongs to the upper
    // flank element and must reference the duplicated corner node.
    for (auto& f : mesh.facets)
        if (f.marker == BoundaryMarker::Right && f.a == grid_id(n, n, half)) f.a = dup[half];

    for (int k = 0; k < half; ++k) {
        mesh.facets.push_back(
            {grid_id(n, half + k, half), grid_id(n, half + k + 1, half), BoundaryMarker::CrackLower});
        mesh.facets.push_back({dup[k], dup[k + 1], BoundaryMarker::CrackUpper});
    }
    return mesh;
}

int tip_node_index(const CrackMesh& mesh) {
    int found = -1;
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        if (std::abs(mesh.nodes[i][0] - 0.5) <= 1e-12 && std::abs(mesh.nodes[i][1] - 0.5) <= 1e-12) {
            if (found >= 0) throw std::runtime_error("tip_node_index: multiple nodes at the tip");
            found = i;
        }
    }
    if (found < 0) throw std::runtime_error("tip_node_index: no node at (0.5, 0.5)");
    return found;
}

}  // namespace slfem
