#ifndef SLFEM_MESH_HPP
#define SLFEM_MESH_HPP

#include <array>
#include <vector>

namespace slfem {

enum class BoundaryMarker {
    Bottom,      // y = 0
    Right,       // x = 1
    Top,         // y = 1
    Left,        // x = 0
    CrackUpper,  // upper flank of the seam
    CrackLower   // lower flank of the seam
};

struct Facet {
    int a = -1;
    int b = -1;
    BoundaryMarker marker = BoundaryMarker::Bottom;
};

/// Structured quad mesh of the unit square. The cracked variant carries a
/// zero-width seam along y = 0.5, 0.5 <= x <= 1: every seam location except
/// the tip (0.5, 0.5) hosts two coincident nodes, the original on the lower
/// flank and a duplicate on the upper flank. Elements above the seam
/// reference the duplicates, so the flanks can separate while the tip stays
/// shared.
struct CrackMesh {
    std::vector<std::array<double, 2>> nodes;
    std::vector<std::array<int, 4>> quads;  // counterclockwise corner indices
    std::vector<Facet> facets;
    int n_div = 0;
    bool cracked = false;

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_quads() const { return static_cast<int>(quads.size()); }
};

/// n_div must be even and >= 4 so the seam and the tip land on grid lines.
CrackMesh build_cracked_square(int n_div);

/// Plain grid without the seam (patch-test geometry). n_div >= 1.
CrackMesh build_uncracked_square(int n_div);

/// Index of the unique node at the crack tip (0.5, 0.5). Throws unless
/// exactly one node matches within 1e-12.
int tip_node_index(const CrackMesh& mesh);

}  // namespace slfem

#endif
