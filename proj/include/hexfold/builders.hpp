#ifndef HEXFOLD_BUILDERS_HPP
#define HEXFOLD_BUILDERS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "hexfold/lattice.hpp"

namespace hexfold {

/// Two integer wrapping vectors in the hexagonal Bravais basis
/// a1 = (3/2, sqrt(3)/2), a2 = (3/2, -sqrt(3)/2), bond length 1.
struct TorusWrapping {
    std::array<int, 2> a{0, 0};
    std::array<int, 2> b{0, 0};

    long long det() const {
        return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
    }
};

/// Quotient of the infinite honeycomb lattice by the two wrapping
/// translations: 2N vertices, 3N edges, N hexagons, N = |det|.
/// Throws DegenerateWrappingError for zero determinant or a quotient
/// with loops or repeated edges.
Lattice build_honeycomb_torus(const TorusWrapping& wrapping);

/// Goldberg polyhedron GP(m,n): trivalent sphere lattice with 12 pentagons
/// and 10(T-1) hexagons, T = m^2 + mn + n^2. GP(1,1) is C60.
Lattice build_goldberg_fullerene(int m, int n);

/// Dual of the frequency-f subdivided octahedron: 6 squares at the corners,
/// hexagons elsewhere; bipartite.
Lattice build_octahedral_graphenoid(int frequency);

/// Text format parse only; no semantic validation. Throws ParseError.
LatticeData read_lattice_data(const std::filesystem::path& path);

/// Parse + validate. Throws ParseError or StructuralError.
Lattice load_lattice(const std::filesystem::path& path);

void save_lattice(const Lattice& lattice, const std::filesystem::path& path);

/// Render the `lattice v1` text format to a string (used by save_lattice).
std::string format_lattice(const LatticeData& data);

/// Parse the text format from a string.
LatticeData parse_lattice(const std::string& text);

} // namespace hexfold

#endif
