#ifndef HEXFOLD_LATTICE_HPP
#define HEXFOLD_LATTICE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexfold/errors.hpp"

namespace hexfold {

/// Raw candidate data for a lattice: a face list over vertex indices.
/// Faces are cyclic vertex sequences, counterclockwise with respect to one
/// global orientation. Everything else (edges, degrees, topology) is derived.
struct LatticeData {
    std::uint32_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> faces;
    std::vector<std::string> labels;
};

/// Counts of p-sided faces. Sizes that never occur are absent (count zero).
struct FaceCensus {
    std::map<int, std::int64_t> counts;

    std::int64_t count(int face_size) const {
        auto it = counts.find(face_size);
        return it == counts.end() ? 0 : it->second;
    }
    std::int64_t face_total() const {
        std::int64_t t = 0;
        for (const auto& [p, n] : counts) t += n;
        return t;
    }
    /// 2E = sum of p * n_p over all face sizes.
    std::int64_t edge_incidence_total() const {
        std::int64_t t = 0;
        for (const auto& [p, n] : counts) t += static_cast<std::int64_t>(p) * n;
        return t;
    }
    bool operator==(const FaceCensus&) const = default;
};

struct Bipartition {
    std::vector<std::uint32_t> part_a;
    std::vector<std::uint32_t> part_b;
};

/// Outcome of the 2-coloring attempt: either the partition or one odd cycle
/// witnessing frustration. Frustration is a valid result, not an error.
struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::vector<std::uint32_t> odd_cycle;

    bool bipartite() const { return parts.has_value(); }
};

struct DefectRelation {
    bool holds = false;
    std::int64_t residual = 0;
};

/// Immutable trivalent map on a closed orientable surface.
/// Construction validates; a Lattice instance always satisfies every
/// invariant (two faces per edge with opposite traversal, degree 3,
/// connected). Derived structure (edges, adjacency) is cached.
class Lattice {
public:
    /// Validates and adopts the data; throws StructuralError on any violation.
    static Lattice from(LatticeData data);

    std::uint32_t vertex_count() const { return data_.vertex_count; }
    const std::vector<std::vector<std::uint32_t>>& faces() const { return data_.faces; }
    const std::vector<std::string>& labels() const { return data_.labels; }
    const LatticeData& data() const { return data_; }

    /// Unordered vertex pairs (u < v), sorted.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::int64_t face_count() const { return static_cast<std::int64_t>(data_.faces.size()); }

    /// The three neighbors of each vertex, in counterclockwise order
    /// around the vertex (induced by the face orientations).
    const std::vector<std::array<std::uint32_t, 3>>& neighbors() const { return neighbors_; }

private:
    Lattice() = default;
    LatticeData data_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::array<std::uint32_t, 3>> neighbors_;
};

/// Checks every lattice invariant on arbitrary candidate data.
/// Never throws; all problems are reported.
ValidationReport validate(const LatticeData& data);

/// chi = V - E + F.
int euler_characteristic(const Lattice& lattice);

/// g = 1 - chi/2. Throws TopologicalInconsistencyError for odd chi or chi > 2.
int genus_of(const Lattice& lattice);

FaceCensus defect_census(const Lattice& lattice);

/// Unique-up-to-swap 2-coloring, or a shortest odd cycle as witness.
BipartitionResult bipartition(const Lattice& lattice);

/// Residual of sum_p (6-p) n_p = 12 (1-g). For 5/6/7-only lattices this is
/// exactly the pentagon/heptagon imbalance relation.
DefectRelation defect_relation_check(const FaceCensus& census, int genus);

} // namespace hexfold

#endif
