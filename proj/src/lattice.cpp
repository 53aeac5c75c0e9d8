#include "hexfold/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hexfold {

namespace {

std::string edge_name(std::uint32_t u, std::uint32_t v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "(%u,%u)", u, v);
    return buf;
}

std::string face_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "face %zu", index);
    return buf;
}

std::string vertex_name(std::uint32_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "vertex %u", v);
    return buf;
}

} // namespace

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations)
        os << "\n  [" << v.rule << "] " << v.detail << " at " << v.element;
    return os.str();
}

StructuralError::StructuralError(ValidationReport report)
    : std::runtime_error("invalid lattice: " + report.summary()), report_(std::move(report)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

UnsupportedDefectError::UnsupportedDefectError(int face_size, const std::string& what)
    : std::runtime_error(what), face_size_(face_size) {}

ValidationReport validate(const LatticeData& data) {
    ValidationReport report;
    auto add = [&](const std::string& rule, const std::string& detail, const std::string& element) {
        report.ok = false;
        report.violations.push_back({rule, detail, element});
    };

    if (data.vertex_count == 0)
        add("empty", "lattice has no vertices", "vertex_count");
    if (data.faces.empty())
        add("empty", "lattice has no faces", "faces");

    bool indices_ok = true;
    for (std::size_t fi = 0; fi < data.faces.size(); ++fi) {
        const auto& face = data.faces[fi];
        if (face.size() < 3)
            add("face-length", "face has fewer than 3 vertices", face_name(fi));
        std::set<std::uint32_t> seen;
        for (std::uint32_t v : face) {
            if (v >= data.vertex_count) {
                add("vertex-index-range", "vertex index out of range", face_name(fi));
                indices_ok = false;
                break;
            }
            if (!seen.insert(v).second) {
                add("face-repeat", "repeated vertex within one face", face_name(fi));
                break;
            }
        }
    }
    if (!indices_ok) return report; // everything below needs in-range indices

    // Each directed edge must occur exactly once; its reverse exactly once.
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
    for (const auto& face : data.faces) {
        if (face.size() < 3) continue;
        for (std::size_t i = 0; i < face.size(); ++i) {
            std::uint32_t u = face[i];
            std::uint32_t v = face[(i + 1) % face.size()];
            if (u == v) continue; // reported as face-repeat already
            directed[{u, v}]++;
        }
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> undirected;
    for (const auto& [e, n] : directed) {
        auto [u, v] = e;
        if (n > 1)
            add("orientation", "directed edge appears in more than one face (inconsistent orientation or doubled edge)",
                edge_name(u, v));
        if (u < v || directed.find({v, u}) == directed.end())
            undirected.insert({std::min(u, v), std::max(u, v)});
    }
    for (const auto& [u, v] : undirected) {
        int total = 0;
        if (auto it = directed.find({u, v}); it != directed.end()) total += it->second;
        if (auto it = directed.find({v, u}); it != directed.end()) total += it->second;
        if (total != 2)
            add("edge-faces", "edge in ≠2 faces", edge_name(u, v));
    }

    std::vector<int> degree(data.vertex_count, 0);
    for (const auto& [u, v] : undirected) {
        degree[u]++;
        degree[v]++;
    }
    for (std::uint32_t v = 0; v < data.vertex_count; ++v)
        if (degree[v] != 3)
            add("vertex-degree", "vertex degree ≠ 3", vertex_name(v));

    if (data.vertex_count > 0 && !undirected.empty()) {
        std::vector<std::vector<std::uint32_t>> adj(data.vertex_count);
        for (const auto& [u, v] : undirected) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> visited(data.vertex_count, 0);
        std::queue<std::uint32_t> queue;
        queue.push(0);
        visited[0] = 1;
        std::uint32_t reached = 1;
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop();
            for (std::uint32_t w : adj[u])
                if (!visited[w]) {
                    visited[w] = 1;
                    ++reached;
                    queue.push(w);
                }
        }
        if (reached != data.vertex_count)
            add("connectivity", "graph is not connected", "lattice");
    }

    return report;
}

Lattice Lattice::from(LatticeData data) {
    ValidationReport report = validate(data);
    if (!report.ok) throw StructuralError(std::move(report));

    Lattice lattice;
    lattice.data_ = std::move(data);

    std::set<std::pair<std::uint32_t, std::uint32_t>> undirected;
    // corner map: at vertex v, neighbor u (preceding v in a face) -> neighbor w (following v)
    std::vector<std::map<std::uint32_t, std::uint32_t>> corner(lattice.data_.vertex_count);
    for (const auto& face : lattice.data_.faces) {
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t u = face[i];
            std::uint32_t v = face[(i + 1) % k];
            std::uint32_t w = face[(i + 2) % k];
            undirected.insert({std::min(u, v), std::max(u, v)});
            corner[v][u] = w;
        }
    }
    lattice.edges_.assign(undirected.begin(), undirected.end());

    lattice.neighbors_.resize(lattice.data_.vertex_count);
    for (std::uint32_t v = 0; v < lattice.data_.vertex_count; ++v) {
        std::uint32_t n0 = corner[v].begin()->first;
        std::uint32_t n1 = corner[v][n0];
        std::uint32_t n2 = corner[v][n1];
        lattice.neighbors_[v] = {n0, n1, n2};
    }
    return lattice;
}

int euler_characteristic(const Lattice& lattice) {
    return static_cast<int>(lattice.vertex_count()) - static_cast<int>(lattice.edge_count()) +
           static_cast<int>(lattice.face_count());
}

int genus_of(const Lattice& lattice) {
    int chi = euler_characteristic(lattice);
    if (chi % 2 != 0)
        throw TopologicalInconsistencyError("Euler characteristic " + std::to_string(chi) +
                                            " is odd; not a closed orientable surface");
    if (chi > 2)
        throw TopologicalInconsistencyError("Euler characteristic " + std::to_string(chi) +
                                            " exceeds 2; not a closed orientable surface");
    return 1 - chi / 2;
}

FaceCensus defect_census(const Lattice& lattice) {
    FaceCensus census;
    for (const auto& face : lattice.faces()) census.counts[static_cast<int>(face.size())]++;
    return census;
}

namespace {

// Shortest odd cycle: BFS from every vertex; a same-level edge closes an odd
// walk; trimming both parent chains to their meeting point yields a simple
// odd cycle. The global minimum over all starts is the shortest odd cycle.
std::vector<std::uint32_t> shortest_odd_cycle(const Lattice& lattice) {
    const std::uint32_t n = lattice.vertex_count();
    std::vector<std::uint32_t> best;

    std::vector<int> dist(n);
    std::vector<std::uint32_t> parent(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<std::uint32_t> queue;
        dist[s] = 0;
        parent[s] = s;
        queue.push(s);
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop();
            for (std::uint32_t w : lattice.neighbors()[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (dist[w] == dist[u] && u < w) {
                    // odd closed walk through s of length 2*dist+1
                    std::vector<std::uint32_t> left{u}, right{w};
                    std::uint32_t a = u, b = w;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    // left ends at meeting vertex; drop it from right
                    right.pop_back();
                    std::vector<std::uint32_t> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
                }
            }
        }
        if (!best.empty() && best.size() == 3) break; // cannot do better
    }
    return best;
}

} // namespace

BipartitionResult bipartition(const Lattice& lattice) {
    const std::uint32_t n = lattice.vertex_count();
    std::vector<int> color(n, -1);
    std::queue<std::uint32_t> queue;
    color[0] = 0;
    queue.push(0);
    bool frustrated = false;
    while (!queue.empty() && !frustrated) {
        std::uint32_t u = queue.front();
        queue.pop();
        for (std::uint32_t w : lattice.neighbors()[u]) {
            if (color[w] < 0) {
                color[w] = 1 - color[u];
                queue.push(w);
            } else if (color[w] == color[u]) {
                frustrated = true;
                break;
            }
        }
    }

    BipartitionResult result;
    if (frustrated) {
        result.odd_cycle = shortest_odd_cycle(lattice);
        return result;
    }
    Bipartition parts;
    for (std::uint32_t v = 0; v < n; ++v)
        (color[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
    result.parts = std::move(parts);
    return result;
}

DefectRelation defect_relation_check(const FaceCensus& census, int genus) {
    std::int64_t sum = 0;
    for (const auto& [p, n] : census.counts) sum += static_cast<std::int64_t>(6 - p) * n;
    DefectRelation relation;
    relation.residual = sum - 12 * static_cast<std::int64_t>(1 - genus);
    relation.holds = relation.residual == 0;
    return relation;
}

} // namespace hexfold
