#pragma once

#include <map>

#include "sq3/goursat.hpp"
#include "sq3/linalg.hpp"

namespace sq3 {

template <class S>
struct OrbitLayer {
    S cos_dist{};                // common <1, g> of the layer
    std::vector<int> point_idx;  // indices into Orbit::points
};

// Orbit of the quaternion 1, sorted by ascending geodesic distance from 1
// (descending w), lexicographic within a layer.
template <class S>
struct Orbit {
    std::vector<Quat<S>> points;
    std::vector<OrbitLayer<S>> layers;

    std::size_t size() const { return points.size(); }
    bool contains(const Quat<S>& q) const;
};

template <class S>
Orbit<S> orbit_of_one(const IsometryGroup<S>& g);

template <class S>
std::size_t stabilizer_of_one_order(const IsometryGroup<S>& g);

enum class CellKind { full_sphere, hemisphere, unbounded, polytope };

const char* cell_kind_name(CellKind k);

// Exact-comparable distance record: distance = arccos(cos_sign * sqrt(cos2)).
template <class S>
struct DiameterBound {
    int cos_sign = 0;
    S cos2{};
    double radians = 0.0;
};

template <class S>
DiameterBound<S> make_bound(int cos_sign, const S& cos2);

// Orders by distance; ties exact (or within the float tolerance).
template <class S>
int compare_bound(const DiameterBound<S>& u, const DiameterBound<S>& v);

template <class S>
struct CellVertex {
    Vec4<S> dir;              // unnormalized direction, <dir, 1> > 0
    std::vector<int> active;  // bisector indices (into SphericalCell::normals)
    DiameterBound<S> dist;
};

template <class S>
struct SphericalCell {
    CellKind kind = CellKind::polytope;
    Orbit<S> orbit;
    std::vector<Vec4<S>> normals;  // 1 - g for each non-identity orbit point
    std::vector<CellVertex<S>> vertices;
    DiameterBound<S> bound;
};

// Voronoi cell of 1 with respect to its orbit, vertices enumerated from
// rank-3 bisector triples. `full_enumeration` disables the incumbent pruning
// (slow verification mode).
template <class S>
SphericalCell<S> prefundamental_domain(const Orbit<S>& orbit, bool full_enumeration = false);

template <class S>
DiameterBound<S> diameter_lower_bound(const SphericalCell<S>& cell);

struct FaceCensus {
    int vertex_total = 0;
    int face_total = 0;
    std::map<int, int> by_size;  // face vertex count -> number of faces
    std::vector<std::pair<int, std::vector<int>>> faces;  // normal idx, cyclic vertex ids
};

template <class S>
FaceCensus cell_statistics(const SphericalCell<S>& cell);

// Convenience: instantiate-orbit-cell-bound in one step.
template <class S>
SphericalCell<S> cell_of_family(const std::string& family, const FamilyParams& params = {},
                                bool full_enumeration = false);

template <class S>
std::array<double, 4> unit_double4(const Vec4<S>& v);

}  // namespace sq3
