#pragma once

#include "edgecone/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgecone {

using IndexSet = boost::dynamic_bitset<>;

class Cone {
public:
    // extremal generators are kept in first-occurrence order
    static Cone from_generators(const IntMatrix& gens);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool strongly_convex() const { return strongly_convex_; }
    const IntMatrix& rays() const { return rays_; }
    // primitive normals lying in the linear span, sorted lexicographically
    const IntMatrix& facet_normals() const { return facets_; }
    // basis of the orthogonal complement of the span
    const IntMatrix& span_equations() const { return equations_; }
    const IndexSet& facets_of_ray(int r) const { return ray_facets_[r]; }
    const IndexSet& rays_of_facet(int f) const { return facet_rays_[f]; }
    bool contains(std::span<const Integer> x) const;
    int ray_index(std::span<const Integer> primitive_ray) const;

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    bool strongly_convex_ = true;
    IntMatrix rays_;
    IntMatrix facets_;
    IntMatrix equations_;
    std::vector<IndexSet> ray_facets_;
    std::vector<IndexSet> facet_rays_;
};

struct FaceDescriptor {
    std::vector<int> rays;
    std::vector<int> facets;
    int dim = 0;
    bool operator==(const FaceDescriptor&) const = default;
};

// throws PreconditionError for cones that are not strongly convex
Cone dualize(const Cone& c);
// faces of dimension <= max_dim ordered by dimension then ray list, apex first
std::vector<FaceDescriptor> face_lattice(const Cone& c, int max_dim);
FaceDescriptor minimal_face_containing(const Cone& c, std::span<const int> rays);
FaceDescriptor face_from_rays(const Cone& c, const IndexSet& rays);
bool in_cone_generated_by(std::span<const Integer> x, const IntMatrix& gens);
// a lattice point of the cone inside the box that is not a sum of generators
std::optional<IntVector> hilbert_basis_witness(const IntMatrix& gens, int bound);
bool hilbert_basis_check(const IntMatrix& gens, int bound);

struct ConeInput {
    int ambient_dim = 0;
    IntMatrix rays;
};
ConeInput parse_cone_json(std::string_view text);
std::string cone_to_json(int ambient_dim, const IntMatrix& rays);

} // namespace edgecone
