#pragma once

#include "edgecone/edge_cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgecone {

// faces of a cone up to dimension 3, checked to be smooth in codimension 2
struct Skeleton {
    Cone cone;
    QuotientContext ctx;
    std::vector<std::pair<int, int>> two_faces;
    std::vector<std::vector<int>> three_faces;
    // cyclic order of the rays of each 3-face and the 2-faces along it
    std::vector<std::vector<int>> polygon_rays;
    std::vector<std::vector<int>> polygon_edges;
    bool has_quadrilaterals = false;
};

Skeleton make_skeleton(const Cone& c, const QuotientContext& ctx);
Skeleton make_skeleton(const EdgeConePair& e);

struct CrosscutVertex {
    int ray = 0;
    Integer height;
    RatVector point; // a / height in cone coordinates
    bool lattice = false;
};

struct CompactEdge {
    int from = 0; // ray indices, from < to
    int to = 0;
    RatVector direction;
};

struct SignedCycle {
    std::vector<int> rays;
    std::vector<int> edges; // indices into Crosscut::edges, in walking order
    std::vector<int> signs;
};

struct Crosscut {
    IntVector degree;
    std::vector<Integer> heights; // per ray of the cone
    std::vector<CrosscutVertex> vertices;
    std::vector<CompactEdge> edges;
    std::vector<SignedCycle> cycles;
    std::vector<int> unbounded;
};

// degree given in the coordinates of the context (m+n for graphs)
Crosscut crosscut(const Skeleton& s, std::span<const Integer> degree);
RatVector signed_sum(const Crosscut& q, const SignedCycle& c);

struct T1Result {
    IntVector degree;
    int compact_edges = 0;
    int compact_two_faces = 0;
    int v_dim = 0;
    int constrained_dim = 0;
    int t1_dim = 0;
};

T1Result t1_dim(const Skeleton& s, std::span<const Integer> degree);
T1Result t1_dim(const Crosscut& q);
// union-find over edge parameters with exact rows for larger polygons; empty on overflow
std::optional<int> t1_fast(const Skeleton& s, std::span<const long> heights);

struct Certificate {
    NonSimplicial3Face face;
    IntVector base;
    IntVector val;
    Integer shift;
    IntVector degree;
    bool from_formula = false;
    T1Result check;
};

// throws InternalError when no candidate degree verifies
Certificate nonrigidity_certificate(const EdgeConePair& e, const Skeleton& s, const NonSimplicial3Face& f);
bool verify_certificate(const EdgeConePair& e, const Skeleton& s, const Certificate& c);

enum class FamilyKind { Complete, OneTwoSided, Other };

struct Family {
    FamilyKind kind = FamilyKind::Other;
    int m = 0;
    int n = 0;
    VertexSet c1;
    VertexSet c2;
    // the graph is K_{m,n} without the edges between c1 and c2
    bool complete_minus = false;
};

Family classify_family(const BipartiteGraph& g);
std::string to_string(FamilyKind k);

struct DegreeHit {
    IntVector degree;
    int t1 = 0;
    bool operator==(const DegreeHit&) const = default;
};

// degrees of M with all coordinates in [-bound, bound] and positive t1, sorted
std::vector<DegreeHit> degree_search(const EdgeConePair& e, const Skeleton& s, int bound, bool use_twins = true);
// vertex classes with equal neighborhoods
std::vector<VertexSet> twin_classes(const BipartiteGraph& g);

enum class Verdict { Rigid, NotRigid, Unknown };
std::string to_string(Verdict v);

struct RigidityVerdict {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::optional<IntVector> certificate;
    std::optional<T1Result> check;
    std::optional<NonSimplicial3Face> face;
    int search_bound = 0;
    Family family;
};

RigidityVerdict rigidity_verdict(const EdgeConePair& e, int search_bound = 2);

} // namespace edgecone
