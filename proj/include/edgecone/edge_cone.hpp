#pragma once

#include "edgecone/bigraph.hpp"
#include "edgecone/lattice.hpp"
#include "edgecone/oracle.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgecone {

struct EdgeConePair {
    BipartiteGraph graph;
    QuotientContext ctx;
    // both cones live in Z^{m+n-1}: reduced M and reduced N coordinates
    Cone dual_cone;
    Cone primal_cone;
    // primal ray i comes from sets[i]
    std::vector<FirstIndependentSet> sets;
    std::vector<NVector> rays;
    std::vector<SpanningSubgraph> subgraphs;
    // primal facet f is the hyperplane of edge facet_edge[f]
    std::vector<int> facet_edge;

    int ray_count() const { return static_cast<int>(sets.size()); }
};

IntMatrix dual_generators(const BipartiteGraph& g);
EdgeConePair build_edge_cone(const BipartiteGraph& g);
bool is_first_independent_set(const BipartiteGraph& g, const IndependentSet& a);
NVector ray_of(const BipartiteGraph& g, const IndependentSet& a);

struct FaceSpan {
    int dim = 0;
    std::vector<int> rays;
    bool exact = false; // the given set is precisely the ray set of the face
};
// minimal face containing the given rays, from component counts and saturation
FaceSpan face_span(const EdgeConePair& e, std::span<const int> s);
std::optional<int> spans_face(const EdgeConePair& e, std::span<const int> s);
FaceDescriptor face_of_independent_set(const EdgeConePair& e, const IndependentSet& a);

enum class PairShape { AA, AB, BB, AC, BC, CC };
enum class CCType { NotApplicable, I, II, III, IV, V };

struct PairClass {
    int first = 0;
    int second = 0;
    PairShape shape = PairShape::AA;
    CCType cc_type = CCType::NotApplicable;
    bool is_two_face = false;
};

PairClass classify_pair(const EdgeConePair& e, int i, int j);
CCType cc_type_of(const IndependentSet& c, const IndependentSet& d);
std::string to_string(PairShape s);
std::string to_string(CCType t);

// named by the kinds of the two non-adjacent ray pairs of the quadrilateral
enum class CaseTag {
    AaBc,
    AaCcII,
    AbCc,
    AcBc,
    CcIIIAc,
    CcIIIBc,
    CcIIICcIV,
    CcVCcI,
    WholeCone,
    Unclassified,
};
std::string to_string(CaseTag t);

struct NonSimplicial3Face {
    std::vector<int> rays;
    CaseTag tag = CaseTag::Unclassified;
    // vertex sides were swapped to match the tag's pattern
    bool mirrored = false;
    // ray pairs that are not 2-faces
    std::vector<std::pair<int, int>> diagonals;
};

// 3-faces with at least 4 rays, the cone itself excluded
std::vector<NonSimplicial3Face> nonsimplicial_three_faces(const EdgeConePair& e);
// same faces found from pairs whose intersection subgraph has four components
std::vector<std::vector<int>> nonsimplicial_three_faces_by_graph(const EdgeConePair& e);
// K_{2,2}: the whole cone is a quadrilateral
bool whole_cone_is_quadrilateral(const EdgeConePair& e);
NonSimplicial3Face tag_face(const EdgeConePair& e, std::vector<int> rays);

struct TwoFaceCheck {
    std::vector<int> rays;
    bool smooth = false;
};

struct SmoothnessReport {
    std::vector<TwoFaceCheck> faces;
    bool smooth = true;
};

SmoothnessReport smoothness_codim2_report(const Cone& c, const QuotientContext& ctx);
SmoothnessReport smoothness_codim2_report(const EdgeConePair& e);

} // namespace edgecone
