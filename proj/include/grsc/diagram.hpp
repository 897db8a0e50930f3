#ifndef GRSC_DIAGRAM_HPP
#define GRSC_DIAGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "grsc/conditions.hpp"
#include "grsc/pieces.hpp"
#include "grsc/rational.hpp"

namespace grsc {

struct NotPlanar : Error {
  using Error::Error;
};
struct NotSimplyConnected : Error {
  using Error::Error;
};
struct NoLift : Error {
  using Error::Error;
};
struct AmbiguousLift : Error {
  using Error::Error;
};
struct ReplayFailed : Error {
  using Error::Error;
};

struct Dart {
  int edge = 0;
  bool forward = true;

  Dart reverse() const { return {edge, !forward}; }
  friend bool operator==(Dart a, Dart b) {
    return a.edge == b.edge && a.forward == b.forward;
  }
  friend bool operator!=(Dart a, Dart b) { return !(a == b); }
  friend bool operator<(Dart a, Dart b) {
    return a.edge != b.edge ? a.edge < b.edge : a.forward < b.forward;
  }
};

struct DEdge {
  int src = 0;
  int dst = 0;
  int letter = 0;  // alphabet index; forward traversal reads +1
};

/// A singular disk diagram as a combinatorial map. Face walks are closed and
/// traverse each face with its interior on the left; the boundary walk runs
/// counterclockwise around the diagram from the base vertex (so its reverse
/// is the outer face walk). Every dart occurs exactly once in the union of
/// the face walks and the reversed boundary walk; this determines the
/// rotation system, which is derived, not stored.
struct Diagram {
  Alphabet alphabet;
  int num_vertices = 0;
  std::vector<DEdge> edges;
  std::vector<std::vector<Dart>> faces;
  std::vector<Dart> boundary;
  int base = 0;

  int dart_src(Dart d) const {
    return d.forward ? edges[d.edge].src : edges[d.edge].dst;
  }
  int dart_dst(Dart d) const {
    return d.forward ? edges[d.edge].dst : edges[d.edge].src;
  }
  SignedLetter dart_letter(Dart d) const {
    return {edges[d.edge].letter, d.forward ? 1 : -1};
  }
  Word walk_word(const std::vector<Dart>& walk) const;
  Word boundary_word() const { return walk_word(boundary); }
};

struct DiagramReport {
  int area = 0;            // number of faces
  int boundary_length = 0;
  std::vector<int> interior_edges;
  std::vector<int> boundary_faces;  // faces meeting the boundary in an edge
  std::vector<int> interior_faces;
  std::vector<std::vector<int>> arcs;  // maximal arcs as edge-id sequences
  std::vector<int> spurs;              // boundary edges ending in degree-1 vertices
};

/// Structural validation: every dart used exactly once, walks closed and
/// connected, vertex orbits consistent, Euler characteristic of the sphere.
/// Throws NotPlanar / NotSimplyConnected with locating data.
DiagramReport validate(const Diagram& d);

/// Removes interior degree-2 vertices by merging their edge pairs; stops
/// before collapsing a face below a loop. Labels are dropped (every edge
/// gets letter 0 of a one-letter alphabet).
Diagram forget_degree2(const Diagram& d);

struct PqResult {
  bool ok = true;
  std::optional<int> bad_vertex;
  std::optional<int> bad_face;
};

/// (p,q): interior vertices have degree >= p, interior faces >= q edges.
/// bracket = true checks every face.
PqResult is_pq_diagram(const Diagram& d, int p, int q, bool bracket);

struct CurvatureResult {
  Rational sum;
  bool satisfied = false;
};

/// Sum over boundary faces of (4 - interior edge count); >= 6 on a (3,6)
/// diagram with at least two faces.
CurvatureResult curvature_I(const Diagram& d);

/// Sum over boundary vertices of (5/2 - degree); >= 3 on a [3,6] diagram.
CurvatureResult curvature_II(const Diagram& d);

struct AreaBoundReport {
  int area = 0;
  int boundary = 0;
  std::optional<bool> linear_ok;     // area <= 8*boundary, needs (3,7)
  std::optional<bool> quadratic_ok;  // area <= 3*boundary^2, needs (3,6)
};

AreaBoundReport area_bounds(const Diagram& d);

struct FaceLift {
  int face = 0;
  int component = 0;
  int start = 0;                // vertex of the graph at walk position 0
  std::vector<int> vertex_map;  // graph vertex per walk position
  std::vector<int> edge_map;    // graph edge per walk dart
};

/// The unique lift of each face boundary to the graph; unique up to the
/// face's own cyclic symmetry under C(2), up to automorphism in gr mode.
/// Throws NoLift / AmbiguousLift.
std::vector<FaceLift> lift_faces(const Diagram& d, const PieceIndex& idx,
                                 bool gr_mode = false);

/// True iff the two faces adjacent to interior edge e induce the same image
/// of e in the graph (equal up to automorphism in gr mode).
bool originates_from(const Diagram& d, const PieceIndex& idx, int e,
                     bool gr_mode = false);

/// Replaces a face with freely trivial boundary word by the folded labelled
/// tree of its boundary walk (Stallings folding from the walk's start).
/// Area decreases by one; the diagram boundary word is unchanged.
Diagram fold_trivial_face(const Diagram& d, int face);

/// Identifies two vertices on a face whose lifts coincide, splitting the
/// face in two. Vertex count drops by one; edges are untouched.
Diagram pinch_vertices(const Diagram& d, const PieceIndex& idx, int face,
                       int v1, int v2);

struct RemoveOriginatingResult {
  bool merged = true;  // false: the second branch fired
  std::optional<Diagram> diagram;
  // Second branch: the offending face's data.
  std::optional<Word> trivial_boundary;
  std::vector<int> offending_faces;
};

/// Removes every interior edge originating from the graph and merges the
/// adjacent faces. Requires C(n), n >= 6, verified (pass the report).
/// A merged face with a hole or a freely trivial boundary word triggers the
/// second branch and is returned instead.
RemoveOriginatingResult remove_originating_edges(const Diagram& d,
                                                 const PieceIndex& idx,
                                                 const ConditionReport& cn,
                                                 bool gr_mode = false);

/// JSON serialization; the rotation system is emitted for interchange and
/// revalidated (against the derived one) on load.
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

}  // namespace grsc

#endif
