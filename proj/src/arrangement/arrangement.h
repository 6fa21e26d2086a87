#pragma once

#include "geometry/predicates.h"

#include <cstdint>
#include <vector>

namespace srs {

// A face of a line arrangement: a vertex, an open edge, or an open 2-face.
struct FaceRef {
    int8_t dim = 2;
    int32_t idx = -1;

    bool operator==(const FaceRef& o) const { return dim == o.dim && idx == o.idx; }
    bool valid() const { return idx >= 0; }
};

// Full arrangement of non-vertical lines, built by a left-to-right sweep.
// Faces of all dimensions carry labels; every edge knows the 2-faces above
// and below it, which doubles as the adjacency record.
class Arrangement {
  public:
    struct Edge {
        int32_t line = -1;
        int32_t v0 = -1, v1 = -1;           // -1: unbounded end
        int32_t face_above = -1, face_below = -1;
    };

    struct TwoFace {
        int32_t left_vertex = -1, right_vertex = -1;   // -1 when open on that side
        std::vector<int32_t> lower_verts, upper_verts; // interior chain vertices, left to right
        std::vector<int32_t> lower_lines, upper_lines; // supporting lines, left to right
        bool left_open = false, right_open = false;
        Point rep;

        bool bounded() const { return !left_open && !right_open && left_vertex >= 0 && right_vertex >= 0; }
    };

    explicit Arrangement(std::vector<Line> lines);

    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<std::vector<int32_t>>& vertex_lines() const { return vert_lines_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<TwoFace>& two_faces() const { return faces_; }
    const std::vector<int32_t>& line_vertices(int line) const { return line_verts_[line]; }

    std::size_t face_count() const { return verts_.size() + edges_.size() + faces_.size(); }

    // Flat face id: vertices, then edges, then 2-faces.
    int32_t flat_id(FaceRef f) const;
    FaceRef from_flat(int32_t id) const;

    // True when built from lines in general position (pairwise non-parallel,
    // no three concurrent); then |2-faces| == 1 + n + n(n-1)/2.
    bool general_position() const { return general_position_; }

    // Minimal-dimension face whose closure contains p; with a nudge the
    // symbolic point (p.x, p.y + delta) is located instead, which always
    // lands in a 2-face.  `steps` accumulates search comparisons.
    FaceRef locate_face(const Point& p, Nudge nudge = Nudge::None, long* steps = nullptr) const;

    // Locates many points at once by re-sweeping; no per-query structure
    // needed.  Points may lie anywhere (faces of any dimension result).
    std::vector<FaceRef> batch_locate(const std::vector<Point>& pts) const;

    // Interior sample of a face, used to build link tables and for audits.
    Point representative(FaceRef f) const;

    // Lazy point-location index (segment tree over slab intervals).  Only
    // needed when locate_face will be called; batch_locate never uses it.
    void build_locator() const;

  private:
    struct LocatorNode {
        std::vector<int32_t> edges;  // covering edges, sorted bottom to top
    };

    void sweep_faces();
    void assign_edge_faces();
    int wall_index(const Scalar& x) const;  // -1 when x is not a wall
    FaceRef locate_in_position(std::size_t pos, const Scalar& x_eval, const Scalar& y, Nudge nudge,
                               long* steps) const;

    std::vector<Line> lines_;
    std::vector<Point> verts_;
    std::vector<std::vector<int32_t>> vert_lines_;
    std::vector<std::vector<int32_t>> line_verts_;
    std::vector<std::vector<int32_t>> line_edges_;
    std::vector<Edge> edges_;
    std::vector<TwoFace> faces_;
    std::vector<Scalar> wall_xs_;
    std::vector<std::vector<int32_t>> wall_verts_;  // vertices per wall, ascending y
    bool general_position_ = true;

    mutable std::vector<LocatorNode> locator_;
    mutable std::vector<Scalar> position_samples_;  // comparison x per elementary position
    mutable bool locator_built_ = false;
};

}  // namespace srs
