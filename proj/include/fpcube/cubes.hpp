#pragma once

#include <optional>
#include <vector>

#include "fpcube/words.hpp"

namespace fpcube {

enum class CubeGeometry { Point, Line, Grid, Tree };

// Vertex-transitive cube-complex model for one factor group: a point for
// finite factors, the standard grid for Z^d, the 2d-regular tree for F_d.
// Vertices are factor elements; the group acts freely and transitively on
// vertices in the infinite models.
struct CubeModel {
  int factor_id = 0;
  CubeGeometry geometry = CubeGeometry::Point;
  int rank = 0;  // grid / tree rank
  const FactorSpec* spec = nullptr;

  static CubeModel for_factor(const FactorSpec& f);

  Elem basepoint() const;
  // Left action by factor elements on vertices.
  Elem act(const Elem& g, const Elem& v) const;
  // Edge-metric distance between vertices.
  long long distance(const Elem& u, const Elem& v) const;
  // The canonical geodesic edge path: vertex sequence, deterministic
  // (lexicographically least among shortest under the axis/letter order).
  std::vector<Elem> geodesic(const Elem& from, const Elem& to) const;
};

struct CubeEdge {
  int u = 0, v = 0;   // vertex indices, u < v
  int direction = 0;  // axis (grid) or letter (tree), 1-based; sign folded away
};

struct CubeFace {  // k-cube, k >= 2 (grid only)
  int base = 0;                 // minimal corner vertex
  std::vector<int> axes;        // strictly increasing axis list, size = dim
  std::vector<int> corners;     // all 2^dim corner vertex indices
};

// Hyperplane of a cube ball: the square-opposition closure of one edge.
struct Hyperplane {
  std::vector<int> edges;       // edge indices of the class, sorted
  bool complete = true;         // closure stayed inside the ball interior
  int id = 0;
};

struct IncompleteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CubeBall {
 public:
  CubeBall(const CubeModel& m, const Elem& center, long long radius);

  const CubeModel& model() const { return *model_; }
  long long radius() const { return radius_; }
  const std::vector<Elem>& vertices() const { return verts_; }
  const std::vector<CubeEdge>& edges() const { return edges_; }
  const std::vector<CubeFace>& faces() const { return faces_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hypers_; }

  std::optional<int> vertex_index(const Elem& v) const;
  int require_vertex(const Elem& v) const;
  bool on_boundary(int vertex) const;  // at distance exactly radius from center

  int hyperplane_of(int edge) const;  // hyperplane id
  // +1 / -1 side of a vertex w.r.t. a hyperplane; throws IncompleteError when
  // the class is incomplete and the answer could depend on unseen cells.
  int side(int hyperplane, int vertex) const;
  bool separates(int hyperplane, int v1, int v2) const;
  long long crossings(int hyperplane, const std::vector<int>& vertex_path) const;

  // Structural verification: every vertex link is a flag complex and the
  // square complex has no short essential cycles. Throws on failure.
  void verify_cat0() const;
  // Pairwise-intersecting hyperplane neighbourhood families have a common
  // vertex (checked exhaustively for triples).
  bool check_helly_triples() const;

  std::vector<int> geodesic_indices(int from, int to) const;

 private:
  void build_hyperplanes();
  const CubeModel* model_;
  Elem center_;
  long long radius_;
  std::vector<Elem> verts_;
  std::map<Elem, int> index_;
  std::vector<CubeEdge> edges_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<CubeFace> faces_;
  std::vector<Hyperplane> hypers_;
  std::vector<int> edge_hyper_;
  std::vector<std::vector<int>> side_;  // per hyperplane, per vertex: +1/-1/0
  std::vector<long long> dist_;
};

}  // namespace fpcube
