#include "fpcube/cubes.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace fpcube {

CubeModel CubeModel::for_factor(const FactorSpec& f) {
  CubeModel m;
  m.factor_id = f.id;
  m.spec = &f;
  switch (f.kind) {
    case FactorKind::Finite:
      m.geometry = CubeGeometry::Point;
      m.rank = 0;
      break;
    case FactorKind::FreeAbelian:
      m.geometry = f.rank == 1 ? CubeGeometry::Line : CubeGeometry::Grid;
      m.rank = f.rank;
      break;
    case FactorKind::Free:
      m.geometry = CubeGeometry::Tree;
      m.rank = f.rank;
      break;
  }
  return m;
}

Elem CubeModel::basepoint() const {
  return geometry == CubeGeometry::Point ? Elem{} : spec->identity();
}

Elem CubeModel::act(const Elem& g, const Elem& v) const {
  switch (geometry) {
    case CubeGeometry::Point:
      return Elem{};
    case CubeGeometry::Line:
    case CubeGeometry::Grid:
      return spec->mul(v, g);
    case CubeGeometry::Tree:
      // right division: an automorphism of the left Cayley tree satisfying
      // act(gh, v) = act(g, act(h, v))
      return spec->mul(v, spec->inv(g));
  }
  return v;
}

long long CubeModel::distance(const Elem& u, const Elem& v) const {
  if (geometry == CubeGeometry::Point) return 0;
  return spec->length(spec->mul(v, spec->inv(u)));
}

std::vector<Elem> CubeModel::geodesic(const Elem& from, const Elem& to) const {
  std::vector<Elem> path{from};
  if (geometry == CubeGeometry::Point) return path;
  if (geometry == CubeGeometry::Line || geometry == CubeGeometry::Grid) {
    Elem cur = from;
    for (int axis = 0; axis < rank; ++axis) {
      std::size_t a = static_cast<std::size_t>(axis);
      while (cur[a] != to[a]) {
        cur[a] += to[a] > cur[a] ? 1 : -1;
        path.push_back(cur);
      }
    }
    return path;
  }
  // tree: left Cayley graph, steps multiply generators on the left; the path
  // from `from` to `to` spells w = to * from^-1 by its suffixes
  Elem w = spec->mul(to, spec->inv(from));
  Elem cur = from;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    cur = spec->mul(Elem{*it}, cur);
    path.push_back(cur);
  }
  return path;
}

// --- CubeBall ---------------------------------------------------------------

CubeBall::CubeBall(const CubeModel& m, const Elem& center, long long radius)
    : model_(&m), center_(center), radius_(radius) {
  if (radius < 0) throw InputError("negative ball radius");
  const FactorSpec* f = m.spec;
  verts_.push_back(m.geometry == CubeGeometry::Point ? Elem{} : center);
  index_[verts_[0]] = 0;
  dist_.push_back(0);
  auto neighbors = [&](const Elem& v) {
    std::vector<Elem> out;
    switch (m.geometry) {
      case CubeGeometry::Point:
        break;
      case CubeGeometry::Line:
      case CubeGeometry::Grid:
        for (int axis = 0; axis < m.rank; ++axis)
          for (int s : {1, -1}) {
            Elem n = v;
            n[static_cast<std::size_t>(axis)] += s;
            out.push_back(n);
          }
        break;
      case CubeGeometry::Tree:
        for (int g = 1; g <= m.rank; ++g)
          for (int s : {g, -g}) out.push_back(f->mul(Elem{s}, v));
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    if (dist_[static_cast<std::size_t>(vi)] == radius_) continue;
    for (const Elem& n : neighbors(verts_[static_cast<std::size_t>(vi)])) {
      if (!index_.count(n)) {
        int ni = static_cast<int>(verts_.size());
        verts_.push_back(n);
        index_[n] = ni;
        dist_.push_back(dist_[static_cast<std::size_t>(vi)] + 1);
        queue.push_back(ni);
      }
    }
  }
  for (int vi = 0; vi < static_cast<int>(verts_.size()); ++vi) {
    for (const Elem& n : neighbors(verts_[static_cast<std::size_t>(vi)])) {
      auto it = index_.find(n);
      if (it == index_.end() || it->second < vi) continue;
      int dir = 1;
      if (m.geometry == CubeGeometry::Line || m.geometry == CubeGeometry::Grid) {
        for (int axis = 0; axis < m.rank; ++axis)
          if (verts_[static_cast<std::size_t>(vi)][static_cast<std::size_t>(axis)] !=
              n[static_cast<std::size_t>(axis)])
            dir = axis + 1;
      } else if (m.geometry == CubeGeometry::Tree) {
        Elem d = f->mul(n, f->inv(verts_[static_cast<std::size_t>(vi)]));
        dir = d[0] < 0 ? -d[0] : d[0];
      }
      edge_index_[{vi, it->second}] = static_cast<int>(edges_.size());
      edges_.push_back(CubeEdge{vi, it->second, dir});
    }
  }
  if (m.geometry == CubeGeometry::Grid || m.geometry == CubeGeometry::Line) {
    for (int vi = 0; vi < static_cast<int>(verts_.size()); ++vi) {
      const Elem& base = verts_[static_cast<std::size_t>(vi)];
      for (int mask = 0; mask < (1 << m.rank); ++mask) {
        int dim = __builtin_popcount(static_cast<unsigned>(mask));
        if (dim < 2) continue;
        std::vector<int> axes;
        for (int a = 0; a < m.rank; ++a)
          if (mask & (1 << a)) axes.push_back(a + 1);
        bool ok = true;
        std::vector<int> corners;
        for (int c = 0; c < (1 << dim) && ok; ++c) {
          Elem pnt = base;
          for (int b = 0; b < dim; ++b)
            if (c & (1 << b)) pnt[static_cast<std::size_t>(axes[static_cast<std::size_t>(b)] - 1)] += 1;
          auto it = index_.find(pnt);
          if (it == index_.end())
            ok = false;
          else
            corners.push_back(it->second);
        }
        if (ok) faces_.push_back(CubeFace{vi, axes, corners});
      }
    }
  }
  build_hyperplanes();
}

std::optional<int> CubeBall::vertex_index(const Elem& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CubeBall::require_vertex(const Elem& v) const {
  auto i = vertex_index(v);
  if (!i) throw IncompleteError("vertex outside the cube ball");
  return *i;
}

bool CubeBall::on_boundary(int vertex) const {
  return dist_[static_cast<std::size_t>(vertex)] == radius_;
}

void CubeBall::build_hyperplanes() {
  std::vector<int> parent(edges_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  auto eidx = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return edge_index_.at({u, v});
  };
  for (const auto& fct : faces_) {
    if (fct.axes.size() != 2) continue;
    int c00 = fct.corners[0], c10 = fct.corners[1], c01 = fct.corners[2], c11 = fct.corners[3];
    unite(eidx(c00, c10), eidx(c01, c11));
    unite(eidx(c00, c01), eidx(c10, c11));
  }
  std::map<int, int> root_to_id;
  edge_hyper_.assign(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    int r = find(static_cast<int>(e));
    auto it = root_to_id.find(r);
    int id;
    if (it == root_to_id.end()) {
      id = static_cast<int>(hypers_.size());
      root_to_id[r] = id;
      hypers_.push_back(Hyperplane{{}, true, id});
    } else {
      id = it->second;
    }
    edge_hyper_[e] = id;
    hypers_[static_cast<std::size_t>(id)].edges.push_back(static_cast<int>(e));
  }
  side_.assign(hypers_.size(), std::vector<int>(verts_.size(), 0));
  for (auto& h : hypers_) {
    std::vector<int>& side = side_[static_cast<std::size_t>(h.id)];
    std::set<int> cut(h.edges.begin(), h.edges.end());
    std::vector<std::vector<int>> adj(verts_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (cut.count(static_cast<int>(e))) continue;
      adj[static_cast<std::size_t>(edges_[e].u)].push_back(edges_[e].v);
      adj[static_cast<std::size_t>(edges_[e].v)].push_back(edges_[e].u);
    }
    int comp = 0;
    std::vector<int> label(verts_.size(), 0);
    for (int s = 0; s < static_cast<int>(verts_.size()); ++s) {
      if (label[static_cast<std::size_t>(s)]) continue;
      ++comp;
      std::deque<int> q{s};
      label[static_cast<std::size_t>(s)] = comp;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[static_cast<std::size_t>(x)])
          if (!label[static_cast<std::size_t>(y)]) {
            label[static_cast<std::size_t>(y)] = comp;
            q.push_back(y);
          }
      }
    }
    if (comp == 2) {
      for (std::size_t v = 0; v < verts_.size(); ++v) side[v] = label[v] == 1 ? 1 : -1;
    } else {
      h.complete = false;
    }
  }
}

int CubeBall::hyperplane_of(int edge) const { return edge_hyper_[static_cast<std::size_t>(edge)]; }

int CubeBall::side(int hyperplane, int vertex) const {
  const auto& h = hypers_[static_cast<std::size_t>(hyperplane)];
  if (!h.complete) throw IncompleteError("hyperplane class incomplete in this ball");
  int s = side_[static_cast<std::size_t>(hyperplane)][static_cast<std::size_t>(vertex)];
  if (s == 0) throw IncompleteError("vertex has no side assignment");
  return s;
}

bool CubeBall::separates(int hyperplane, int v1, int v2) const {
  return side(hyperplane, v1) != side(hyperplane, v2);
}

long long CubeBall::crossings(int hyperplane, const std::vector<int>& vertex_path) const {
  long long c = 0;
  for (std::size_t i = 0; i + 1 < vertex_path.size(); ++i)
    if (side(hyperplane, vertex_path[i]) != side(hyperplane, vertex_path[i + 1])) ++c;
  return c;
}

void CubeBall::verify_cat0() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_)
    if (!seen.insert({e.u, e.v}).second) throw VerificationError("doubled edge in cube ball");
  std::map<int, std::vector<int>> nbrs;
  for (const auto& e : edges_) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  for (auto& [v, ns] : nbrs) {
    std::sort(ns.begin(), ns.end());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        int lo = std::min(ns[i], ns[j]), hi = std::max(ns[i], ns[j]);
        if (edge_index_.count({lo, hi}))
          throw VerificationError("triangle in cube ball 1-skeleton");
      }
  }
  auto in_square = [&](int v, int a, int b) {
    for (const auto& fct : faces_) {
      if (fct.axes.size() != 2) continue;
      const auto& c = fct.corners;
      int corner_sets[4][3] = {{c[0], c[1], c[2]},
                               {c[1], c[0], c[3]},
                               {c[2], c[0], c[3]},
                               {c[3], c[1], c[2]}};
      for (auto& cs : corner_sets)
        if (cs[0] == v && ((cs[1] == a && cs[2] == b) || (cs[1] == b && cs[2] == a))) return true;
    }
    return false;
  };
  auto in_cube3 = [&](int v, int a, int b, int c) {
    for (const auto& fct : faces_) {
      if (fct.axes.size() != 3) continue;
      const auto& cc = fct.corners;
      static const int legs[8][3] = {{1, 2, 4}, {0, 3, 5}, {0, 3, 6}, {1, 2, 7},
                                     {0, 5, 6}, {1, 4, 7}, {2, 4, 7}, {3, 5, 6}};
      for (int k = 0; k < 8; ++k) {
        if (cc[static_cast<std::size_t>(k)] != v) continue;
        std::set<int> lg{cc[static_cast<std::size_t>(legs[k][0])],
                         cc[static_cast<std::size_t>(legs[k][1])],
                         cc[static_cast<std::size_t>(legs[k][2])]};
        if (lg == std::set<int>{a, b, c}) return true;
      }
    }
    return false;
  };
  for (auto& [v, ns] : nbrs) {
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j)
        for (std::size_t k = j + 1; k < ns.size(); ++k) {
          if (in_square(v, ns[i], ns[j]) && in_square(v, ns[i], ns[k]) &&
              in_square(v, ns[j], ns[k])) {
            if (!in_cube3(v, ns[i], ns[j], ns[k]))
              throw VerificationError("link not flag: empty 3-corner at a vertex");
          }
        }
  }
}

bool CubeBall::check_helly_triples() const {
  std::vector<std::set<int>> nb(hypers_.size());
  for (const auto& h : hypers_)
    for (int e : h.edges) {
      nb[static_cast<std::size_t>(h.id)].insert(edges_[static_cast<std::size_t>(e)].u);
      nb[static_cast<std::size_t>(h.id)].insert(edges_[static_cast<std::size_t>(e)].v);
    }
  auto meets = [&](std::size_t a, std::size_t b) {
    for (int x : nb[a])
      if (nb[b].count(x)) return true;
    return false;
  };
  for (std::size_t a = 0; a < hypers_.size(); ++a)
    for (std::size_t b = a + 1; b < hypers_.size(); ++b)
      for (std::size_t c = b + 1; c < hypers_.size(); ++c) {
        if (!meets(a, b) || !meets(a, c) || !meets(b, c)) continue;
        bool common = false;
        for (int x : nb[a])
          if (nb[b].count(x) && nb[c].count(x)) common = true;
        if (!common) return false;
      }
  return true;
}

std::vector<int> CubeBall::geodesic_indices(int from, int to) const {
  auto path = model_->geodesic(verts_[static_cast<std::size_t>(from)],
                               verts_[static_cast<std::size_t>(to)]);
  std::vector<int> out;
  for (const auto& v : path) {
    auto i = vertex_index(v);
    if (!i) throw IncompleteError("canonical geodesic leaves the ball");
    out.push_back(*i);
  }
  return out;
}

}  // namespace fpcube
