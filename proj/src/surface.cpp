#include "cluster/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace cluster {

namespace {

struct ArcParts {
  bool crossing;
  long a, b;       // crossing: bottom, top; peripheral: start, end
  bool on_bottom;  // peripheral only
  int span;
};

ArcParts parts(const Arc& arc) {
  if (const auto* c = std::get_if<CrossingArc>(&arc))
    return {true, c->bottom, c->top, false, 0};
  const auto& per = std::get<PeripheralArc>(arc);
  return {false, per.start, per.start + per.span + 1, per.on_bottom, per.span};
}

Arc canonical(const Arc& arc, int q, int p) {
  if (const auto* c = std::get_if<CrossingArc>(&arc)) {
    long m = c->bottom >= 0 ? c->bottom / q : -((-c->bottom + q - 1) / q);
    return CrossingArc{c->bottom - m * q, c->top - m * p};
  }
  const auto& per = std::get<PeripheralArc>(arc);
  const int period = per.on_bottom ? q : p;
  long s = per.start % period;
  if (s < 0) s += period;
  return PeripheralArc{per.on_bottom, s, per.span};
}

}  // namespace

long crossing_index(const CrossingArc& a, int q, int p) {
  return a.bottom * p - a.top * q;
}

LaurentPoly arc_variable(const Arc& arc, AFamilies& fam) {
  if (const auto* c = std::get_if<CrossingArc>(&arc))
    return fam.seq->value(crossing_index(*c, fam.q, fam.p));
  const auto& per = std::get<PeripheralArc>(arc);
  if (per.on_bottom) return continuant(fam.j, fam.p, per.span, per.start * fam.p);
  const long end = per.start + per.span + 1;
  return continuant(fam.jtilde, fam.q, per.span, -end * fam.q);
}

bool arcs_cross(const Arc& x, const Arc& y, int q, int p) {
  const ArcParts a = parts(x), b = parts(y);
  if (a.crossing && b.crossing) {
    const long range = std::abs(a.a - b.a) / q + std::abs(a.b - b.b) / p + 2;
    for (long m = -range; m <= range; ++m) {
      const long db = b.a + m * q - a.a;
      const long dt = b.b + m * p - a.b;
      if ((db > 0 && dt < 0) || (db < 0 && dt > 0)) return true;
    }
    return false;
  }
  if (!a.crossing && !b.crossing) {
    if (a.on_bottom != b.on_bottom) return false;
    const int period = a.on_bottom ? q : p;
    const long range = (std::abs(a.a - b.a) + std::abs(a.b - b.b)) / period + 2;
    for (long m = -range; m <= range; ++m) {
      const long s = b.a + m * period, e = b.b + m * period;
      if ((a.a < s && s < a.b && a.b < e) || (s < a.a && a.a < e && e < a.b)) return true;
    }
    return false;
  }
  const ArcParts& per = a.crossing ? b : a;
  const ArcParts& cr = a.crossing ? a : b;
  const int period = per.on_bottom ? q : p;
  const long endpoint = per.on_bottom ? cr.a : cr.b;
  const long range = (std::abs(endpoint - per.a)) / period + 2;
  for (long m = -range; m <= range; ++m) {
    const long x0 = endpoint + m * period;
    if (per.a < x0 && x0 < per.b) return true;
  }
  return false;
}

// --- universal-cover face complex -----------------------------------------
//
// Bottom marked point i sits at x = i*p, top point j at x = j*q, so the deck
// shift moves everything by q*p.  Faces are traced from the rotation system:
// at each marked point the incident arc ends are ordered counterclockwise,
// and following the predecessor of the reversed edge walks every face with
// the interior on the left.

namespace {

struct Vertex {
  int side;  // 0 bottom, 1 top
  long idx;
  auto operator<=>(const Vertex&) const = default;
};

struct Edge {
  bool is_arc;
  int slot = -1;   // arc lifts
  long shift = 0;  // deck shift of the lift
  Vertex u, v;
};

struct Face {
  std::array<int, 3> edge_ids;    // CCW order
  std::array<Vertex, 3> from;     // edge_ids[k] is traversed from[k] -> from[(k+1)%3]
};

class CoverComplex {
 public:
  CoverComplex(int q, int p, const std::vector<Arc>& arcs) : q_(q), p_(p) {
    const long unit = static_cast<long>(q_) * p_;
    long extent = unit;
    for (const Arc& arc : arcs) {
      const ArcParts pr = parts(arc);
      const long xu = pr.crossing ? pr.a * p_ : (pr.on_bottom ? pr.a * p_ : pr.a * q_);
      const long xv = pr.crossing ? pr.b * q_ : (pr.on_bottom ? pr.b * p_ : pr.b * q_);
      extent = std::max({extent, std::abs(xu), std::abs(xv), std::abs(xu - xv)});
    }
    const long m_max = 2 * (extent / unit + 2);
    safe_x_ = (m_max / 2) * unit;

    for (int slot = 0; slot < static_cast<int>(arcs.size()); ++slot) {
      const ArcParts pr = parts(arcs[slot]);
      for (long m = -m_max; m <= m_max; ++m) {
        Edge e;
        e.is_arc = true;
        e.slot = slot;
        e.shift = m;
        if (pr.crossing) {
          e.u = {0, pr.a + m * q_};
          e.v = {1, pr.b + m * p_};
        } else if (pr.on_bottom) {
          e.u = {0, pr.a + m * q_};
          e.v = {0, pr.b + m * q_};
        } else {
          e.u = {1, pr.a + m * p_};
          e.v = {1, pr.b + m * p_};
        }
        edges_.push_back(e);
      }
    }
    long blo = 0, bhi = 0, tlo = 0, thi = 0;
    for (const Edge& e : edges_) {
      for (const Vertex& w : {e.u, e.v}) {
        (w.side == 0 ? blo : tlo) = std::min(w.side == 0 ? blo : tlo, w.idx);
        (w.side == 0 ? bhi : thi) = std::max(w.side == 0 ? bhi : thi, w.idx);
      }
    }
    for (long i = blo - 1; i <= bhi; ++i)
      edges_.push_back({false, -1, 0, {0, i}, {0, i + 1}});
    for (long j = tlo - 1; j <= thi; ++j)
      edges_.push_back({false, -1, 0, {1, j}, {1, j + 1}});

    build_fans(arcs);
    trace_faces();
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  bool face_is_safe(const Face& f) const {
    for (const Vertex& w : f.from) {
      const long x = w.side == 0 ? w.idx * p_ : w.idx * q_;
      if (std::abs(x) > safe_x_) return false;
    }
    return true;
  }

  int find_edge(int slot, long shift) const {
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id)
      if (edges_[id].is_arc && edges_[id].slot == slot && edges_[id].shift == shift) return id;
    throw std::logic_error("arc lift not materialised");
  }

  std::vector<const Face*> faces_with_edge(int edge_id) const {
    std::vector<const Face*> out;
    for (const Face& f : faces_)
      for (int id : f.edge_ids)
        if (id == edge_id) out.push_back(&f);
    return out;
  }

 private:
  void build_fans(const std::vector<Arc>& arcs) {
    // sort key: (category, tiebreak) per the counterclockwise fan order
    std::map<Vertex, std::vector<std::pair<std::pair<int, long>, int>>> fans;
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const Edge& e = edges_[id];
      if (!e.is_arc) {
        // The counterclockwise fan starts along the boundary with the surface
        // on the left: rightward segment first at bottom vertices, leftward
        // segment first at top vertices.
        const bool bottom = e.u.side == 0;
        fans[e.u].push_back({{bottom ? 0 : 4, 0}, id});
        fans[e.v].push_back({{bottom ? 4 : 0, 0}, id});
        continue;
      }
      const ArcParts pr = parts(arcs[e.slot]);
      if (pr.crossing) {
        fans[e.u].push_back({{2, -e.v.idx}, id});  // at bottom: top index descending
        fans[e.v].push_back({{2, e.u.idx}, id});   // at top: bottom index ascending
      } else if (pr.on_bottom) {
        fans[e.u].push_back({{1, pr.span}, id});   // left end: span ascending
        fans[e.v].push_back({{3, -pr.span}, id});  // right end: span descending
      } else {
        fans[e.v].push_back({{1, pr.span}, id});   // top right end: span ascending
        fans[e.u].push_back({{3, -pr.span}, id});  // top left end: span descending
      }
    }
    for (auto& [w, fan] : fans) {
      std::sort(fan.begin(), fan.end());
      auto& list = fans_[w];
      for (auto& [key, id] : fan) list.push_back(id);
    }
  }

  void trace_faces() {
    // half-edge h = 2*edge + (0 if traversed u->v, 1 if v->u)
    std::vector<char> seen(2 * edges_.size(), 0);
    for (size_t h0 = 0; h0 < 2 * edges_.size(); ++h0) {
      if (seen[h0]) continue;
      std::vector<size_t> orbit;
      size_t h = h0;
      bool ok = true;
      do {
        seen[h] = 1;
        orbit.push_back(h);
        const Edge& e = edges_[h / 2];
        const Vertex head = (h & 1) ? e.u : e.v;
        const auto it = fans_.find(head);
        if (it == fans_.end()) {
          ok = false;
          break;
        }
        const auto& fan = it->second;
        const auto pos = std::find(fan.begin(), fan.end(), static_cast<int>(h / 2));
        if (pos == fan.end()) {
          ok = false;
          break;
        }
        const size_t i = static_cast<size_t>(pos - fan.begin());
        const int next_edge = fan[(i + fan.size() - 1) % fan.size()];
        h = 2 * static_cast<size_t>(next_edge) + (edges_[next_edge].u == head ? 0 : 1);
        if (orbit.size() > 2 * edges_.size()) {
          ok = false;
          break;
        }
      } while (h != h0);
      if (!ok || orbit.size() != 3) continue;
      Face f;
      for (int k = 0; k < 3; ++k) {
        const size_t hk = orbit[k];
        f.edge_ids[k] = static_cast<int>(hk / 2);
        const Edge& e = edges_[hk / 2];
        f.from[k] = (hk & 1) ? e.v : e.u;
      }
      faces_.push_back(f);
    }
  }

  int q_, p_;
  long safe_x_ = 0;
  std::vector<Edge> edges_;
  std::map<Vertex, std::vector<int>> fans_;
  std::vector<Face> faces_;
};

}  // namespace

AnnulusTriangulation::AnnulusTriangulation(int q, int p, std::vector<Arc> arcs)
    : q_(q), p_(p), arcs_(std::move(arcs)) {
  if (q < 1 || p < 1 || gcd(q, p) != 1)
    throw UnsupportedError("annulus model needs positive coprime q, p");
  if (static_cast<int>(arcs_.size()) != q + p)
    throw std::invalid_argument("a triangulation of the annulus has q + p arcs");
  for (Arc& a : arcs_) {
    const ArcParts pr = parts(a);
    if (!pr.crossing) {
      const int limit = (pr.on_bottom ? q : p) - 1;
      if (pr.span < 1 || pr.span > limit)
        throw std::invalid_argument("peripheral arc span out of range");
    }
    a = canonical(a, q_, p_);
  }
  for (size_t i = 0; i < arcs_.size(); ++i)
    for (size_t j = i + 1; j < arcs_.size(); ++j) {
      if (arcs_[i] == arcs_[j]) throw std::invalid_argument("duplicate arc");
      if (arcs_cross(arcs_[i], arcs_[j], q_, p_))
        throw std::invalid_argument("arcs cross: not a triangulation");
    }
}

AnnulusTriangulation AnnulusTriangulation::initial(int q, int p) {
  const int n = q + p;
  std::vector<Arc> arcs(n, Arc{});
  for (int k = 0; k < n; ++k) {
    const long j = static_cast<long>(k) * p / n;
    arcs[(k * p) % n] = CrossingArc{k - j, j};
  }
  return AnnulusTriangulation(q, p, std::move(arcs));
}

ExchangeMatrix AnnulusTriangulation::quiver() const {
  const CoverComplex cover(q_, p_, arcs_);

  // one face instance per orbit: key is the side multiset anchored at the
  // smallest arc shift
  std::set<std::vector<std::tuple<int, int, long>>> orbits;
  ExchangeMatrix m(static_cast<int>(arcs_.size()));
  for (const auto& face : cover.faces()) {
    if (!cover.face_is_safe(face)) continue;
    long anchor = std::numeric_limits<long>::max();
    for (int id : face.edge_ids)
      if (cover.edges()[id].is_arc) anchor = std::min(anchor, cover.edges()[id].shift);
    if (anchor == std::numeric_limits<long>::max()) continue;  // clipped outer sliver
    std::vector<std::tuple<int, int, long>> key;
    for (int id : face.edge_ids) {
      const Edge& e = cover.edges()[id];
      if (e.is_arc)
        key.emplace_back(0, e.slot, e.shift - anchor);
      else
        key.emplace_back(1, e.u.side, e.u.idx - anchor * (e.u.side == 0 ? q_ : p_));
    }
    std::sort(key.begin(), key.end());
    if (!orbits.insert(key).second) continue;

    // counterclockwise sides (a, b): the clockwise-consecutive pair is (b, a)
    for (int k = 0; k < 3; ++k) {
      const Edge& a = cover.edges()[face.edge_ids[k]];
      const Edge& b = cover.edges()[face.edge_ids[(k + 1) % 3]];
      if (a.is_arc && b.is_arc && a.slot != b.slot) m.add_arrow(b.slot, a.slot);
    }
  }
  if (orbits.size() != arcs_.size())
    throw std::logic_error("face tracing did not produce q + p triangles");
  return m;
}

AnnulusFlip AnnulusTriangulation::flip(int slot) const {
  if (slot < 0 || slot >= static_cast<int>(arcs_.size()))
    throw std::out_of_range("arc slot out of range");
  const CoverComplex cover(q_, p_, arcs_);
  const int edge_id = cover.find_edge(slot, 0);
  const auto adjacent = cover.faces_with_edge(edge_id);
  if (adjacent.size() != 2) throw std::logic_error("flipped arc must bound two triangles");

  const Edge& e0 = cover.edges()[edge_id];
  auto opposite_corner = [&](const Face& f) {
    for (const Vertex& w : f.from)
      if (w != e0.u && w != e0.v) return w;
    throw std::logic_error("degenerate face");
  };
  const Vertex a = opposite_corner(*adjacent[0]);
  const Vertex b = opposite_corner(*adjacent[1]);

  Arc added;
  if (a.side != b.side) {
    const Vertex& bot = a.side == 0 ? a : b;
    const Vertex& top = a.side == 0 ? b : a;
    added = canonical(CrossingArc{bot.idx, top.idx}, q_, p_);
  } else {
    const long lo = std::min(a.idx, b.idx), hi = std::max(a.idx, b.idx);
    const int span = static_cast<int>(hi - lo - 1);
    added = canonical(PeripheralArc{a.side == 0, lo, span}, q_, p_);
  }

  // quadrilateral sides in cyclic order: the two sides of the first face
  // meeting v then u, then the two sides of the second face meeting u then v
  auto side_at = [&](const Face& f, const Vertex& corner) -> QuadSide {
    for (int id : f.edge_ids) {
      if (id == edge_id) continue;
      const Edge& e = cover.edges()[id];
      if (e.u == corner || e.v == corner) {
        if (e.is_arc) return QuadSide{arcs_[e.slot]};
        return QuadSide{std::nullopt};
      }
    }
    throw std::logic_error("quadrilateral side missing");
  };
  std::array<QuadSide, 4> quad{
      side_at(*adjacent[0], e0.v), side_at(*adjacent[0], e0.u),
      side_at(*adjacent[1], e0.u), side_at(*adjacent[1], e0.v)};

  std::vector<Arc> arcs = arcs_;
  const Arc removed = arcs[slot];
  arcs[slot] = added;
  return AnnulusFlip{AnnulusTriangulation(q_, p_, std::move(arcs)), removed, added, quad};
}

nlohmann::json AnnulusTriangulation::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const Arc& a : arcs_) {
    if (const auto* c = std::get_if<CrossingArc>(&a)) {
      list.push_back({{"kind", "crossing"}, {"bottom", c->bottom}, {"top", c->top}});
    } else {
      const auto& per = std::get<PeripheralArc>(a);
      list.push_back({{"kind", per.on_bottom ? "peripheral_bottom" : "peripheral_top"},
                      {"start", per.start},
                      {"span", per.span}});
    }
  }
  return {{"q", q_}, {"p", p_}, {"arcs", list}};
}

AnnulusTriangulation AnnulusTriangulation::from_json(const nlohmann::json& j) {
  std::vector<Arc> arcs;
  for (const auto& item : j.at("arcs")) {
    const std::string kind = item.at("kind").get<std::string>();
    if (kind == "crossing") {
      arcs.push_back(CrossingArc{item.at("bottom").get<long>(), item.at("top").get<long>()});
    } else if (kind == "peripheral_bottom" || kind == "peripheral_top") {
      arcs.push_back(PeripheralArc{kind == "peripheral_bottom", item.at("start").get<long>(),
                                   item.at("span").get<int>()});
    } else {
      throw std::invalid_argument("unknown arc kind: " + kind);
    }
  }
  return AnnulusTriangulation(j.at("q").get<int>(), j.at("p").get<int>(), std::move(arcs));
}

CheckReport ptolemy_check(const AnnulusTriangulation& t, int slot, AFamilies& fam) {
  CheckReport report("ptolemy");
  const auto flip = t.flip(slot);
  auto value = [&](const QuadSide& s) {
    return s.arc ? arc_variable(*s.arc, fam) : LaurentPoly::one(fam.q + fam.p);
  };
  const LaurentPoly lhs = arc_variable(flip.removed, fam) * arc_variable(flip.added, fam);
  const LaurentPoly rhs =
      value(flip.quad[0]) * value(flip.quad[2]) + value(flip.quad[1]) * value(flip.quad[3]);
  report.expect(lhs == rhs,
                {{"slot", slot}, {"lhs", lhs.serialize()}, {"rhs", rhs.serialize()}});
  return report;
}

LaurentPoly d_enclosing_arc_value(DFamilies& fam, long j, int l) {
  if (l < 1 || l > fam.N - 3)
    throw std::out_of_range("enclosing arcs span at most N-3 boundary steps");
  return continuant(fam.jprime, 1, l, j);
}

DArcCounts count_d_arcs(int N, long winding_min, long winding_max) {
  if (N < 4) throw UnsupportedError("affine D needs N >= 4");
  if (winding_max < winding_min) throw std::invalid_argument("empty winding window");
  const long windings = winding_max - winding_min + 1;
  const long boundary = N - 2;
  DArcCounts counts;
  counts.splitting = boundary * boundary * windings;
  counts.enclosing = boundary * (boundary - 1);
  counts.punctured = boundary * windings;
  counts.exceptional = 3;
  return counts;
}

}  // namespace cluster
