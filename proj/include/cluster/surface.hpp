#pragma once

#include <optional>
#include <variant>

#include "cluster/continuant.hpp"

namespace cluster {

/// Arc joining the two boundary components of the annulus, stored as a lift
/// to the universal cover (an infinite strip with the q bottom marked points
/// at integers i and the p top marked points at integers j).  Lifts are
/// equivalent under the deck shift (i, j) -> (i + q, j + p); the canonical
/// representative has 0 <= bottom < q.  Its cluster variable is x_{ip - jq}.
struct CrossingArc {
  long bottom = 0;
  long top = 0;
  bool operator==(const CrossingArc&) const = default;
};

/// Arc with both endpoints on one boundary: from marked point `start` to
/// `start + span + 1` on the same side, jumping over `span` points.  Bottom
/// arcs need 1 <= span <= q-1 and carry D^span_p(J_{start*p}); top arcs need
/// 1 <= span <= p-1 and carry D^span_q(Jtilde_{-end*q}) where end is the
/// right endpoint.  Wider arcs would self-intersect.
struct PeripheralArc {
  bool on_bottom = true;
  long start = 0;
  int span = 1;
  bool operator==(const PeripheralArc&) const = default;
};

using Arc = std::variant<CrossingArc, PeripheralArc>;

/// x-sequence index of a crossing arc (deck invariant).
long crossing_index(const CrossingArc& a, int q, int p);

/// The classified cluster variable of an arc, in the initial variables.
LaurentPoly arc_variable(const Arc& arc, AFamilies& fam);

bool arcs_cross(const Arc& a, const Arc& b, int q, int p);

/// One side of the flip quadrilateral: an arc or a boundary segment
/// (boundary segments carry the value 1).
struct QuadSide {
  std::optional<Arc> arc;  // nullopt = boundary segment
};

struct AnnulusFlip;

/// Triangulation of the annulus with q + p marked points: exactly q + p
/// pairwise non-crossing arcs.  Arcs sit in slots that double as quiver
/// vertices; a flip replaces the arc in its slot.
class AnnulusTriangulation {
 public:
  AnnulusTriangulation(int q, int p, std::vector<Arc> arcs);

  /// The zig-zag triangulation whose extracted quiver is the affine A quiver:
  /// arc k runs from bottom k - floor(kp/N) to top floor(kp/N) and occupies
  /// slot kp mod N, its label in the quiver.
  static AnnulusTriangulation initial(int q, int p);

  int q() const { return q_; }
  int p() const { return p_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  ExchangeMatrix quiver() const;

  AnnulusFlip flip(int slot) const;

  nlohmann::json to_json() const;
  static AnnulusTriangulation from_json(const nlohmann::json& j);

 private:
  int q_, p_;
  std::vector<Arc> arcs_;
};

struct AnnulusFlip {
  AnnulusTriangulation triangulation;
  Arc removed;
  Arc added;
  std::array<QuadSide, 4> quad;  // cyclic; (0,2) and (1,3) are opposite
};

/// Symbolic Ptolemy relation at one flip: old * new == product of one pair of
/// opposite quadrilateral sides plus the product of the other.
CheckReport ptolemy_check(const AnnulusTriangulation& t, int slot, AFamilies& fam);

/// Arcs of the twice-punctured disk (affine D), by where their endpoints lie
/// and which side of the arc the punctures fall on.
enum class DArcFamily {
  PunctureSplitting,   // boundary-to-boundary, punctures on opposite sides
  PunctureEnclosing,   // boundary-to-boundary, punctures on the same side
  PunctureToBoundary,  // one endpoint at a puncture
  PunctureOnly,        // the three arcs touching only the punctures
};

/// Cluster variable of the enclosing arc from boundary vertex j spanning l
/// further vertices: D^l_1(Jprime_j).  Requires 1 <= l <= N-3; wider arcs
/// self-intersect and are rejected.
LaurentPoly d_enclosing_arc_value(DFamilies& fam, long j, int l);

struct DArcCounts {
  long splitting = 0;    // labels gamma(v_i, v_j, m) for windings in a window
  long enclosing = 0;    // (N-2)(N-3), winding-free
  long punctured = 0;    // one per self-folded companion gamma(v_i, v_i, m)
  long exceptional = 3;  // always exactly three
};

/// Label counts per family for windings m in [winding_min, winding_max].
DArcCounts count_d_arcs(int N, long winding_min, long winding_max);

}  // namespace cluster
