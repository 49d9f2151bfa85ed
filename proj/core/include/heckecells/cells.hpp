// The two-sided cell tables of the rank-2 affine Weyl groups for every
// parameter region, plus computed cell partitions (via the preorder graph)
// for cross-checking the encoded data.
#pragma once

#include "heckecells/klbasis.hpp"

#include <functional>
#include <memory>
#include <set>

namespace hc {

struct USpecAtom {
  enum class Kind { Explicit, DufloClosure, LengthAdditiveAfterD, InverseOfB };
  Kind kind = Kind::Explicit;
  std::vector<std::string> words;  // Explicit
  std::string p;                   // DufloClosure

  static USpecAtom explicit_set(std::vector<std::string> ws);
  static USpecAtom duflo(std::string p);
  static USpecAtom length_additive();
  static USpecAtom inverse_of_b();
};

struct PieceSpec {
  enum class BKind { Explicit, DufloBelowInverse };
  BKind b_kind = BKind::Explicit;
  std::vector<std::string> b_words;  // Explicit
  std::string b_bound;               // DufloBelowInverse: {b : b^-1 <=_D bound}
  std::string d;
  std::vector<USpecAtom> u_atoms;    // U_d = union of the atoms
};

struct CellDescriptor {
  enum class Hint { Generic, OneElement, Lowest, Trivial };
  std::string label;            // e.g. "C2:1:i"
  std::string condition_text;   // e.g. "a-c>2b"
  std::function<bool(const WeightSpec&)> condition;
  std::vector<PieceSpec> pieces;
  Hint hint = Hint::Generic;
};

/// Cell membership cap needed to reduce products of total length max_len.
int recommended_member_cap(const CellDescriptor& d, int max_len);
/// Universe radius that lets the descriptor realize its U-sets (Duflo
/// closures need room for powers of p) at the given membership cap.
int recommended_universe_radius(const CellDescriptor& d, int member_cap);

/// Every encoded descriptor of the given type, in table order.
const std::vector<CellDescriptor>& all_descriptors(GroupType t);
/// The descriptors whose region condition the weights satisfy.
std::vector<CellDescriptor> region_descriptors(const WeightSpec& w);
const CellDescriptor& descriptor_by_label(GroupType t, const std::string& label);

/// A descriptor instantiated inside a universe: piece data as elements and
/// membership tests valid up to a length cap.
class RealizedPiece {
 public:
  RealizedPiece(const GroupUniverse& uni, const PieceSpec& spec, int u_len_cap);
  const std::vector<Elt>& b() const { return b_; }
  Elt d() const { return d_; }
  int u_len_cap() const { return u_cap_; }
  bool u_contains(Elt u) const;  // requires l(u) <= u_len_cap
  std::vector<Elt> u_elements(int max_len) const;

 private:
  const GroupUniverse& uni_;
  std::vector<Elt> b_;
  Elt d_;
  int u_cap_;
  std::vector<char> u_mask_;  // by universe index, up to u_cap_
};

class RealizedCell {
 public:
  RealizedCell(const GroupUniverse& uni, const CellDescriptor& desc,
               int member_len_cap);
  const GroupUniverse& universe() const { return uni_; }
  const CellDescriptor& descriptor() const { return desc_; }
  const std::vector<RealizedPiece>& pieces() const { return pieces_; }
  int member_len_cap() const { return cap_; }

  bool contains(Elt w) const;  // requires l(w) <= member_len_cap
  /// Members with length <= max_len, each exactly once, ascending index.
  std::vector<Elt> members(int max_len) const;
  /// Number of (piece, b, u) productions that collided on one element while
  /// enumerating members up to the cap (0 when the union is disjoint).
  size_t duplicate_productions() const { return duplicates_; }

 private:
  const GroupUniverse& uni_;
  CellDescriptor desc_;
  int cap_;
  std::vector<RealizedPiece> pieces_;
  std::vector<char> member_mask_;
  size_t duplicates_ = 0;
};

enum class CellSide { Left, Right, TwoSided };
std::string to_string(CellSide s);

/// Edges x <- y whenever C_x appears in C_s C_y (left), in C_y C_s (right),
/// or either (two-sided), for s over the generators.
struct PreorderGraph {
  CellSide side;
  int radius;
  std::vector<std::vector<uint32_t>> below;  // below[y] = {x : x <= y, 1 step}
};
PreorderGraph preorder_graph(KLTable& kl, CellSide side, int radius);

struct CellPartition {
  CellSide side = CellSide::TwoSided;
  int graph_radius = 0;
  int inner_radius = 0;
  std::vector<int> block;  // per universe index; -1 beyond graph radius
  int num_blocks = 0;
  // DAG over blocks: reach[b1][b2] iff elements of b2 are <= elements of b1.
  std::vector<std::vector<char>> block_reach;

  bool reliable(const GroupUniverse& uni, Elt x) const {
    return uni.length(x) <= inner_radius;
  }
  bool leq(Elt lower, Elt higher) const {
    return block_reach[block[higher.idx]][block[lower.idx]] != 0;
  }
  bool same_block(Elt x, Elt y) const { return block[x.idx] == block[y.idx]; }
};

/// Strongly connected components of the preorder graph; blocks are numbered
/// deterministically by their least display-rank member. Elements with
/// length in (inner_radius, graph_radius] are boundary; treat their blocks
/// as unreliable.
CellPartition computed_cells(KLTable& kl, CellSide side, int graph_radius,
                             int inner_radius);

struct PartitionCompareReport {
  bool pass = false;
  size_t elements = 0;
  size_t encoded_cells = 0;
  size_t computed_blocks = 0;
  std::vector<std::string> witnesses;  // first few disagreements
  std::string summary;
};

/// Exact comparison on the inner ball: the encoded descriptors must tile it
/// and induce the same partition as the computed two-sided blocks.
PartitionCompareReport compare_partitions(
    const CellPartition& computed,
    const std::vector<CellDescriptor>& encoded, const GroupUniverse& uni,
    int inner_radius);

}  // namespace hc
