#include "heckecells/cells.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hc {

USpecAtom USpecAtom::explicit_set(std::vector<std::string> ws) {
  USpecAtom a;
  a.kind = Kind::Explicit;
  a.words = std::move(ws);
  return a;
}
USpecAtom USpecAtom::duflo(std::string p) {
  USpecAtom a;
  a.kind = Kind::DufloClosure;
  a.p = std::move(p);
  return a;
}
USpecAtom USpecAtom::length_additive() {
  USpecAtom a;
  a.kind = Kind::LengthAdditiveAfterD;
  return a;
}
USpecAtom USpecAtom::inverse_of_b() {
  USpecAtom a;
  a.kind = Kind::InverseOfB;
  return a;
}

namespace {

using W = WeightSpec;
using Hint = CellDescriptor::Hint;

PieceSpec piece(std::vector<std::string> b, std::string d,
                std::vector<USpecAtom> u) {
  PieceSpec p;
  p.b_words = std::move(b);
  p.d = std::move(d);
  p.u_atoms = std::move(u);
  return p;
}

PieceSpec piece_duflo_b(std::string bound, std::string d,
                        std::vector<USpecAtom> u) {
  PieceSpec p;
  p.b_kind = PieceSpec::BKind::DufloBelowInverse;
  p.b_bound = std::move(bound);
  p.d = std::move(d);
  p.u_atoms = std::move(u);
  return p;
}

CellDescriptor desc(std::string label, std::string cond_text,
                    std::function<bool(const W&)> cond,
                    std::vector<PieceSpec> pieces, Hint hint = Hint::Generic) {
  CellDescriptor d;
  d.label = std::move(label);
  d.condition_text = std::move(cond_text);
  d.condition = std::move(cond);
  d.pieces = std::move(pieces);
  d.hint = hint;
  return d;
}

CellDescriptor singleton(std::string label, std::string cond_text,
                         std::function<bool(const W&)> cond, std::string d) {
  return desc(std::move(label), std::move(cond_text), std::move(cond),
              {piece({"e"}, std::move(d), {USpecAtom::explicit_set({"e"})})},
              Hint::OneElement);
}

std::vector<CellDescriptor> make_c2_descriptors() {
  std::vector<CellDescriptor> v;
  v.push_back(desc("C2:0", "always", [](const W&) { return true; },
                   {piece({"e"}, "e", {USpecAtom::explicit_set({"e"})})},
                   Hint::Trivial));

  // Family (1): one piece, U = U(p).
  v.push_back(desc("C2:1:i", "a-c>2b",
                   [](const W& w) { return w.a - w.c > 2 * w.b; },
                   {piece({"e", "1", "01", "101"}, "02", {USpecAtom::duflo("1012")})}));
  v.push_back(desc("C2:1:ii", "0<a-c<2b",
                   [](const W& w) { return w.a - w.c > 0 && w.a - w.c < 2 * w.b; },
                   {piece({"e", "2", "12", "012"}, "1010", {USpecAtom::duflo("2101")})}));
  v.push_back(desc("C2:1:iii", "|a-c|<b, a+c>b",
                   [](const W& w) { return std::abs(w.a - w.c) < w.b && w.a + w.c > w.b; },
                   {piece({"e", "1", "01", "21"}, "02", {USpecAtom::duflo("102")})}));
  v.push_back(desc("C2:1:iv", "a+c<b",
                   [](const W& w) { return w.a + w.c < w.b; },
                   {piece({"e", "0", "2", "02"}, "1", {USpecAtom::duflo("021")})}));
  v.push_back(desc("C2:1:v", "a-c>b",
                   [](const W& w) { return w.a - w.c > w.b; },
                   {piece({"e", "0", "10", "010"}, "212", {USpecAtom::duflo("012")})}));
  v.push_back(desc("C2:1:vi", "a>c, a+c>2b",
                   [](const W& w) { return w.a > w.c && w.a + w.c > 2 * w.b; },
                   {piece({"e", "1", "01", "101"}, "2", {USpecAtom::duflo("1012")})}));
  v.push_back(desc("C2:1:vii", "a>c, a+c<2b",
                   [](const W& w) { return w.a > w.c && w.a + w.c < 2 * w.b; },
                   {piece({"e", "2", "12", "012"}, "101", {USpecAtom::duflo("2101")})}));

  // Family (2): one piece, U = B^{-1}.
  v.push_back(desc("C2:2:i", "a<b, c<b, a+c>b",
                   [](const W& w) { return w.a < w.b && w.c < w.b && w.a + w.c > w.b; },
                   {piece({"e", "0", "2"}, "1", {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("C2:2:ii", "c<a<b",
                   [](const W& w) { return w.c < w.a && w.a < w.b; },
                   {piece({"e", "0"}, "121", {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("C2:2:iii", "a>b>c",
                   [](const W& w) { return w.a > w.b && w.b > w.c; },
                   {piece({"e", "0"}, "1", {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("C2:2:iv", "b<a-c<2b",
                   [](const W& w) { return w.a - w.c > w.b && w.a - w.c < 2 * w.b; },
                   {piece({"e", "1", "01"}, "02", {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("C2:2:v", "a>b, a+c<2b",
                   [](const W& w) { return w.a > w.b && w.a + w.c < 2 * w.b; },
                   {piece({"e", "1", "01"}, "2", {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("C2:2:vi", "a>c>b",
                   [](const W& w) { return w.a > w.c && w.c > w.b; },
                   {piece({"e", "1"}, "0", {USpecAtom::inverse_of_b()})}));

  // Family (3): equality strata, two pieces, U_i = U(p_i).
  v.push_back(desc("C2:3:i", "a-c=2b",
                   [](const W& w) { return w.a - w.c == 2 * w.b; },
                   {piece({"e", "1", "01"}, "02", {USpecAtom::duflo("1012")}),
                    piece({"e"}, "1010", {USpecAtom::duflo("2101")})}));
  v.push_back(desc("C2:3:ii", "a+c=b",
                   [](const W& w) { return w.a + w.c == w.b; },
                   {piece({"e", "0", "2"}, "1", {USpecAtom::duflo("021")}),
                    piece({"e"}, "02", {USpecAtom::duflo("102")})}));
  v.push_back(desc("C2:3:iii", "a-c=b",
                   [](const W& w) { return w.a - w.c == w.b; },
                   {piece({"e", "1", "01"}, "02", {USpecAtom::duflo("102")}),
                    piece({"e"}, "212", {USpecAtom::duflo("012")})}));
  v.push_back(desc("C2:3:iv", "a>c, a+c=2b",
                   [](const W& w) { return w.a > w.c && w.a + w.c == 2 * w.b; },
                   {piece({"e", "1", "01"}, "2", {USpecAtom::duflo("1012")}),
                    piece({"e"}, "101", {USpecAtom::duflo("2101")})}));
  v.push_back(desc("C2:3:v", "a=c, a>b",
                   [](const W& w) { return w.a == w.c && w.a > w.b; },
                   {piece({"e", "1"}, "2", {USpecAtom::duflo("1012")}),
                    piece({"e", "1"}, "0", {USpecAtom::duflo("1210")})}));
  v.push_back(desc("C2:3:vi", "a=c, a<b",
                   [](const W& w) { return w.a == w.c && w.a < w.b; },
                   {piece({"e", "2"}, "101", {USpecAtom::duflo("2101")}),
                    piece({"e", "0"}, "121", {USpecAtom::duflo("0121")})}));

  // Family (4): exotic cases.
  v.push_back(desc("C2:4:i", "a=b=c",
                   [](const W& w) { return w.a == w.b && w.b == w.c; },
                   {piece({"e"}, "1", {USpecAtom::duflo("0121"), USpecAtom::duflo("2101")}),
                    piece({"e"}, "2", {USpecAtom::duflo("1012"), USpecAtom::explicit_set({"12"})}),
                    piece({"e"}, "0", {USpecAtom::duflo("1210"), USpecAtom::explicit_set({"10"})})}));
  v.push_back(desc("C2:4:ii", "a>b=c",
                   [](const W& w) { return w.a > w.b && w.b == w.c; },
                   {piece({"e"}, "1", {USpecAtom::explicit_set({"e", "0", "01"})}),
                    piece({"e"}, "0", {USpecAtom::explicit_set({"e", "1", "10"})})}));
  // The paper's U_1 here omits e, which assumption (i,c) requires and the
  // listed cell elements include; encoded with e restored.
  v.push_back(desc("C2:4:iii", "a=b>c",
                   [](const W& w) { return w.a == w.b && w.b > w.c; },
                   {piece({"e", "0"}, "1", {USpecAtom::explicit_set({"e", "0", "2", "21", "210"})}),
                    piece({"e"}, "2", {USpecAtom::explicit_set({"e", "1", "10", "12"})})}));

  // Family (5): one-element cells.
  v.push_back(singleton("C2:5:i", "a>b, c>b",
                        [](const W& w) { return w.a > w.b && w.c > w.b; }, "1"));
  v.push_back(singleton("C2:5:ii", "a>b, c>b",
                        [](const W& w) { return w.a > w.b && w.c > w.b; }, "010"));
  v.push_back(singleton("C2:5:iii", "a-c>2b",
                        [](const W& w) { return w.a - w.c > 2 * w.b; }, "1010"));
  v.push_back(singleton("C2:5:iv", "b<a, c<a, a<b+c",
                        [](const W& w) { return w.b < w.a && w.c < w.a && w.a < w.b + w.c; },
                        "212"));
  v.push_back(singleton("C2:5:v", "c<b",
                        [](const W& w) { return w.c < w.b; }, "0"));
  v.push_back(singleton("C2:5:vi", "a+c>2b, c<b",
                        [](const W& w) { return w.a + w.c > 2 * w.b && w.c < w.b; },
                        "101"));
  v.push_back(singleton("C2:5:vii", "a<b",
                        [](const W& w) { return w.a < w.b; }, "2"));
  v.push_back(singleton("C2:5:viii", "a+c<b",
                        [](const W& w) { return w.a + w.c < w.b; }, "02"));

  // Family (6): the lowest two-sided cell.
  v.push_back(desc("C2:6:i", "a>c",
                   [](const W& w) { return w.a > w.c; },
                   {piece_duflo_b("010210", "1212", {USpecAtom::length_additive()})},
                   Hint::Lowest));
  v.push_back(desc("C2:6:ii", "a=c",
                   [](const W& w) { return w.a == w.c; },
                   {piece({"e", "0", "10", "210"}, "1212", {USpecAtom::length_additive()}),
                    piece({"e", "2", "12", "012"}, "1010", {USpecAtom::length_additive()})},
                   Hint::Lowest));
  return v;
}

std::vector<CellDescriptor> make_g2_descriptors() {
  std::vector<CellDescriptor> v;
  v.push_back(desc("G2:0", "always", [](const W&) { return true; },
                   {piece({"e"}, "e", {USpecAtom::explicit_set({"e"})})},
                   Hint::Trivial));

  // Family (1).
  v.push_back(desc("G2:1:i", "2a>3b",
                   [](const W& w) { return 2 * w.a > 3 * w.b; },
                   {piece({"e", "0", "10", "210", "1210", "01210"}, "21212",
                          {USpecAtom::duflo("01212")})}));
  v.push_back(desc("G2:1:ii", "2a<3b",
                   [](const W& w) { return 2 * w.a < 3 * w.b; },
                   {piece({"e", "1", "21", "121", "0121", "2121"}, "02",
                          {USpecAtom::duflo("12102")})}));
  v.push_back(desc("G2:1:iii", "a>2b",
                   [](const W& w) { return w.a > 2 * w.b; },
                   {piece({"e", "1", "01", "21", "121", "0121"}, "02",
                          {USpecAtom::duflo("102")})}));
  v.push_back(desc("G2:1:iv", "a<2b",
                   [](const W& w) { return w.a < 2 * w.b; },
                   {piece({"e", "2", "12", "212", "1212", "01212"}, "101",
                          {USpecAtom::duflo("210")})}));
  // The table lists p = e for the next two rows; U(e) = {e} contradicts both
  // c^{-1} = c and B^{-1} subset of U, so they are encoded with U = B^{-1}
  // (the family-(2) pattern of the C~2 table).
  v.push_back(desc("G2:1:v", "2a>3b, a<2b",
                   [](const W& w) { return 2 * w.a > 3 * w.b && w.a < 2 * w.b; },
                   {piece({"e", "1", "21", "121", "0121"}, "02",
                          {USpecAtom::inverse_of_b()})}));
  v.push_back(desc("G2:1:vi", "a<b",
                   [](const W& w) { return w.a < w.b; },
                   {piece({"e", "0"}, "12121", {USpecAtom::inverse_of_b()})}));

  // Family (2): equality strata.
  v.push_back(desc("G2:2:i", "2a=3b",
                   [](const W& w) { return 2 * w.a == 3 * w.b; },
                   {piece({"e", "1", "21", "121", "0121"}, "02", {USpecAtom::duflo("12102")}),
                    piece({"e"}, "21212", {USpecAtom::duflo("01212")})}));
  v.push_back(desc("G2:2:ii", "a=2b",
                   [](const W& w) { return w.a == 2 * w.b; },
                   {piece({"e", "1", "21", "121", "0121"}, "02", {USpecAtom::duflo("102")}),
                    piece({"e"}, "101", {USpecAtom::duflo("210")})}));

  // Family (3): exotic cases.
  v.push_back(desc("G2:3:i", "a>b",
                   [](const W& w) { return w.a > w.b; },
                   {piece({"e"}, "1", {USpecAtom::explicit_set({"e", "0"})}),
                    piece({"e"}, "0", {USpecAtom::explicit_set({"e", "1"})})}));
  v.push_back(desc("G2:3:ii", "a<b",
                   [](const W& w) { return w.a < w.b; },
                   {piece({"e", "2"}, "1",
                          {USpecAtom::explicit_set({"e", "2", "0", "21", "212", "210"})}),
                    piece({"e"}, "0",
                          {USpecAtom::explicit_set({"e", "1", "12", "121", "1210", "1212"})})}));
  // The paper lists the a=b cell by its elements; the U-sets below are read
  // off from that list.
  v.push_back(desc("G2:3:iii", "a=b",
                   [](const W& w) { return w.a == w.b; },
                   {piece({"e"}, "1",
                          {USpecAtom::explicit_set({"e", "0", "2", "21", "210", "212", "2121", "21210"})}),
                    piece({"e"}, "0",
                          {USpecAtom::explicit_set({"e", "1", "12", "121", "1210", "1212", "12121", "121210"})}),
                    piece({"e"}, "2",
                          {USpecAtom::explicit_set({"e", "1", "10", "12", "121", "1210", "1212"})})}));
  v.push_back(desc("G2:3:iv", "a>b",
                   [](const W& w) { return w.a > w.b; },
                   {piece({"e", "1", "01"}, "2",
                          {USpecAtom::explicit_set({"e", "1", "10", "12", "121", "1210"})})}));

  // Family (4): one-element cells.
  v.push_back(singleton("G2:4:i", "a<b",
                        [](const W& w) { return w.a < w.b; }, "2"));
  v.push_back(singleton("G2:4:ii", "2b<2a<3b",
                        [](const W& w) { return w.a > w.b && 2 * w.a < 3 * w.b; },
                        "21212"));
  v.push_back(singleton("G2:4:iii", "a>2b",
                        [](const W& w) { return w.a > 2 * w.b; }, "101"));

  // Family (5): the lowest two-sided cell.
  v.push_back(desc("G2:5:i", "always", [](const W&) { return true; },
                   {piece_duflo_b("0121201210", "121212", {USpecAtom::length_additive()})},
                   Hint::Lowest));
  return v;
}

}  // namespace

const std::vector<CellDescriptor>& all_descriptors(GroupType t) {
  static const std::vector<CellDescriptor> c2 = make_c2_descriptors();
  static const std::vector<CellDescriptor> g2 = make_g2_descriptors();
  return t == GroupType::C2affine ? c2 : g2;
}

std::vector<CellDescriptor> region_descriptors(const WeightSpec& w) {
  std::vector<CellDescriptor> out;
  for (const auto& d : all_descriptors(w.type))
    if (d.condition(w)) out.push_back(d);
  return out;
}

const CellDescriptor& descriptor_by_label(GroupType t, const std::string& label) {
  for (const auto& d : all_descriptors(t))
    if (d.label == label) return d;
  throw std::invalid_argument("unknown region label '" + label + "'");
}

RealizedPiece::RealizedPiece(const GroupUniverse& uni, const PieceSpec& spec,
                             int u_len_cap)
    : uni_(uni), u_cap_(u_len_cap) {
  d_ = uni.parse(spec.d);
  if (spec.b_kind == PieceSpec::BKind::Explicit) {
    for (const auto& w : spec.b_words) b_.push_back(uni.parse(w));
  } else {
    Elt bound = uni.parse(spec.b_bound);
    for (Elt x : uni.duflo_below(bound)) b_.push_back(uni.inverse(x));
    std::sort(b_.begin(), b_.end());
  }
  u_mask_.assign(uni.size(), 0);
  for (const auto& atom : spec.u_atoms) {
    switch (atom.kind) {
      case USpecAtom::Kind::Explicit:
        for (const auto& w : atom.words) {
          Elt u = uni.parse(w);
          if (uni.length(u) <= u_cap_) u_mask_[u.idx] = 1;
        }
        break;
      case USpecAtom::Kind::DufloClosure:
        for (Elt u : uni.u_of_p(uni.parse(atom.p), u_cap_)) u_mask_[u.idx] = 1;
        break;
      case USpecAtom::Kind::LengthAdditiveAfterD:
        for (Elt u : uni.elements_up_to(u_cap_)) {
          auto du = uni.try_mul(d_, u);
          if (!du)
            throw OutOfBall("length-additive U test needs radius >= cap + l(d)");
          if (uni.length(*du) == uni.length(d_) + uni.length(u))
            u_mask_[u.idx] = 1;
        }
        break;
      case USpecAtom::Kind::InverseOfB:
        for (Elt b : b_) {
          Elt u = uni.inverse(b);
          if (uni.length(u) <= u_cap_) u_mask_[u.idx] = 1;
        }
        break;
    }
  }
}

bool RealizedPiece::u_contains(Elt u) const {
  if (uni_.length(u) > u_cap_)
    throw OutOfBall("U membership queried beyond the realized cap");
  return u_mask_[u.idx] != 0;
}

std::vector<Elt> RealizedPiece::u_elements(int max_len) const {
  std::vector<Elt> out;
  for (Elt u : uni_.elements_up_to(std::min(max_len, u_cap_)))
    if (u_mask_[u.idx]) out.push_back(u);
  return out;
}

RealizedCell::RealizedCell(const GroupUniverse& uni, const CellDescriptor& desc,
                           int member_len_cap)
    : uni_(uni), desc_(desc), cap_(member_len_cap) {
  member_mask_.assign(uni.size(), 0);
  for (const auto& spec : desc.pieces) {
    RealizedPiece rp(uni, spec, std::max(0, cap_));
    for (Elt b : rp.b()) {
      auto bd = uni.try_mul(b, rp.d());
      if (!bd) throw OutOfBall("piece product bd leaves the universe");
      for (Elt u : rp.u_elements(cap_)) {
        auto w = uni.try_mul(*bd, u);
        if (!w) {
          if (uni.length(*bd) + uni.length(u) <= cap_)
            throw OutOfBall("piece product bdu leaves the universe");
          continue;
        }
        if (uni.length(*w) > cap_) continue;
        // Only length-additive products belong to the piece.
        if (uni.length(*w) !=
            uni.length(b) + uni.length(rp.d()) + uni.length(u))
          continue;
        if (member_mask_[w->idx]) ++duplicates_;
        member_mask_[w->idx] = 1;
      }
    }
    pieces_.push_back(std::move(rp));
  }
}

bool RealizedCell::contains(Elt w) const {
  if (uni_.length(w) > cap_)
    throw OutOfBall("cell membership queried beyond the realized cap");
  return member_mask_[w.idx] != 0;
}

std::vector<Elt> RealizedCell::members(int max_len) const {
  std::vector<Elt> out;
  for (Elt w : uni_.elements_up_to(std::min(max_len, cap_)))
    if (member_mask_[w.idx]) out.push_back(w);
  return out;
}

std::string to_string(CellSide s) {
  switch (s) {
    case CellSide::Left: return "left";
    case CellSide::Right: return "right";
    default: return "two-sided";
  }
}

PreorderGraph preorder_graph(KLTable& kl, CellSide side, int radius) {
  const GroupUniverse& uni = kl.universe();
  if (radius + 1 > uni.radius())
    throw OutOfBall("preorder graph radius needs one unit of headroom");
  kl.ensure_built(radius + 1);
  PreorderGraph g;
  g.side = side;
  g.radius = radius;
  std::vector<Elt> ball = uni.elements_up_to(radius);
  g.below.assign(ball.size(), {});
  auto add_left_edges = [&](bool transpose_by_inverse) {
    for (Elt y : ball) {
      Elt ysrc = transpose_by_inverse ? uni.inverse(y) : y;
      for (int s = 0; s < 3; ++s) {
        for (const auto& [z, h] : kl.gen_action_col(s, ysrc).entries()) {
          Elt zt = transpose_by_inverse ? uni.inverse(z) : z;
          if (zt.idx < g.below.size() && zt != y)
            g.below[y.idx].push_back(zt.idx);
        }
      }
    }
  };
  if (side == CellSide::Left || side == CellSide::TwoSided) add_left_edges(false);
  if (side == CellSide::Right || side == CellSide::TwoSided) add_left_edges(true);
  for (auto& adj : g.below) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

namespace {

// Iterative Tarjan SCC.
std::pair<std::vector<int>, int> tarjan_scc(
    const std::vector<std::vector<uint32_t>>& adj) {
  size_t n = adj.size();
  std::vector<int> comp(n, -1), low(n), num(n, -1);
  std::vector<uint32_t> stack, callers;
  std::vector<size_t> edge_pos(n, 0);
  std::vector<char> on_stack(n, 0);
  int counter = 0, comps = 0;
  for (uint32_t root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    callers.push_back(root);
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!callers.empty()) {
      uint32_t v = callers.back();
      if (edge_pos[v] < adj[v].size()) {
        uint32_t w = adj[v][edge_pos[v]++];
        if (num[w] == -1) {
          callers.push_back(w);
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        callers.pop_back();
        if (!callers.empty())
          low[callers.back()] = std::min(low[callers.back()], low[v]);
        if (low[v] == num[v]) {
          while (true) {
            uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
      }
    }
  }
  return {comp, comps};
}

}  // namespace

CellPartition computed_cells(KLTable& kl, CellSide side, int graph_radius,
                             int inner_radius) {
  const GroupUniverse& uni = kl.universe();
  PreorderGraph g = preorder_graph(kl, side, graph_radius);
  auto [comp, comps] = tarjan_scc(g.below);

  // Renumber blocks by least display rank for deterministic output.
  std::vector<uint32_t> least(comps, UINT32_MAX);
  for (uint32_t i = 0; i < comp.size(); ++i)
    least[comp[i]] = std::min(least[comp[i]], uni.display_rank(Elt{i}));
  std::vector<int> order(comps);
  for (int b = 0; b < comps; ++b) order[b] = b;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return least[x] < least[y]; });
  std::vector<int> rename(comps);
  for (int r = 0; r < comps; ++r) rename[order[r]] = r;

  CellPartition part;
  part.side = side;
  part.graph_radius = graph_radius;
  part.inner_radius = inner_radius;
  part.num_blocks = comps;
  part.block.assign(uni.size(), -1);
  for (uint32_t i = 0; i < comp.size(); ++i) part.block[i] = rename[comp[i]];

  // Block-level reachability by fixpoint over the condensation edges.
  std::vector<std::vector<char>> reach(comps, std::vector<char>(comps, 0));
  for (int b = 0; b < comps; ++b) reach[b][b] = 1;
  std::vector<std::pair<int, int>> block_edges;
  for (uint32_t y = 0; y < g.below.size(); ++y)
    for (uint32_t x : g.below[y])
      if (part.block[y] != part.block[x])
        block_edges.emplace_back(part.block[y], part.block[x]);
  std::sort(block_edges.begin(), block_edges.end());
  block_edges.erase(std::unique(block_edges.begin(), block_edges.end()),
                    block_edges.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [hi, lo] : block_edges) {
      for (int b = 0; b < comps; ++b) {
        if (reach[lo][b] && !reach[hi][b]) {
          reach[hi][b] = 1;
          changed = true;
        }
      }
    }
  }
  part.block_reach = std::move(reach);
  return part;
}

PartitionCompareReport compare_partitions(
    const CellPartition& computed, const std::vector<CellDescriptor>& encoded,
    const GroupUniverse& uni, int inner_radius) {
  PartitionCompareReport rep;
  rep.encoded_cells = encoded.size();
  std::vector<Elt> ball = uni.elements_up_to(inner_radius);
  rep.elements = ball.size();

  auto witness = [&](const std::string& w) {
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
  };

  // Tiling by the encoded descriptors.
  std::vector<int> owner(uni.size(), -1);
  bool tiling_ok = true;
  for (size_t ci = 0; ci < encoded.size(); ++ci) {
    RealizedCell cell(uni, encoded[ci], inner_radius);
    if (cell.duplicate_productions() > 0) {
      tiling_ok = false;
      witness("descriptor " + encoded[ci].label +
              " produced an element twice (non-disjoint pieces)");
    }
    for (Elt w : cell.members(inner_radius)) {
      if (owner[w.idx] != -1) {
        tiling_ok = false;
        witness("element " + uni.format(w) + " claimed by both " +
                encoded[owner[w.idx]].label + " and " + encoded[ci].label);
      }
      owner[w.idx] = (int)ci;
    }
  }
  for (Elt w : ball) {
    if (owner[w.idx] == -1) {
      tiling_ok = false;
      witness("element " + uni.format(w) + " not covered by any descriptor");
    }
  }

  // Partition agreement: computed block <-> encoded cell must be a bijection
  // on the inner ball.
  bool blocks_ok = true;
  std::unordered_map<int, int> block_to_cell;
  std::unordered_map<int, int> cell_to_block;
  std::set<int> blocks_seen;
  if (tiling_ok) {
    for (Elt w : ball) {
      int b = computed.block[w.idx];
      int c = owner[w.idx];
      if (b < 0) {
        blocks_ok = false;
        witness("element " + uni.format(w) + " missing from computed graph");
        continue;
      }
      blocks_seen.insert(b);
      auto [itb, insb] = block_to_cell.emplace(b, c);
      if (!insb && itb->second != c) {
        blocks_ok = false;
        witness("computed block of " + uni.format(w) + " spans " +
                encoded[itb->second].label + " and " + encoded[c].label);
      }
      auto [itc, insc] = cell_to_block.emplace(c, b);
      if (!insc && itc->second != b) {
        blocks_ok = false;
        witness("encoded cell " + encoded[c].label +
                " splits into several computed blocks (at " + uni.format(w) + ")");
      }
    }
  }
  rep.computed_blocks = blocks_seen.size();
  rep.pass = tiling_ok && blocks_ok;
  std::ostringstream os;
  os << (rep.pass ? "PASS" : "FAIL") << ": " << rep.elements
     << " elements, " << rep.computed_blocks << " computed blocks, "
     << rep.encoded_cells << " descriptors";
  rep.summary = os.str();
  return rep;
}

}  // namespace hc
