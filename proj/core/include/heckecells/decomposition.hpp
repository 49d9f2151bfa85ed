// The decomposition formula: F_w / E_v elements, reduction modulo the ideal
// below a two-sided cell, verification of the supporting assumptions and of
// the decomposition theorem and its corollary, closed-form and hand-computed
// regression targets.
#pragma once

#include "heckecells/cells.hpp"
#include "heckecells/report.hpp"

#include <map>

namespace hc {

class PreconditionDescent : public std::runtime_error {
 public:
  explicit PreconditionDescent(const std::string& m) : std::runtime_error(m) {}
};
class PreconditionProvenance : public std::runtime_error {
 public:
  explicit PreconditionProvenance(const std::string& m) : std::runtime_error(m) {}
};
class UnknownCase : public std::runtime_error {
 public:
  explicit UnknownCase(const std::string& m) : std::runtime_error(m) {}
};

/// Caller-declared origin of an element handed to the mod-H_{<cell}
/// reduction. Only products in which every factor chain passes through a
/// C-basis element of the cell keep the support inside {z : z <=_LR cell},
/// which is what makes membership-only reduction sound.
enum class Provenance { CellProducts, Unknown };

struct FElement {
  Elt d;
  Elt w;
  HeckeElt elt;  // T_w + sum_{y <_U w} p_{y,w} T_y with p in A_{<0}
};

/// One two-sided cell of one region instantiated at fixed weights, with the
/// solver state for F- and E-elements.
class CellContext {
 public:
  /// member_cap bounds the lengths for which cell membership is decidable;
  /// products reduced here must keep their support within it.
  CellContext(KLTable& kl, const CellDescriptor& desc, int member_cap);

  KLTable& table() const { return kl_; }
  const HeckeAlgebra& algebra() const { return kl_.algebra(); }
  const GroupUniverse& universe() const { return kl_.universe(); }
  const RealizedCell& cell() const { return cell_; }
  const CellDescriptor& descriptor() const { return cell_.descriptor(); }
  int member_cap() const { return cell_.member_len_cap(); }

  bool in_cell(Elt w) const { return cell_.contains(w); }
  const RealizedPiece& piece_of_d(Elt d) const;
  std::vector<Elt> d_elements() const;

  /// y <=_U w for the piece of d: y == w, or y in U_d and y < w (Bruhat).
  bool u_order_leq(Elt d, Elt y, Elt w) const;

  /// Unique F_w with C_d F_w bar-invariant mod H_{<cell} (lem:loop solver).
  /// Requires l(sw) = l(w)+1 for every generator s <= d.
  const FElement& f_element(Elt d, Elt w);
  /// E_v = (F_{v^-1})^flat; requires v^-1 in U_d.
  HeckeElt e_element(Elt d, Elt v);
  /// C_d T_u = sum q_{u',u} C_d F_{u'} mod H_{<cell}: the coefficients q.
  std::map<uint32_t, LaurentPoly> expand_in_f(Elt d, Elt u);

  /// C-expansion of h with every C_z, z not in the cell, removed. Sound only
  /// for CellProducts provenance (see above); Unknown throws.
  CVec reduce_drop_non_cell(const HeckeElt& h, Provenance prov);
  CVec reduce_drop_non_cell(CVec v, Provenance prov);

  /// Coefficient in C_d C_d = h_{d,d,d} C_d mod H_{<cell}; memoized. Throws
  /// if the cell part of C_d C_d is not a multiple of C_d.
  const LaurentPoly& h_ddd(Elt d);
  /// alpha with C_d T_s = alpha C_d mod H_{<cell}, for s <= d.
  const LaurentPoly& alpha_right(Elt d, int s);

 private:
  KLTable& kl_;
  RealizedCell cell_;
  std::map<uint32_t, const RealizedPiece*> piece_by_d_;
  std::map<std::pair<uint32_t, uint32_t>, std::map<uint32_t, LaurentPoly>> rvec_memo_;
  std::map<std::pair<uint32_t, uint32_t>, FElement> f_memo_;
  std::map<uint32_t, LaurentPoly> hddd_memo_;
  std::map<std::pair<uint32_t, int>, LaurentPoly> alpha_memo_;

  /// Reduction of C_d bar(T_w) onto the basis {C_d T_y : y <=_U w} mod
  /// H_{<cell}; the returned map sends y to r_{y,w}.
  const std::map<uint32_t, LaurentPoly>& rvec(Elt d, Elt w);
  bool all_ascents_under_d(Elt d, Elt w) const;
};

/// Assumption items (i,a)-(i,d), (ii,a)-(ii,c), (iii), (iv) on in-ball
/// instances. right_cells may be null (item (iii) is then skipped).
VerificationReport verify_assumption(CellContext& ctx, int radius,
                                     const CellPartition* right_cells);

/// Both decomposition identities for every in-ball triple (b, d, u) with
/// l(bdu) <= max_len: reduce(C_{bd} C_{du}) = h_{d,d,d} C_{bdu} and
/// reduce(E_b C_d F_u) = C_{bdu}.
VerificationReport verify_theorem_dec(CellContext& ctx, int max_len);

/// Unique factorization w = b1 p_w b2^{-1} and C_w = E_{b1} C_{p_w}
/// F_{b2^{-1}} mod H_{<cell} for every in-ball member of the cell.
VerificationReport verify_corollary_dec(CellContext& ctx, int max_len);

/// The explicit closed forms for C_{101}, C_{212}, C_{21212}, C_{12121} and
/// their eigen-equations, at any weights where each applies.
VerificationReport special_c_forms(KLTable& kl);

/// Recomputation of the encoded hand computations. case_filter empty = all
/// applicable; otherwise ids must match the filter prefix.
VerificationReport regress_appendix(KLTable& kl, const std::string& case_filter = "");
std::vector<std::string> appendix_case_ids(GroupType t);

}  // namespace hc
