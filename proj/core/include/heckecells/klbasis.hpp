// Kazhdan-Lusztig basis machinery: construction of C_w by bar-triangular
// completion, change of basis, structure constants h_{x,y,z}, the invariants
// Delta(z) and n_z, ball-stabilized a-values, and gamma coefficients.
#pragma once

#include "heckecells/hecke.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>

namespace hc {

class UnstableAValue : public std::runtime_error {
 public:
  explicit UnstableAValue(const std::string& msg) : std::runtime_error(msg) {}
};

struct AValueReport {
  Elt z;
  Exponent value = LaurentPoly::kNegInf;  // max deg h_{x,y,z} over the search
  int search_radius = 0;
  bool stabilized = false;  // unchanged when the search radius grows by 2
};

class KLTable {
 public:
  explicit KLTable(const HeckeAlgebra& alg);

  const HeckeAlgebra& algebra() const { return alg_; }
  const GroupUniverse& universe() const { return alg_.universe(); }

  /// The unique bar-invariant element congruent to T_w mod H_{<0}.
  const HeckeElt& c_elem(Elt w);
  LaurentPoly p_poly(Elt y, Elt w);  // coefficient of T_y in C_w

  /// (Delta(z), n_z) from P_{e,z} = n_z q^{-Delta(z)} + lower degrees.
  /// n = 0 signals P_{e,z} = 0 (no leading datum).
  std::pair<Exponent, Coeff> delta_n(Elt z);

  CVec expand_in_c(HeckeElt h);
  HeckeElt to_t_basis(const CVec& v);
  LaurentPoly h_coeff(Elt x, Elt y, Elt z);

  /// Defining-property check of a cached entry (or arbitrary candidate):
  /// bar(C) = C exactly, C = T_w mod H_{<0}, unit diagonal, triangularity.
  bool certify(Elt w, std::string* why = nullptr);
  static bool certify_candidate(const HeckeAlgebra& alg, Elt w,
                                const HeckeElt& cand, std::string* why = nullptr);

  /// Expansion of C_s C_y in the C-basis (memoized column).
  const CVec& gen_action_col(int s, Elt y);
  /// Expansion of C_x (sum_z v_z C_z) via the generator recursion.
  CVec act_c(Elt x, const CVec& v);
  /// h_{x,y,.} as a C-basis vector.
  CVec product_c(Elt x, Elt y);

  /// Visits h_{x,y,.} for every pair x,y in the ball of the given radius.
  /// Requires universe radius >= 2*radius + 4 headroom for the columns.
  void sweep_products(int radius,
                      const std::function<void(Elt, Elt, const CVec&)>& visit);

  /// Per-element max deg h_{x,y,z} over pairs from ball(radius); cached.
  const std::vector<Exponent>& a_sweep(int radius);

  AValueReport a_value(Elt z, int search_radius);
  /// Coefficient of q^{a_of_z} in h_{x,y,z} (the paper indexes the result
  /// as gamma_{x,y,z^-1}).
  Coeff gamma_coeff(Elt x, Elt y, Elt z, Exponent a_of_z);
  /// {z in ball(radius) : a(z) = Delta(z)}; throws UnstableAValue if some
  /// required a-value fails to stabilize.
  std::vector<Elt> distinguished_involutions(int radius);

  /// Prebuild bar memo, C_w and generator columns for lengths <= maxlen.
  /// Same-length entries are built concurrently.
  void ensure_built(int maxlen);

  std::string render_c(const CVec& v) const;

 private:
  const HeckeAlgebra& alg_;
  std::vector<std::optional<HeckeElt>> c_memo_;
  std::array<std::vector<std::optional<CVec>>, 3> col_memo_;
  std::map<int, std::vector<Exponent>> a_sweeps_;
  int built_len_ = -1;

  HeckeElt build_c(Elt w) const;
  CVec act_rec(Elt x, const CVec& v, std::map<uint32_t, CVec>& memo);
  void apply_gen(int s, const CVec& v, CVec& out);
};

/// Simple index-parallel loop used for frozen-table read phases.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace hc
