// The Hecke algebra of a bounded universe in the T-basis: multiplication,
// bar involution, the flat anti-involution, and the tau functional.
#pragma once

#include "heckecells/basisvec.hpp"

#include <optional>

namespace hc {

class HeckeAlgebra {
 public:
  HeckeAlgebra(const GroupUniverse& uni, WeightSpec weights);

  const GroupUniverse& universe() const { return uni_; }
  const WeightSpec& weights() const { return w_; }
  const LaurentPoly& xi_gen(int s) const { return xi_[s]; }
  int weight_of(Elt w) const;  // L(w)

  HeckeElt t_unit(Elt w) const { return HeckeElt::unit(w); }

  HeckeElt mul_gen_right(const HeckeElt& h, int s) const;  // h * T_s
  HeckeElt mul_gen_left(int s, const HeckeElt& h) const;   // T_s * h
  HeckeElt mul_t_right(const HeckeElt& h, Elt w) const;    // h * T_w
  HeckeElt mul_t_left(Elt w, const HeckeElt& h) const;     // T_w * h
  HeckeElt mul(const HeckeElt& h, const HeckeElt& k) const;

  /// Memoized bar(T_w) = (T_{w^-1})^-1, built by the descent recursion
  /// bar(T_w) = (T_s - xi_{L(s)}) bar(T_{sw}).
  const HeckeElt& bar_t(Elt w) const;
  HeckeElt bar(const HeckeElt& h) const;

  HeckeElt flat(const HeckeElt& h) const;  // A-linear T_w -> T_{w^-1}
  LaurentPoly tau(const HeckeElt& h) const { return h.coeff(uni_.identity()); }
  LaurentPoly m_coeff(Elt x, Elt y, Elt z) const;
  bool equal_mod_hneg(const HeckeElt& h, const HeckeElt& k) const;

  /// Prebuild the bar memo for all lengths <= maxlen (call before any
  /// concurrent read phase).
  void prepare_bar(int maxlen) const;

  std::string render(const HeckeElt& h) const;
  HeckeElt parse(const std::string& text) const;

 private:
  const GroupUniverse& uni_;
  WeightSpec w_;
  LaurentPoly xi_[3];
  mutable std::vector<std::optional<HeckeElt>> bar_memo_;
};

/// Shared rendering for T- and C-basis elements ("T[word]" / "C[word]").
std::string render_basis_elt(const GroupUniverse& uni,
                             const std::vector<std::pair<Elt, LaurentPoly>>& entries,
                             const char* symbol);

}  // namespace hc
