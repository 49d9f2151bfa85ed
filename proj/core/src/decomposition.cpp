#include "heckecells/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hc {

CellContext::CellContext(KLTable& kl, const CellDescriptor& desc, int member_cap)
    : kl_(kl), cell_(kl.universe(), desc, member_cap) {
  for (const auto& p : cell_.pieces()) piece_by_d_.emplace(p.d().idx, &p);
}

const RealizedPiece& CellContext::piece_of_d(Elt d) const {
  auto it = piece_by_d_.find(d.idx);
  if (it == piece_by_d_.end())
    throw std::invalid_argument("element " + universe().format(d) +
                                " is not a d of cell " + descriptor().label);
  return *it->second;
}

std::vector<Elt> CellContext::d_elements() const {
  std::vector<Elt> out;
  for (const auto& p : cell_.pieces()) out.push_back(p.d());
  return out;
}

bool CellContext::all_ascents_under_d(Elt d, Elt w) const {
  for (int s : universe().support_gens(d))
    if (universe().is_left_descent(s, w)) return false;
  return true;
}

bool CellContext::u_order_leq(Elt d, Elt y, Elt w) const {
  if (y == w) return true;
  return piece_of_d(d).u_contains(y) && universe().bruhat_leq(y, w);
}

const LaurentPoly& CellContext::alpha_right(Elt d, int s) {
  auto key = std::make_pair(d.idx, s);
  auto it = alpha_memo_.find(key);
  if (it != alpha_memo_.end()) return it->second;
  auto gens = universe().support_gens(d);
  if (std::find(gens.begin(), gens.end(), s) == gens.end())
    throw std::invalid_argument("alpha_right needs s <= d");
  CVec v = reduce_drop_non_cell(
      algebra().mul_gen_right(kl_.c_elem(d), s), Provenance::CellProducts);
  LaurentPoly alpha;
  for (const auto& [z, coeff] : v.entries()) {
    if (z != d)
      throw std::logic_error("C_d T_s is not a multiple of C_d modulo the "
                             "lower ideal in cell " + descriptor().label);
    alpha = coeff;
  }
  return alpha_memo_.emplace(key, std::move(alpha)).first->second;
}

const LaurentPoly& CellContext::h_ddd(Elt d) {
  auto it = hddd_memo_.find(d.idx);
  if (it != hddd_memo_.end()) return it->second;
  CVec v = reduce_drop_non_cell(
      algebra().mul(kl_.c_elem(d), kl_.c_elem(d)), Provenance::CellProducts);
  LaurentPoly h;
  for (const auto& [z, coeff] : v.entries()) {
    if (z != d)
      throw std::logic_error("C_d C_d is not a multiple of C_d modulo the "
                             "lower ideal in cell " + descriptor().label);
    h = coeff;
  }
  return hddd_memo_.emplace(d.idx, std::move(h)).first->second;
}

const std::map<uint32_t, LaurentPoly>& CellContext::rvec(Elt d, Elt w) {
  auto key = std::make_pair(d.idx, w.idx);
  auto it = rvec_memo_.find(key);
  if (it != rvec_memo_.end()) return it->second;

  const GroupUniverse& uni = universe();
  const RealizedPiece& piece = piece_of_d(d);
  auto gens = uni.support_gens(d);

  // Rewrite C_d bar(T_w) as sum_y r_{y,w} C_d T_y mod H_{<cell}: a term
  // C_d T_{y'} with a left descent s <= d of y' contracts through
  // C_d T_s = alpha_s C_d; an all-ascent term outside U_d is eliminated by
  // the F-element of y' (lem:loop(iii)). Every rewrite lowers the length.
  std::map<uint32_t, LaurentPoly, std::greater<uint32_t>> work;
  for (const auto& [y, r] : algebra().bar_t(w).entries()) {
    auto& slot = work[y.idx];
    slot += r;
  }
  std::map<uint32_t, LaurentPoly> out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    uint32_t i = node.key();
    LaurentPoly coeff = std::move(node.mapped());
    if (coeff.is_zero()) continue;
    Elt y{i};
    if (i == w.idx || piece.u_contains(y)) {
      auto& slot = out[i];
      slot += coeff;
      continue;
    }
    int s_desc = -1;
    for (int s : gens)
      if (uni.is_left_descent(s, y)) { s_desc = s; break; }
    if (s_desc >= 0) {
      Elt y2 = *uni.left_mul_gen(s_desc, y);
      work[y2.idx] += coeff * alpha_right(d, s_desc);
    } else {
      const FElement& F = f_element(d, y);
      for (const auto& [t, p] : F.elt.entries())
        if (t != y) work[t.idx] -= coeff * p;
    }
  }
  std::erase_if(out, [](auto& e) { return e.second.is_zero(); });
  return rvec_memo_.emplace(key, std::move(out)).first->second;
}

const FElement& CellContext::f_element(Elt d, Elt w) {
  auto key = std::make_pair(d.idx, w.idx);
  auto it = f_memo_.find(key);
  if (it != f_memo_.end()) return it->second;
  if (!all_ascents_under_d(d, w))
    throw PreconditionDescent("F solver requires l(sw) = l(w)+1 for all s <= " +
                              universe().format(d) + ", got w = " +
                              universe().format(w));

  // Solve p_{y,w} - bar(p_{y,w}) = sum_{y <_U z <=_U w} r_{y,z} bar(p_{z,w})
  // by the same accumulation pattern as the KL triangular completion.
  std::map<uint32_t, LaurentPoly, std::greater<uint32_t>> acc;
  std::vector<HeckeElt::Entry> entries;
  auto emit = [&](uint32_t i, const LaurentPoly& p_i) {
    entries.emplace_back(Elt{i}, p_i);
    LaurentPoly bp = p_i.bar();
    for (const auto& [y, r] : rvec(d, Elt{i}))
      if (y != i) acc[y] += r * bp;
  };
  emit(w.idx, LaurentPoly::constant(1));
  while (!acc.empty()) {
    auto node = acc.extract(acc.begin());
    uint32_t i = node.key();
    LaurentPoly pi = std::move(node.mapped());
    if (pi.is_zero()) continue;
    LaurentPoly p = pi.negative_part();
    if (!((p - p.bar()) == pi))
      throw std::logic_error("F solver: accumulated value at " +
                             universe().format(Elt{i}) + " for F_" +
                             universe().format(w) + " in cell " +
                             descriptor().label + " is not bar-anti-invariant");
    if (p.is_zero()) continue;
    emit(i, p);
  }
  FElement F;
  F.d = d;
  F.w = w;
  F.elt = HeckeElt::from_entries(std::move(entries));
  return f_memo_.emplace(key, std::move(F)).first->second;
}

HeckeElt CellContext::e_element(Elt d, Elt v) {
  Elt vinv = universe().inverse(v);
  if (!piece_of_d(d).u_contains(vinv))
    throw PreconditionDescent("E element requires v^-1 in U_d");
  return algebra().flat(f_element(d, vinv).elt);
}

std::map<uint32_t, LaurentPoly> CellContext::expand_in_f(Elt d, Elt u) {
  if (!piece_of_d(d).u_contains(u))
    throw PreconditionDescent("expand_in_f requires u in U_d");
  // C_d T_u = C_d F_u - sum_{y <_U u} p_{y,u} C_d T_y, recursively.
  std::map<uint32_t, LaurentPoly, std::greater<uint32_t>> work;
  work[u.idx] = LaurentPoly::constant(1);
  std::map<uint32_t, LaurentPoly> q;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    uint32_t i = node.key();
    LaurentPoly coeff = std::move(node.mapped());
    if (coeff.is_zero()) continue;
    auto& slot = q[i];
    slot += coeff;
    const FElement& F = f_element(d, Elt{i});
    for (const auto& [y, p] : F.elt.entries())
      if (y.idx != i) work[y.idx] -= coeff * p;
  }
  std::erase_if(q, [](auto& e) { return e.second.is_zero(); });
  return q;
}

CVec CellContext::reduce_drop_non_cell(const HeckeElt& h, Provenance prov) {
  return reduce_drop_non_cell(kl_.expand_in_c(h), prov);
}

CVec CellContext::reduce_drop_non_cell(CVec v, Provenance prov) {
  if (prov != Provenance::CellProducts)
    throw PreconditionProvenance(
        "membership-only reduction needs cell-product provenance");
  std::vector<CVec::Entry> kept;
  for (const auto& [z, coeff] : v.entries())
    if (cell_.contains(z)) kept.emplace_back(z, coeff);
  return CVec::from_entries(std::move(kept));
}

namespace {

std::string fmt_triple(const GroupUniverse& uni, Elt b, Elt d, Elt u) {
  return "(b=" + uni.format(b) + ", d=" + uni.format(d) + ", u=" + uni.format(u) + ")";
}

}  // namespace

VerificationReport verify_assumption(CellContext& ctx, int radius,
                                     const CellPartition* right_cells) {
  const GroupUniverse& uni = ctx.universe();
  KLTable& kl = ctx.table();
  const HeckeAlgebra& alg = ctx.algebra();
  VerificationReport rep;
  rep.title = "assumption";
  rep.region_label = ctx.descriptor().label;
  rep.weights = alg.weights();
  rep.radius = radius;

  static const std::set<std::string> kComplicated = {
      "C2:1:vii", "G2:1:i", "G2:1:ii", "G2:1:iii", "G2:1:iv", "G2:2:i", "G2:2:ii"};
  bool easy = kComplicated.find(ctx.descriptor().label) == kComplicated.end();

  // (i,a) the member set is inverse-closed and the pieces are disjoint.
  {
    CheckResult r = CheckResult::pass("ass:i:a", 0, "c^-1 = c and disjoint pieces");
    auto members = ctx.cell().members(radius);
    std::vector<char> mask(uni.size(), 0);
    for (Elt w : members) mask[w.idx] = 1;
    for (Elt w : members) {
      ++r.checked;
      if (!mask[uni.inverse(w).idx])
        r.add_witness("inverse of member " + uni.format(w) + " is not a member");
    }
    if (ctx.cell().duplicate_productions() > 0)
      r.add_witness("pieces overlap: " +
                    std::to_string(ctx.cell().duplicate_productions()) +
                    " duplicate productions");
    rep.append(std::move(r));
  }

  // (i,b) l(bdu) = l(b) + l(d) + l(u).
  {
    CheckResult r = CheckResult::pass("ass:i:b", 0, "piece products length-additive");
    for (const auto& piece : ctx.cell().pieces()) {
      Elt d = piece.d();
      for (Elt b : piece.b()) {
        int room = radius - uni.length(b) - uni.length(d);
        if (room < 0) continue;
        for (Elt u : piece.u_elements(room)) {
          ++r.checked;
          auto bd = uni.try_mul(b, d);
          auto w = bd ? uni.try_mul(*bd, u) : std::nullopt;
          if (!w || uni.length(*w) !=
                        uni.length(b) + uni.length(d) + uni.length(u))
            r.add_witness("non-additive product " + fmt_triple(uni, b, d, u));
        }
      }
    }
    rep.append(std::move(r));
  }

  // (i,c) e in B_d and U_d; B_d^{-1} in U_d.
  {
    CheckResult r = CheckResult::pass("ass:i:c", 0, "e in B,U and B^-1 in U");
    for (const auto& piece : ctx.cell().pieces()) {
      ++r.checked;
      if (std::find(piece.b().begin(), piece.b().end(), uni.identity()) ==
          piece.b().end())
        r.add_witness("e missing from B of d=" + uni.format(piece.d()));
      if (!piece.u_contains(uni.identity()))
        r.add_witness("e missing from U of d=" + uni.format(piece.d()));
      for (Elt b : piece.b())
        if (!piece.u_contains(uni.inverse(b)))
          r.add_witness("B^-1 element " + uni.format(uni.inverse(b)) +
                        " missing from U of d=" + uni.format(piece.d()));
    }
    rep.append(std::move(r));
  }

  // (i,d) all-ascent w outside U_d has dw outside the cell.
  {
    CheckResult r = CheckResult::pass("ass:i:d", 0, "dw leaves the cell for w outside U_d");
    for (const auto& piece : ctx.cell().pieces()) {
      Elt d = piece.d();
      for (Elt w : uni.elements_up_to(radius - uni.length(d))) {
        if (piece.u_contains(w)) continue;
        bool ascents = true;
        for (int s : uni.support_gens(d))
          if (uni.is_left_descent(s, w)) { ascents = false; break; }
        if (!ascents) continue;
        ++r.checked;
        auto dw = uni.try_mul(d, w);
        if (dw && ctx.in_cell(*dw))
          r.add_witness("dw = " + uni.format(*dw) + " lies in the cell, w = " +
                        uni.format(w));
      }
    }
    rep.append(std::move(r));
  }

  // (ii,a) every s <= d ascends on U_d.
  {
    CheckResult r = CheckResult::pass("ass:ii:a", 0, "l(su) = l(u)+1 on U_d");
    for (const auto& piece : ctx.cell().pieces()) {
      for (Elt u : piece.u_elements(radius - 1)) {
        for (int s : uni.support_gens(piece.d())) {
          ++r.checked;
          if (uni.is_left_descent(s, u))
            r.add_witness("s=" + std::to_string(s) + " descends on u=" +
                          uni.format(u) + " (d=" + uni.format(piece.d()) + ")");
        }
      }
    }
    rep.append(std::move(r));
  }

  // (ii,b) T_s C_d lies in A C_d + H_{<cell}.
  {
    CheckResult r = CheckResult::pass("ass:ii:b", 0, "T_s C_d in A C_d + H_{<cell}");
    for (Elt d : ctx.d_elements()) {
      for (int s : uni.support_gens(d)) {
        ++r.checked;
        CVec v = ctx.reduce_drop_non_cell(alg.mul_gen_left(s, kl.c_elem(d)),
                                          Provenance::CellProducts);
        for (const auto& [z, coeff] : v.entries())
          if (z != d)
            r.add_witness("T_" + std::to_string(s) + " C_" + uni.format(d) +
                          " has cell term C_" + uni.format(z));
      }
    }
    rep.append(std::move(r));
  }

  // (ii,c) h_{d,d,d} != 0.
  {
    CheckResult r = CheckResult::pass("ass:ii:c", 0, "h_{d,d,d} nonzero");
    for (Elt d : ctx.d_elements()) {
      ++r.checked;
      try {
        if (ctx.h_ddd(d).is_zero())
          r.add_witness("h_{d,d,d} = 0 for d=" + uni.format(d));
      } catch (const std::logic_error& e) {
        r.add_witness(e.what());
      }
    }
    rep.append(std::move(r));
  }

  // (iii) dU_d is a single computed right cell.
  if (right_cells == nullptr) {
    rep.append(CheckResult::skipped("ass:iii", "no computed right cells supplied"));
  } else {
    CheckResult r = CheckResult::pass("ass:iii", 0, "dU_d is one right cell");
    int inner = std::min(right_cells->inner_radius, radius);
    for (const auto& piece : ctx.cell().pieces()) {
      Elt d = piece.d();
      std::vector<char> in_du(uni.size(), 0);
      int blk = -2;
      for (Elt u : piece.u_elements(inner - uni.length(d))) {
        auto du = uni.try_mul(d, u);
        if (!du || uni.length(*du) != uni.length(d) + uni.length(u)) continue;
        if (uni.length(*du) > inner) continue;
        ++r.checked;
        in_du[du->idx] = 1;
        int b = right_cells->block[du->idx];
        if (blk == -2) blk = b;
        else if (b != blk)
          r.add_witness("dU_d spans several right blocks at du=" + uni.format(*du));
      }
      if (blk >= 0) {
        for (Elt x : uni.elements_up_to(inner))
          if (right_cells->block[x.idx] == blk && !in_du[x.idx])
            r.add_witness("right block of dU_d (d=" + uni.format(d) +
                          ") also contains " + uni.format(x));
      }
    }
    r.note_caveat("right cells compared on the inner ball only");
    rep.append(std::move(r));
  }

  // (iv) T_b C_d T_u = T_{bdu} mod H_{<0} + H_{<cell}; Prop prop:mod checks
  // the stronger mod H_{<0} form outside the complicated cases.
  {
    CheckResult r = CheckResult::pass("ass:iv", 0, "T_b C_d T_u = T_{bdu} mod H_{<0}+H_{<cell}");
    CheckResult rs = CheckResult::pass("prop:mod", 0, "T_b C_d T_u = T_{bdu} mod H_{<0}");
    for (const auto& piece : ctx.cell().pieces()) {
      Elt d = piece.d();
      const HeckeElt& cd = kl.c_elem(d);
      for (Elt b : piece.b()) {
        int room = radius - uni.length(b) - uni.length(d);
        if (room < 0) continue;
        HeckeElt tb_cd = alg.mul_t_left(b, cd);
        for (Elt u : piece.u_elements(room)) {
          auto bdu = uni.try_mul(*uni.try_mul(b, d), u);
          if (!bdu || uni.length(*bdu) !=
                          uni.length(b) + uni.length(d) + uni.length(u))
            continue;
          ++r.checked;
          HeckeElt prod = alg.mul_t_right(tb_cd, u);
          HeckeElt diff_t = prod - alg.t_unit(*bdu);
          if (easy) {
            ++rs.checked;
            if (!diff_t.all_coeffs_negative_degree())
              rs.add_witness("strong congruence fails at " + fmt_triple(uni, b, d, u));
          }
          HeckeElt x = prod - kl.c_elem(*bdu);
          CVec cellpart = ctx.reduce_drop_non_cell(x, Provenance::CellProducts);
          if (!kl.to_t_basis(cellpart).all_coeffs_negative_degree())
            r.add_witness("congruence fails at " + fmt_triple(uni, b, d, u));
        }
      }
    }
    rep.append(std::move(r));
    if (easy) rep.append(std::move(rs));
    else rep.append(CheckResult::skipped("prop:mod", "complicated case: only the weak congruence holds"));
  }
  return rep;
}

VerificationReport verify_theorem_dec(CellContext& ctx, int max_len) {
  const GroupUniverse& uni = ctx.universe();
  KLTable& kl = ctx.table();
  const HeckeAlgebra& alg = ctx.algebra();
  VerificationReport rep;
  rep.title = "decomposition";
  rep.region_label = ctx.descriptor().label;
  rep.weights = alg.weights();
  rep.radius = max_len;

  CheckResult rind = CheckResult::pass("lem:indepen:ii", 0, "C_d C_d = h_{d,d,d} C_d mod H_{<cell}");
  CheckResult rtech = CheckResult::pass("cor:tech", 0, "C_d F_u = C_{du} mod H_{<cell}");
  CheckResult rprod = CheckResult::pass("th:dec:product", 0,
                                        "C_{bd} C_{du} = h_{d,d,d} C_{bdu} mod H_{<cell}");
  CheckResult rfact = CheckResult::pass("th:dec:factor", 0,
                                        "C_{bdu} = E_b C_d F_u mod H_{<cell}");

  for (const auto& piece : ctx.cell().pieces()) {
    Elt d = piece.d();
    LaurentPoly h;
    try {
      h = ctx.h_ddd(d);
      ++rind.checked;
    } catch (const std::logic_error& e) {
      rind.add_witness(e.what());
      continue;
    }
    // cor:tech over all in-ball u.
    for (Elt u : piece.u_elements(max_len - uni.length(d))) {
      ++rtech.checked;
      const FElement& F = ctx.f_element(d, u);
      auto du = uni.try_mul(d, u);
      if (!du) { rtech.add_witness("du outside ball"); continue; }
      CVec red = ctx.reduce_drop_non_cell(alg.mul(kl.c_elem(d), F.elt),
                                          Provenance::CellProducts);
      CVec want = CVec::unit(*du);
      if (!(red == want))
        rtech.add_witness("C_d F_u != C_{du} at d=" + uni.format(d) +
                          ", u=" + uni.format(u));
    }
    // The two decomposition identities over all triples.
    for (Elt b : piece.b()) {
      int room = max_len - uni.length(b) - uni.length(d);
      if (room < 0) continue;
      HeckeElt eb = ctx.e_element(d, b);
      auto bd = uni.try_mul(b, d);
      HeckeElt eb_cd = alg.mul(eb, kl.c_elem(d));
      for (Elt u : piece.u_elements(room)) {
        auto du = uni.try_mul(d, u);
        auto bdu = bd && du ? uni.try_mul(b, *du) : std::nullopt;
        if (!bd || !du || !bdu) continue;
        if (uni.length(*bdu) !=
            uni.length(b) + uni.length(d) + uni.length(u))
          continue;
        {
          ++rprod.checked;
          CVec prod = kl.product_c(*bd, *du);
          CVec red = ctx.reduce_drop_non_cell(std::move(prod), Provenance::CellProducts);
          CVec want;
          want.set(*bdu, h);
          if (!(red == want))
            rprod.add_witness("product identity fails at " + fmt_triple(uni, b, d, u));
        }
        {
          ++rfact.checked;
          const FElement& F = ctx.f_element(d, u);
          CVec red = ctx.reduce_drop_non_cell(alg.mul(eb_cd, F.elt),
                                              Provenance::CellProducts);
          CVec want = CVec::unit(*bdu);
          if (!(red == want))
            rfact.add_witness("factor identity fails at " + fmt_triple(uni, b, d, u));
        }
      }
    }
  }
  rep.append(std::move(rind));
  rep.append(std::move(rtech));
  rep.append(std::move(rprod));
  rep.append(std::move(rfact));
  return rep;
}

VerificationReport verify_corollary_dec(CellContext& ctx, int max_len) {
  const GroupUniverse& uni = ctx.universe();
  KLTable& kl = ctx.table();
  const HeckeAlgebra& alg = ctx.algebra();
  VerificationReport rep;
  rep.title = "corollary";
  rep.region_label = ctx.descriptor().label;
  rep.weights = alg.weights();
  rep.radius = max_len;

  CheckResult runiq = CheckResult::pass("cor:dec:iv", 0, "unique right and left piece");
  CheckResult rfac = CheckResult::pass("cor:dec:v", 0, "w = b1 p_w b2^-1 length-additively");
  CheckResult rdec = CheckResult::pass("cor:dec:vi", 0, "C_w = E_{b1} C_{p_w} F_{b2^-1} mod H_{<cell}");

  // Locate w inside a piece as b d u with additive lengths.
  auto locate = [&](Elt w) {
    std::vector<std::tuple<const RealizedPiece*, Elt, Elt>> hits;
    for (const auto& piece : ctx.cell().pieces()) {
      Elt d = piece.d();
      for (Elt b : piece.b()) {
        auto bd = uni.try_mul(b, d);
        if (!bd) continue;
        int lu = uni.length(w) - uni.length(b) - uni.length(d);
        if (lu < 0) continue;
        auto u = uni.try_mul(uni.inverse(*bd), w);
        if (!u || uni.length(*u) != lu) continue;
        if (!piece.u_contains(*u)) continue;
        hits.emplace_back(&piece, b, *u);
      }
    }
    return hits;
  };

  for (Elt w : ctx.cell().members(max_len)) {
    auto right = locate(w);
    auto left = locate(uni.inverse(w));
    ++runiq.checked;
    if (right.size() != 1 || left.size() != 1) {
      runiq.add_witness("w=" + uni.format(w) + " has " +
                        std::to_string(right.size()) + " right and " +
                        std::to_string(left.size()) + " left factorizations");
      continue;
    }
    auto [p1, b1, u1] = right[0];
    auto [p2, b2, u2] = left[0];
    Elt d1 = p1->d(), d2 = p2->d();
    // p_w = b1^-1 w b2, which should equal d1 u for u in U_{d1} and have
    // inverse d2 u' for u' in U_{d2}.
    auto pw = uni.try_mul(uni.inverse(b1), *uni.try_mul(w, b2));
    ++rfac.checked;
    bool ok = pw.has_value();
    if (ok) {
      ok = uni.length(w) ==
           uni.length(b1) + uni.length(*pw) + uni.length(b2);
      auto u = uni.try_mul(uni.inverse(d1), *pw);
      ok = ok && u && uni.length(*u) == uni.length(*pw) - uni.length(d1) &&
           p1->u_contains(*u);
      auto u2p = uni.try_mul(uni.inverse(d2), uni.inverse(*pw));
      ok = ok && u2p && uni.length(*u2p) == uni.length(*pw) - uni.length(d2) &&
           p2->u_contains(*u2p);
    }
    if (!ok) {
      rfac.add_witness("factorization fails at w=" + uni.format(w));
      continue;
    }
    ++rdec.checked;
    HeckeElt e1 = ctx.e_element(d1, b1);
    const FElement& f2 = ctx.f_element(d2, uni.inverse(b2));
    HeckeElt prod = alg.mul(alg.mul(e1, kl.c_elem(*pw)), f2.elt);
    CVec red = ctx.reduce_drop_non_cell(prod, Provenance::CellProducts);
    if (!(red == CVec::unit(w)))
      rdec.add_witness("decomposition fails at w=" + uni.format(w));
  }
  rep.append(std::move(runiq));
  rep.append(std::move(rfac));
  rep.append(std::move(rdec));
  return rep;
}

}  // namespace hc
