#include "heckecells/klbasis.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>

namespace hc {

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 2 || n < 4) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<unsigned>(hw, 4);
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

KLTable::KLTable(const HeckeAlgebra& alg) : alg_(alg) {
  c_memo_.resize(universe().size());
  for (auto& v : col_memo_) v.resize(universe().size());
}

HeckeElt KLTable::build_c(Elt w) const {
  const GroupUniverse& uni = universe();
  if (w.idx == 0) return HeckeElt::unit(w);

  // Triangular completion: with bar(T_z) = sum_y r_{y,z} T_y, the coefficients
  // of C_w = sum p_y T_y satisfy p_y - bar(p_y) = sum_{z > y} r_{y,z} bar(p_z),
  // whose right side is accumulated below as finalized entries arrive in
  // decreasing index (= non-increasing length) order.
  std::vector<LaurentPoly> p(w.idx + 1);
  std::vector<LaurentPoly> acc(w.idx + 1);
  p[w.idx] = LaurentPoly::constant(1);

  std::vector<HeckeElt::Entry> result;
  for (uint32_t i = w.idx + 1; i-- > 0;) {
    if (i != w.idx) {
      if (acc[i].is_zero()) continue;
      p[i] = acc[i].negative_part();
      if (!((p[i] - p[i].bar()) == acc[i]))
        throw std::logic_error(
            "KL solver: accumulated polynomial at " + uni.format(Elt{i}) +
            " for C_" + uni.format(w) + " is not bar-anti-invariant");
      if (p[i].is_zero()) continue;
    }
    LaurentPoly bp = p[i].bar();
    for (const auto& [y, r] : alg_.bar_t(Elt{i}).entries())
      if (y.idx != i) acc[y.idx].add_mul(r, bp);
    result.emplace_back(Elt{i}, std::move(p[i]));
  }
  return HeckeElt::from_entries(std::move(result));
}

const HeckeElt& KLTable::c_elem(Elt w) {
  auto& slot = c_memo_[w.idx];
  if (!slot) slot = build_c(w);
  return *slot;
}

LaurentPoly KLTable::p_poly(Elt y, Elt w) { return c_elem(w).coeff(y); }

std::pair<Exponent, Coeff> KLTable::delta_n(Elt z) {
  LaurentPoly pe = p_poly(universe().identity(), z);
  if (pe.is_zero()) return {0, 0};
  Exponent d = pe.degree();
  return {-d, pe.coeff_at(d)};
}

CVec KLTable::expand_in_c(HeckeElt h) {
  std::vector<CVec::Entry> out;
  while (!h.is_zero()) {
    LaurentPoly coeff = h.top().second;  // max index = max support length
    Elt w = h.top().first;
    out.emplace_back(w, coeff);
    h.add_scaled(c_elem(w), -coeff);
  }
  return CVec::from_entries(std::move(out));
}

HeckeElt KLTable::to_t_basis(const CVec& v) {
  HeckeElt out;
  for (const auto& [z, coeff] : v.entries()) out.add_scaled(c_elem(z), coeff);
  return out;
}

LaurentPoly KLTable::h_coeff(Elt x, Elt y, Elt z) {
  return expand_in_c(alg_.mul(c_elem(x), c_elem(y))).coeff(z);
}

bool KLTable::certify(Elt w, std::string* why) {
  return certify_candidate(alg_, w, c_elem(w), why);
}

bool KLTable::certify_candidate(const HeckeAlgebra& alg, Elt w,
                                const HeckeElt& cand, std::string* why) {
  const GroupUniverse& uni = alg.universe();
  auto fail = [&](const std::string& msg) {
    if (why) *why = "C_" + uni.format(w) + ": " + msg;
    return false;
  };
  const LaurentPoly* diag = cand.find(w);
  if (!diag || !diag->is_one()) return fail("coefficient of T_w is not 1");
  for (const auto& [y, p] : cand.entries()) {
    if (y == w) continue;
    if (uni.length(y) >= uni.length(w))
      return fail("support at " + uni.format(y) + " has length >= l(w)");
    if (!uni.bruhat_leq(y, w))
      return fail("support at " + uni.format(y) + " violates Bruhat triangularity");
    if (p.degree() >= 0)
      return fail("P_{" + uni.format(y) + ",w} = " + p.render() +
                  " is not in A_{<0}");
  }
  HeckeElt barred = alg.bar(cand);
  if (!(barred == cand)) return fail("not bar-invariant");
  return true;
}

const CVec& KLTable::gen_action_col(int s, Elt y) {
  auto& slot = col_memo_[s][y.idx];
  if (!slot) {
    // C_s C_y = T_s C_y + q^{-L(s)} C_y
    HeckeElt prod = alg_.mul_gen_left(s, c_elem(y));
    prod.add_scaled(c_elem(y),
                    LaurentPoly::q_power(-alg_.weights().weight_of_gen(s)));
    CVec col = expand_in_c(std::move(prod));
    // The action recursion needs the unit leading coefficient at sy when s
    // is an ascent, and strictly shorter correction terms.
    auto sy = universe().left_mul_gen(s, y);
    if (sy && universe().length(*sy) > universe().length(y)) {
      const LaurentPoly* lead = col.find(*sy);
      if (!lead || !lead->is_one())
        throw std::logic_error("C_s C_y lacks unit coefficient at C_{sy}");
      for (const auto& [z, mu] : col.entries())
        if (z != *sy && universe().length(z) >= universe().length(*sy))
          throw std::logic_error("C_s C_y has a long correction term");
    }
    slot = std::move(col);
  }
  return *slot;
}

void KLTable::apply_gen(int s, const CVec& v, CVec& out) {
  for (const auto& [z, p] : v.entries()) out.add_scaled(gen_action_col(s, z), p);
}

CVec KLTable::act_rec(Elt x, const CVec& v, std::map<uint32_t, CVec>& memo) {
  if (x.idx == 0) return v;
  auto it = memo.find(x.idx);
  if (it != memo.end()) return it->second;
  int s = universe().raw_word(x)[0] - '0';
  Elt xp = *universe().left_mul_gen(s, x);
  CVec u = act_rec(xp, v, memo);
  CVec r;
  apply_gen(s, u, r);
  // C_x = C_s C_{x'} - corrections
  for (const auto& [z, mu] : gen_action_col(s, xp).entries())
    if (z != x) r.add_scaled(act_rec(z, v, memo), -mu);
  memo.emplace(x.idx, std::move(r));
  return memo.at(x.idx);
}

CVec KLTable::act_c(Elt x, const CVec& v) {
  std::map<uint32_t, CVec> memo;
  return act_rec(x, v, memo);
}

CVec KLTable::product_c(Elt x, Elt y) { return act_c(x, CVec::unit(y)); }

void KLTable::sweep_products(
    int radius, const std::function<void(Elt, Elt, const CVec&)>& visit) {
  const GroupUniverse& uni = universe();
  if (2 * radius > uni.radius())
    throw OutOfBall("sweep radius " + std::to_string(radius) +
                    " needs universe radius >= " + std::to_string(2 * radius));
  ensure_built(std::min(2 * radius + 1, uni.radius()));
  std::vector<Elt> ball = uni.elements_up_to(radius);
  for (Elt y : ball) {
    std::vector<CVec> V(ball.size());
    V[0] = CVec::unit(y);
    visit(uni.identity(), y, V[0]);
    for (size_t xi = 1; xi < ball.size(); ++xi) {
      Elt x = ball[xi];
      int s = uni.raw_word(x)[0] - '0';
      Elt xp = *uni.left_mul_gen(s, x);
      CVec r;
      apply_gen(s, V[xp.idx], r);
      for (const auto& [z, mu] : gen_action_col(s, xp).entries())
        if (z != x) r.add_scaled(V[z.idx], -mu);
      V[x.idx] = std::move(r);
      visit(x, y, V[x.idx]);
    }
  }
}

const std::vector<Exponent>& KLTable::a_sweep(int radius) {
  auto it = a_sweeps_.find(radius);
  if (it != a_sweeps_.end()) return it->second;
  std::vector<Exponent> maxdeg(universe().size(), LaurentPoly::kNegInf);
  sweep_products(radius, [&](Elt, Elt, const CVec& h) {
    for (const auto& [z, p] : h.entries())
      maxdeg[z.idx] = std::max(maxdeg[z.idx], p.degree());
  });
  return a_sweeps_.emplace(radius, std::move(maxdeg)).first->second;
}

AValueReport KLTable::a_value(Elt z, int search_radius) {
  AValueReport rep;
  rep.z = z;
  rep.search_radius = search_radius;
  rep.value = a_sweep(search_radius)[z.idx];
  rep.stabilized = a_sweep(search_radius + 2)[z.idx] == rep.value;
  return rep;
}

Coeff KLTable::gamma_coeff(Elt x, Elt y, Elt z, Exponent a_of_z) {
  return h_coeff(x, y, z).coeff_at(a_of_z);
}

std::vector<Elt> KLTable::distinguished_involutions(int radius) {
  std::vector<Elt> out;
  for (Elt z : universe().elements_up_to(radius)) {
    AValueReport rep = a_value(z, radius);
    if (!rep.stabilized)
      throw UnstableAValue("a-value of " + universe().format(z) +
                           " did not stabilize at radius " +
                           std::to_string(radius));
    auto [delta, n] = delta_n(z);
    if (n != 0 && rep.value == delta) out.push_back(z);
  }
  return out;
}

void KLTable::ensure_built(int maxlen) {
  maxlen = std::min(maxlen, universe().radius());
  if (maxlen <= built_len_) return;
  alg_.prepare_bar(maxlen);
  // Independent same-length entries; all shorter entries are complete.
  for (int len = std::max(0, built_len_ + 1); len <= maxlen; ++len) {
    std::vector<Elt> shell;
    for (Elt w : universe().elements_up_to(len))
      if (universe().length(w) == len) shell.push_back(w);
    parallel_for(shell.size(), [&](size_t i) {
      auto& slot = c_memo_[shell[i].idx];
      if (!slot) slot = build_c(shell[i]);
    });
  }
  built_len_ = maxlen;
}

std::string KLTable::render_c(const CVec& v) const {
  return render_basis_elt(universe(), v.entries(), "C");
}

}  // namespace hc
