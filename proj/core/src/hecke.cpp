#include "heckecells/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hc {

HeckeAlgebra::HeckeAlgebra(const GroupUniverse& uni, WeightSpec weights)
    : uni_(uni), w_(weights) {
  if ((weights.type == GroupType::C2affine) != (uni.type() == GroupType::C2affine))
    throw std::invalid_argument("weight spec does not match the universe type");
  for (int s = 0; s < 3; ++s) xi_[s] = LaurentPoly::xi(w_.weight_of_gen(s));
  bar_memo_.resize(uni_.size());
}

int HeckeAlgebra::weight_of(Elt w) const {
  int total = 0;
  for (char ch : uni_.raw_word(w)) total += w_.weight_of_gen(ch - '0');
  return total;
}

HeckeElt HeckeAlgebra::mul_gen_right(const HeckeElt& h, int s) const {
  std::vector<HeckeElt::Entry> out;
  out.reserve(2 * h.size());
  for (const auto& [x, p] : h.entries()) {
    auto xs = uni_.right_mul_gen(x, s);
    if (!xs)
      throw OutOfBall("Hecke product leaves the ball at " + uni_.format(x) +
                      " * T_" + std::to_string(s));
    out.emplace_back(*xs, p);
    if (uni_.length(*xs) < uni_.length(x))  // T_x T_s = T_{xs} + xi T_x
      out.emplace_back(x, p * xi_[s]);
  }
  return HeckeElt::from_entries(std::move(out));
}

HeckeElt HeckeAlgebra::mul_gen_left(int s, const HeckeElt& h) const {
  std::vector<HeckeElt::Entry> out;
  out.reserve(2 * h.size());
  for (const auto& [x, p] : h.entries()) {
    auto sx = uni_.left_mul_gen(s, x);
    if (!sx)
      throw OutOfBall("Hecke product leaves the ball at T_" + std::to_string(s) +
                      " * " + uni_.format(x));
    out.emplace_back(*sx, p);
    if (uni_.length(*sx) < uni_.length(x))
      out.emplace_back(x, p * xi_[s]);
  }
  return HeckeElt::from_entries(std::move(out));
}

HeckeElt HeckeAlgebra::mul_t_right(const HeckeElt& h, Elt w) const {
  HeckeElt acc = h;
  for (char ch : uni_.raw_word(w)) acc = mul_gen_right(acc, ch - '0');
  return acc;
}

HeckeElt HeckeAlgebra::mul_t_left(Elt w, const HeckeElt& h) const {
  const std::string& word = uni_.raw_word(w);
  HeckeElt acc = h;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = mul_gen_left(*it - '0', acc);
  return acc;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& h, const HeckeElt& k) const {
  // Shared-prefix walk over the right factor: canonical words sorted
  // lexicographically visit a trie of prefixes; acc[d] holds h * T_prefix.
  if (h.is_zero() || k.is_zero()) return HeckeElt();
  std::vector<std::pair<std::string, const LaurentPoly*>> terms;
  terms.reserve(k.size());
  for (const auto& [y, p] : k.entries())
    terms.emplace_back(uni_.raw_word(y), &p);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  HeckeElt result;
  std::vector<HeckeElt> acc;
  acc.push_back(h);
  std::string cur;
  for (const auto& [word, coeff] : terms) {
    size_t common = 0;
    while (common < cur.size() && common < word.size() &&
           cur[common] == word[common])
      ++common;
    cur.resize(common);
    acc.resize(common + 1);
    while (cur.size() < word.size()) {
      acc.push_back(mul_gen_right(acc.back(), word[cur.size()] - '0'));
      cur.push_back(word[cur.size()]);
    }
    result.add_scaled(acc.back(), *coeff);
  }
  return result;
}

const HeckeElt& HeckeAlgebra::bar_t(Elt w) const {
  auto& slot = bar_memo_[w.idx];
  if (slot) return *slot;
  if (w.idx == 0) {
    slot = HeckeElt::unit(w);
    return *slot;
  }
  int s = uni_.raw_word(w)[0] - '0';
  Elt sw = *uni_.left_mul_gen(s, w);
  const HeckeElt& tail = bar_t(sw);
  HeckeElt r = mul_gen_left(s, tail);  // T_s * bar(T_{sw})
  r.add_scaled(tail, -xi_[s]);         // bar(T_s) = T_s - xi_{L(s)}
  slot = std::move(r);
  return *slot;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, p] : h.entries()) out.add_scaled(bar_t(w), p.bar());
  return out;
}

HeckeElt HeckeAlgebra::flat(const HeckeElt& h) const {
  std::vector<HeckeElt::Entry> out;
  out.reserve(h.size());
  for (const auto& [w, p] : h.entries()) out.emplace_back(uni_.inverse(w), p);
  return HeckeElt::from_entries(std::move(out));
}

LaurentPoly HeckeAlgebra::m_coeff(Elt x, Elt y, Elt z) const {
  return mul(t_unit(x), t_unit(y)).coeff(z);
}

bool HeckeAlgebra::equal_mod_hneg(const HeckeElt& h, const HeckeElt& k) const {
  return (h - k).all_coeffs_negative_degree();
}

void HeckeAlgebra::prepare_bar(int maxlen) const {
  for (Elt w : uni_.elements_up_to(maxlen)) bar_t(w);
}

std::string render_basis_elt(const GroupUniverse& uni,
                             const std::vector<std::pair<Elt, LaurentPoly>>& entries,
                             const char* symbol) {
  if (entries.empty()) return "0";
  std::vector<std::pair<Elt, const LaurentPoly*>> order;
  order.reserve(entries.size());
  for (const auto& [w, p] : entries) order.emplace_back(w, &p);
  std::sort(order.begin(), order.end(),
            [&uni](const auto& a, const auto& b) {
              int la = uni.length(a.first), lb = uni.length(b.first);
              if (la != lb) return la > lb;
              return uni.raw_word(a.first) < uni.raw_word(b.first);
            });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : order) {
    std::string c = p->render();
    bool negated = false;
    std::string body;
    if (c == "1") body = "";
    else if (c == "-1") { negated = true; body = ""; }
    else if (p->term_count() == 1) {
      if (c[0] == '-') { negated = true; c = c.substr(1); }
      body = c + "*";
    } else {
      body = "(" + c + ")*";
    }
    if (first) {
      if (negated) os << "-";
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    os << body << symbol << "[" << uni.format(w) << "]";
  }
  return os.str();
}

std::string HeckeAlgebra::render(const HeckeElt& h) const {
  return render_basis_elt(uni_, h.entries(), "T");
}

HeckeElt HeckeAlgebra::parse(const std::string& text) const {
  std::vector<HeckeElt::Entry> out;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
  skip_ws();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size())
    return HeckeElt();
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '+') ++pos;
      else if (text[pos] == '-') { sign = -1; ++pos; }
      else if (!first) throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    skip_ws();
    LaurentPoly coeff = LaurentPoly::constant(1);
    if (pos < text.size() && text[pos] == '(') {
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + text + "'");
      coeff = LaurentPoly::parse(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      skip_ws();
      if (pos >= text.size() || text[pos] != '*')
        throw ParseError("expected '*' after coefficient in '" + text + "'");
      ++pos;
    } else if (pos < text.size() && text[pos] != 'T') {
      size_t t = text.find("*T[", pos);
      if (t == std::string::npos)
        throw ParseError("expected 'T[' in '" + text + "'");
      coeff = LaurentPoly::parse(text.substr(pos, t - pos));
      pos = t + 1;
    }
    skip_ws();
    if (pos + 1 >= text.size() || text[pos] != 'T' || text[pos + 1] != '[')
      throw ParseError("expected 'T[' at position " + std::to_string(pos) + " in '" + text + "'");
    pos += 2;
    size_t close = text.find(']', pos);
    if (close == std::string::npos) throw ParseError("unbalanced 'T[' in '" + text + "'");
    Elt w = uni_.parse(text.substr(pos, close - pos));
    pos = close + 1;
    out.emplace_back(w, sign > 0 ? coeff : -coeff);
  }
  return HeckeElt::from_entries(std::move(out));
}

}  // namespace hc
