#include "heckecells/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hc {

std::string to_string(GroupType t) {
  return t == GroupType::C2affine ? "C2" : "G2";
}

WeightSpec WeightSpec::c2(int a, int b, int c) {
  if (a <= 0 || b <= 0 || c <= 0)
    throw std::invalid_argument("weights must be positive");
  if (a < c) throw std::invalid_argument("C2 weights require a >= c");
  return WeightSpec{GroupType::C2affine, a, b, c};
}

WeightSpec WeightSpec::g2(int a, int b) {
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("weights must be positive");
  return WeightSpec{GroupType::G2affine, a, b, b};
}

int WeightSpec::weight_of_gen(int s) const {
  switch (s) {
    case 0: return type == GroupType::C2affine ? c : b;
    case 1: return b;
    case 2: return a;
    default: throw std::invalid_argument("generator out of range");
  }
}

std::string WeightSpec::render() const {
  std::ostringstream os;
  os << "a=" << a << ",b=" << b;
  if (type == GroupType::C2affine) os << ",c=" << c;
  return os.str();
}

LaurentPoly LaurentPoly::constant(Coeff n) { return monomial(std::move(n), 0); }

LaurentPoly LaurentPoly::q_power(Exponent g) { return monomial(1, g); }

LaurentPoly LaurentPoly::monomial(Coeff n, Exponent g) {
  LaurentPoly p;
  if (n != 0) p.terms_.emplace_back(g, std::move(n));
  return p;
}

LaurentPoly LaurentPoly::xi(Exponent g) {
  if (g == 0) return zero();
  LaurentPoly p;
  if (g > 0) {
    p.terms_.emplace_back(-g, -1);
    p.terms_.emplace_back(g, 1);
  } else {
    p.terms_.emplace_back(g, 1);
    p.terms_.emplace_back(-g, -1);
  }
  return p;
}

LaurentPoly LaurentPoly::eta(Exponent g) {
  if (g == 0) return constant(2);
  LaurentPoly p;
  Exponent lo = std::min(g, Exponent(-g)), hi = std::max(g, Exponent(-g));
  p.terms_.emplace_back(lo, 1);
  p.terms_.emplace_back(hi, 1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Coeff LaurentPoly::coeff_at(Exponent g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == g) return it->second;
  return 0;
}

Exponent LaurentPoly::degree() const {
  return terms_.empty() ? kNegInf : terms_.back().first;
}

Exponent LaurentPoly::min_exponent() const {
  return terms_.empty() ? std::numeric_limits<Exponent>::max()
                        : terms_.front().first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) { terms_ = o.terms_; return *this; }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->first < j->first) out.push_back(std::move(*i++));
    else if (j->first < i->first) out.push_back(*j++);
    else {
      Coeff s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i; ++j;
    }
  }
  out.insert(out.end(), std::make_move_iterator(i), std::make_move_iterator(terms_.end()));
  out.insert(out.end(), j, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->first < j->first) out.push_back(std::move(*i++));
    else if (j->first < i->first) { out.emplace_back(j->first, -j->second); ++j; }
    else {
      Coeff s = i->second - j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i; ++j;
    }
  }
  out.insert(out.end(), std::make_move_iterator(i), std::make_move_iterator(terms_.end()));
  for (; j != o.terms_.end(); ++j) out.emplace_back(j->first, -j->second);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  r.add_mul(*this, o);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Coeff& n) const {
  if (n == 0) return zero();
  LaurentPoly r = *this;
  if (n == 1) return r;
  for (auto& [g, c] : r.terms_) c *= n;
  return r;
}

void LaurentPoly::add_mul(const LaurentPoly& q, const LaurentPoly& r) {
  if (q.terms_.empty() || r.terms_.empty()) return;
  // Shift-and-add over the shorter factor.
  const LaurentPoly& small = q.terms_.size() <= r.terms_.size() ? q : r;
  const LaurentPoly& big = q.terms_.size() <= r.terms_.size() ? r : q;
  for (const auto& [g, c] : small.terms_) {
    LaurentPoly shifted;
    shifted.terms_.reserve(big.terms_.size());
    for (const auto& [h, d] : big.terms_) shifted.terms_.emplace_back(g + h, c * d);
    *this += shifted;
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly::Split LaurentPoly::split() const {
  Split s;
  s.constant = 0;
  for (const auto& [g, c] : terms_) {
    if (g < 0) s.negative.terms_.emplace_back(g, c);
    else if (g == 0) s.constant = c;
    else s.positive.terms_.emplace_back(g, c);
  }
  return s;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (const auto& [g, c] : terms_) {
    if (g >= 0) break;
    r.terms_.emplace_back(g, c);
  }
  return r;
}

void LaurentPoly::prune() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
    else out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

namespace {

void render_magnitude(std::ostringstream& os, const Coeff& mag, Exponent g) {
  // mag > 0
  if (g == 0) { os << mag; return; }
  if (mag != 1) os << mag << "*";
  os << "q";
  if (g != 1) os << "^" << g;
}

}  // namespace

std::string LaurentPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [g, c] = *it;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    render_magnitude(os, negative ? Coeff(-c) : c, g);
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
  auto parse_int = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
      throw ParseError("expected integer at position " + std::to_string(pos) + " in '" + text + "'");
    long long v = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  };

  LaurentBuilder builder;
  skip_ws();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return zero();
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (expect_term) throw ParseError("dangling operator in '" + text + "'");
      break;
    }
    if (!expect_term) {
      if (text[pos] == '+') { sign = 1; ++pos; }
      else if (text[pos] == '-') { sign = -1; ++pos; }
      else throw ParseError("expected '+' or '-' at position " + std::to_string(pos) + " in '" + text + "'");
      expect_term = true;
      continue;
    }
    if (text[pos] == '-') { sign = -sign; ++pos; continue; }
    Coeff mag = 1;
    bool saw_number = false;
    if (std::isdigit((unsigned char)text[pos])) {
      mag = parse_int();
      saw_number = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
    }
    Exponent g = 0;
    if (pos < text.size() && text[pos] == 'q') {
      ++pos;
      g = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        g = (Exponent)parse_int();
      }
    } else if (!saw_number) {
      throw ParseError("expected term at position " + std::to_string(pos) + " in '" + text + "'");
    }
    builder.add_term(g, sign > 0 ? mag : Coeff(-mag));
    sign = 1;
    expect_term = false;
  }
  return builder.take();
}

void LaurentBuilder::add_term(Exponent g, const Coeff& c) {
  if (c != 0) terms_.emplace_back(g, c);
}

LaurentPoly LaurentBuilder::take() {
  LaurentPoly p;
  p.terms_ = std::move(terms_);
  terms_.clear();
  p.prune();
  return p;
}

}  // namespace hc
