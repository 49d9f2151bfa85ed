#include "heckecells/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace hc {

AffineMat AffineMat::compose(const AffineMat& o) const {
  AffineMat r;
  r.a11 = a11 * o.a11 + a12 * o.a21;
  r.a12 = a11 * o.a12 + a12 * o.a22;
  r.a21 = a21 * o.a11 + a22 * o.a21;
  r.a22 = a21 * o.a12 + a22 * o.a22;
  r.t1 = a11 * o.t1 + a12 * o.t2 + t1;
  r.t2 = a21 * o.t1 + a22 * o.t2 + t2;
  return r;
}

AffineMat AffineMat::inverse() const {
  int det = a11 * a22 - a12 * a21;
  assert(det == 1 || det == -1);
  AffineMat r;
  r.a11 = a22 * det;
  r.a12 = -a12 * det;
  r.a21 = -a21 * det;
  r.a22 = a11 * det;
  r.t1 = -(r.a11 * t1 + r.a12 * t2);
  r.t2 = -(r.a21 * t1 + r.a22 * t2);
  return r;
}

int Presentation::coxeter_order(int s, int t) const {
  if (s > t) std::swap(s, t);
  if (type == GroupType::C2affine) {
    if (s == 0 && t == 1) return 4;
    if (s == 1 && t == 2) return 4;
    return 2;  // {0,2}
  }
  if (s == 0 && t == 1) return 3;
  if (s == 1 && t == 2) return 6;
  return 2;
}

AffineMat Presentation::gen_matrix(int s) const {
  if (type == GroupType::C2affine) {
    // Square-lattice model: s1 swaps coordinates, s2 negates the second,
    // s0 reflects the first coordinate across 1.
    switch (s) {
      case 0: return AffineMat{-1, 0, 0, 1, 2, 0};
      case 1: return AffineMat{0, 1, 1, 0, 0, 0};
      case 2: return AffineMat{1, 0, 0, -1, 0, 0};
    }
  } else {
    // Coroot-basis model for G2; s0 = t_{theta^vee} s_theta with
    // theta^vee = 2 alpha1^vee + alpha2^vee.
    switch (s) {
      case 1: return AffineMat{-1, 3, 0, 1, 0, 0};
      case 2: return AffineMat{1, 0, 1, -1, 0, 0};
      case 0: return AffineMat{-1, 0, -1, 1, 2, 1};
    }
  }
  throw std::invalid_argument("generator out of range");
}

size_t GroupUniverse::MatHash::operator()(const AffineMat& m) const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= (uint64_t)(uint32_t)v;
    h *= 1099511628211ull;
  };
  mix(m.a11); mix(m.a12); mix(m.a21); mix(m.a22); mix(m.t1); mix(m.t2);
  return (size_t)h;
}

GroupUniverse::GroupUniverse(GroupType type, int radius)
    : pres_(type), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::array<AffineMat, 3> gens;
  for (int s = 0; s < 3; ++s) gens[s] = pres_.gen_matrix(s);

  mats_.push_back(AffineMat{});
  lengths_.push_back(0);
  index_.emplace(mats_[0], 0);

  // Breadth-first closure under right multiplication by generators.
  for (uint32_t i = 0; i < mats_.size(); ++i) {
    right_mul_.push_back({kInvalid, kInvalid, kInvalid});
    if (lengths_[i] == radius_) continue;
    for (int s = 0; s < 3; ++s) {
      AffineMat m = mats_[i].compose(gens[s]);
      auto it = index_.find(m);
      if (it != index_.end()) {
        right_mul_[i][s] = it->second;
      } else {
        uint32_t ni = (uint32_t)mats_.size();
        mats_.push_back(m);
        lengths_.push_back(lengths_[i] + 1);
        index_.emplace(m, ni);
        right_mul_[i][s] = ni;
      }
    }
  }
  // Boundary elements got no right_mul slots above when the product is new;
  // fill products that happen to land back inside the ball.
  for (uint32_t i = 0; i < mats_.size(); ++i) {
    if (lengths_[i] < radius_) continue;
    for (int s = 0; s < 3; ++s) {
      auto it = index_.find(mats_[i].compose(gens[s]));
      right_mul_[i][s] = it != index_.end() ? it->second : kInvalid;
    }
  }

  left_mul_.resize(mats_.size());
  inv_.resize(mats_.size());
  for (uint32_t i = 0; i < mats_.size(); ++i) {
    for (int s = 0; s < 3; ++s) {
      auto it = index_.find(gens[s].compose(mats_[i]));
      left_mul_[i][s] = it != index_.end() ? it->second : kInvalid;
    }
    auto it = index_.find(mats_[i].inverse());
    assert(it != index_.end());  // l(x^-1) = l(x)
    inv_[i] = Elt{it->second};
  }

  // Canonical ShortLex words, greedily via least left descents. BFS order
  // guarantees the shorter element is already done.
  words_.resize(mats_.size());
  for (uint32_t i = 1; i < mats_.size(); ++i) {
    for (int s = 0; s < 3; ++s) {
      uint32_t j = left_mul_[i][s];
      if (j != kInvalid && lengths_[j] < lengths_[i]) {
        words_[i] = char('0' + s) + words_[j];
        break;
      }
    }
    assert(!words_[i].empty());
  }

  len_offset_.assign(radius_ + 2, 0);
  for (int l : lengths_) ++len_offset_[l + 1];
  std::partial_sum(len_offset_.begin(), len_offset_.end(), len_offset_.begin());

  display_rank_.resize(mats_.size());
  std::vector<uint32_t> order(mats_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [this](uint32_t x, uint32_t y) {
    if (lengths_[x] != lengths_[y]) return lengths_[x] < lengths_[y];
    return words_[x] < words_[y];
  });
  for (uint32_t r = 0; r < order.size(); ++r) display_rank_[order[r]] = r;
}

std::optional<Elt> GroupUniverse::lookup(const AffineMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return Elt{it->second};
}

std::string GroupUniverse::format(Elt x) const {
  return x.idx == 0 ? "e" : words_[x.idx];
}

Elt GroupUniverse::parse(const std::string& digits) const {
  if (digits == "e") return identity();
  if (digits.empty()) throw ParseError("empty element string");
  AffineMat m;
  for (char ch : digits) {
    if (ch < '0' || ch > '2')
      throw ParseError(std::string("invalid generator '") + ch + "' in '" + digits + "'");
    m = m.compose(pres_.gen_matrix(ch - '0'));
  }
  auto e = lookup(m);
  if (!e) throw OutOfBall("element '" + digits + "' outside ball of radius " +
                          std::to_string(radius_));
  return *e;
}

std::vector<size_t> GroupUniverse::ball_sizes() const {
  std::vector<size_t> out(radius_ + 1, 0);
  for (int l : lengths_) ++out[l];
  return out;
}

std::vector<Elt> GroupUniverse::elements_up_to(int len) const {
  len = std::min(len, radius_);
  std::vector<Elt> out;
  out.reserve(len_offset_[len + 1]);
  for (uint32_t i = 0; i < len_offset_[len + 1]; ++i) out.push_back(Elt{i});
  return out;
}

Elt GroupUniverse::mul(Elt x, Elt y) const {
  auto r = try_mul(x, y);
  if (!r)
    throw OutOfBall("product " + format(x) + " * " + format(y) +
                    " outside ball of radius " + std::to_string(radius_));
  return *r;
}

std::optional<Elt> GroupUniverse::try_mul(Elt x, Elt y) const {
  return lookup(mats_[x.idx].compose(mats_[y.idx]));
}

bool GroupUniverse::mul_additive(Elt x, Elt y) const {
  return length(mul(x, y)) == length(x) + length(y);
}

std::optional<Elt> GroupUniverse::left_mul_gen(int s, Elt x) const {
  uint32_t i = left_mul_[x.idx][s];
  if (i == kInvalid) return std::nullopt;
  return Elt{i};
}

std::optional<Elt> GroupUniverse::right_mul_gen(Elt x, int s) const {
  uint32_t i = right_mul_[x.idx][s];
  if (i == kInvalid) return std::nullopt;
  return Elt{i};
}

bool GroupUniverse::is_left_descent(int s, Elt x) const {
  uint32_t i = left_mul_[x.idx][s];
  return i != kInvalid && lengths_[i] < lengths_[x.idx];
}

bool GroupUniverse::is_right_descent(Elt x, int s) const {
  uint32_t i = right_mul_[x.idx][s];
  return i != kInvalid && lengths_[i] < lengths_[x.idx];
}

std::vector<int> GroupUniverse::descents(Elt x, bool left) const {
  std::vector<int> out;
  for (int s = 0; s < 3; ++s)
    if (left ? is_left_descent(s, x) : is_right_descent(x, s)) out.push_back(s);
  return out;
}

bool GroupUniverse::bruhat_leq(Elt x, Elt y) const {
  if (x.idx == 0) return true;
  int lx = length(x), ly = length(y);
  if (lx > ly) return false;
  if (lx == ly) return x == y;
  uint64_t key = (uint64_t)x.idx << 32 | y.idx;
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  int s = words_[y.idx][0] - '0';  // a left descent of y
  Elt sy = *left_mul_gen(s, y);
  bool r;
  if (is_left_descent(s, x))
    r = bruhat_leq(*left_mul_gen(s, x), sy);
  else
    r = bruhat_leq(x, sy);
  bruhat_memo_.emplace(key, r);
  return r;
}

bool GroupUniverse::duflo_leq(Elt x, Elt y) const {
  auto z = lookup(mats_[inv_[x.idx].idx].compose(mats_[y.idx]));
  if (!z) return false;  // longer than the ball radius, hence > l(y) - l(x)
  return length(*z) == length(y) - length(x);
}

std::vector<Elt> GroupUniverse::duflo_below(Elt v) const {
  std::vector<Elt> out;
  for (Elt x : elements_up_to(length(v)))
    if (duflo_leq(x, v)) out.push_back(x);
  return out;
}

std::vector<Elt> GroupUniverse::u_of_p(Elt p, int radius) const {
  if (radius > radius_)
    throw OutOfBall("u_of_p radius exceeds universe radius");
  if (p.idx == 0) return {identity()};
  AffineMat pk = mats_[p.idx];
  Elt pk_elt = p;
  int guard = 0;
  while (length(pk_elt) < radius + length(p)) {
    pk = pk.compose(mats_[p.idx]);
    auto e = lookup(pk);
    if (!e)
      throw OutOfBall("power of " + format(p) + " leaves the universe before "
                      "covering radius " + std::to_string(radius));
    pk_elt = *e;
    if (++guard > radius + 2)
      throw OutOfBall("powers of " + format(p) + " do not grow");
  }
  std::vector<Elt> out;
  for (Elt w : elements_up_to(radius)) {
    auto z = lookup(mats_[inv_[w.idx].idx].compose(pk));
    if (z && length(*z) == length(pk_elt) - length(w)) out.push_back(w);
  }
  return out;
}

Elt GroupUniverse::parabolic_longest(const std::vector<int>& gens) const {
  std::vector<int> I = gens;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.size() >= 3)
    throw InfiniteParabolic("the full generator set spans an infinite group");
  if (I.empty()) return identity();
  for (int s : I)
    if (s < 0 || s > 2) throw std::invalid_argument("generator out of range");
  AffineMat m;
  if (I.size() == 1) {
    m = pres_.gen_matrix(I[0]);
  } else {
    int order = pres_.coxeter_order(I[0], I[1]);
    for (int i = 0; i < order; ++i)
      m = m.compose(pres_.gen_matrix(I[i % 2]));
  }
  auto e = lookup(m);
  if (!e) throw OutOfBall("parabolic longest element outside universe");
  return *e;
}

std::vector<int> GroupUniverse::support_gens(Elt x) const {
  bool seen[3] = {false, false, false};
  for (char ch : words_[x.idx]) seen[ch - '0'] = true;
  std::vector<int> out;
  for (int s = 0; s < 3; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

}  // namespace hc
