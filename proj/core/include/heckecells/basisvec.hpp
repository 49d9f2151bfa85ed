// Sparse vectors of Laurent polynomials indexed by group elements, used for
// both the T-basis and the C-basis. The tag keeps the two from mixing.
#pragma once

#include "heckecells/coxeter.hpp"
#include "heckecells/laurent.hpp"

#include <algorithm>
#include <vector>

namespace hc {

template <class Tag>
class BasisVec {
 public:
  using Entry = std::pair<Elt, LaurentPoly>;

  BasisVec() = default;

  static BasisVec unit(Elt w) {
    BasisVec v;
    v.entries_.emplace_back(w, LaurentPoly::constant(1));
    return v;
  }

  static BasisVec from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
    BasisVec v;
    v.entries_ = std::move(out);
    return v;
  }

  bool is_zero() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  const LaurentPoly* find(Elt w) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), w,
        [](const Entry& e, Elt x) { return e.first < x; });
    if (it != entries_.end() && it->first == w) return &it->second;
    return nullptr;
  }

  LaurentPoly coeff(Elt w) const {
    const LaurentPoly* p = find(w);
    return p ? *p : LaurentPoly::zero();
  }

  /// Entry with the largest index (universe indices increase with length).
  const Entry& top() const { return entries_.back(); }

  int max_length(const GroupUniverse& uni) const {
    int m = -1;
    for (const auto& [w, p] : entries_) m = std::max(m, uni.length(w));
    return m;
  }

  /// this += factor * other
  void add_scaled(const BasisVec& other, const LaurentPoly& factor) {
    if (other.is_zero() || factor.is_zero()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() && j != other.entries_.end()) {
      if (i->first < j->first) out.push_back(std::move(*i++));
      else if (j->first < i->first) {
        out.emplace_back(j->first, j->second * factor);
        ++j;
      } else {
        LaurentPoly p = std::move(i->second);
        p.add_mul(j->second, factor);
        if (!p.is_zero()) out.emplace_back(i->first, std::move(p));
        ++i; ++j;
      }
    }
    for (; i != entries_.end(); ++i) out.push_back(std::move(*i));
    for (; j != other.entries_.end(); ++j)
      out.emplace_back(j->first, j->second * factor);
    entries_ = std::move(out);
  }

  BasisVec& operator+=(const BasisVec& o) {
    add_scaled(o, LaurentPoly::constant(1));
    return *this;
  }
  BasisVec& operator-=(const BasisVec& o) {
    add_scaled(o, LaurentPoly::constant(-1));
    return *this;
  }
  BasisVec operator+(const BasisVec& o) const {
    BasisVec r = *this;
    r += o;
    return r;
  }
  BasisVec operator-(const BasisVec& o) const {
    BasisVec r = *this;
    r -= o;
    return r;
  }
  BasisVec operator-() const {
    BasisVec r = *this;
    for (auto& [w, p] : r.entries_) p = -p;
    return r;
  }
  bool operator==(const BasisVec& o) const { return entries_ == o.entries_; }

  BasisVec scaled(const LaurentPoly& f) const {
    BasisVec r;
    if (f.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [w, p] : entries_) r.entries_.emplace_back(w, p * f);
    return r;
  }

  void set(Elt w, LaurentPoly p) {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), w,
        [](const Entry& e, Elt x) { return e.first < x; });
    if (it != entries_.end() && it->first == w) {
      if (p.is_zero()) entries_.erase(it);
      else it->second = std::move(p);
    } else if (!p.is_zero()) {
      entries_.insert(it, Entry{w, std::move(p)});
    }
  }

  void erase(Elt w) { set(w, LaurentPoly::zero()); }

  /// True iff every coefficient has strictly negative degree.
  bool all_coeffs_negative_degree() const {
    for (const auto& [w, p] : entries_)
      if (p.degree() >= 0) return false;
    return true;
  }

 private:
  std::vector<Entry> entries_;  // ascending element index
};

struct TBasisTag {};
struct CBasisTag {};

/// Element of the Hecke algebra in the T-basis.
using HeckeElt = BasisVec<TBasisTag>;
/// Coordinate vector with respect to the Kazhdan-Lusztig basis.
using CVec = BasisVec<CBasisTag>;

}  // namespace hc
