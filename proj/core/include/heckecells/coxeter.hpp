// Affine Weyl groups of types C~2 and G~2 as bounded-radius universes.
//
// Equality of group elements is decided by a faithful affine integer-matrix
// representation (2x2 linear part acting on the coroot lattice plus an
// integer translation), so no word-rewriting confluence is needed. Canonical
// words are ShortLex-least reduced words with generator order 0 < 1 < 2.
#pragma once

#include "heckecells/laurent.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hc {

class OutOfBall : public std::runtime_error {
 public:
  explicit OutOfBall(const std::string& msg) : std::runtime_error(msg) {}
};

class InfiniteParabolic : public std::runtime_error {
 public:
  explicit InfiniteParabolic(const std::string& msg) : std::runtime_error(msg) {}
};

/// Affine map v -> A v + t with integer entries.
struct AffineMat {
  int a11 = 1, a12 = 0, a21 = 0, a22 = 1, t1 = 0, t2 = 0;

  friend bool operator==(const AffineMat&, const AffineMat&) = default;
  AffineMat compose(const AffineMat& o) const;  // this after o
  AffineMat inverse() const;
  bool is_identity() const { return *this == AffineMat{}; }
};

/// Coxeter data of the two supported group types.
struct Presentation {
  GroupType type;

  explicit Presentation(GroupType t) : type(t) {}
  int coxeter_order(int s, int t) const;  // m(s,t), s != t
  AffineMat gen_matrix(int s) const;
  static constexpr int rank = 3;
};

/// Index of a group element inside its universe. Valid only together with
/// the GroupUniverse that produced it.
struct Elt {
  uint32_t idx = 0;
  friend auto operator<=>(const Elt&, const Elt&) = default;
};

/// All group elements of length <= radius, built by breadth-first closure
/// from the identity. Frozen after construction; queries are const.
class GroupUniverse {
 public:
  GroupUniverse(GroupType type, int radius);

  GroupType type() const { return pres_.type; }
  const Presentation& presentation() const { return pres_; }
  int radius() const { return radius_; }
  uint32_t size() const { return (uint32_t)lengths_.size(); }

  Elt identity() const { return Elt{0}; }
  int length(Elt x) const { return lengths_[x.idx]; }
  std::string format(Elt x) const;       // "e" or digit string
  const std::string& raw_word(Elt x) const { return words_[x.idx]; }
  Elt parse(const std::string& digits) const;

  std::vector<size_t> ball_sizes() const;     // element count per length
  std::vector<Elt> elements_up_to(int len) const;
  Elt element_at(uint32_t i) const { return Elt{i}; }

  Elt mul(Elt x, Elt y) const;                // throws OutOfBall
  std::optional<Elt> try_mul(Elt x, Elt y) const;
  bool mul_additive(Elt x, Elt y) const;      // l(xy) == l(x)+l(y)
  Elt inverse(Elt x) const { return inv_[x.idx]; }

  std::optional<Elt> left_mul_gen(int s, Elt x) const;
  std::optional<Elt> right_mul_gen(Elt x, int s) const;

  // Total on the universe: a product that leaves the ball has larger length.
  bool is_left_descent(int s, Elt x) const;
  bool is_right_descent(Elt x, int s) const;
  std::vector<int> descents(Elt x, bool left) const;

  bool bruhat_leq(Elt x, Elt y) const;

  /// Duflo order: x <=_D y iff l(x^-1 y) = l(y) - l(x). Total on the
  /// universe (an out-of-ball x^-1 y is longer than l(y), hence "false").
  bool duflo_leq(Elt x, Elt y) const;

  /// {w : l(w) <= radius, w <=_D p^k}, k least with l(p^k) >= radius + l(p).
  std::vector<Elt> u_of_p(Elt p, int radius) const;
  std::vector<Elt> duflo_below(Elt v) const;  // {x : x <=_D v}

  Elt parabolic_longest(const std::vector<int>& gens) const;

  /// Letters occurring in the canonical word (= {s : s <= x in Bruhat order}
  /// for the supported rank).
  std::vector<int> support_gens(Elt x) const;

  /// Display order: increasing length, lexicographic word within a length.
  uint32_t display_rank(Elt x) const { return display_rank_[x.idx]; }

 private:
  Presentation pres_;
  int radius_;
  std::vector<AffineMat> mats_;
  std::vector<int> lengths_;
  std::vector<std::string> words_;  // canonical, "" for identity
  std::vector<Elt> inv_;
  std::vector<std::array<uint32_t, 3>> right_mul_;  // kInvalid = outside ball
  std::vector<std::array<uint32_t, 3>> left_mul_;
  std::vector<uint32_t> display_rank_;
  std::vector<uint32_t> len_offset_;  // first index of each length

  static constexpr uint32_t kInvalid = UINT32_MAX;

  struct MatHash {
    size_t operator()(const AffineMat& m) const;
  };
  std::unordered_map<AffineMat, uint32_t, MatHash> index_;
  mutable std::unordered_map<uint64_t, bool> bruhat_memo_;

  std::optional<Elt> lookup(const AffineMat& m) const;
};

}  // namespace hc
