#ifndef DERANGEBIJ_PERMUTATION_HPP
#define DERANGEBIJ_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace derangebij {

using Element = unsigned;
using Cycle = std::vector<Element>;

class Permutation;

/// Cycle notation of a permutation. `canonical()` writes every cycle starting
/// at its smallest element and sorts cycles by that element; fixed points
/// appear as explicit 1-cycles.
struct CycleForm
{
  std::vector<Cycle> cycles;

  CycleForm canonical() const;
  Permutation to_permutation() const;

  // Compares the underlying functions, not the written order.
  friend bool operator==(CycleForm const &lhs, CycleForm const &rhs);
};

/// A bijection of a finite ground set G with G a subset of {1, 2, ...}.
///
/// Elements are never relabelled: deleting 4 and 6 from a permutation of
/// [6] leaves a permutation of {1, 2, 3, 5}. A permutation whose ground set
/// is exactly [n] is called standard. The empty permutation (n = 0) is
/// standard and has no fixed points.
class Permutation
{
public:
  Permutation() = default;

  static Permutation identity(unsigned n);

  /// images[i] is the image of i + 1; must be a rearrangement of 1..n.
  static Permutation from_one_line(std::vector<Element> images);

  /// Ground set is the union of the cycles, which must be disjoint.
  static Permutation from_cycles(std::span<Cycle const> cycles);
  static Permutation from_cycles(std::initializer_list<Cycle> cycles);

  /// Number of elements in the ground set.
  unsigned size() const { return size_; }
  /// Largest element of the ground set (0 when empty).
  unsigned bound() const { return static_cast<unsigned>(map_.size()); }
  bool empty() const { return size_ == 0; }
  bool standard() const { return size_ == bound(); }

  bool contains(Element x) const;
  Element operator()(Element x) const;
  Element preimage(Element x) const;

  std::vector<Element> ground() const;
  /// One-line notation; requires a standard permutation.
  std::vector<Element> one_line() const;
  CycleForm cycles() const;

  std::size_t hash() const noexcept;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  // map_[x - 1] is the image of x, or 0 when x is outside the ground set.
  // No trailing zeros, so equal permutations compare equal member-wise.
  std::vector<Element> map_;
  unsigned size_ = 0;

  static Permutation from_map(std::vector<Element> map);

  friend Permutation apply_transposition(Element, Element, Permutation const &);
  friend Permutation remove_elements(Permutation const &, std::span<Element const>);
  friend Permutation insert_before(Permutation const &, Element, Element);
  friend Permutation insert_after(Permutation const &, Element, Element);
  friend Permutation add_fixed_point(Permutation const &, Element);
  friend Permutation embed(Permutation const &, unsigned);
  friend Permutation inverse(Permutation const &);
};

/// The product (a,b)p: swaps the values a and b in p.
Permutation apply_transposition(Element a, Element b, Permutation const &p);

std::vector<Element> fixed_points(Permutation const &p);
bool has_fixed_point_other_than(Permutation const &p, Element x);
bool is_derangement(Permutation const &p);
bool is_non_derangement(Permutation const &p);

/// Deletes the elements of s from the cycle notation of p; each affected
/// cycle closes up around the gap.
Permutation remove_elements(Permutation const &p, std::span<Element const> s);
Permutation remove_elements(Permutation const &p, std::initializer_list<Element> s);

/// Places the new element x immediately before target in target's cycle,
/// so that x maps to target.
Permutation insert_before(Permutation const &p, Element x, Element target);
/// Places the new element x immediately after target, so target maps to x.
Permutation insert_after(Permutation const &p, Element x, Element target);
Permutation add_fixed_point(Permutation const &p, Element x);

/// Pulls x out of its cycle and makes it a fixed point.
Permutation isolate(Permutation const &p, Element x);

/// Extends p with fixed points bound()+1, ..., n.
Permutation embed(Permutation const &p, unsigned n);
Permutation inverse(Permutation const &p);

/// A permutation with one distinguished fixed point and at least one other
/// fixed point.
class MarkedPermutation
{
public:
  MarkedPermutation(Permutation perm, Element mark);

  Permutation const &perm() const { return perm_; }
  Element mark() const { return mark_; }

  friend bool operator==(MarkedPermutation const &, MarkedPermutation const &) = default;
  friend auto operator<=>(MarkedPermutation const &, MarkedPermutation const &) = default;

private:
  Permutation perm_;
  Element mark_;
};

} // namespace derangebij

template<>
struct std::hash<derangebij::Permutation>
{
  std::size_t operator()(derangebij::Permutation const &p) const noexcept
  {
    return p.hash();
  }
};

template<>
struct std::hash<derangebij::MarkedPermutation>
{
  std::size_t operator()(derangebij::MarkedPermutation const &m) const noexcept;
};

#endif // DERANGEBIJ_PERMUTATION_HPP
