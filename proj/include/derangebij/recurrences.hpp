#ifndef DERANGEBIJ_RECURRENCES_HPP
#define DERANGEBIJ_RECURRENCES_HPP

#include <cstddef>
#include <optional>

#include "derangebij/permutation.hpp"

namespace derangebij {

/// (label, perm) in [n-1] x X_{n-1} + [n-1] x X_{n-2}; the summand is read
/// off perm.size(). n is kept so the inverse knows where to reinsert.
struct SplitPair
{
  unsigned n;
  Element label;
  Permutation perm;

  friend bool operator==(SplitPair const &, SplitPair const &) = default;
  friend auto operator<=>(SplitPair const &, SplitPair const &) = default;
};

// Derangements: pi -> (pi(n), pi') where pi' drops the 2-cycle of n if there
// is one and otherwise drops n from its cycle. In the 2-cycle case pi' is a
// derangement of [n-1] minus {pi(n)}; nothing is relabelled.
SplitPair derangement_split(Permutation const &p);
Permutation derangement_split_inverse(SplitPair const &s);

// Non-derangements: the three-case split whose single steps drive the
// avoider map, and its inverse.
SplitPair split_nonderangement(Permutation const &p);
Permutation join_nonderangement(SplitPair const &s);

// Variant that isolates pi(n-1) instead of the preimage of n-1 in the third
// case. Its inverse needs one more case: pairs whose label is the only fixed
// point of a permutation of [n-1].
SplitPair split_nonderangement_alt(Permutation const &p);
Permutation join_nonderangement_alt(SplitPair const &s);

/// The non-derangement removed from the domain of `to_marked`: for odd n,
/// (1,2)(3,4)...(n-2,n-1)(n).
std::optional<Permutation> excluded_nonderangement(unsigned n);
/// The marked permutation removed from the codomain: for even n,
/// (*1)(2,3)...(n-2,n-1)(n).
std::optional<MarkedPermutation> excluded_marked(unsigned n);

/// Largest k such that the canonical cycles of p start (1,2)(3,4)...(2k-1,2k).
unsigned leading_pair_count(Permutation const &p);
/// Largest k' >= 1 such that the canonical cycles of m start
/// (*1)(2,3)...(2k'-2,2k'-1). Requires mark 1.
unsigned leading_marked_chain_count(MarkedPermutation const &m);

/// Bijection from non-derangements of [n] (minus the excluded one) onto
/// marked permutations of [n] (minus the excluded one).
MarkedPermutation to_marked(Permutation const &p);
Permutation from_marked(MarkedPermutation const &m);

} // namespace derangebij

template<>
struct std::hash<derangebij::SplitPair>
{
  std::size_t operator()(derangebij::SplitPair const &s) const noexcept;
};

#endif // DERANGEBIJ_RECURRENCES_HPP
