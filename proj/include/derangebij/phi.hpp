#ifndef DERANGEBIJ_PHI_HPP
#define DERANGEBIJ_PHI_HPP

#include <optional>
#include <utility>
#include <vector>

#include "derangebij/inversion_sequence.hpp"
#include "derangebij/permutation.hpp"

namespace derangebij {

/// Which summand of the disjoint union of non-derangements of [n] and of
/// [n-1] an element belongs to.
enum class Summand
{
  full,    // ground set [n]
  reduced, // ground set [n-1]
};

/// A non-derangement of [n] or [n-1], viewed as an element of the disjoint
/// union indexed by n. The summand follows from the ground-set size.
class TaggedNonDerangement
{
public:
  TaggedNonDerangement(unsigned n, Permutation perm);

  unsigned n() const { return n_; }
  Permutation const &perm() const { return perm_; }
  Summand summand() const { return perm_.size() == n_ ? Summand::full : Summand::reduced; }

  friend bool operator==(TaggedNonDerangement const &, TaggedNonDerangement const &) = default;

private:
  unsigned n_;
  Permutation perm_;
};

/// Bijection from 000-avoiding inversion sequences of length n >= 1 onto
/// non-derangements of [n] or [n-1], built one letter of the R-word at a
/// time by multiplying with a transposition.
TaggedNonDerangement avoider_to_nonderangement(InversionSequence const &e);

/// Same map computed by cycle surgery; agrees with the transposition form.
TaggedNonDerangement avoider_to_nonderangement_cyclic(InversionSequence const &e);

/// Inverse: peels k = n, ..., 2 off the cycle notation to recover the word.
InversionSequence nonderangement_to_avoider(TaggedNonDerangement const &p);

struct ConstructionStep
{
  unsigned k;
  /// Letter w_k; empty for k = 1.
  std::optional<RWord::Letter> letter;
  Permutation sigma;
  /// Transposition (a,b) multiplied on the left, with the embedded operand
  /// it acted on. Empty for k = 1 and for R steps.
  std::optional<std::pair<Element, Element>> transposition;
  std::optional<Permutation> operand;
};

using ConstructionTrace = std::vector<ConstructionStep>;

ConstructionTrace trace_avoider_to_nonderangement(InversionSequence const &e);

/// Appends a to e (a if a > e_n, a - 1 otherwise); 1 <= a <= n.
InversionSequence extend_avoider(unsigned a, InversionSequence const &e);

/// Bijection [n] x I_n(000) -> non-derangements of [n+1].
Permutation pair_to_nonderangement(unsigned a, InversionSequence const &e);
std::pair<unsigned, InversionSequence> nonderangement_to_pair(Permutation const &p);

} // namespace derangebij

#endif // DERANGEBIJ_PHI_HPP
