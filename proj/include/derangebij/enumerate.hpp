#ifndef DERANGEBIJ_ENUMERATE_HPP
#define DERANGEBIJ_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "derangebij/permutation.hpp"

namespace derangebij {

// Brute-force listings used as ground truth. Fixed points are detected on
// the raw one-line vector, not through the permutation helpers under test.
// Output is in lexicographic one-line order.

/// Visits every arrangement of 1..n in lexicographic order.
void for_each_one_line(unsigned n, std::function<void(std::vector<Element> const &)> const &visit);

std::vector<Permutation> all_permutations(unsigned n);
std::vector<Permutation> derangements(unsigned n);
std::vector<Permutation> nonderangements(unsigned n);
/// Derangements of an arbitrary ground set (ascending, distinct).
std::vector<Permutation> derangements_of(std::vector<Element> const &ground);
/// Every permutation of [n] with a marked fixed point and another fixed point.
std::vector<MarkedPermutation> marked_permutations(unsigned n);

/// The parity exceptions, built straight from their one-line form.
std::vector<Permutation> theta_domain(unsigned n);
std::vector<MarkedPermutation> theta_codomain(unsigned n);

} // namespace derangebij

#endif // DERANGEBIJ_ENUMERATE_HPP
