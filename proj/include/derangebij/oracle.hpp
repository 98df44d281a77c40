#ifndef DERANGEBIJ_ORACLE_HPP
#define DERANGEBIJ_ORACLE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace derangebij {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod
{
  enumerate,            // brute force over S_n or I_n
  recurrence,           // d_n = (n-1)(d_{n-1} + d_{n-2}); likewise for dbar and inv000
  alternate_recurrence, // dbar_n = n dbar_{n-1} - (-1)^n  (non-derangements only)
  formula,              // ((n+1)! - d_{n+1}) / n  (inv000 only)
};

/// Enumeration methods refuse n above this bound.
inline constexpr unsigned kMaxEnumeration = 11;

BigInt factorial(unsigned n);
BigInt count_derangements(unsigned n, CountMethod method);
BigInt count_non_derangements(unsigned n, CountMethod method);
/// n >= 1. The formula method throws std::logic_error if the division is
/// not exact.
BigInt count_inv000(unsigned n, CountMethod method);

enum class Sequence
{
  derangements,
  non_derangements,
  inv000,
};

/// Values computed both by enumeration and by recurrence for every n in
/// range; construction throws std::logic_error if the two disagree.
struct SequenceTable
{
  std::string name;
  std::map<unsigned, BigInt> values;
};

SequenceTable build_sequence_table(Sequence seq, unsigned n_max);

struct VerificationOptions
{
  std::size_t max_counterexamples = 10;
  unsigned jobs = 1;
};

struct DomainSize
{
  unsigned n;
  std::size_t domain;
  std::size_t codomain;
};

struct VerificationReport
{
  std::string subject;
  unsigned n_min = 0;
  unsigned n_max = 0;
  bool passed = true;
  std::size_t failures = 0;
  /// At most max_counterexamples entries; empty exactly when passed.
  std::vector<std::string> counterexamples;
  std::vector<DomainSize> sizes;
  double seconds = 0.0;
};

/// phi, phi-cyclic, codec, ext, split, varphi, varphi-alt, theta.
std::vector<std::string> const &bijection_names();
/// eq1, eq2, eq3, eq5, eq6, inv-rec, union-card.
std::vector<std::string> const &identity_names();

/// For each n in range: image lies in the independently enumerated
/// codomain, no two inputs collide, the sizes agree, and both round trips
/// are the identity. Never throws for mapping failures; they are reported.
VerificationReport verify_bijection(std::string_view name, unsigned n_max,
                                    VerificationOptions const &options = {});

VerificationReport verify_identity(std::string_view name, unsigned n_max);

} // namespace derangebij

#endif // DERANGEBIJ_ORACLE_HPP
