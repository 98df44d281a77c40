#ifndef DERANGEBIJ_FIXTURES_HPP
#define DERANGEBIJ_FIXTURES_HPP

#include <filesystem>
#include <map>
#include <string>

#include "derangebij/oracle.hpp"

namespace derangebij {

/// A vendored prefix of an OEIS sequence. File format: one "n value" pair
/// per line, '#' starts a comment. n is this library's index (sequence
/// length for A052169, permutation size for A002467).
struct Fixture
{
  std::string id;
  std::map<unsigned, BigInt> values;
};

Fixture load_fixture(std::filesystem::path const &path);

/// Compares A052169 against inv000 counts and A002467 against
/// non-derangement counts, using enumeration for n <= enumerate_max and
/// the closed recurrences for every listed n.
VerificationReport verify_fixtures(std::filesystem::path const &directory, unsigned enumerate_max);

} // namespace derangebij

#endif // DERANGEBIJ_FIXTURES_HPP
