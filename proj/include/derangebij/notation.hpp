#ifndef DERANGEBIJ_NOTATION_HPP
#define DERANGEBIJ_NOTATION_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "derangebij/permutation.hpp"

namespace derangebij {

class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Grammars
//   one-line   "21543" (single digits, n <= 9) or "2,1,5,4,3"
//   cycles     "(2,1)(5,3)(4)"; "()" is the empty permutation
//   marked     "(1)(*2)(3,4)", the starred 1-cycle is the mark

/// Compact digits when every entry is a single digit, commas otherwise.
std::string to_one_line_string(Permutation const &p);
/// Canonical cycle text with explicit fixed points.
std::string to_cycle_string(Permutation const &p);
std::string to_cycle_string(CycleForm const &c);
std::string to_string(MarkedPermutation const &m);

Permutation parse_one_line(std::string_view text);
Permutation parse_cycles(std::string_view text);
/// Cycle text if it starts with '(', one-line otherwise.
Permutation parse_permutation(std::string_view text);
MarkedPermutation parse_marked(std::string_view text);

} // namespace derangebij

#endif // DERANGEBIJ_NOTATION_HPP
