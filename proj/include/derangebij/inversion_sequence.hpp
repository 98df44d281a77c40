#ifndef DERANGEBIJ_INVERSION_SEQUENCE_HPP
#define DERANGEBIJ_INVERSION_SEQUENCE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace derangebij {

/// e_1 ... e_n with 0 <= e_i < i. Positions are 1-based in `at`.
class InversionSequence
{
public:
  InversionSequence() = default;
  explicit InversionSequence(std::vector<unsigned> entries);

  unsigned size() const { return static_cast<unsigned>(entries_.size()); }
  unsigned at(unsigned i) const { return entries_.at(i - 1); }
  std::vector<unsigned> const &entries() const { return entries_; }

  friend bool operator==(InversionSequence const &, InversionSequence const &) = default;
  friend auto operator<=>(InversionSequence const &, InversionSequence const &) = default;

private:
  std::vector<unsigned> entries_;
};

/// No three consecutive equal entries.
bool avoids_000(InversionSequence const &e);

/// Visits sequences of length n in lexicographic order.
void for_each_inversion_sequence(unsigned n,
                                 std::function<void(InversionSequence const &)> const &visit);
/// Visits the 000-avoiding sequences of length n in lexicographic order.
/// Prefixes that already contain 000 are pruned.
void for_each_avoider(unsigned n, std::function<void(InversionSequence const &)> const &visit);
std::vector<InversionSequence> avoiders(unsigned n);

/// Word w_2 ... w_n over [k-1] and the repeat symbol R, never two R's in a row.
///
/// The sequence length n is stored alongside the letters because the empty
/// word encodes both the empty sequence and the sequence "0".
class RWord
{
public:
  using Letter = unsigned;
  static constexpr Letter kRepeat = 0;

  RWord() = default;
  /// letters[i] is w_{i+2}; kRepeat stands for R.
  RWord(unsigned length, std::vector<Letter> letters);

  /// Length n of the inversion sequence this word encodes.
  unsigned length() const { return length_; }
  /// w_k for 2 <= k <= length().
  Letter letter(unsigned k) const { return letters_.at(k - 2); }
  bool repeat(unsigned k) const { return letter(k) == kRepeat; }
  std::vector<Letter> const &letters() const { return letters_; }

  friend bool operator==(RWord const &, RWord const &) = default;
  friend auto operator<=>(RWord const &, RWord const &) = default;

private:
  unsigned length_ = 0;
  std::vector<Letter> letters_;
};

/// Throws std::invalid_argument unless e avoids 000.
RWord encode_word(InversionSequence const &e);
InversionSequence decode_word(RWord const &w);

/// Enumerates valid words directly from their definition.
void for_each_rword(unsigned length, std::function<void(RWord const &)> const &visit);

std::string to_string(InversionSequence const &e);
std::string to_string(RWord const &w);
InversionSequence parse_inversion_sequence(std::string_view text);
/// An empty string parses as the word of the length-1 sequence.
RWord parse_rword(std::string_view text);

} // namespace derangebij

template<>
struct std::hash<derangebij::InversionSequence>
{
  std::size_t operator()(derangebij::InversionSequence const &e) const noexcept;
};

template<>
struct std::hash<derangebij::RWord>
{
  std::size_t operator()(derangebij::RWord const &w) const noexcept;
};

#endif // DERANGEBIJ_INVERSION_SEQUENCE_HPP
