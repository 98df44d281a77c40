#include "derangebij/phi.hpp"

#include <stdexcept>
#include <string>

#include "derangebij/notation.hpp"

namespace derangebij {

TaggedNonDerangement::TaggedNonDerangement(unsigned n, Permutation perm)
  : n_(n), perm_(std::move(perm))
{
  if (!perm_.standard())
    throw std::invalid_argument("permutation must act on [m]");
  if (perm_.size() != n_ && perm_.size() + 1 != n_)
    throw std::invalid_argument("permutation of [" + std::to_string(perm_.size()) +
                                "] is in neither summand for n = " + std::to_string(n_));
  if (is_derangement(perm_))
    throw std::invalid_argument(to_cycle_string(perm_) + " is a derangement");
}

namespace {

RWord checked_word(InversionSequence const &e)
{
  if (e.size() == 0)
    throw std::invalid_argument("sequence must have length at least 1");
  return encode_word(e);
}

} // namespace

ConstructionTrace trace_avoider_to_nonderangement(InversionSequence const &e)
{
  RWord const w = checked_word(e);
  ConstructionTrace trace;
  Permutation sigma = Permutation::identity(1);
  trace.push_back({1, std::nullopt, sigma, std::nullopt, std::nullopt});

  // w_1 does not exist, so the first step behaves as after a non-R letter.
  bool after_repeat = false;
  for (unsigned k = 2; k <= e.size(); ++k) {
    RWord::Letter const letter = w.letter(k);
    if (letter == RWord::kRepeat) {
      trace.push_back({k, letter, sigma, std::nullopt, std::nullopt});
      after_repeat = true;
      continue;
    }
    Element const partner =
      !after_repeat && has_fixed_point_other_than(sigma, letter) ? k : k - 1;
    Permutation operand = embed(sigma, k);
    sigma = apply_transposition(letter, partner, operand);
    trace.push_back({k, letter, sigma, std::pair{letter, partner}, std::move(operand)});
    after_repeat = false;
  }
  return trace;
}

TaggedNonDerangement avoider_to_nonderangement(InversionSequence const &e)
{
  RWord const w = checked_word(e);
  Permutation sigma = Permutation::identity(1);
  bool after_repeat = false;
  for (unsigned k = 2; k <= e.size(); ++k) {
    RWord::Letter const letter = w.letter(k);
    if (letter == RWord::kRepeat) {
      after_repeat = true;
      continue;
    }
    Element const partner =
      !after_repeat && has_fixed_point_other_than(sigma, letter) ? k : k - 1;
    sigma = apply_transposition(letter, partner, embed(sigma, k));
    after_repeat = false;
  }
  return TaggedNonDerangement(e.size(), std::move(sigma));
}

TaggedNonDerangement avoider_to_nonderangement_cyclic(InversionSequence const &e)
{
  RWord const w = checked_word(e);
  Permutation sigma = Permutation::from_cycles({{1}});
  bool after_repeat = false;
  for (unsigned k = 2; k <= e.size(); ++k) {
    RWord::Letter const letter = w.letter(k);
    if (letter == RWord::kRepeat) {
      after_repeat = true;
      continue;
    }
    if (after_repeat) {
      // k - 1 is not yet in sigma; "before itself" makes it fixed
      sigma = letter == k - 1 ? add_fixed_point(sigma, k - 1) : insert_before(sigma, k - 1, letter);
      sigma = add_fixed_point(sigma, k);
    } else if (has_fixed_point_other_than(sigma, letter)) {
      sigma = insert_before(sigma, k, letter);
    } else {
      // letter is the only fixed point of sigma
      sigma = add_fixed_point(sigma, k);
      if (letter != k - 1)
        sigma = insert_before(remove_elements(sigma, {letter}), letter, k - 1);
    }
    after_repeat = false;
  }
  return TaggedNonDerangement(e.size(), std::move(sigma));
}

InversionSequence nonderangement_to_avoider(TaggedNonDerangement const &p)
{
  unsigned const n = p.n();
  std::vector<RWord::Letter> letters(n - 1, RWord::kRepeat);
  Permutation sigma = p.perm();

  for (unsigned k = n; k >= 2; --k) {
    if (sigma.size() == k - 1)
      continue; // R
    if (sigma.size() != k)
      throw std::logic_error("descent reached a permutation of the wrong size at k = " +
                             std::to_string(k));

    RWord::Letter letter;
    if (sigma(k) != k) {
      letter = sigma(k);
      sigma = remove_elements(sigma, {k});
    } else {
      Permutation const without_k = remove_elements(sigma, {k});
      Permutation const without_pair = remove_elements(without_k, {k - 1});
      if (!is_derangement(without_pair)) {
        letter = sigma(k - 1);
        sigma = without_pair;
      } else {
        letter = sigma.preimage(k - 1);
        sigma = isolate(without_k, letter);
      }
    }
    letters[k - 2] = letter;
  }
  if (sigma != Permutation::identity(1))
    throw std::logic_error("descent did not end at (1)");
  return decode_word(RWord(n, std::move(letters)));
}

InversionSequence extend_avoider(unsigned a, InversionSequence const &e)
{
  unsigned const n = e.size();
  if (a < 1 || a > n)
    throw std::out_of_range("a = " + std::to_string(a) + " outside [1, " +
                            std::to_string(n) + "]");
  if (!avoids_000(e))
    throw std::invalid_argument("sequence " + to_string(e) + " contains 000");
  std::vector<unsigned> entries = e.entries();
  entries.push_back(a > entries.back() ? a : a - 1);
  return InversionSequence(std::move(entries));
}

Permutation pair_to_nonderangement(unsigned a, InversionSequence const &e)
{
  return avoider_to_nonderangement(extend_avoider(a, e)).perm();
}

std::pair<unsigned, InversionSequence> nonderangement_to_pair(Permutation const &p)
{
  if (p.size() < 2)
    throw std::invalid_argument("need a non-derangement of [n+1] with n >= 1");
  auto extended = nonderangement_to_avoider(TaggedNonDerangement(p.size(), p));
  std::vector<unsigned> entries = extended.entries();
  unsigned const last = entries.back();
  entries.pop_back();
  unsigned const prev = entries.back();
  if (last == prev)
    throw std::logic_error("extended sequence ends with a repeat");
  unsigned const a = last > prev ? last : last + 1;
  return {a, InversionSequence(std::move(entries))};
}

} // namespace derangebij
