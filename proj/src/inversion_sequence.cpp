#include "derangebij/inversion_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "derangebij/notation.hpp"

namespace derangebij {

InversionSequence::InversionSequence(std::vector<unsigned> entries)
  : entries_(std::move(entries))
{
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > i)
      throw std::invalid_argument("inversion sequence: e_" + std::to_string(i + 1) + " = " +
                                  std::to_string(entries_[i]) + " is not below " +
                                  std::to_string(i + 1));
}

bool avoids_000(InversionSequence const &e)
{
  auto const &v = e.entries();
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i - 2] == v[i - 1] && v[i - 1] == v[i])
      return false;
  return true;
}

namespace {

template<class Accept>
void extend_prefix(std::vector<unsigned> &prefix, unsigned n, Accept const &accept,
                   std::function<void(InversionSequence const &)> const &visit)
{
  if (prefix.size() == n) {
    visit(InversionSequence(prefix));
    return;
  }
  auto const i = static_cast<unsigned>(prefix.size());
  for (unsigned v = 0; v <= i; ++v) {
    if (!accept(prefix, v))
      continue;
    prefix.push_back(v);
    extend_prefix(prefix, n, accept, visit);
    prefix.pop_back();
  }
}

} // namespace

void for_each_inversion_sequence(unsigned n,
                                 std::function<void(InversionSequence const &)> const &visit)
{
  std::vector<unsigned> prefix;
  prefix.reserve(n);
  extend_prefix(prefix, n, [](auto const &, unsigned) { return true; }, visit);
}

void for_each_avoider(unsigned n, std::function<void(InversionSequence const &)> const &visit)
{
  std::vector<unsigned> prefix;
  prefix.reserve(n);
  auto accept = [](std::vector<unsigned> const &p, unsigned v) {
    auto const s = p.size();
    return s < 2 || !(p[s - 2] == p[s - 1] && p[s - 1] == v);
  };
  extend_prefix(prefix, n, accept, visit);
}

std::vector<InversionSequence> avoiders(unsigned n)
{
  std::vector<InversionSequence> out;
  for_each_avoider(n, [&](InversionSequence const &e) { out.push_back(e); });
  return out;
}

RWord::RWord(unsigned length, std::vector<Letter> letters)
  : length_(length), letters_(std::move(letters))
{
  std::size_t const expected = length == 0 ? 0 : length - 1;
  if (letters_.size() != expected)
    throw std::invalid_argument("word for a length-" + std::to_string(length) +
                                " sequence needs " + std::to_string(expected) + " letters");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto const k = static_cast<unsigned>(i + 2);
    if (letters_[i] == kRepeat) {
      if (i > 0 && letters_[i - 1] == kRepeat)
        throw std::invalid_argument("word has two consecutive R's at positions " +
                                    std::to_string(k - 1) + ", " + std::to_string(k));
    } else if (letters_[i] > k - 1) {
      throw std::invalid_argument("letter w_" + std::to_string(k) + " = " +
                                  std::to_string(letters_[i]) + " exceeds " +
                                  std::to_string(k - 1));
    }
  }
}

RWord encode_word(InversionSequence const &e)
{
  if (!avoids_000(e))
    throw std::invalid_argument("sequence " + to_string(e) + " contains 000");
  std::vector<RWord::Letter> letters;
  for (unsigned k = 2; k <= e.size(); ++k) {
    unsigned const cur = e.at(k), prev = e.at(k - 1);
    if (cur == prev)
      letters.push_back(RWord::kRepeat);
    else if (cur > prev)
      letters.push_back(cur);
    else
      letters.push_back(cur + 1);
  }
  return RWord(e.size(), std::move(letters));
}

InversionSequence decode_word(RWord const &w)
{
  std::vector<unsigned> e;
  if (w.length() == 0)
    return InversionSequence();
  e.push_back(0);
  for (unsigned k = 2; k <= w.length(); ++k) {
    unsigned const prev = e.back();
    if (w.repeat(k))
      e.push_back(prev);
    else if (w.letter(k) > prev)
      e.push_back(w.letter(k));
    else
      e.push_back(w.letter(k) - 1);
  }
  return InversionSequence(std::move(e));
}

void for_each_rword(unsigned length, std::function<void(RWord const &)> const &visit)
{
  if (length <= 1) {
    visit(RWord(length, {}));
    return;
  }
  std::vector<RWord::Letter> letters;
  letters.reserve(length - 1);
  std::function<void(unsigned)> grow = [&](unsigned k) {
    if (k > length) {
      visit(RWord(length, letters));
      return;
    }
    if (letters.empty() || letters.back() != RWord::kRepeat) {
      letters.push_back(RWord::kRepeat);
      grow(k + 1);
      letters.pop_back();
    }
    for (RWord::Letter v = 1; v <= k - 1; ++v) {
      letters.push_back(v);
      grow(k + 1);
      letters.pop_back();
    }
  };
  grow(2);
}

std::string to_string(InversionSequence const &e)
{
  auto const &v = e.entries();
  bool const compact = std::all_of(v.begin(), v.end(), [](unsigned x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i && !compact)
      out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string to_string(RWord const &w)
{
  auto const &v = w.letters();
  bool const compact = std::all_of(v.begin(), v.end(), [](unsigned x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i && !compact)
      out += ',';
    out += v[i] == RWord::kRepeat ? std::string("R") : std::to_string(v[i]);
  }
  return out;
}

namespace {

std::vector<std::string> tokens(std::string_view raw)
{
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      text.push_back(c);
  std::vector<std::string> out;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  } else {
    for (char c : text)
      out.emplace_back(1, c);
  }
  return out;
}

unsigned parse_number(std::string const &token, std::string_view whole)
{
  unsigned value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
    throw ParseError("malformed entry '" + token + "' in '" + std::string(whole) + "'");
  return value;
}

} // namespace

InversionSequence parse_inversion_sequence(std::string_view text)
{
  std::vector<unsigned> entries;
  for (auto const &t : tokens(text))
    entries.push_back(parse_number(t, text));
  try {
    return InversionSequence(std::move(entries));
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

RWord parse_rword(std::string_view text)
{
  std::vector<RWord::Letter> letters;
  for (auto const &t : tokens(text)) {
    if (t == "R" || t == "r")
      letters.push_back(RWord::kRepeat);
    else if (unsigned v = parse_number(t, text); v == 0)
      throw ParseError("word letters start at 1 in '" + std::string(text) + "'");
    else
      letters.push_back(v);
  }
  auto const length = static_cast<unsigned>(letters.size() + 1);
  try {
    return RWord(length, std::move(letters));
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

} // namespace derangebij

std::size_t std::hash<derangebij::InversionSequence>::operator()(
  derangebij::InversionSequence const &e) const noexcept
{
  return boost::hash_range(e.entries().begin(), e.entries().end());
}

std::size_t std::hash<derangebij::RWord>::operator()(derangebij::RWord const &w) const noexcept
{
  std::size_t seed = w.length();
  boost::hash_range(seed, w.letters().begin(), w.letters().end());
  return seed;
}
