#include "derangebij/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace derangebij {

namespace {

std::string strip(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

Element parse_element(std::string_view token, std::string_view whole)
{
  Element value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
    throw ParseError("malformed element '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  return value;
}

struct ParsedCycles
{
  std::vector<Cycle> cycles;
  std::optional<Element> mark;
};

ParsedCycles parse_cycle_text(std::string_view raw, bool allow_mark)
{
  std::string const text = strip(raw);
  ParsedCycles out;
  if (text == "()")
    return out;
  if (text.empty())
    throw ParseError("empty cycle notation");

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(pos) + " in '" +
                       std::string(raw) + "'");
    auto close = text.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("unbalanced parenthesis in '" + std::string(raw) + "'");
    std::string_view body(text.data() + pos + 1, close - pos - 1);
    if (body.empty())
      throw ParseError("empty cycle in '" + std::string(raw) + "'");

    Cycle cycle;
    bool starred = false;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      std::string_view token = body.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
      if (!token.empty() && token.front() == '*') {
        if (!allow_mark)
          throw ParseError("unexpected mark in '" + std::string(raw) + "'");
        starred = true;
        token.remove_prefix(1);
      }
      cycle.push_back(parse_element(token, raw));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    if (starred) {
      if (cycle.size() != 1)
        throw ParseError("only a fixed point can be marked in '" + std::string(raw) + "'");
      if (out.mark)
        throw ParseError("more than one mark in '" + std::string(raw) + "'");
      out.mark = cycle.front();
    }
    out.cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return out;
}

Permutation build(std::vector<Cycle> const &cycles)
{
  try {
    return Permutation::from_cycles(cycles);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

void append_cycles(std::string &out, CycleForm const &form, std::optional<Element> mark)
{
  if (form.cycles.empty()) {
    out += "()";
    return;
  }
  for (auto const &c : form.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      if (mark && c.size() == 1 && c[0] == *mark)
        out += '*';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
}

} // namespace

std::string to_one_line_string(Permutation const &p)
{
  auto const images = p.one_line();
  bool const compact = std::all_of(images.begin(), images.end(),
                                   [](Element v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i && !compact)
      out += ',';
    out += std::to_string(images[i]);
  }
  return out;
}

std::string to_cycle_string(CycleForm const &c)
{
  std::string out;
  append_cycles(out, c.canonical(), std::nullopt);
  return out;
}

std::string to_cycle_string(Permutation const &p)
{
  std::string out;
  append_cycles(out, p.cycles(), std::nullopt);
  return out;
}

std::string to_string(MarkedPermutation const &m)
{
  std::string out;
  append_cycles(out, m.perm().cycles(), m.mark());
  return out;
}

Permutation parse_one_line(std::string_view raw)
{
  std::string const text = strip(raw);
  std::vector<Element> images;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      images.push_back(parse_element(
        std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start),
        raw));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw ParseError("malformed one-line notation '" + std::string(raw) + "'");
      images.push_back(static_cast<Element>(c - '0'));
    }
  }
  try {
    return Permutation::from_one_line(std::move(images));
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

Permutation parse_cycles(std::string_view text)
{
  return build(parse_cycle_text(text, false).cycles);
}

Permutation parse_permutation(std::string_view text)
{
  std::string const s = strip(text);
  if (!s.empty() && s.front() == '(')
    return parse_cycles(s);
  return parse_one_line(s);
}

MarkedPermutation parse_marked(std::string_view text)
{
  auto parsed = parse_cycle_text(text, true);
  if (!parsed.mark)
    throw ParseError("no marked fixed point in '" + std::string(text) + "'");
  Permutation perm = build(parsed.cycles);
  try {
    return MarkedPermutation(std::move(perm), *parsed.mark);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

} // namespace derangebij
