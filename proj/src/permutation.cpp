#include "derangebij/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/container_hash/hash.hpp>

namespace derangebij {

namespace {

void trim(std::vector<Element> &map)
{
  while (!map.empty() && map.back() == 0)
    map.pop_back();
}

std::string describe(Element x)
{
  return std::to_string(x);
}

} // namespace

CycleForm CycleForm::canonical() const
{
  CycleForm out;
  out.cycles.reserve(cycles.size());
  for (auto const &c : cycles) {
    if (c.empty())
      throw std::invalid_argument("cycle form: empty cycle");
    auto min = std::min_element(c.begin(), c.end());
    Cycle rotated(c.size());
    std::rotate_copy(c.begin(), min, c.end(), rotated.begin());
    out.cycles.push_back(std::move(rotated));
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](Cycle const &a, Cycle const &b) { return a.front() < b.front(); });
  return out;
}

Permutation CycleForm::to_permutation() const
{
  return Permutation::from_cycles(cycles);
}

bool operator==(CycleForm const &lhs, CycleForm const &rhs)
{
  return lhs.to_permutation() == rhs.to_permutation();
}

Permutation Permutation::from_map(std::vector<Element> map)
{
  trim(map);
  Permutation p;
  p.size_ = static_cast<unsigned>(std::count_if(map.begin(), map.end(),
                                                [](Element v) { return v != 0; }));
  p.map_ = std::move(map);
  return p;
}

Permutation Permutation::identity(unsigned n)
{
  std::vector<Element> map(n);
  std::iota(map.begin(), map.end(), Element{1});
  return from_map(std::move(map));
}

Permutation Permutation::from_one_line(std::vector<Element> images)
{
  std::vector<bool> seen(images.size() + 1, false);
  for (Element v : images) {
    if (v < 1 || v > images.size())
      throw std::invalid_argument("one-line notation: entry " + describe(v) +
                                  " outside [1, " + describe(images.size()) + "]");
    if (seen[v])
      throw std::invalid_argument("one-line notation: repeated entry " + describe(v));
    seen[v] = true;
  }
  return from_map(std::move(images));
}

Permutation Permutation::from_cycles(std::span<Cycle const> cycles)
{
  Element top = 0;
  for (auto const &c : cycles) {
    if (c.empty())
      throw std::invalid_argument("cycle notation: empty cycle");
    for (Element x : c) {
      if (x == 0)
        throw std::invalid_argument("cycle notation: elements start at 1");
      top = std::max(top, x);
    }
  }
  std::vector<Element> map(top, 0);
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Element x = c[i];
      if (map[x - 1] != 0)
        throw std::invalid_argument("cycle notation: element " + describe(x) +
                                    " appears twice");
      map[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return from_map(std::move(map));
}

Permutation Permutation::from_cycles(std::initializer_list<Cycle> cycles)
{
  return from_cycles(std::span<Cycle const>(cycles.begin(), cycles.size()));
}

bool Permutation::contains(Element x) const
{
  return x >= 1 && x <= map_.size() && map_[x - 1] != 0;
}

Element Permutation::operator()(Element x) const
{
  if (!contains(x))
    throw std::out_of_range("element " + describe(x) + " not in ground set");
  return map_[x - 1];
}

Element Permutation::preimage(Element x) const
{
  if (!contains(x))
    throw std::out_of_range("element " + describe(x) + " not in ground set");
  Element y = x;
  while (map_[y - 1] != x)
    y = map_[y - 1];
  return y;
}

std::vector<Element> Permutation::ground() const
{
  std::vector<Element> out;
  out.reserve(size_);
  for (Element x = 1; x <= map_.size(); ++x)
    if (map_[x - 1] != 0)
      out.push_back(x);
  return out;
}

std::vector<Element> Permutation::one_line() const
{
  if (!standard())
    throw std::logic_error("one-line notation needs ground set [n]");
  return map_;
}

std::size_t Permutation::hash() const noexcept
{
  return boost::hash_range(map_.begin(), map_.end());
}

CycleForm Permutation::cycles() const
{
  CycleForm out;
  std::vector<bool> seen(map_.size(), false);
  for (Element start = 1; start <= map_.size(); ++start) {
    if (map_[start - 1] == 0 || seen[start - 1])
      continue;
    Cycle c;
    for (Element x = start; !seen[x - 1]; x = map_[x - 1]) {
      seen[x - 1] = true;
      c.push_back(x);
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

Permutation apply_transposition(Element a, Element b, Permutation const &p)
{
  if (!p.contains(a) || !p.contains(b))
    throw std::out_of_range("transposition (" + describe(a) + "," + describe(b) +
                            ") outside ground set");
  if (a == b)
    return p;
  Permutation out = p;
  for (Element &v : out.map_) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return out;
}

std::vector<Element> fixed_points(Permutation const &p)
{
  std::vector<Element> out;
  for (Element x = 1; x <= p.bound(); ++x)
    if (p.contains(x) && p(x) == x)
      out.push_back(x);
  return out;
}

bool has_fixed_point_other_than(Permutation const &p, Element x)
{
  for (Element y = 1; y <= p.bound(); ++y)
    if (y != x && p.contains(y) && p(y) == y)
      return true;
  return false;
}

bool is_derangement(Permutation const &p)
{
  return fixed_points(p).empty();
}

bool is_non_derangement(Permutation const &p)
{
  return !is_derangement(p);
}

Permutation remove_elements(Permutation const &p, std::span<Element const> s)
{
  for (Element x : s)
    if (!p.contains(x))
      throw std::out_of_range("cannot remove " + describe(x) + ": not in ground set");

  std::vector<bool> doomed(p.bound() + 1, false);
  for (Element x : s)
    doomed[x] = true;

  std::vector<Element> map = p.map_;
  for (Element x = 1; x <= map.size(); ++x) {
    if (map[x - 1] == 0)
      continue;
    if (doomed[x]) {
      map[x - 1] = 0;
      continue;
    }
    Element y = p.map_[x - 1];
    while (doomed[y])
      y = p.map_[y - 1];
    map[x - 1] = y;
  }
  return Permutation::from_map(std::move(map));
}

Permutation remove_elements(Permutation const &p, std::initializer_list<Element> s)
{
  return remove_elements(p, std::span<Element const>(s.begin(), s.size()));
}

Permutation insert_before(Permutation const &p, Element x, Element target)
{
  if (x == 0 || p.contains(x))
    throw std::invalid_argument("cannot insert " + describe(x) + ": already present");
  if (!p.contains(target))
    throw std::out_of_range("insertion target " + describe(target) + " not in ground set");
  Element pred = p.preimage(target);
  std::vector<Element> map = p.map_;
  if (map.size() < x)
    map.resize(x, 0);
  map[pred - 1] = x;
  map[x - 1] = target;
  return Permutation::from_map(std::move(map));
}

Permutation insert_after(Permutation const &p, Element x, Element target)
{
  if (x == 0 || p.contains(x))
    throw std::invalid_argument("cannot insert " + describe(x) + ": already present");
  if (!p.contains(target))
    throw std::out_of_range("insertion target " + describe(target) + " not in ground set");
  std::vector<Element> map = p.map_;
  if (map.size() < x)
    map.resize(x, 0);
  map[x - 1] = map[target - 1];
  map[target - 1] = x;
  return Permutation::from_map(std::move(map));
}

Permutation add_fixed_point(Permutation const &p, Element x)
{
  if (x == 0 || p.contains(x))
    throw std::invalid_argument("cannot add fixed point " + describe(x) + ": already present");
  std::vector<Element> map = p.map_;
  if (map.size() < x)
    map.resize(x, 0);
  map[x - 1] = x;
  return Permutation::from_map(std::move(map));
}

Permutation isolate(Permutation const &p, Element x)
{
  return add_fixed_point(remove_elements(p, {x}), x);
}

Permutation embed(Permutation const &p, unsigned n)
{
  if (n < p.bound())
    throw std::invalid_argument("cannot embed a permutation of bound " +
                                describe(p.bound()) + " into [" + describe(n) + "]");
  std::vector<Element> map = p.map_;
  for (Element x = p.bound() + 1; x <= n; ++x)
    map.push_back(x);
  return Permutation::from_map(std::move(map));
}

Permutation inverse(Permutation const &p)
{
  std::vector<Element> map(p.map_.size(), 0);
  for (Element x = 1; x <= p.map_.size(); ++x)
    if (p.map_[x - 1] != 0)
      map[p.map_[x - 1] - 1] = x;
  return Permutation::from_map(std::move(map));
}

MarkedPermutation::MarkedPermutation(Permutation perm, Element mark)
  : perm_(std::move(perm)), mark_(mark)
{
  if (!perm_.contains(mark_) || perm_(mark_) != mark_)
    throw std::invalid_argument("mark " + describe(mark_) + " is not a fixed point");
  if (!has_fixed_point_other_than(perm_, mark_))
    throw std::invalid_argument("marked permutation needs an unmarked fixed point");
}

} // namespace derangebij

std::size_t std::hash<derangebij::MarkedPermutation>::operator()(
  derangebij::MarkedPermutation const &m) const noexcept
{
  std::size_t seed = std::hash<derangebij::Permutation>{}(m.perm());
  boost::hash_combine(seed, m.mark());
  return seed;
}
