#include "derangebij/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace derangebij {

namespace {

unsigned count_fixed(std::vector<Element> const &line)
{
  unsigned c = 0;
  for (std::size_t i = 0; i < line.size(); ++i)
    c += line[i] == i + 1;
  return c;
}

// (1,2)(3,4)...(n-2,n-1)(n) for odd n
std::vector<Element> odd_exception(unsigned n)
{
  std::vector<Element> line(n);
  for (unsigned i = 1; i <= n; ++i)
    line[i - 1] = i == n ? n : (i % 2 ? i + 1 : i - 1);
  return line;
}

// (1)(2,3)...(n-2,n-1)(n) for even n, mark 1
std::vector<Element> even_exception(unsigned n)
{
  std::vector<Element> line(n);
  for (unsigned i = 1; i <= n; ++i)
    line[i - 1] = (i == 1 || i == n) ? i : (i % 2 ? i - 1 : i + 1);
  return line;
}

} // namespace

void for_each_one_line(unsigned n, std::function<void(std::vector<Element> const &)> const &visit)
{
  std::vector<Element> line(n);
  std::iota(line.begin(), line.end(), Element{1});
  do {
    visit(line);
  } while (std::next_permutation(line.begin(), line.end()));
}

std::vector<Permutation> all_permutations(unsigned n)
{
  std::vector<Permutation> out;
  for_each_one_line(n, [&](auto const &line) { out.push_back(Permutation::from_one_line(line)); });
  return out;
}

std::vector<Permutation> derangements(unsigned n)
{
  std::vector<Permutation> out;
  for_each_one_line(n, [&](auto const &line) {
    if (count_fixed(line) == 0)
      out.push_back(Permutation::from_one_line(line));
  });
  return out;
}

std::vector<Permutation> nonderangements(unsigned n)
{
  std::vector<Permutation> out;
  for_each_one_line(n, [&](auto const &line) {
    if (count_fixed(line) > 0)
      out.push_back(Permutation::from_one_line(line));
  });
  return out;
}

std::vector<Permutation> derangements_of(std::vector<Element> const &ground)
{
  std::vector<Permutation> out;
  std::vector<Element> images = ground;
  std::sort(images.begin(), images.end());
  std::vector<Element> const sorted = images;
  do {
    bool fixed = false;
    for (std::size_t i = 0; i < sorted.size() && !fixed; ++i)
      fixed = images[i] == sorted[i];
    if (fixed)
      continue;
    std::vector<Cycle> cycles;
    std::vector<bool> seen(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (seen[i])
        continue;
      Cycle c;
      for (std::size_t j = i; !seen[j];) {
        seen[j] = true;
        c.push_back(sorted[j]);
        j = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), images[j]) - sorted.begin());
      }
      cycles.push_back(std::move(c));
    }
    out.push_back(Permutation::from_cycles(cycles));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<MarkedPermutation> marked_permutations(unsigned n)
{
  std::vector<MarkedPermutation> out;
  for_each_one_line(n, [&](auto const &line) {
    if (count_fixed(line) < 2)
      return;
    Permutation const p = Permutation::from_one_line(line);
    for (Element i = 1; i <= n; ++i)
      if (line[i - 1] == i)
        out.emplace_back(p, i);
  });
  return out;
}

std::vector<Permutation> theta_domain(unsigned n)
{
  std::vector<Permutation> out;
  bool const skip = n % 2 == 1;
  auto const exception = skip ? odd_exception(n) : std::vector<Element>{};
  for_each_one_line(n, [&](auto const &line) {
    if (count_fixed(line) > 0 && !(skip && line == exception))
      out.push_back(Permutation::from_one_line(line));
  });
  return out;
}

std::vector<MarkedPermutation> theta_codomain(unsigned n)
{
  std::vector<MarkedPermutation> out;
  bool const skip = n % 2 == 0 && n > 0;
  auto const exception = skip ? even_exception(n) : std::vector<Element>{};
  for_each_one_line(n, [&](auto const &line) {
    if (count_fixed(line) < 2)
      return;
    Permutation const p = Permutation::from_one_line(line);
    for (Element i = 1; i <= n; ++i)
      if (line[i - 1] == i && !(skip && i == 1 && line == exception))
        out.emplace_back(p, i);
  });
  return out;
}

} // namespace derangebij
