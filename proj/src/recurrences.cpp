#include "derangebij/recurrences.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "derangebij/notation.hpp"

namespace derangebij {

namespace {

void require_standard(Permutation const &p, unsigned min_size, char const *what)
{
  if (!p.standard())
    throw std::invalid_argument(std::string(what) + ": permutation must act on [n]");
  if (p.size() < min_size)
    throw std::invalid_argument(std::string(what) + ": need n >= " + std::to_string(min_size));
}

void require_label(SplitPair const &s)
{
  if (s.n < 2)
    throw std::invalid_argument("split pair needs n >= 2");
  if (s.label < 1 || s.label > s.n - 1)
    throw std::invalid_argument("label " + std::to_string(s.label) + " outside [1, " +
                                std::to_string(s.n - 1) + "]");
}

void require_nonderangement_pair(SplitPair const &s)
{
  require_label(s);
  if (!s.perm.standard() || (s.perm.size() + 1 != s.n && s.perm.size() + 2 != s.n))
    throw std::invalid_argument("second component must act on [n-1] or [n-2]");
  if (is_derangement(s.perm))
    throw std::invalid_argument("second component " + to_cycle_string(s.perm) +
                                " has no fixed point");
}

Cycle with_head(Element head, Cycle const &tail, std::size_t from)
{
  Cycle out{head};
  out.insert(out.end(), tail.begin() + static_cast<std::ptrdiff_t>(from), tail.end());
  return out;
}

} // namespace

SplitPair derangement_split(Permutation const &p)
{
  require_standard(p, 2, "derangement split");
  if (!is_derangement(p))
    throw std::invalid_argument(to_cycle_string(p) + " has a fixed point");
  unsigned const n = p.size();
  Element const image = p(n);
  if (p(image) == n)
    return {n, image, remove_elements(p, {n, image})};
  return {n, image, remove_elements(p, {n})};
}

Permutation derangement_split_inverse(SplitPair const &s)
{
  require_label(s);
  if (!is_derangement(s.perm))
    throw std::invalid_argument("second component must be a derangement");
  unsigned const n = s.n;
  if (s.perm.standard() && s.perm.size() == n - 1)
    return insert_before(s.perm, n, s.label);

  // 2-cycle summand: ground set is [n-1] minus the label.
  auto ground = s.perm.ground();
  bool ok = ground.size() + 2 == n;
  for (Element x = 1, i = 0; ok && x <= n - 1; ++x) {
    if (x == s.label)
      continue;
    ok = i < ground.size() && ground[i++] == x;
  }
  if (!ok)
    throw std::invalid_argument("second component must act on [n-1] or [n-1] minus the label");
  return insert_before(add_fixed_point(s.perm, s.label), n, s.label);
}

SplitPair split_nonderangement(Permutation const &p)
{
  require_standard(p, 2, "split");
  if (is_derangement(p))
    throw std::invalid_argument(to_cycle_string(p) + " is a derangement");
  unsigned const n = p.size();
  if (p(n) != n)
    return {n, p(n), remove_elements(p, {n})};
  Permutation rest = remove_elements(p, {n, n - 1});
  if (!is_derangement(rest))
    return {n, p(n - 1), std::move(rest)};
  Element const j = p.preimage(n - 1);
  return {n, j, isolate(remove_elements(p, {n}), j)};
}

Permutation join_nonderangement(SplitPair const &s)
{
  require_nonderangement_pair(s);
  unsigned const n = s.n;
  Permutation const lifted = embed(s.perm, n);
  if (s.perm.size() == n - 1 && has_fixed_point_other_than(s.perm, s.label))
    return apply_transposition(s.label, n, lifted);
  return apply_transposition(s.label, n - 1, lifted);
}

SplitPair split_nonderangement_alt(Permutation const &p)
{
  require_standard(p, 2, "split");
  if (is_derangement(p))
    throw std::invalid_argument(to_cycle_string(p) + " is a derangement");
  unsigned const n = p.size();
  if (p(n) != n)
    return {n, p(n), remove_elements(p, {n})};
  Permutation rest = remove_elements(p, {n, n - 1});
  if (!is_derangement(rest))
    return {n, p(n - 1), std::move(rest)};
  Element const j = p(n - 1);
  return {n, j, isolate(remove_elements(p, {n}), j)};
}

Permutation join_nonderangement_alt(SplitPair const &s)
{
  require_nonderangement_pair(s);
  unsigned const n = s.n;
  if (s.perm.size() == n - 1 && !has_fixed_point_other_than(s.perm, s.label) &&
      s.perm(s.label) == s.label) {
    if (s.label == n - 1)
      return embed(s.perm, n);
    Permutation const reopened = insert_after(remove_elements(s.perm, {s.label}), s.label, n - 1);
    return add_fixed_point(reopened, n);
  }
  return join_nonderangement(s);
}

std::optional<Permutation> excluded_nonderangement(unsigned n)
{
  if (n % 2 == 0)
    return std::nullopt;
  std::vector<Cycle> cycles;
  for (Element x = 1; x + 1 < n; x += 2)
    cycles.push_back({x, x + 1});
  cycles.push_back({n});
  return Permutation::from_cycles(cycles);
}

std::optional<MarkedPermutation> excluded_marked(unsigned n)
{
  if (n % 2 == 1 || n == 0)
    return std::nullopt;
  std::vector<Cycle> cycles{{1}};
  for (Element x = 2; x + 1 < n; x += 2)
    cycles.push_back({x, x + 1});
  cycles.push_back({n});
  return MarkedPermutation(Permutation::from_cycles(cycles), 1);
}

unsigned leading_pair_count(Permutation const &p)
{
  auto const cycles = p.cycles().cycles;
  unsigned k = 0;
  while (k < cycles.size() && cycles[k] == Cycle{2 * k + 1, 2 * k + 2})
    ++k;
  return k;
}

unsigned leading_marked_chain_count(MarkedPermutation const &m)
{
  if (m.mark() != 1)
    throw std::invalid_argument("marked chain needs mark 1");
  auto const cycles = m.perm().cycles().cycles;
  unsigned k = 1;
  while (k < cycles.size() && cycles[k] == Cycle{2 * k, 2 * k + 1})
    ++k;
  return k;
}

MarkedPermutation to_marked(Permutation const &p)
{
  require_standard(p, 1, "marking");
  if (is_derangement(p))
    throw std::invalid_argument(to_cycle_string(p) + " is a derangement");
  unsigned const n = p.size();
  if (auto excluded = excluded_nonderangement(n); excluded && *excluded == p)
    throw std::invalid_argument(to_cycle_string(p) + " is excluded for odd n");

  if (p(n) != n) {
    Element const m = p(n);
    return MarkedPermutation(isolate(p, m), m);
  }
  if (has_fixed_point_other_than(p, n))
    return MarkedPermutation(p, n);

  // (n) is the only fixed point; rewrite the leading pairs.
  auto const cycles = p.cycles().cycles;
  unsigned const k = leading_pair_count(p);
  Cycle const &head = cycles.at(k);
  std::vector<Cycle> out;

  if (head.size() >= 3) {
    // chain 1, 2, ..., 2k, a1: mark its first element, pair up the rest
    Cycle chain;
    for (Element x = 1; x <= 2 * k; ++x)
      chain.push_back(x);
    chain.push_back(head[1]);
    out.push_back({chain[0]});
    for (unsigned i = 1; i + 1 < chain.size(); i += 2)
      out.push_back({chain[i], chain[i + 1]});
    out.push_back(with_head(2 * k + 1, head, 2));
    out.insert(out.end(), cycles.begin() + k + 1, cycles.end());
    return MarkedPermutation(Permutation::from_cycles(out), chain[0]);
  }

  Cycle const &next = cycles.at(k + 1);
  out.push_back({1});
  for (Element x = 2; x <= 2 * k; x += 2)
    out.push_back({x, x + 1});
  Cycle merged{next[0], head[1]};
  merged.insert(merged.end(), next.begin() + 1, next.end());
  out.push_back(std::move(merged));
  out.insert(out.end(), cycles.begin() + k + 2, cycles.end());
  return MarkedPermutation(Permutation::from_cycles(out), 1);
}

Permutation from_marked(MarkedPermutation const &m)
{
  Permutation const &p = m.perm();
  require_standard(p, 2, "unmarking");
  unsigned const n = p.size();
  if (auto excluded = excluded_marked(n); excluded && *excluded == m)
    throw std::invalid_argument(to_string(m) + " is excluded for even n");
  Element const mark = m.mark();

  if (mark == n)
    return p;

  bool const only_n_unmarked = p(n) == n && [&] {
    for (Element x : fixed_points(p))
      if (x != n && x != mark)
        return false;
    return true;
  }();

  if (!only_n_unmarked)
    return insert_after(remove_elements(p, {mark}), mark, n);

  if (mark != 1)
    return insert_after(remove_elements(p, {mark}), mark, 1);

  auto const cycles = p.cycles().cycles;
  unsigned const k = leading_marked_chain_count(m);
  Cycle const &head = cycles.at(k);
  std::vector<Cycle> out;

  if (head.size() == 2) {
    Cycle const &next = cycles.at(k + 1);
    for (Element x = 1; x < 2 * k; x += 2)
      out.push_back({x, x + 1});
    Cycle merged{next[0], head[1]};
    merged.insert(merged.end(), next.begin() + 1, next.end());
    out.push_back(std::move(merged));
    out.insert(out.end(), cycles.begin() + k + 2, cycles.end());
  } else {
    for (Element x = 1; x + 2 < 2 * k; x += 2)
      out.push_back({x, x + 1});
    out.push_back({2 * k - 1, head[1]});
    out.push_back(with_head(2 * k, head, 2));
    out.insert(out.end(), cycles.begin() + k + 1, cycles.end());
  }
  return Permutation::from_cycles(out);
}

} // namespace derangebij

std::size_t std::hash<derangebij::SplitPair>::operator()(
  derangebij::SplitPair const &s) const noexcept
{
  std::size_t seed = s.perm.hash();
  boost::hash_combine(seed, s.n);
  boost::hash_combine(seed, s.label);
  return seed;
}
