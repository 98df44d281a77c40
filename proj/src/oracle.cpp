#include "derangebij/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "derangebij/enumerate.hpp"
#include "derangebij/inversion_sequence.hpp"
#include "derangebij/notation.hpp"
#include "derangebij/phi.hpp"
#include "derangebij/recurrences.hpp"

namespace derangebij {

BigInt factorial(unsigned n)
{
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

namespace {

int sign(unsigned n)
{
  return n % 2 == 0 ? 1 : -1;
}

void require_enumerable(unsigned n)
{
  if (n > kMaxEnumeration)
    throw std::invalid_argument("enumeration limited to n <= " +
                                std::to_string(kMaxEnumeration));
}

std::uint64_t enumerate_by_fixed_points(unsigned n, bool want_fixed)
{
  require_enumerable(n);
  std::uint64_t count = 0;
  for_each_one_line(n, [&](std::vector<Element> const &line) {
    bool fixed = false;
    for (std::size_t i = 0; i < line.size() && !fixed; ++i)
      fixed = line[i] == i + 1;
    count += fixed == want_fixed;
  });
  return count;
}

// Odometer over every inversion sequence; no pruning, so it does not share
// a code path with the avoider enumeration.
std::uint64_t enumerate_inv000(unsigned n)
{
  require_enumerable(n);
  std::vector<unsigned> e(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 2; i < n && ok; ++i)
      ok = !(e[i] == e[i - 1] && e[i - 1] == e[i - 2]);
    count += ok;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++e[i] <= i)
        break;
      e[i] = 0;
      if (i == 0)
        return count;
    }
    if (n == 0)
      return count;
  }
}

} // namespace

BigInt count_derangements(unsigned n, CountMethod method)
{
  switch (method) {
  case CountMethod::enumerate:
    return BigInt(enumerate_by_fixed_points(n, false));
  case CountMethod::recurrence: {
    BigInt prev2 = 1, prev1 = 0; // d_0, d_1
    if (n == 0)
      return prev2;
    for (unsigned k = 2; k <= n; ++k) {
      BigInt next = BigInt(k - 1) * (prev1 + prev2);
      prev2 = std::move(prev1);
      prev1 = std::move(next);
    }
    return prev1;
  }
  case CountMethod::alternate_recurrence: {
    BigInt d = 1;
    for (unsigned k = 1; k <= n; ++k)
      d = BigInt(k) * d + sign(k);
    return d;
  }
  case CountMethod::formula:
    break;
  }
  throw std::invalid_argument("unsupported method for derangements");
}

BigInt count_non_derangements(unsigned n, CountMethod method)
{
  switch (method) {
  case CountMethod::enumerate:
    return BigInt(enumerate_by_fixed_points(n, true));
  case CountMethod::recurrence: {
    BigInt prev2 = 0, prev1 = 1; // dbar_0, dbar_1
    if (n == 0)
      return prev2;
    for (unsigned k = 2; k <= n; ++k) {
      BigInt next = BigInt(k - 1) * (prev1 + prev2);
      prev2 = std::move(prev1);
      prev1 = std::move(next);
    }
    return prev1;
  }
  case CountMethod::alternate_recurrence: {
    BigInt d = 0;
    for (unsigned k = 1; k <= n; ++k)
      d = BigInt(k) * d - sign(k);
    return d;
  }
  case CountMethod::formula:
    break;
  }
  throw std::invalid_argument("unsupported method for non-derangements");
}

BigInt count_inv000(unsigned n, CountMethod method)
{
  if (n == 0)
    throw std::invalid_argument("inv000 counts start at n = 1");
  switch (method) {
  case CountMethod::enumerate:
    return BigInt(enumerate_inv000(n));
  case CountMethod::recurrence: {
    BigInt prev2 = 1, prev1 = 2; // n = 1, 2
    if (n == 1)
      return prev2;
    for (unsigned k = 3; k <= n; ++k) {
      BigInt next = BigInt(k - 1) * prev1 + BigInt(k - 2) * prev2;
      prev2 = std::move(prev1);
      prev1 = std::move(next);
    }
    return prev1;
  }
  case CountMethod::formula: {
    BigInt const numerator =
      factorial(n + 1) - count_derangements(n + 1, CountMethod::recurrence);
    if (numerator % n != 0)
      throw std::logic_error("(n+1)! - d_{n+1} not divisible by n at n = " + std::to_string(n));
    return numerator / n;
  }
  case CountMethod::alternate_recurrence:
    break;
  }
  throw std::invalid_argument("unsupported method for inv000");
}

SequenceTable build_sequence_table(Sequence seq, unsigned n_max)
{
  SequenceTable table;
  unsigned n_min = 0;
  std::function<BigInt(unsigned, CountMethod)> count;
  CountMethod second = CountMethod::alternate_recurrence;
  switch (seq) {
  case Sequence::derangements:
    table.name = "d";
    count = count_derangements;
    break;
  case Sequence::non_derangements:
    table.name = "dbar";
    count = count_non_derangements;
    break;
  case Sequence::inv000:
    table.name = "inv000";
    count = count_inv000;
    second = CountMethod::formula;
    n_min = 1;
    break;
  }
  for (unsigned n = n_min; n <= n_max; ++n) {
    BigInt const value = count(n, CountMethod::recurrence);
    BigInt const check = count(n, n <= kMaxEnumeration ? CountMethod::enumerate : second);
    if (value != check)
      throw std::logic_error(table.name + " disagrees at n = " + std::to_string(n) + ": " +
                             value.str() + " vs " + check.str());
    table.values[n] = value;
  }
  return table;
}

std::vector<std::string> const &bijection_names()
{
  static std::vector<std::string> const names{"phi",   "phi-cyclic", "codec",      "ext",
                                              "split", "varphi",     "varphi-alt", "theta"};
  return names;
}

std::vector<std::string> const &identity_names()
{
  static std::vector<std::string> const names{"eq1", "eq2",     "eq3",       "eq5",
                                              "eq6", "inv-rec", "union-card"};
  return names;
}

namespace {

class Failures
{
public:
  explicit Failures(std::size_t cap) : cap_(std::max<std::size_t>(cap, 1)) {}

  void add(std::string message)
  {
    ++count_;
    if (samples_.size() < cap_)
      samples_.push_back(std::move(message));
  }

  void merge(Failures &&other)
  {
    count_ += other.count_;
    for (auto &s : other.samples_)
      if (samples_.size() < cap_)
        samples_.push_back(std::move(s));
  }

  std::size_t count() const { return count_; }
  std::vector<std::string> &samples() { return samples_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
  std::size_t count_ = 0;
  std::vector<std::string> samples_;
};

/// Runs body(i, failures) for i in [0, total), split into contiguous shards.
template<class Body>
void sharded(std::size_t total, unsigned jobs, Failures &into, Body const &body)
{
  if (jobs <= 1 || total < 2 * jobs) {
    for (std::size_t i = 0; i < total; ++i)
      body(i, into);
    return;
  }
  std::vector<std::future<Failures>> shards;
  std::size_t const step = (total + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < total; begin += step) {
    std::size_t const end = std::min(total, begin + step);
    shards.push_back(std::async(std::launch::async, [&, begin, end] {
      Failures local(into.cap());
      for (std::size_t i = begin; i < end; ++i)
        body(i, local);
      return local;
    }));
  }
  for (auto &f : shards)
    into.merge(f.get());
}

template<class D, class C>
struct BijectionCase
{
  unsigned n;
  std::vector<D> domain;
  std::vector<C> codomain;
  std::function<C(D const &)> forward;
  std::function<D(C const &)> backward;
  std::function<std::string(D const &)> show_domain;
  std::function<std::string(C const &)> show_codomain;
};

template<class D, class C>
void check(BijectionCase<D, C> const &c, Failures &fails, VerificationReport &report,
           unsigned jobs)
{
  std::string const at = "n=" + std::to_string(c.n) + ": ";
  report.sizes.push_back({c.n, c.domain.size(), c.codomain.size()});

  std::unordered_set<C> const codomain(c.codomain.begin(), c.codomain.end());
  if (codomain.size() != c.codomain.size())
    fails.add(at + "codomain enumeration contains duplicates");

  std::vector<std::optional<C>> images(c.domain.size());
  sharded(c.domain.size(), jobs, fails, [&](std::size_t i, Failures &local) {
    D const &x = c.domain[i];
    try {
      C y = c.forward(x);
      if (!codomain.contains(y))
        local.add(at + c.show_domain(x) + " -> " + c.show_codomain(y) + " lies outside the codomain");
      D back = c.backward(y);
      if (!(back == x))
        local.add(at + c.show_domain(x) + " -> " + c.show_codomain(y) + " -> " +
                  c.show_domain(back) + " does not round-trip");
      images[i] = std::move(y);
    } catch (std::exception const &e) {
      local.add(at + "forward map failed on " + c.show_domain(x) + ": " + e.what());
    }
  });

  std::unordered_map<C, std::size_t> first;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i])
      continue;
    auto [it, inserted] = first.emplace(*images[i], i);
    if (!inserted)
      fails.add(at + c.show_domain(c.domain[it->second]) + " and " +
                c.show_domain(c.domain[i]) + " both map to " + c.show_codomain(*images[i]));
  }
  if (c.domain.size() != c.codomain.size())
    fails.add(at + "domain has " + std::to_string(c.domain.size()) + " elements, codomain " +
              std::to_string(c.codomain.size()));

  sharded(c.codomain.size(), jobs, fails, [&](std::size_t i, Failures &local) {
    C const &y = c.codomain[i];
    try {
      C again = c.forward(c.backward(y));
      if (!(again == y))
        local.add(at + c.show_codomain(y) + " does not round-trip through the inverse (got " +
                  c.show_codomain(again) + ")");
    } catch (std::exception const &e) {
      local.add(at + "inverse map failed on " + c.show_codomain(y) + ": " + e.what());
    }
  });
}

std::string show_pair(SplitPair const &s)
{
  return "(" + std::to_string(s.label) + ", " + to_cycle_string(s.perm) + ")";
}

struct ExtInput
{
  unsigned a;
  InversionSequence e;
  friend bool operator==(ExtInput const &, ExtInput const &) = default;
};

std::vector<SplitPair> nonderangement_pairs(unsigned n)
{
  std::vector<SplitPair> out;
  for (Element i = 1; i < n; ++i) {
    for (auto const &p : nonderangements(n - 1))
      out.push_back({n, i, p});
    for (auto const &p : nonderangements(n - 2))
      out.push_back({n, i, p});
  }
  return out;
}

std::vector<SplitPair> derangement_pairs(unsigned n)
{
  std::vector<SplitPair> out;
  for (Element i = 1; i < n; ++i) {
    for (auto const &p : derangements(n - 1))
      out.push_back({n, i, p});
    std::vector<Element> ground;
    for (Element x = 1; x < n; ++x)
      if (x != i)
        ground.push_back(x);
    for (auto const &p : derangements_of(ground))
      out.push_back({n, i, p});
  }
  return out;
}

void verify_at(std::string_view name, unsigned n, Failures &fails, VerificationReport &report,
               unsigned jobs)
{
  auto const show_perm = [](Permutation const &p) { return to_cycle_string(p); };
  auto const show_seq = [](InversionSequence const &e) { return to_string(e); };

  if (name == "phi" || name == "phi-cyclic") {
    BijectionCase<InversionSequence, Permutation> c{n, avoiders(n), nonderangements(n), {}, {},
                                                     show_seq, show_perm};
    auto lower = nonderangements(n - 1);
    c.codomain.insert(c.codomain.end(), lower.begin(), lower.end());
    if (name == "phi") {
      c.forward = [](InversionSequence const &e) { return avoider_to_nonderangement(e).perm(); };
    } else {
      c.forward = [](InversionSequence const &e) {
        Permutation p = avoider_to_nonderangement_cyclic(e).perm();
        if (p != avoider_to_nonderangement(e).perm())
          throw std::logic_error("cycle and transposition forms disagree");
        return p;
      };
    }
    c.backward = [n](Permutation const &p) {
      return nonderangement_to_avoider(TaggedNonDerangement(n, p));
    };
    check(c, fails, report, jobs);
  } else if (name == "codec") {
    BijectionCase<InversionSequence, RWord> c{n, avoiders(n), {}, encode_word, decode_word,
                                              show_seq,
                                              [](RWord const &w) { return to_string(w); }};
    for_each_rword(n, [&](RWord const &w) { c.codomain.push_back(w); });
    check(c, fails, report, jobs);
  } else if (name == "ext") {
    BijectionCase<ExtInput, Permutation> c{
      n, {}, nonderangements(n + 1),
      [](ExtInput const &x) { return pair_to_nonderangement(x.a, x.e); },
      [](Permutation const &p) {
        auto [a, e] = nonderangement_to_pair(p);
        return ExtInput{a, std::move(e)};
      },
      [](ExtInput const &x) { return "(" + std::to_string(x.a) + ", " + to_string(x.e) + ")"; },
      show_perm};
    for (unsigned a = 1; a <= n; ++a)
      for (auto const &e : avoiders(n))
        c.domain.push_back({a, e});
    check(c, fails, report, jobs);
  } else if (name == "split") {
    BijectionCase<Permutation, SplitPair> c{n,         derangements(n),        derangement_pairs(n),
                                            derangement_split, derangement_split_inverse,
                                            show_perm, show_pair};
    check(c, fails, report, jobs);
  } else if (name == "varphi") {
    BijectionCase<Permutation, SplitPair> c{n,         nonderangements(n),   nonderangement_pairs(n),
                                            split_nonderangement, join_nonderangement,
                                            show_perm, show_pair};
    check(c, fails, report, jobs);
  } else if (name == "varphi-alt") {
    BijectionCase<Permutation, SplitPair> c{n,         nonderangements(n),       nonderangement_pairs(n),
                                            split_nonderangement_alt, join_nonderangement_alt,
                                            show_perm, show_pair};
    check(c, fails, report, jobs);
  } else if (name == "theta") {
    BijectionCase<Permutation, MarkedPermutation> c{
      n,         theta_domain(n), theta_codomain(n), to_marked, from_marked,
      show_perm, [](MarkedPermutation const &m) { return to_string(m); }};
    check(c, fails, report, jobs);
  } else {
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
  }
}

unsigned lowest_n(std::string_view name)
{
  if (name == "codec")
    return 0;
  if (name == "split" || name == "varphi" || name == "varphi-alt")
    return 2;
  return 1;
}

} // namespace

VerificationReport verify_bijection(std::string_view name, unsigned n_max,
                                    VerificationOptions const &options)
{
  auto const &names = bijection_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
  require_enumerable(name == "ext" ? n_max + 1 : n_max);

  auto const start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.subject = std::string(name);
  report.n_min = lowest_n(name);
  report.n_max = n_max;

  Failures fails(options.max_counterexamples);
  for (unsigned n = report.n_min; n <= n_max; ++n)
    verify_at(name, n, fails, report, options.jobs);

  report.failures = fails.count();
  report.passed = fails.count() == 0;
  report.counterexamples = std::move(fails.samples());
  report.seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_identity(std::string_view name, unsigned n_max)
{
  auto const &names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");

  auto const start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.subject = std::string(name);
  report.n_max = n_max;

  unsigned const top = name == "eq1" ? n_max + 1 : n_max;
  require_enumerable(top);

  // Every term below comes from brute-force enumeration.
  std::vector<BigInt> d, dbar, inv(1, BigInt(0));
  for (unsigned n = 0; n <= top; ++n) {
    d.push_back(count_derangements(n, CountMethod::enumerate));
    dbar.push_back(count_non_derangements(n, CountMethod::enumerate));
  }
  for (unsigned n = 1; n <= n_max; ++n)
    inv.push_back(count_inv000(n, CountMethod::enumerate));

  struct Side
  {
    BigInt lhs, rhs;
  };
  std::function<Side(unsigned)> sides;
  if (name == "eq1") {
    report.n_min = 1;
    sides = [&](unsigned n) { return Side{BigInt(n) * inv[n], factorial(n + 1) - d[n + 1]}; };
  } else if (name == "eq2") {
    report.n_min = 2;
    sides = [&](unsigned n) { return Side{d[n], BigInt(n - 1) * (d[n - 1] + d[n - 2])}; };
  } else if (name == "eq3") {
    report.n_min = 2;
    sides = [&](unsigned n) { return Side{dbar[n], BigInt(n - 1) * (dbar[n - 1] + dbar[n - 2])}; };
  } else if (name == "eq5") {
    report.n_min = 1;
    sides = [&](unsigned n) { return Side{d[n], BigInt(n) * d[n - 1] + sign(n)}; };
  } else if (name == "eq6") {
    report.n_min = 1;
    sides = [&](unsigned n) { return Side{dbar[n], BigInt(n) * dbar[n - 1] - sign(n)}; };
  } else if (name == "inv-rec") {
    report.n_min = 3;
    sides = [&](unsigned n) {
      return Side{inv[n], BigInt(n - 1) * inv[n - 1] + BigInt(n - 2) * inv[n - 2]};
    };
  } else {
    report.n_min = 1;
    sides = [&](unsigned n) { return Side{inv[n], dbar[n] + dbar[n - 1]}; };
  }

  Failures fails(10);
  for (unsigned n = report.n_min; n <= n_max; ++n) {
    auto const [lhs, rhs] = sides(n);
    report.sizes.push_back({n, 1, 1});
    if (lhs != rhs)
      fails.add("n=" + std::to_string(n) + ": " + lhs.str() + " != " + rhs.str());
  }
  report.failures = fails.count();
  report.passed = fails.count() == 0;
  report.counterexamples = std::move(fails.samples());
  report.seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace derangebij
