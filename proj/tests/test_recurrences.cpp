#include <doctest.h>

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "derangebij/enumerate.hpp"
#include "derangebij/inversion_sequence.hpp"
#include "derangebij/notation.hpp"
#include "derangebij/phi.hpp"
#include "derangebij/recurrences.hpp"
#include "golden.hpp"

using namespace derangebij;

namespace {

Permutation P(std::string const &text) { return parse_permutation(text); }
MarkedPermutation M(std::string const &text) { return parse_marked(text); }

std::set<SplitPair> split_codomain(unsigned n, bool derange)
{
  std::set<SplitPair> out;
  for (Element i = 1; i < n; ++i) {
    for (auto const &p : derange ? derangements(n - 1) : nonderangements(n - 1))
      out.insert({n, i, p});
    if (derange) {
      std::vector<Element> rest;
      for (Element x = 1; x < n; ++x)
        if (x != i)
          rest.push_back(x);
      for (auto const &p : derangements_of(rest))
        out.insert({n, i, p});
    } else {
      for (auto const &p : nonderangements(n - 2))
        out.insert({n, i, p});
    }
  }
  return out;
}

template<class Forward, class Backward>
void check_split(std::vector<Permutation> const &domain,
                 std::set<SplitPair> const &codomain, Forward forward, Backward backward)
{
  std::set<SplitPair> image;
  for (auto const &p : domain) {
    SplitPair const s = forward(p);
    REQUIRE(codomain.count(s) == 1);
    REQUIRE(image.insert(s).second);
    REQUIRE(backward(s) == p);
  }
  CHECK(image.size() == codomain.size());
  for (auto const &s : codomain)
    REQUIRE(forward(backward(s)) == s);
}

// Case 3 of the split: n fixed and removing n, n-1 leaves a derangement.
bool third_case(Permutation const &p)
{
  unsigned const n = p.size();
  return p(n) == n && is_derangement(remove_elements(p, {n, n - 1}));
}

} // namespace

TEST_CASE("derangement split")
{
  SplitPair const a = derangement_split(P("(1,2)(3,4)"));
  CHECK(a.label == 3);
  CHECK(a.perm == P("(1,2)"));
  CHECK(a.perm.ground() == std::vector<Element>{1, 2});
  SplitPair const b = derangement_split(P("(1,2,3)"));
  CHECK(b.label == 1);
  CHECK(b.perm == P("(1,2)"));
  SplitPair const c = derangement_split(P("(1,4)(2,3)"));
  CHECK(c.label == 1);
  CHECK(c.perm.ground() == std::vector<Element>{2, 3});
  CHECK(derangement_split_inverse(c) == P("(1,4)(2,3)"));
  CHECK_THROWS_AS(derangement_split(P("(1)(2,3)")), std::invalid_argument);

  for (unsigned n = 2; n <= 8; ++n) {
    CAPTURE(n);
    check_split(derangements(n), split_codomain(n, true), derangement_split,
                derangement_split_inverse);
  }
}

TEST_CASE("three-case split reproduces the n = 4 table")
{
  auto const rows = golden::read("table3.txt");
  CHECK(rows.size() == 15);
  std::set<Permutation> seen;
  for (auto const &row : rows) {
    CAPTURE(row[0]);
    Permutation const p = P(row[0]);
    SplitPair const expected{4, static_cast<Element>(std::stoul(row[1])), P(row[2])};
    CHECK(split_nonderangement(p) == expected);
    CHECK(join_nonderangement(expected) == p);
    seen.insert(p);
  }
  CHECK(seen.size() == nonderangements(4).size());
}

TEST_CASE("three-case split examples")
{
  CHECK(split_nonderangement(P("(1)(2)(3)(4)")) == SplitPair{4, 3, P("(1)(2)")});
  CHECK(split_nonderangement(P("(1,2)(3)(4)")) == SplitPair{4, 3, P("(3)(1,2)")});
  CHECK(split_nonderangement(P("(1,2,3)(4)")) == SplitPair{4, 2, P("(2)(1,3)")});
  CHECK(join_nonderangement({4, 3, P("(1)(2)")}) == P("(1)(2)(3)(4)"));
  CHECK(join_nonderangement({4, 2, P("(1)(2,3)")}) == P("(1)(2,3,4)"));
  CHECK_THROWS_AS(split_nonderangement(P("2143")), std::invalid_argument);
  CHECK_THROWS_AS(split_nonderangement(P("1")), std::invalid_argument);
  CHECK_THROWS_AS(join_nonderangement({4, 4, P("(1)(2)")}), std::invalid_argument);
  CHECK_THROWS_AS(join_nonderangement({4, 1, P("(1,2)")}), std::invalid_argument);
}

TEST_CASE("alternate split")
{
  CHECK(split_nonderangement_alt(P("(1,2)(3)(4)")) == SplitPair{4, 3, P("(3)(1,2)")});
  CHECK(split_nonderangement_alt(P("(1,2,3)(4)")) == SplitPair{4, 1, P("(1)(2,3)")});
  for (auto const &p : nonderangements(4))
    if (!third_case(p))
      CHECK(split_nonderangement_alt(p) == split_nonderangement(p));
}

TEST_CASE("both splits are bijections up to n = 8")
{
  for (unsigned n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto const domain = nonderangements(n);
    auto const codomain = split_codomain(n, false);
    check_split(domain, codomain, split_nonderangement, join_nonderangement);
    check_split(domain, codomain, split_nonderangement_alt, join_nonderangement_alt);
  }
}

TEST_CASE("each non-repeat step of the avoider map is one inverse split")
{
  for (unsigned n = 2; n <= 8; ++n) {
    for_each_avoider(n, [&](InversionSequence const &e) {
      auto const trace = trace_avoider_to_nonderangement(e);
      for (std::size_t i = 1; i < trace.size(); ++i) {
        auto const &step = trace[i];
        if (step.letter == RWord::kRepeat)
          continue;
        SplitPair const pair{step.k, *step.letter, trace[i - 1].sigma};
        REQUIRE(join_nonderangement(pair) == step.sigma);
        REQUIRE(split_nonderangement(step.sigma) == pair);
      }
    });
  }
}

TEST_CASE("parity exclusions")
{
  CHECK(excluded_nonderangement(1) == P("(1)"));
  CHECK(excluded_nonderangement(5) == P("(1,2)(3,4)(5)"));
  CHECK_FALSE(excluded_nonderangement(4).has_value());
  CHECK(excluded_marked(2) == M("(*1)(2)"));
  CHECK(excluded_marked(4) == M("(*1)(2,3)(4)"));
  CHECK_FALSE(excluded_marked(5).has_value());
  CHECK(theta_domain(1).empty());
  CHECK(theta_codomain(1).empty());
  CHECK(theta_codomain(2) == std::vector<MarkedPermutation>{M("(1)(*2)")});
  CHECK(theta_domain(2) == std::vector<Permutation>{P("12")});

  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    long const full = static_cast<long>(nonderangements(n).size());
    long const marked = static_cast<long>(marked_permutations(n).size());
    long const domain = static_cast<long>(theta_domain(n).size());
    long const codomain = static_cast<long>(theta_codomain(n).size());
    long const sign = n % 2 ? -1 : 1;
    CHECK(marked == static_cast<long>(n * nonderangements(n - 1).size()));
    CHECK(domain == codomain);
    CHECK(full - marked == -sign);
  }
}

TEST_CASE("marked map reproduces the n = 4 table")
{
  auto const rows = golden::read("table4.txt");
  CHECK(rows.size() == 15);
  for (auto const &row : rows) {
    CAPTURE(row[0]);
    CHECK(to_marked(P(row[0])) == M(row[1]));
    CHECK(from_marked(M(row[1])) == P(row[0]));
  }
}

TEST_CASE("marked map worked examples")
{
  auto const rows = golden::read("theta_examples.txt");
  CHECK(rows.size() == 3);
  for (auto const &row : rows) {
    CAPTURE(row[0]);
    CHECK(to_marked(P(row[0])) == M(row[1]));
    CHECK(from_marked(M(row[1])) == P(row[0]));
  }
  CHECK(leading_pair_count(P("(1,2,4)(3,5)(6)")) == 0);
  CHECK(leading_pair_count(P("(1,2)(3,5,6,4)(7)")) == 1);
  CHECK(to_marked(P("(1,2,3)(4)")) == M("(1,3)(*2)(4)"));
  CHECK(from_marked(M("(1)(2)(3)(*4)")) == P("(1)(2)(3)(4)"));

  CHECK_THROWS_AS(to_marked(P("(1,2)(3,4)(5)")), std::invalid_argument);
  CHECK_THROWS_AS(to_marked(P("2143")), std::invalid_argument);
  CHECK_THROWS_AS(from_marked(M("(*1)(2,3)(4)")), std::invalid_argument);
}

TEST_CASE("marked map is a bijection up to n = 8")
{
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto const codomain_list = theta_codomain(n);
    std::set<MarkedPermutation> const codomain(codomain_list.begin(), codomain_list.end());
    std::set<MarkedPermutation> image;
    for (auto const &p : theta_domain(n)) {
      MarkedPermutation const m = to_marked(p);
      REQUIRE(codomain.count(m) == 1);
      REQUIRE(image.insert(m).second);
      REQUIRE(from_marked(m) == p);
      if (fixed_points(p) == std::vector<Element>{n}) {
        unsigned const k = leading_pair_count(p);
        REQUIRE(2 * k < n - 1);
      }
    }
    CHECK(image.size() == codomain.size());
    for (auto const &m : codomain) {
      REQUIRE(to_marked(from_marked(m)) == m);
      auto const fixed = fixed_points(m.perm());
      if (m.mark() == 1 && fixed == std::vector<Element>{1, n}) {
        unsigned const k = leading_marked_chain_count(m);
        REQUIRE(k >= 1);
        REQUIRE(2 * k < n - 1);
      }
    }
  }
}
