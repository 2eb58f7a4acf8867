#include "doctest.h"

#include <algorithm>
#include <set>

#include "boolprod/partition.hpp"
#include "oracles.hpp"

using namespace boolprod;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
  CHECK(Partition::parse("-").empty());
  CHECK(Partition::parse("").empty());
  CHECK(Partition{3, 2, 0, 0} == Partition{3, 2});
  CHECK(Partition{2, 2, 1}.to_string() == "2,2,1");
  CHECK(Partition{}.to_string() == "-");
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({2, -1}), UsageError);
  CHECK_THROWS_AS(Partition::parse("2,x"), UsageError);
  const std::vector<int> comp{1, 0, 3, 2};
  CHECK(Partition::from_composition(comp) == Partition{3, 2, 1});
}

TEST_CASE("graded reverse lexicographic order") {
  GradedRevLex less;
  CHECK(less(Partition{1}, Partition{1, 1}));
  CHECK(less(Partition{3}, Partition{2, 1}));
  CHECK(less(Partition{2, 1}, Partition{1, 1, 1}));
  CHECK_FALSE(less(Partition{2, 1}, Partition{2, 1}));
}

TEST_CASE("partition enumeration counts") {
  // p(0..8) restricted to at most 8 parts is the plain partition count.
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d <= 8; ++d) {
    const auto all = partitions_up_to(d, d);
    CHECK(all.size() == p[d]);
    const std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const auto& l : all) CHECK(l.size() == d);
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
  }
  for (const auto& l : partitions_up_to(6, 2)) CHECK(l.length() <= 2);
  CHECK(subpartitions(Partition{2, 1}).size() == 5);
  // Subdiagrams of a staircase are counted by Catalan numbers.
  CHECK(subpartitions(staircase(3)).size() == 14);
  CHECK(subpartitions(staircase(4)).size() == 42);
}

TEST_CASE("conjugation is an involution and staircases are self-conjugate") {
  for (const auto& l : partitions_up_to(9, 9)) {
    CHECK(conjugate(conjugate(l)) == l);
    CHECK(conjugate(l).size() == l.size());
  }
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  for (int k = 0; k <= 6; ++k) CHECK(conjugate(staircase(k)) == staircase(k));
  CHECK(staircase(3) == Partition{3, 2, 1});
}

TEST_CASE("dominance and containment") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  CHECK_THROWS_AS(dominance_leq(Partition{1}, Partition{2}), UsageError);
  CHECK(contained_in(Partition{2, 1}, Partition{3, 2, 1}));
  CHECK_FALSE(contained_in(Partition{1, 1, 1, 1}, Partition{3, 2, 1}));
  // Dominance reverses under conjugation.
  for (const auto& a : partitions_up_to(6, 6)) {
    for (const auto& b : partitions_up_to(6, 6)) {
      CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
    }
  }
}

TEST_CASE("Kostka numbers agree with brute-force SSYT enumeration") {
  for (int d = 0; d <= 6; ++d) {
    for (const auto& lambda : partitions_up_to(d, d)) {
      for (const auto& mu : partitions_up_to(d, d)) {
        CHECK(kostka(lambda, mu) == oracle::ssyt_count(lambda, mu.parts()));
      }
    }
  }
  // Content order does not matter.
  const std::vector<int> shuffled{1, 0, 2, 1};
  CHECK(kostka(Partition{2, 1, 1}, shuffled) == oracle::ssyt_count(Partition{2, 1, 1}, {2, 1, 1}));
}

TEST_CASE("Kostka matrix is unitriangular in dominance order") {
  for (int d = 1; d <= 7; ++d) {
    for (const auto& lambda : partitions_up_to(d, d)) {
      for (const auto& mu : partitions_up_to(d, d)) {
        const Integer k = kostka(lambda, mu);
        if (lambda == mu) CHECK(k == 1);
        else if (!dominance_leq(mu, lambda)) CHECK(k == 0);
        else CHECK(k >= 1);
      }
    }
  }
}

TEST_CASE("standard tableaux") {
  for (int n = 1; n <= 7; ++n) {
    Integer sum_sq = 0;
    for (const auto& lambda : partitions_up_to(n, n)) {
      const auto tabs = syt_list(lambda);
      CHECK(Integer(static_cast<long>(tabs.size())) == num_syt(lambda));
      for (const auto& t : tabs) {
        CHECK(t.is_standard());
        CHECK(t.shape() == lambda);
      }
      sum_sq += num_syt(lambda) * num_syt(lambda);
    }
    CHECK(sum_sq == factorial(n));
  }
  CHECK(num_syt(Partition{3, 2}) == 5);
}

TEST_CASE("smallest ascent") {
  // Rows are listed bottom-up; an ascent i has i+1 in a weakly lower row.
  const Tableau row{{{1, 2, 3}}};
  CHECK(smallest_ascent(row) == 1);
  const Tableau column{{{1}, {2}, {3}}};
  CHECK(smallest_ascent(column) == 3);  // the last entry always counts
  const Tableau hook{{{1, 3}, {2}}};
  CHECK(smallest_ascent(hook) == 2);
  const Tableau bad{{{2, 1}}};
  CHECK_FALSE(bad.is_standard());
  CHECK_FALSE(bad.is_semistandard());
}
