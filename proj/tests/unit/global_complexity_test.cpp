#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "subword/errors.hpp"
#include "subword/global_complexity.hpp"
#include "subword/json.hpp"

namespace subword {
namespace {

using R = std::vector<std::uint64_t>;

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket_k(2, 8).k, 2u);
  EXPECT_FALSE(bracket_k(2, 8).at_lower_endpoint);
  EXPECT_EQ(bracket_k(2, 20).k, 4u);
  EXPECT_TRUE(bracket_k(2, 20).at_lower_endpoint);
  EXPECT_EQ(bracket_k(3, 4).k, 1u);
  EXPECT_EQ(bracket_k(2, 10).r(), 0u);
  EXPECT_EQ(bracket_k(2, 8).r(), 2u);
}

TEST(Bracket, SmallNIsRejected) {
  try {
    bracket_k(2, 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("small-N"), std::string::npos);
  }
  EXPECT_THROW(bracket_k(1, 5), DomainError);
}

TEST(Bracket, IntervalsTileTheIntegers) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::uint64_t N = q + 1; N <= 10000; ++N) {
      int matches = 0;
      for (unsigned k = 1; k < 20; ++k) {
        const auto lo = try_pow(q, k);
        const auto hi = try_pow(q, k + 1);
        if (!lo || !hi) break;
        matches += (*lo + k <= N && N <= *hi + k);
      }
      ASSERT_EQ(matches, 1) << "q=" << q << " N=" << N;
      const Bracket b = bracket_k(q, N);
      ASSERT_LE(*try_pow(q, b.k) + b.k, N);
      ASSERT_LE(N, *try_pow(q, b.k + 1) + b.k);
    }
  }
}

TEST(Bracket, HugeNDoesNotOverflow) {
  const Bracket b = bracket_k(2, UINT64_MAX);
  EXPECT_GE(b.k, 60u);
  EXPECT_LE(b.k, 64u);
}

TEST(GlobalK, Examples) {
  EXPECT_EQ(global_K(2, 9), 7u);
  EXPECT_EQ(global_K(2, 20), 16u);
  EXPECT_EQ(global_K(5, 3), 3u);
  EXPECT_EQ(global_K(1, 100), 1u);
  EXPECT_THROW(global_K(2, 0), DomainError);
}

TEST(GlobalR, Examples) {
  EXPECT_EQ(global_R(2, 11), (R{3, 4}));
  EXPECT_EQ(global_R(2, 16), (R{4}));
  EXPECT_EQ(global_R(1, 5), (R{1, 2, 3, 4, 5}));
  EXPECT_EQ(global_R(4, 3), (R{1}));
}

TEST(GlobalK, NondecreasingWithUnitSteps) {
  for (unsigned q : {2u, 3u, 5u}) {
    for (std::uint64_t N = 1; N < 3000; ++N) {
      const auto step = global_K(q, N + 1) - global_K(q, N);
      ASSERT_TRUE(step == 0 || step == 1) << q << " " << N;
    }
  }
}

TEST(SmallNM, Examples) {
  EXPECT_EQ(small_N_M(2, 1), 2);
  EXPECT_EQ(small_N_M(2, 2), 2);
  EXPECT_EQ(small_N_M(4, 3), 24);
  EXPECT_EQ(small_N_M(36, 36).str(), "371993326789901217467999448150835200000000");
  EXPECT_THROW(small_N_M(2, 3), DomainError);
}

TEST(ClosedFormStats, CountOnlyInSmallRegime) {
  EXPECT_EQ(closed_form_stats(3, 2).M, BigCount(6));
  EXPECT_EQ(closed_form_stats(1, 7).M, BigCount(1));
  EXPECT_FALSE(closed_form_stats(2, 9).M.has_value());
  EXPECT_EQ(closed_form_stats(2, 9).K, 7u);
}

TEST(BruteForce, Examples) {
  const auto s3 = brute_force_stats(2, 3);
  EXPECT_EQ(s3.K, 2u);
  EXPECT_EQ(s3.R, (R{1, 2}));
  EXPECT_EQ(s3.M, BigCount(6));
  EXPECT_EQ(s3.method, Method::brute);

  const auto s12 = brute_force_stats(2, 12);
  EXPECT_EQ(s12.K, 9u);
  EXPECT_EQ(s12.R, (R{4}));
  EXPECT_EQ(s12.M, BigCount(718));

  const auto unary = brute_force_stats(1, 4);
  EXPECT_EQ(unary.K, 1u);
  EXPECT_EQ(unary.R, (R{1, 2, 3, 4}));
  EXPECT_EQ(unary.M, BigCount(1));
}

TEST(BruteForce, EmitsTheSixWordsInOrder) {
  std::vector<std::string> words;
  brute_force_stats(2, 3, [&](const Word& w) { words.push_back(w.to_string()); });
  EXPECT_EQ(words, (std::vector<std::string>{"001", "010", "011", "100", "101", "110"}));
}

TEST(BruteForce, BudgetIsEnforced) {
  try {
    brute_force_stats(2, 20, {}, {.budget = 1000, .threads = 1});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  EXPECT_THROW(brute_force_stats(36, 100), BudgetExceeded);
}

TEST(BruteForce, MatchesStringOracle) {
  // q=3 and q=4 values frozen from tests/oracle/oracle.py.
  const std::map<std::pair<unsigned, std::uint64_t>, std::tuple<std::uint64_t, R, std::uint64_t>>
      frozen = {
          {{3, 4}, {3, R{1, 2}, 60}},  {{3, 5}, {4, R{2}, 126}},   {{3, 9}, {8, R{2}, 432}},
          {{3, 11}, {9, R{2, 3}, 58056}}, {{4, 5}, {4, R{1, 2}, 720}}, {{4, 8}, {7, R{2}, 17520}},
      };
  for (const auto& [key, expected] : frozen) {
    const auto s = brute_force_stats(key.first, key.second);
    EXPECT_EQ(s.K, std::get<0>(expected));
    EXPECT_EQ(s.R, std::get<1>(expected));
    EXPECT_EQ(s.M, BigCount(std::get<2>(expected)));
  }
}

TEST(BruteForce, ThreadCountDoesNotChangeResultOrStream) {
  std::vector<std::string> one, many;
  const auto a = brute_force_stats(2, 11, [&](const Word& w) { one.push_back(w.to_string()); },
                                   {.threads = 1});
  const auto b = brute_force_stats(2, 11, [&](const Word& w) { many.push_back(w.to_string()); },
                                   {.threads = 7});
  EXPECT_EQ(a, b);
  EXPECT_EQ(one, many);
  EXPECT_EQ(one.size(), 558u);
}

TEST(BruteForce, EmittedWordsAttainK) {
  for (unsigned q : {2u, 3u}) {
    for (std::uint64_t N = 1; N <= (q == 2 ? 12u : 7u); ++N) {
      std::uint64_t count = 0;
      const auto s = brute_force_stats(q, N, [&](const Word& w) {
        ++count;
        ASSERT_EQ(max_complexity(w), global_K(q, N)) << w.to_string();
      });
      EXPECT_EQ(BigCount(count), *s.M);
    }
  }
}

TEST(BruteForce, AgreesWithClosedForms) {
  for (unsigned q : {2u, 3u}) {
    for (std::uint64_t N = 1; *try_pow(q, N) <= (1u << 20); ++N) {
      const auto s = brute_force_stats(q, N);
      ASSERT_EQ(s.K, global_K(q, N)) << q << " " << N;
      ASSERT_EQ(s.R, global_R(q, N)) << q << " " << N;
    }
  }
}

TEST(Json, StatsSchemaRoundTrip) {
  const GlobalStats s{2, 20, 16, {4, 5}, BigCount(79006), Method::graph};
  const std::string text = to_json(s);
  EXPECT_EQ(text, R"({"q":2,"N":20,"K":16,"R":[4,5],"M":"79006","method":"graph"})");
  EXPECT_EQ(stats_from_json(text), s);

  const GlobalStats open{2, 9, 7, {3}, std::nullopt, Method::closed};
  EXPECT_EQ(stats_from_json(to_json(open)), open);
  EXPECT_THROW(stats_from_json(R"({"q":2})"), DomainError);
  EXPECT_THROW(stats_from_json(R"({"q":2,"N":1,"K":1,"R":[1],"M":"2","method":"magic"})"),
               DomainError);
}

TEST(Method, NamesRoundTrip) {
  for (Method m : {Method::closed, Method::brute, Method::graph, Method::tree, Method::formula}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_method("all"));
}

}  // namespace
}  // namespace subword
