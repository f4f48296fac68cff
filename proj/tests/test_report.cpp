#include "snakelat/report.hpp"

#include <doctest.h>

#include <atomic>
#include <set>
#include <sstream>

using namespace snakelat;

namespace {
SnakeWord W(const char* s) { return SnakeWord::parse(s); }
}  // namespace

TEST_CASE("status and suite names") {
  CHECK(to_string(CheckStatus::HeuristicPass) == "heuristic-pass");
  CHECK(to_string(CheckStatus::NoConverge) == "no-converge");
  CHECK(parse_suite("theorems") == Suite::Theorems);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_THROWS_AS((void)parse_suite("everything"), Error);
}

TEST_CASE("canonical words in report order") {
  const auto words = canonical_words_up_to(6);
  CHECK(words.size() == 64);
  CHECK(words.front().str() == "e");
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(is_canonical(words[i]));
    CHECK(words[i - 1] < words[i]);
  }
}

TEST_CASE("theorem checks pass on small words") {
  std::set<std::string> names;
  for (const auto& w : canonical_words_up_to(5))
    for (const auto& r : theorem_checks(w)) {
      INFO(r.word << " " << r.check << " " << r.detail);
      CHECK(r.status == CheckStatus::Pass);
      CHECK_FALSE(r.conjecture);
      names.insert(r.check);
    }
  for (const char* c : {"hstar_methods_agree", "volume", "roots_theorem", "gorenstein", "swap_monotonicity",
                        "chain_methods_agree", "ehrhart_oracle", "lattice_size", "ladder_ehrhart_closed"})
    CHECK(names.count(c) == 1);
}

TEST_CASE("conjecture checks") {
  const auto recs = conjecture_checks(W("RLR"));
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) CHECK(r.conjecture);
  CHECK(recs[0].status == CheckStatus::Pass);
  CHECK(recs[2].check == "ehrhart_root_disk");
  CHECK(recs[2].status == CheckStatus::HeuristicPass);
  CHECK(recs[2].detail.rfind("HEURISTIC", 0) == 0);
  const auto counter = conjecture_checks(W("RLRLRLRLR"));
  CHECK(counter[2].status == CheckStatus::Fail);
}

TEST_CASE("parallel verification matches serial") {
  const Report serial = run_verification({4, Suite::All, 1});
  const Report par = run_verification({4, Suite::All, 4});
  CHECK(to_json(serial).dump() == to_json(par).dump());
  CHECK(to_csv(serial) == to_csv(par));
  CHECK(serial.theorem_failures() == 0);
  CHECK(serial.conjecture_failures() == 0);
  CHECK(serial.word_count == 16);
}

TEST_CASE("JSON layout") {
  const Report r = run_verification({2, Suite::All, 1});
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "command", "max_length", "suite", "words", "theorem_failures",
                                         "conjecture_failures", "theorems", "conjectures"});
  CHECK(j["words"] == 4);
  CHECK(j["theorems"][0]["word"] == "e");
  CHECK(j["conjectures"][0].contains("conjecture"));
  CHECK(j["theorems"].size() + j["conjectures"].size() == r.records.size());
}

TEST_CASE("CSV quoting") {
  Report r;
  r.records.push_back({"eR", "x", CheckStatus::Pass, "a,b \"c\"", false});
  CHECK(to_csv(r) == "word,check,status,detail\neR,x,pass,\"a,b \"\"c\"\"\"\n");
}

TEST_CASE("parallel_for") {
  std::vector<int> hit(100, 0);
  parallel_for(100, 3, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  std::atomic<int> n{0};
  CHECK_THROWS_AS(parallel_for(10, 2, [&](std::size_t i) {
                    ++n;
                    if (i == 5) throw Error("boom");
                  }),
                  Error);
  CHECK(n == 10);
}
