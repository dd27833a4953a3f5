#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "piforge/special_numbers.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace piforge;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("piforge_numbers_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("Euler numbers: listed values") {
  const EulerTable t = euler_numbers(7);
  const long expected[] = {1, -1, 5, -61, 1385, -50521, 2702765, -199360981};
  for (unsigned k = 0; k <= 7; ++k) CHECK(t.at(2 * k) == ExactInt(expected[k]));
  CHECK(euler_numbers(0).max_index() == 0);
  CHECK(euler_numbers(0).at(0) == ExactInt(1));
  CHECK_THROWS_AS(t.at(16), TableRangeError);
  CHECK_THROWS_AS(t.at(3), std::invalid_argument);
}

TEST_CASE("Euler numbers agree with the Seidel triangle") {
  const unsigned K = 60;
  const EulerTable t = euler_numbers(K);
  const auto ref = oracle::euler_seidel(K);
  for (unsigned k = 0; k <= K; ++k) {
    CHECK(t.at(2 * k).raw() == ref[k]);
    CHECK(t.at(2 * k).sign() == (k % 2 == 0 ? 1 : -1));
    CHECK(t.at(2 * k).is_odd());
  }
}

TEST_CASE("Bernoulli numbers: listed values") {
  const BernoulliTable t = bernoulli_numbers(7);
  CHECK(t.at(0) == ExactRational(1));
  CHECK(t.at(1) == ExactRational(-1, 2));
  CHECK(t.at(2) == ExactRational(1, 6));
  CHECK(t.at(4) == ExactRational(-1, 30));
  CHECK(t.at(6) == ExactRational(1, 42));
  CHECK(t.at(8) == ExactRational(-1, 30));
  CHECK(t.at(10) == ExactRational(5, 66));
  CHECK(t.at(12) == ExactRational(-691, 2730));
  CHECK(t.at(14) == ExactRational(7, 6));
  CHECK(t.at(13) == ExactRational(0));
  CHECK(bernoulli_numbers(0).at(0) == ExactRational(1));
}

TEST_CASE("Bernoulli numbers agree with Akiyama-Tanigawa") {
  const unsigned n = 120;
  const BernoulliTable t = bernoulli_numbers(n / 2);
  const auto ref = oracle::bernoulli_akiyama_tanigawa(n);
  for (unsigned i = 2; i <= n; i += 2) CHECK(t.at(i).raw() == ref[i]);
  // The oracle uses the B_1 = +1/2 convention.
  CHECK(t.at(1) == -ExactRational(ref[1]));
}

TEST_CASE("von Staudt-Clausen and sign law") {
  const BernoulliTable t = bernoulli_numbers(128);
  for (unsigned k = 1; k <= 128; ++k) {
    CHECK(staudt_clausen_residue(t, k).is_integer());
    CHECK(t.at(2 * k).sign() == (k % 2 == 1 ? 1 : -1));
    ExactInt prod(1);
    for (unsigned p : staudt_primes(2 * k)) prod *= ExactInt(static_cast<long>(p));
    CHECK(t.at(2 * k).den() == prod);
  }
  CHECK(staudt_primes(12) == std::vector<unsigned>{2, 3, 5, 7, 13});
}

TEST_CASE("tables extend and slice") {
  EulerTable e = euler_numbers(3);
  e.extend_to(9);
  CHECK(e == euler_numbers(9));
  CHECK(e.prefix(4) == euler_numbers(4));
  BernoulliTable b = bernoulli_numbers(2);
  b.extend_to(11);
  CHECK(b == bernoulli_numbers(11));
  CHECK_THROWS_AS(b.prefix(12), TableRangeError);
}

TEST_CASE("cache round trip") {
  const fs::path path = temp_dir() / "euler12.json";
  const EulerTable e = euler_numbers(12);
  save_cache(e, path);
  CHECK(load_euler_cache(path) == e);
  // Bit-exact: re-rendering the loaded table reproduces the file.
  CHECK(euler_cache_json(load_euler_cache(path)) == slurp(path));

  const fs::path bpath = temp_dir() / "bern.json";
  const BernoulliTable b = bernoulli_numbers(20);
  save_cache(b, bpath);
  CHECK(load_bernoulli_cache(bpath) == b);
  CHECK(bernoulli_cache_json(load_bernoulli_cache(bpath)) == slurp(bpath));
}

TEST_CASE("cache format layout") {
  const std::string text = bernoulli_cache_json(bernoulli_numbers(1));
  CHECK(text ==
        "{\n  \"format\": \"piforge-numbers/1\",\n  \"kind\": \"bernoulli\",\n  \"max_index\": 2,\n"
        "  \"values\": [\n    [0, \"1\", \"1\"],\n    [1, \"-1\", \"2\"],\n    [2, \"1\", \"6\"]\n  ]\n}\n");
}

TEST_CASE("larger cache serves a prefix") {
  const fs::path path = temp_dir() / "euler64.json";
  save_cache(euler_numbers(64), path);
  const EulerTable served = load_euler_cache(path, 32);
  CHECK(served.max_index() == 64);
  CHECK(served == euler_numbers(32));
  // Requests beyond the file are extended by the recurrence.
  CHECK(load_euler_cache(path, 70) == euler_numbers(70));
}

TEST_CASE("corrupt caches are rejected with a position") {
  const std::string good = euler_cache_json(euler_numbers(12));

  SUBCASE("truncated") {
    const std::string cut = good.substr(0, good.size() / 2);
    try {
      parse_euler_cache(cut);
      FAIL("expected CacheError");
    } catch (const CacheError& e) {
      REQUIRE(e.byte_offset().has_value());
      CHECK(*e.byte_offset() >= cut.size() - 1);
      CHECK(*e.byte_offset() <= cut.size() + 1);
    }
  }
  SUBCASE("version mismatch") {
    std::string bad = good;
    bad.replace(bad.find("piforge-numbers/1"), 17, "piforge-numbers/9");
    try {
      parse_euler_cache(bad);
      FAIL("expected CacheError");
    } catch (const CacheError& e) {
      CHECK(e.location() == "$.format");
    }
  }
  SUBCASE("wrong kind") {
    CHECK_THROWS_AS(parse_bernoulli_cache(good), CacheError);
  }
  SUBCASE("bad entry") {
    std::string bad = good;
    bad.replace(bad.find("\"-61\""), 5, "\"-6x\"");
    try {
      parse_euler_cache(bad);
      FAIL("expected CacheError");
    } catch (const CacheError& e) {
      CHECK(e.location() == "$.values[3]");
    }
  }
  SUBCASE("missing den") {
    std::string bad = good;
    bad.replace(bad.find("[2, \"-1\", \"1\"]"), 14, "[2, \"-1\"]");
    CHECK_THROWS_AS(parse_euler_cache(bad), CacheError);
  }
}
