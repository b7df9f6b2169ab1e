#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hsearch/error.hpp"
#include "hsearch/modmath.hpp"
#include "hsearch/search.hpp"
#include "hsearch/sieve.hpp"
#include "oracles.hpp"

using namespace hsearch;
namespace fs = std::filesystem;

namespace {

std::vector<int> all_n() {
  std::vector<int> ns;
  for (int N = 2; N <= 46; ++N) ns.push_back(N);
  return ns;
}

std::vector<Hit> oracle_hits(u64 lo, u64 hi) {
  std::vector<Hit> out;
  for (u64 p : oracle::primes_between(lo, hi)) {
    for (int N = 2; N <= 46; ++N) {
      const u64 m = p / static_cast<u64>(N);
      if (oracle::harmonic_mod(m, p) == 0) out.push_back({p, N, m});
    }
  }
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("hsearch-test-" + std::to_string(std::random_device{}()) + "-" +
            std::to_string(++counter));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SearchConfig make_config(u64 lo, u64 hi) {
  SearchConfig c;
  c.n_set = all_n();
  c.lo = lo;
  c.hi = hi;
  return c;
}

}  // namespace

TEST_SUITE("sieve") {
  TEST_CASE("primes below small bounds") {
    CHECK(primes_in(0, 20) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_in(1'000'000, 1'000'100) == oracle::primes_between(1'000'000, 1'000'100));
    CHECK(primes_in(0, 1'000'000).size() == 78498);
    CHECK(primes_in(50, 50).empty());
  }

  TEST_CASE("chunks tile the range") {
    PrimeChunker chunker(47, 10'000, 777);
    std::vector<u64> joined;
    u64 expect_lo = 47;
    while (auto c = chunker.next()) {
      CHECK(c->lo == expect_lo);
      CHECK(c->hi <= 10'000);
      expect_lo = c->hi;
      joined.insert(joined.end(), c->primes.begin(), c->primes.end());
    }
    CHECK(expect_lo == 10'000);
    CHECK(joined == oracle::primes_between(47, 10'000));
    CHECK_THROWS_AS(PrimeChunker(0, kMaxPrime + 2, 100), Error);
  }
}

TEST_SUITE("search") {
  TEST_CASE("config validation and digest") {
    SearchConfig c = make_config(47, 1000);
    c.n_set = {24, 5, 24};
    CHECK(normalized(c).n_set == std::vector<int>{5, 24});
    CHECK_THROWS_AS(normalized(make_config(46, 100)), Error);
    SearchConfig bad = make_config(47, 100);
    bad.n_set = {47};
    CHECK_THROWS_AS(normalized(bad), Error);
    bad.n_set = {};
    CHECK_THROWS_AS(normalized(bad), Error);
    CHECK_THROWS_AS(normalized(make_config(100, 99)), Error);

    SearchConfig a = normalized(make_config(47, 1000));
    SearchConfig b = a;
    b.worker_count = 8;
    b.chunk_size = 5;
    CHECK(config_digest(a) == config_digest(b));
    b.hi = 1001;
    CHECK(config_digest(a) != config_digest(b));
  }

  TEST_CASE("search [47, 1000) equals the oracle enumeration") {
    const SearchResult r = run_search(make_config(47, 1000));
    const std::vector<Hit> expect = oracle_hits(47, 1000);
    CHECK(r.completed);
    CHECK(r.hits == expect);
    CHECK(r.hits.size() == 17);
    CHECK(std::find(r.hits.begin(), r.hits.end(), Hit{137, 24, 5}) != r.hits.end());
  }

  TEST_CASE("empty range") {
    TempDir dir;
    SearchConfig c = make_config(47, 47);
    c.checkpoint_path = dir.path / "cp.json";
    const SearchResult r = run_search(c);
    CHECK(r.completed);
    CHECK(r.hits.empty());
    CHECK(load_checkpoint(c.checkpoint_path).completed_through == 47);
  }

  TEST_CASE("interrupt and resume equals an uninterrupted run") {
    TempDir dir;
    SearchConfig straight = make_config(47, 20'000);
    straight.chunk_size = 1000;
    straight.output_path = dir.path / "straight.csv";
    const SearchResult full = run_search(straight);

    SearchConfig split = straight;
    split.output_path = dir.path / "split.csv";
    split.checkpoint_path = dir.path / "split.json";
    SearchOptions first;
    first.max_chunks = 7;
    const SearchResult part = run_search(split, first);
    CHECK_FALSE(part.completed);
    CHECK(load_checkpoint(split.checkpoint_path).completed_through == 47 + 7 * 1000);

    int polls = 0;
    SearchOptions second;
    second.should_stop = [&] { return ++polls > 3; };
    run_search(split, second);
    const SearchResult rest = resume(split);
    CHECK(rest.completed);
    CHECK(rest.hits == full.hits);
    CHECK(slurp(split.output_path) == slurp(straight.output_path));

    // a completed checkpoint resumes as a no-op
    const SearchResult again = resume(split);
    CHECK(again.primes_processed == 0);
    CHECK(again.hits == full.hits);
  }

  TEST_CASE("mismatched or corrupt checkpoints are refused") {
    TempDir dir;
    SearchConfig c = make_config(47, 3000);
    c.checkpoint_path = dir.path / "cp.json";
    SearchOptions one;
    one.max_chunks = 1;
    c.chunk_size = 500;
    run_search(c, one);

    SearchConfig other = c;
    other.n_set = {24};
    try {
      run_search(other);
      FAIL("expected config_mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::config_mismatch);
    }

    std::ofstream(c.checkpoint_path) << "{\"format_version\": 1, \"config";
    try {
      run_search(c);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
    }

    SearchConfig missing = c;
    missing.checkpoint_path = dir.path / "absent.json";
    CHECK_THROWS_AS(resume(missing), Error);
  }

  TEST_CASE("worker count does not change the hit log") {
    TempDir dir;
    SearchConfig one = make_config(47, 8000);
    one.chunk_size = 700;
    one.output_path = dir.path / "one.csv";
    SearchConfig eight = one;
    eight.worker_count = 8;
    eight.chunk_size = 1100;
    eight.output_path = dir.path / "eight.csv";
    run_search(one);
    run_search(eight);
    CHECK(slurp(one.output_path) == slurp(eight.output_path));
    CHECK(read_hits_csv(one.output_path) == oracle_hits(47, 8000));
  }

  TEST_CASE("subset n_set") {
    SearchConfig c = make_config(47, 5000);
    c.n_set = {24, 9};
    std::vector<Hit> expect;
    for (const Hit& h : oracle_hits(47, 5000)) {
      if (h.N == 9 || h.N == 24) expect.push_back(h);
    }
    CHECK(run_search(c).hits == expect);
  }

  TEST_CASE("checkpoint JSON round trip") {
    Checkpoint cp;
    cp.config_digest = "00ff";
    cp.completed_through = 123456;
    cp.wall_time_accumulated = 1.5;
    cp.hits = {{137, 24, 5}, {31251349243ull, 24, 1302139551ull}};
    const Checkpoint back = checkpoint_from_json(to_json(cp));
    CHECK(back.config_digest == cp.config_digest);
    CHECK(back.completed_through == cp.completed_through);
    CHECK(back.hits == cp.hits);
    CHECK_THROWS_AS(checkpoint_from_json("{\"format_version\": 2}"), Error);
  }

  TEST_CASE("hit CSV parsing") {
    std::istringstream good("p,N,m\n137,24,5\n\n61,6,10\n");
    CHECK(read_hits_csv(good) == std::vector<Hit>{{137, 24, 5}, {61, 6, 10}});
    std::istringstream empty("");
    CHECK(read_hits_csv(empty).empty());
    const auto parse_error_line = [](const std::string& text) -> std::string {
      std::istringstream in(text);
      try {
        read_hits_csv(in);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        return e.what();
      }
      return "";
    };
    CHECK(parse_error_line("p,N\n").find("line 1") != std::string::npos);
    CHECK(parse_error_line("p,N,m\n137,24,5\n137,24,6\n").find("line 3") != std::string::npos);
    CHECK(parse_error_line("p,N,m\n137,x,5\n").find("line 2") != std::string::npos);
    CHECK(parse_error_line("p,N,m\n137,47,2\n").find("line 2") != std::string::npos);
  }
}
