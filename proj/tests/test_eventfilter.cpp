#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "evio/errors.hpp"
#include "evio/eventfilter/filters.hpp"

using namespace evio;

namespace {

std::vector<Event> make_stream(int n, double dt = 1e-3, int x = 5, int y = 7) {
  std::vector<Event> ev(n);
  for (int i = 0; i < n; ++i) {
    ev[i].t = (i + 1) * dt;
    ev[i].x = static_cast<std::int16_t>(x);
    ev[i].y = static_cast<std::int16_t>(y);
    ev[i].polarity = (i % 2 == 0) ? 1 : -1;
  }
  return ev;
}

}  // namespace

TEST_CASE("rf r=1 is the identity") {
  const auto in = make_stream(37);
  const auto out = rf_filter(in, 1, 99);
  REQUIRE(out.size() == in.size());
  for (size_t i = 0; i < in.size(); ++i) {
    CHECK(out[i].t == in[i].t);
    CHECK(out[i].x == in[i].x);
    CHECK(out[i].polarity == in[i].polarity);
  }
}

TEST_CASE("rf r=2 on 10 events keeps exactly 5") {
  const auto out = rf_filter(make_stream(10), 2, 1234);
  CHECK(out.size() == 5);
}

TEST_CASE("rf r=5 on 1000 events keeps 200 with constant index gap") {
  const auto in = make_stream(1000);
  const auto out = rf_filter(in, 5, 42);
  REQUIRE(out.size() == 200);
  // Map timestamps back to input indices and check the stride.
  for (size_t i = 1; i < out.size(); ++i) {
    const double gap = out[i].t - out[i - 1].t;
    CHECK(gap == doctest::Approx(5e-3).epsilon(1e-12));
  }
}

TEST_CASE("rf exact keep count ceil((n - phase)/r) over seeds and sizes") {
  for (std::uint64_t seed : {0ull, 1ull, 77ull, 909ull}) {
    for (int r : {2, 3, 7}) {
      for (int n : {1, 5, 100, 101}) {
        RandomStrideFilter probe(r, seed);
        const auto phase = static_cast<long long>(probe.phase());
        const auto out = rf_filter(make_stream(n), r, seed);
        const long long expect = phase >= n ? 0 : (n - phase + r - 1) / r;
        CHECK(static_cast<long long>(out.size()) == expect);
      }
    }
  }
}

TEST_CASE("rpf tau=0 is the identity") {
  const auto in = make_stream(25);
  const auto out = rpf_filter(in, 64, 64, 0.0);
  REQUIRE(out.size() == in.size());
  for (size_t i = 0; i < in.size(); ++i) CHECK(out[i].t == in[i].t);
}

TEST_CASE("rpf single pixel at 1 kHz with tau=10ms keeps 10 events 10ms apart") {
  const auto in = make_stream(100, 1e-3);  // t = 1ms..100ms
  const auto out = rpf_filter(in, 16, 16, 10e-3);
  REQUIRE(out.size() == 10);
  for (size_t i = 1; i < out.size(); ++i) {
    CHECK(out[i].t - out[i - 1].t == doctest::Approx(10e-3).epsilon(1e-12));
  }
}

TEST_CASE("rpf with tau beyond stream keeps first event per pixel") {
  std::vector<Event> in;
  for (int i = 0; i < 40; ++i) {
    Event e;
    e.t = i * 1e-3;
    e.x = static_cast<std::int16_t>(i % 2);
    e.y = 3;
    e.polarity = 1;
    in.push_back(e);
  }
  const auto out = rpf_filter(in, 8, 8, 1e9);
  REQUIRE(out.size() == 2);
  CHECK(out[0].x == 0);
  CHECK(out[1].x == 1);
}

TEST_CASE("rpf throws on time regression") {
  auto in = make_stream(5);
  in[3].t = in[2].t - 1e-4;
  CHECK_THROWS_AS(rpf_filter(in, 16, 16, 1e-3), StreamOrderError);
}

TEST_CASE("filters preserve order and emit only input events") {
  // Mixed-pixel stream, both filters.
  std::vector<Event> in;
  std::uint64_t s = 5;
  for (int i = 0; i < 500; ++i) {
    Event e;
    e.t = i * 2.5e-4;
    e.x = static_cast<std::int16_t>((i * 37) % 32);
    e.y = static_cast<std::int16_t>((i * 17) % 24);
    e.polarity = ((i * 11) % 2 == 0) ? 1 : -1;
    in.push_back(e);
  }
  for (auto out : {rf_filter(in, 3, s), rpf_filter(in, 32, 24, 1.5e-3)}) {
    double prev = -1.0;
    size_t cursor = 0;
    for (const auto& e : out) {
      CHECK(e.t >= prev);
      prev = e.t;
      // subset check: advance cursor in the input until we find this event
      bool found = false;
      while (cursor < in.size()) {
        const auto& c = in[cursor++];
        if (c.t == e.t && c.x == e.x && c.y == e.y && c.polarity == e.polarity) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("rpf per-pixel kept gaps are at least tau") {
  std::vector<Event> in;
  std::uint64_t state = 12345;
  double t = 0.0;
  for (int i = 0; i < 2000; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    t += ((state >> 33) % 1000) * 1e-6;
    Event e;
    e.t = t;
    e.x = static_cast<std::int16_t>((state >> 20) % 16);
    e.y = static_cast<std::int16_t>((state >> 10) % 16);
    e.polarity = 1;
    in.push_back(e);
  }
  const double tau = 2e-3;
  const auto out = rpf_filter(in, 16, 16, tau);
  std::map<std::pair<int, int>, double> last;
  for (const auto& e : out) {
    auto key = std::make_pair(static_cast<int>(e.x), static_cast<int>(e.y));
    auto it = last.find(key);
    if (it != last.end()) CHECK(e.t - it->second >= tau);
    last[key] = e.t;
  }
}

TEST_CASE("rf bernoulli mode keeps roughly n/r") {
  const auto in = make_stream(20000);
  const auto out = rf_filter(in, 4, 7, true);
  CHECK(out.size() > 4300);
  CHECK(out.size() < 5700);
}
