#include <set>

#include "cblocks/cblocks.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cblocks;

TEST_CASE("F-curve canonical form") {
  FCurve curve(6, {{{4, 5, 6}, {2}, {1}, {3}}});
  CHECK(curve.block(0) == std::vector<int>{1});
  CHECK(curve.block(1) == std::vector<int>{2});
  CHECK(curve.block(2) == std::vector<int>{3});
  CHECK(curve.block(3) == std::vector<int>{4, 5, 6});
  CHECK(curve.to_string() == "1|2|3|456");

  FCurve wide(11, {{{1}, {2}, {3}, {4, 5, 6, 7, 8, 9, 10, 11}}});
  CHECK(wide.to_string() == "1|2|3|4.5.6.7.8.9.10.11");

  CHECK_THROWS_AS(FCurve(3, {{{1}, {2}, {3}, {}}}), TooFewPoints);
  CHECK_THROWS_AS(FCurve(5, {{{1}, {2}, {3}, {4}}}), Error);        // misses 5
  CHECK_THROWS_AS(FCurve(5, {{{1}, {1, 2}, {3}, {4, 5}}}), Error);  // overlap
}

TEST_CASE("F-curve enumeration counts are Stirling numbers") {
  CHECK(enumerate_fcurves(4).size() == 1);
  CHECK(enumerate_fcurves(5).size() == 10);
  CHECK(enumerate_fcurves(6).size() == 65);
  for (int n = 4; n <= 9; ++n)
    CHECK(Integer(enumerate_fcurves(n).size()) == oracles::stirling2(n, 4));
  CHECK_THROWS_AS(enumerate_fcurves(3), TooFewPoints);
}

TEST_CASE("F-curve enumeration has no duplicates") {
  for (int n = 4; n <= 7; ++n) {
    const auto curves = enumerate_fcurves(n);
    std::set<std::string> seen;
    for (const FCurve& c : curves) seen.insert(c.to_string());
    CHECK(seen.size() == curves.size());
  }
}

TEST_CASE("boundary pairing") {
  const FCurve curve(6, {{{1}, {2}, {3}, {4, 5, 6}}});
  CHECK(boundary_pairing(curve, {1, 2}) == 1);      // union of two blocks
  CHECK(boundary_pairing(curve, {4, 5, 6}) == -1);  // one block, size >= 2
  CHECK(boundary_pairing(curve, {1, 4}) == 0);
  CHECK(boundary_pairing(curve, {3, 4, 5, 6}) == 1);   // block ∪ block
  CHECK(boundary_pairing(curve, {1, 2, 3}) == -1);     // complement is a block
  CHECK(boundary_pairing(curve, {2, 3}) == 1);
  CHECK_THROWS_AS(boundary_pairing(curve, {1}), InvalidBoundaryIndex);
  CHECK_THROWS_AS(boundary_pairing(curve, {1, 2, 3, 4, 5}), InvalidBoundaryIndex);
  CHECK_THROWS_AS(boundary_pairing(curve, {1, 7}), InvalidBoundaryIndex);
  CHECK_THROWS_AS(boundary_pairing(curve, {2, 2}), InvalidBoundaryIndex);
}

TEST_CASE("pairing respects the delta = delta-complement identity") {
  for (const FCurve& curve : enumerate_fcurves(6)) {
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      std::vector<int> subset, complement;
      for (int p = 1; p <= 6; ++p)
        ((bits >> (p - 1)) & 1 ? subset : complement).push_back(p);
      if (subset.size() < 2 || subset.size() > 4) continue;
      CHECK(boundary_pairing(curve, subset) == boundary_pairing(curve, complement));
    }
  }
}
