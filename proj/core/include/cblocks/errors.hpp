#pragma once

#include <stdexcept>
#include <string>

namespace cblocks {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyWeights : Error {
  EmptyWeights() : Error("weight vector is empty") {}
};

struct OddWeightSum : Error {
  explicit OddWeightSum(long long sum)
      : Error("weight sum " + std::to_string(sum) + " is odd") {}
};

struct WeightExceedsLevel : Error {
  WeightExceedsLevel(int weight, int level)
      : Error("weight " + std::to_string(weight) + " exceeds level " +
              std::to_string(level)) {}
};

struct ArityError : Error {
  ArityError(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " weights, got " +
              std::to_string(got)) {}
};

struct ArityMismatch : Error {
  ArityMismatch(std::size_t lhs, std::size_t rhs)
      : Error("bundles have different numbers of marked points: " +
              std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

struct DegenerateSum : Error {
  DegenerateSum() : Error("weight sum below 2; stabilizing Lie rank undefined") {}
};

struct OddSubset : Error {
  OddSubset() : Error("plussing subset has odd size") {}
};

struct TooFewPoints : Error {
  explicit TooFewPoints(int n)
      : Error("need at least 4 marked points, got " + std::to_string(n)) {}
};

struct PartitionMismatch : Error {
  PartitionMismatch(int curve_n, int bundle_n)
      : Error("F-curve on " + std::to_string(curve_n) +
              " points does not match bundle with " + std::to_string(bundle_n)) {}
};

struct InvalidBoundaryIndex : Error {
  using Error::Error;
};

struct InconsistentSystem : Error {
  InconsistentSystem() : Error("intersection system has no exact solution") {}
};

struct SingularBasis : Error {
  SingularBasis() : Error("supplied boundary subsets are not independent") {}
};

struct RankNotOne : Error {
  explicit RankNotOne(const std::string& rank)
      : Error("scaling identity requires a rank-one base bundle, got rank " + rank) {}
};

struct BasisUnavailable : Error {
  explicit BasisUnavailable(int n)
      : Error("no built-in boundary basis for n = " + std::to_string(n) +
              "; supply one explicitly") {}
};

}  // namespace cblocks
