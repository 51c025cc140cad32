#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hfc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) return Rat(-num, -den);
  return Rat(num, den);
}

inline std::string rat_str(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Deterministic RNG used wherever random evaluation points are drawn.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Nonzero integer in [-bound, bound] \ {0}.
  std::int64_t nonzero(std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(1, bound);
    std::int64_t v = dist(engine_);
    return (engine_() & 1) ? v : -v;
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return dist(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hfc
