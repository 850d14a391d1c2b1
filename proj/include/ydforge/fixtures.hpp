#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ydforge/smash.hpp"

namespace ydforge {

/// Built-in test algebra with a hand-parametrized automorphism family.
struct Fixture {
  std::string name;
  LeibnizAlgebra alg;
  std::string doc;
  std::function<AutSample(std::mt19937_64&)> sampler;
};

const std::vector<Fixture>& builtin_fixtures();
const Fixture* find_fixture(const std::string& name);

/// Random rational with small numerator and denominator at most 7.
Rational random_rational(std::mt19937_64& rng, bool nonzero = false);

/// Random invertible matrix with small rational entries (rejection).
RatMat random_invertible(std::mt19937_64& rng, int n);

/// count samples from the fixture's family, deterministic in the seed.
std::vector<AutSample> sample_automorphisms(const Fixture& fx, size_t count, uint64_t seed);

/// Generic fallback for algebras without a stored family: the identity
/// plus exactly-truncated exponentials of nilpotent inner derivations.
std::vector<AutSample> generic_automorphisms(const LeibnizAlgebra& alg, size_t count,
                                             uint64_t seed);

}  // namespace ydforge
