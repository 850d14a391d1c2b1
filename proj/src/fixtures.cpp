#include "ydforge/fixtures.hpp"

#include <stdexcept>

namespace ydforge {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 7);
  for (;;) {
    const Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

RatMat random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    RatMat t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = random_rational(rng);
    if (try_inverse(t)) return t;
  }
}

namespace {

LeibnizAlgebra make_algebra(int n, Chirality ch,
                            std::initializer_list<std::tuple<int, int, int, long>> entries) {
  LeibnizAlgebra alg = LeibnizAlgebra::zero(n, ch);
  for (const auto& [k, i, j, v] : entries) alg.c_at(k - 1, i - 1, j - 1) = Rational(v);
  return alg;
}

AutSample finish_sample(const LeibnizAlgebra& alg, RatMat m) {
  auto inv = try_inverse(m);
  if (!inv || !is_automorphism(alg, m))
    throw std::logic_error("fixture sampler produced a non-automorphism");
  return AutSample{std::move(m), std::move(*inv)};
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;

    {
      Fixture fx;
      fx.name = "A0";
      fx.alg = make_algebra(1, Chirality::left, {});
      fx.doc = "one-dimensional abelian algebra; every invertible scalar is an automorphism";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        RatMat m(1, 1);
        m(0, 0) = random_rational(rng, true);
        return finish_sample(alg, std::move(m));
      };
      out.push_back(std::move(fx));
    }

    {
      Fixture fx;
      fx.name = "A1";
      fx.alg = make_algebra(2, Chirality::left, {{2, 1, 2, 1}, {2, 2, 1, -1}});
      fx.doc =
          "nonabelian two-dimensional Lie algebra [x1,x2] = x2; automorphisms fix x1 up to "
          "translation along x2 and rescale x2";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        RatMat m = RatMat::Constant(2, 2, Rational(0));
        m(0, 0) = Rational(1);
        m(1, 0) = random_rational(rng);
        m(1, 1) = random_rational(rng, true);
        return finish_sample(alg, std::move(m));
      };
      out.push_back(std::move(fx));
    }

    {
      Fixture fx;
      fx.name = "A2";
      fx.alg = make_algebra(2, Chirality::left, {{2, 1, 1, 1}});
      fx.doc = "non-Lie left Leibniz algebra [x1,x1] = x2; the squares span the quotient kernel";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        const Rational a = random_rational(rng, true);
        RatMat m = RatMat::Constant(2, 2, Rational(0));
        m(0, 0) = a;
        m(1, 0) = random_rational(rng);
        m(1, 1) = a * a;
        return finish_sample(alg, std::move(m));
      };
      out.push_back(std::move(fx));
    }

    {
      Fixture fx;
      fx.name = "A2r";
      fx.alg = make_algebra(2, Chirality::right, {{2, 1, 1, 1}});
      fx.doc = "right-chirality mirror of A2; same bracket table read as a right Leibniz algebra";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        const Rational a = random_rational(rng, true);
        RatMat m = RatMat::Constant(2, 2, Rational(0));
        m(0, 0) = a;
        m(1, 0) = random_rational(rng);
        m(1, 1) = a * a;
        return finish_sample(alg, std::move(m));
      };
      out.push_back(std::move(fx));
    }

    {
      Fixture fx;
      fx.name = "A3";
      fx.alg = make_algebra(3, Chirality::left, {{3, 1, 2, 1}, {3, 2, 1, -1}});
      fx.doc =
          "Heisenberg algebra [x1,x2] = x3; automorphisms act by GL2 on the span of x1, x2, "
          "translate into the center and scale x3 by the block determinant";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        for (;;) {
          const Rational a = random_rational(rng), b = random_rational(rng);
          const Rational c = random_rational(rng), d = random_rational(rng);
          const Rational det = a * d - b * c;
          if (det.is_zero()) continue;
          RatMat m = RatMat::Constant(3, 3, Rational(0));
          m(0, 0) = a;
          m(0, 1) = b;
          m(1, 0) = c;
          m(1, 1) = d;
          m(2, 0) = random_rational(rng);
          m(2, 1) = random_rational(rng);
          m(2, 2) = det;
          return finish_sample(alg, std::move(m));
        }
      };
      out.push_back(std::move(fx));
    }

    {
      Fixture fx;
      fx.name = "A4";
      fx.alg = make_algebra(2, Chirality::left, {{2, 1, 2, 1}, {2, 2, 1, -1}});
      fx.doc =
          "solvable two-dimensional Lie algebra with nonvanishing adjoint trace: "
          "sum_i C^i_{i1} = -1 feeds the trace terms of the algebroid maps";
      const LeibnizAlgebra alg = fx.alg;
      fx.sampler = [alg](std::mt19937_64& rng) {
        RatMat m = RatMat::Constant(2, 2, Rational(0));
        m(0, 0) = Rational(1);
        m(1, 0) = random_rational(rng);
        m(1, 1) = random_rational(rng, true);
        return finish_sample(alg, std::move(m));
      };
      out.push_back(std::move(fx));
    }

    return out;
  }();
  return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& fx : builtin_fixtures())
    if (fx.name == name) return &fx;
  return nullptr;
}

std::vector<AutSample> sample_automorphisms(const Fixture& fx, size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<AutSample> samples;
  samples.reserve(count);
  for (size_t i = 0; i < count; ++i) samples.push_back(fx.sampler(rng));
  return samples;
}

std::vector<AutSample> generic_automorphisms(const LeibnizAlgebra& alg, size_t count,
                                             uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = alg.n;
  std::vector<AutSample> samples;
  samples.push_back(AutSample{rat_identity(n), rat_identity(n)});

  // exactly truncated exponentials of nilpotent inner derivations
  std::vector<RatMat> nilpotent;
  for (int k = 0; k < n; ++k) {
    const RatMat d = ad_matrix(alg, k);
    RatMat power = rat_identity(n);
    bool nil = false;
    for (int p = 1; p <= n; ++p) {
      power = RatMat(power * d);
      if (is_zero(power)) { nil = true; break; }
    }
    if (nil && !is_zero(d)) nilpotent.push_back(d);
  }
  while (samples.size() < count && !nilpotent.empty()) {
    for (const RatMat& d : nilpotent) {
      if (samples.size() >= count) break;
      const Rational t = random_rational(rng);
      RatMat acc = rat_identity(n);
      RatMat term = rat_identity(n);
      Rational factorial(1);
      for (int p = 1; p <= n; ++p) {
        term = RatMat(term * d);
        if (is_zero(term)) break;
        factorial *= Rational(p);
        Rational tp(1);
        for (int q = 0; q < p; ++q) tp *= t;
        acc += term * (tp / factorial);
      }
      if (!is_automorphism(alg, acc)) continue;
      auto inv = try_inverse(acc);
      if (inv) samples.push_back(AutSample{acc, *inv});
    }
  }
  return samples;
}

}  // namespace ydforge
