#include <gtest/gtest.h>

#include <cmath>

#include "subfox/algebra.hpp"
#include "subfox/error.hpp"
#include "subfox/inverse_stable.hpp"
#include "subfox/stable.hpp"
#include "subfox/tempered.hpp"
#include "support.hpp"

using namespace subfox;
using subfox::testing::integral;
using subfox::testing::levy;
using subfox::testing::rel_err;
using subfox::testing::uniform;

namespace {

std::function<double(double)> base(const FamilyRef& f) {
  if (f.kind == Kind::stable) return [f](double x) { return stable::density({f.beta, f.t}, x); };
  return [f](double x) { return inverse_stable::density({f.beta, f.t}, x); };
}

double ratio_law(double z) { return 1.0 / (M_PI * std::sqrt(z) * (1.0 + z)); }

}  // namespace

TEST(AlgebraScale, IdentityAndExamples) {
  for (Kind k : {Kind::stable, Kind::inverse}) {
    FamilyRef f{k, 0.6, 1.4};
    ComposedDensity d = scalar_multiple(f, 1.0);
    for (double x : {0.5, 1.0, 3.0}) EXPECT_LT(rel_err(d(x), base(f)(x)), 1e-10) << kind_name(k) << " " << x;
  }
  EXPECT_NEAR(scalar_multiple({Kind::stable, 0.5, 1.0}, 2.0)(2.0), 0.109848, 1e-6);
  EXPECT_LT(rel_err(scalar_multiple({Kind::stable, 0.5, 1.0}, 2.0)(2.0), 0.5 * levy(1.0, 1.0)), 1e-9);
  EXPECT_THROW(scalar_multiple({Kind::stable, 0.5, 1.0}, 0.0), DomainError);
}

TEST(AlgebraScale, ChangeOfVariables) {
  for (Kind k : {Kind::stable, Kind::inverse}) {
    FamilyRef f{k, 0.45, 0.8};
    double a = 2.7;
    ComposedDensity d = scalar_multiple(f, a);
    for (double x : {0.9, 2.0, 5.0}) {
      EXPECT_LT(rel_err(d(x), base(f)(x / a) / a), 1e-8) << kind_name(k) << " " << x;
    }
  }
}

TEST(AlgebraScale, SelfSimilarity) {
  double b = 0.7;
  double t = 2.5;
  ComposedDensity d = scalar_multiple({Kind::stable, b, t}, std::pow(t, -1.0 / b));
  for (double x : {0.8, 1.5, 4.0}) {
    EXPECT_LT(rel_err(d(x), stable::density({b, 1.0}, x)), 1e-8) << x;
  }
}

TEST(AlgebraProduct, MatchesConvolutionOracle) {
  FamilyRef f{Kind::stable, 0.5, 1.0};
  ComposedDensity d = product({f, f});
  double oracle = mellin_convolution_oracle(base(f), base(f), ConvolutionMode::product, 1.0);
  EXPECT_LT(rel_err(d(1.0), oracle), 1e-5);
}

TEST(AlgebraProduct, Structure) {
  ComposedDensity s = product({{Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0}, {Kind::stable, 0.3, 1.0}});
  EXPECT_EQ(s.params.m, 0);
  EXPECT_EQ(s.params.n, 3);
  EXPECT_EQ(s.params.p(), 3);
  EXPECT_EQ(s.params.q(), 3);
  ComposedDensity i = product({{Kind::inverse, 0.5, 1.0}, {Kind::inverse, 0.7, 1.0}});
  EXPECT_EQ(i.params.m, 2);
  EXPECT_EQ(i.params.n, 0);
  EXPECT_THROW(product({{Kind::stable, 0.5, 1.0}}), DomainError);
  EXPECT_THROW(product({{Kind::stable, 0.5, 1.0}, {Kind::inverse, 0.5, 1.0}}), MixedKindError);
}

TEST(AlgebraProduct, MellinFactorizes) {
  for (Kind k : {Kind::stable, Kind::inverse}) {
    std::vector<FamilyRef> fs{{k, 0.5, 1.3}, {k, 0.7, 1.3}};
    ComposedDensity d = product(fs);
    ComposedDensity a = family_density(fs[0]);
    ComposedDensity b = family_density(fs[1]);
    for (int i = 0; i < 10; ++i) {
      Complex s(uniform(0.2, 1.0), uniform(-3.0, 3.0));
      Complex lhs = d.mellin(s);
      Complex rhs = a.mellin(s) * b.mellin(s);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << kind_name(k) << " " << s;
    }
  }
}

TEST(AlgebraProduct, OracleGrid) {
  const std::pair<double, double> pairs[] = {{0.5, 0.5}, {0.5, 0.7}, {0.3, 0.6}};
  for (Kind k : {Kind::stable, Kind::inverse}) {
    for (auto [bi, bj] : pairs) {
      FamilyRef fi{k, bi, 1.0};
      FamilyRef fj{k, bj, 1.0};
      ComposedDensity p = product({fi, fj});
      ComposedDensity q = quotient(fi, fj);
      for (double z : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double po = mellin_convolution_oracle(base(fi), base(fj), ConvolutionMode::product, z);
        double qo = mellin_convolution_oracle(base(fi), base(fj), ConvolutionMode::quotient, z);
        EXPECT_LT(rel_err(p(z), po), 1e-5) << kind_name(k) << " product " << bi << " " << bj << " " << z;
        EXPECT_LT(rel_err(q(z), qo), 1e-5) << kind_name(k) << " quotient " << bi << " " << bj << " " << z;
      }
    }
  }
}

TEST(AlgebraPower, Examples) {
  for (Kind k : {Kind::stable, Kind::inverse}) {
    FamilyRef f{k, 0.6, 1.2};
    ComposedDensity d = rational_power(f, 1.0);
    for (double x : {0.7, 1.0, 3.0}) EXPECT_LT(rel_err(d(x), base(f)(x)), 1e-9) << kind_name(k) << " " << x;
  }
  EXPECT_NEAR(rational_power({Kind::stable, 0.5, 1.0}, 2.0)(1.0), 0.109848, 1e-6);
  EXPECT_THROW(rational_power({Kind::stable, 0.5, 1.0}, 0.0), DomainError);
}

TEST(AlgebraPower, ChangeOfVariables) {
  for (Kind k : {Kind::stable, Kind::inverse}) {
    FamilyRef f{k, 0.5, 1.0};
    for (double r : {2.0, 0.5, -1.0, -0.7}) {
      ComposedDensity d = rational_power(f, r);
      for (double w : {0.6, 1.0, 2.0}) {
        double cov = std::fabs(1.0 / r) * std::pow(w, 1.0 / r - 1.0) * base(f)(std::pow(w, 1.0 / r));
        EXPECT_LT(rel_err(d(w), cov), 1e-8) << kind_name(k) << " " << r << " " << w;
      }
    }
  }
}

TEST(AlgebraPower, NegativeBetaPowerGivesInverseLaw) {
  for (double b : {0.4, 0.7}) {
    ComposedDensity d = rational_power({Kind::stable, b, 1.0}, -b);
    for (double x : {0.3, 1.0, 2.0}) {
      EXPECT_LT(rel_err(d(x), inverse_stable::density({b, 1.0}, x)), 1e-6) << b << " " << x;
    }
  }
}

TEST(AlgebraPower, DiffersFromProduct) {
  FamilyRef f{Kind::stable, 0.5, 1.0};
  double pw = rational_power(f, 2.0)(1.0);
  double pr = product({f, f})(1.0);
  EXPECT_GT(rel_err(pw, pr), 1e-2);
}

TEST(AlgebraQuotient, IidLevyRatio) {
  for (double t : {1.0, 3.0}) {
    ComposedDensity q = quotient({Kind::stable, 0.5, t}, {Kind::stable, 0.5, t});
    EXPECT_NEAR(q(1.0), 1.0 / (2.0 * M_PI), 1e-9) << t;
    for (double z : {0.2, 4.0, 9.0}) EXPECT_LT(rel_err(q(z), ratio_law(z)), 1e-8) << t << " " << z;
    EXPECT_LT(rel_err(q(4.0) * 16.0, q(0.25)), 1e-9);
  }
  FamilyRef f{Kind::stable, 0.5, 1.0};
  double qo = mellin_convolution_oracle(base(f), base(f), ConvolutionMode::quotient, 1.0);
  EXPECT_LT(rel_err(qo, 1.0 / (2.0 * M_PI)), 1e-7);
  EXPECT_THROW(quotient({Kind::stable, 0.5, 1.0}, {Kind::inverse, 0.5, 1.0}), MixedKindError);
}

TEST(AlgebraQuotient, InverseSymmetry) {
  FamilyRef f{Kind::inverse, 0.6, 1.0};
  ComposedDensity q = quotient(f, f);
  EXPECT_LT(rel_err(q(4.0) * 16.0, q(0.25)), 1e-8);
}

TEST(Algebra, Normalization) {
  std::vector<ComposedDensity> ds{
      scalar_multiple({Kind::stable, 0.6, 1.0}, 3.0),
      scalar_multiple({Kind::inverse, 0.6, 2.0}, 0.5),
      product({{Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0}}),
      product({{Kind::inverse, 0.5, 1.0}, {Kind::inverse, 0.3, 1.0}}),
      rational_power({Kind::stable, 0.5, 1.0}, 2.0),
      rational_power({Kind::inverse, 0.4, 1.0}, -0.5),
      quotient({Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0}),
      quotient({Kind::inverse, 0.5, 1.0}, {Kind::inverse, 0.7, 1.0}),
  };
  for (size_t i = 0; i < ds.size(); ++i) {
    double m = integral([&](double x) { return ds[i](x); }, 1e-9);
    EXPECT_NEAR(m, 1.0, 1e-5) << i;
  }
}

TEST(AlgebraOracle, NarrowFactorRecoversFirst) {
  FamilyRef f{Kind::stable, 0.5, 1.0};
  // Mean t beta lambda^(beta-1) = 1, standard deviation about 0.07.
  auto narrow = [](double y) { return tempered::density({0.5, 100.0, 20.0}, y); };
  double v = mellin_convolution_oracle(base(f), narrow, ConvolutionMode::product, 1.0);
  EXPECT_LT(rel_err(v, base(f)(1.0)), 0.1);
}
