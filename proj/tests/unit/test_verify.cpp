#include <gtest/gtest.h>

#include <cmath>

#include "subfox/error.hpp"
#include "subfox/verify.hpp"

using namespace subfox;

TEST(Verify, EverySuitePasses) {
  for (const std::string& name : verify_suites()) {
    auto reports = run_verify_suite(name);
    EXPECT_FALSE(reports.empty()) << name;
    for (const auto& r : reports) {
      EXPECT_TRUE(r.pass) << r.case_id << " lhs=" << r.lhs << " rhs=" << r.rhs << " rel=" << r.rel_err;
      EXPECT_EQ(r.case_id.rfind(name + ".", 0), 0u) << r.case_id;
    }
  }
}

TEST(Verify, PerturbationIsDetected) {
  VerifyOptions opt;
  opt.perturb = 1e-3;
  for (const std::string& name : verify_suites()) {
    auto reports = run_verify_suite(name, opt);
    int failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    EXPECT_GT(failed, 0) << name;
  }
}

TEST(Verify, StrictProfileHalvesTolerance) {
  VerifyOptions strict;
  strict.profile = TolProfile::strict;
  auto a = run_verify_suite("stable");
  auto b = run_verify_suite("stable", strict);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].case_id, b[i].case_id);
    EXPECT_DOUBLE_EQ(b[i].tolerance, 0.5 * a[i].tolerance);
  }
}

TEST(Verify, AllConcatenatesSuites) {
  size_t total = 0;
  for (const std::string& name : verify_suites()) total += run_verify_suite(name).size();
  EXPECT_EQ(run_verify_suite("all").size(), total);
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_THROW(run_verify_suite("nope"), DomainError);
}
