#include <gtest/gtest.h>

#include <ostream>

#include "algebra_laws.hpp"
#include "hlgf/complex.hpp"
#include "hlgf/field.hpp"
#include "random_words.hpp"

namespace hlgf {
namespace {

struct Case {
  const char* complex;
  Backend backend;
};

std::ostream& operator<<(std::ostream& os, const Case& c) {
  return os << c.complex << "/" << backend_name(c.backend);
}

class AlgebraLaws : public ::testing::TestWithParam<Case> {};

TEST_P(AlgebraLaws, RelationsHoldUnderEvaluation) {
  const SkeletalComplex c = build_builtin(GetParam().complex);
  const HLGF f = random_field(c, GetParam().backend, 31);
  testing::WordPool pool(c, 32);
  testing::LawChecker laws(f, 1e-9);
  for (int i = 0; i < 150; ++i) laws.run(pool.next(), pool);
  const auto& report = laws.report();
  for (const char* law : {"double inverse", "boundary", "boundary of composite", "interchange",
                          "left unit", "right unit", "thin inverse", "degeneracy value"}) {
    EXPECT_GT(report.checked.count(law) ? report.checked.at(law) : 0, 0) << law;
  }
  for (const auto& failure : report.failures) ADD_FAILURE() << failure;
}

TEST_P(AlgebraLaws, EvaluationIsAHomomorphism) {
  const SkeletalComplex c = build_builtin(GetParam().complex);
  const HLGF f = random_field(c, GetParam().backend, 41);
  testing::WordPool pool(c, 42);
  for (int i = 0; i < 300; ++i) {
    const int d = pool.uniform(1, pool.max_dim());
    const int j = pool.uniform(0, d - 1);
    const auto [a, b] = pool.composable_pair(j, d);
    const Evaluation whole = evaluate(f, compose(a, b, j));
    const Evaluation parts = testing::compose_values(evaluate(f, a), evaluate(f, b), j, f.tolerance());
    EXPECT_TRUE(testing::eval_identical(whole, parts)) << compose(a, b, j).to_string();
  }
}

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string c = info.param.complex;
  return c + "_" + std::string(backend_name(info.param.backend));
}

INSTANTIATE_TEST_SUITE_P(Backends, AlgebraLaws,
                         ::testing::Values(Case{"s2_five_vertex", Backend::kU1},
                                           Case{"s2_five_vertex", Backend::kSO3},
                                           Case{"s2_tetra", Backend::kSU2},
                                           Case{"s3_pentachoron", Backend::kU1},
                                           Case{"s3_pentachoron", Backend::kSO3}),
                         case_name);

}  // namespace
}  // namespace hlgf
