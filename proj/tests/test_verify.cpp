#include <gtest/gtest.h>

#include <cmath>

#include "rudin/error.hpp"
#include "rudin/numerics/model_space.hpp"
#include "rudin/numerics/verify.hpp"

using namespace rudin;
using namespace rudin::numerics;

namespace {

const DiscPoint a{0.5, 0.0};
const DiscPoint c{0.0, 0.5};
const DiscPoint d{-0.4, -0.3};
const DiscPoint origin{0.0, 0.0};

}  // namespace

TEST(StarCyclic, Examples) {
  EXPECT_TRUE(verify_star_cyclic(BlaschkeProduct::factor(origin, 2)));
  EXPECT_TRUE(verify_star_cyclic(BlaschkeProduct::factor(a, 2)));
  EXPECT_TRUE(verify_star_cyclic({{a, 1}, {c, 1}}));
  EXPECT_TRUE(verify_star_cyclic({{a, 2}, {c, 3}, {d, 1}}));
  EXPECT_THROW(verify_star_cyclic(BlaschkeProduct::unit()), Error);
}

TEST(QuotientCyclic, Examples) {
  const BlaschkeProduct phi{{a, 2}, {d, 1}};
  EXPECT_TRUE(verify_quotient_cyclic(phi, BlaschkeProduct::unit()));
  const auto self = verify_quotient_cyclic(phi, phi);
  EXPECT_TRUE(self);
  EXPECT_LT(self.residual, 1e-8);
  EXPECT_TRUE(verify_quotient_cyclic(BlaschkeProduct::factor(a, 2), {{a, 1}, {c, 1}}));
  EXPECT_TRUE(verify_quotient_cyclic({{a, 1}, {c, 2}}, {{d, 2}}));
}

TEST(ProjectionIdentity, Examples) {
  const auto at_origin = verify_projection_identity(origin, 1);
  EXPECT_TRUE(at_origin);
  EXPECT_TRUE(verify_projection_identity(a, 3));
  EXPECT_TRUE(verify_projection_identity(DiscPoint(0.3, 0.4), 2));
  EXPECT_TRUE(verify_projection_identity(DiscPoint(-0.6, 0.6), 6));
  EXPECT_THROW(verify_projection_identity(a, 0), Error);
}

TEST(Annihilation, Examples) {
  const auto b = [](DiscPoint p, int m = 1) { return BlaschkeProduct::factor(p, m); };
  EXPECT_TRUE(verify_annihilation({b(a)}, {b(a)}));
  EXPECT_TRUE(verify_annihilation({b(a), b(c)}, {b(a, 2), b(d)}));
  EXPECT_TRUE(verify_annihilation({b(a), b(c), b(d, 2)}, {b(c), b(a), b(d, 3)}));
  try {
    verify_annihilation({b(a, 2), b(c)}, {b(a), b(d)});
    FAIL() << "expected HypothesisNotMet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisNotMet);
  }
}

// Negative control: when xi does not divide eta the multiplier survives on Q_xi.
TEST(Annihilation, MultiplierNonzeroWithoutDivisibility) {
  const ModelSpace q = general_basis(BlaschkeProduct::factor(a, 2));
  const Matrix m = adjoint_multiplier(q, BlaschkeProduct::factor(a, 1));
  EXPECT_GT(Eigen::JacobiSVD<Matrix>(m).singularValues()[0], 0.1);
}
