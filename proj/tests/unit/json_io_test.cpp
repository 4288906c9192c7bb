#include <gtest/gtest.h>

#include "generators.hpp"
#include "hadex/error.hpp"
#include "hadex/json_io.hpp"

namespace hadex {
namespace {

using hadex::json::json;
namespace codec = hadex::json;

TEST(JsonIo, RationalEncoding) {
  EXPECT_EQ(codec::encode(Rational(5)).dump(), "5");
  EXPECT_EQ(codec::encode(Rational(-3, 6)).dump(), "\"-1/2\"");
  EXPECT_EQ(codec::encode(Rational::parse("100000000000000000000")).dump(),
            "\"100000000000000000000\"");
  EXPECT_EQ(codec::decode_rational(json(7)), Rational(7));
  EXPECT_EQ(codec::decode_rational(json("2/4")), Rational(1, 2));
  EXPECT_THROW(codec::decode_rational(json(0.5)), ParseError);
  EXPECT_THROW(codec::decode_rational(json(nullptr)), ParseError);
}

TEST(JsonIo, MatrixFormat) {
  const json j = json::parse(R"({"rows":2,"cols":2,"data":[[1,"1/2"],[0,-3]]})");
  const Matrix m = codec::decode_matrix(j);
  EXPECT_EQ(m(0, 1), Rational(1, 2));
  EXPECT_EQ(codec::encode(m).dump(), R"({"cols":2,"data":[[1,"1/2"],[0,-3]],"rows":2})");
  EXPECT_EQ(codec::decode_matrix(json::parse(R"({"rows":0,"cols":3,"data":[]})")).cols(), 3U);
}

TEST(JsonIo, MalformedMatrices) {
  EXPECT_THROW(codec::decode_matrix(json::parse(R"({"rows":2,"cols":2,"data":[[1,2]]})")), ParseError);
  EXPECT_THROW(codec::decode_matrix(json::parse(R"({"rows":1,"cols":2,"data":[[1]]})")), ParseError);
  EXPECT_THROW(codec::decode_matrix(json::parse(R"({"rows":1,"data":[[1]]})")), ParseError);
  EXPECT_THROW(codec::decode_matrix(json::parse(R"({"rows":-1,"cols":1,"data":[]})")), ParseError);
  EXPECT_THROW(codec::decode_matrix(json::parse("[1,2]")), ParseError);
}

TEST(JsonIo, SubsetsAreOneBased) {
  EXPECT_EQ(codec::encode(SubsetIndex::of(4, {0, 3})).dump(), "[1,4]");
  EXPECT_EQ(codec::decode_subset(json::parse("[4,1]"), 4), SubsetIndex::of(4, {0, 3}));
  EXPECT_THROW(codec::decode_subset(json::parse("[0]"), 4), ParseError);
  EXPECT_THROW(codec::decode_subset(json::parse("[5]"), 4), ParseError);
}

TEST(JsonIo, MomentVectorFormat) {
  const MomentVector mu(1, {1, Rational(7, 12)});
  EXPECT_EQ(codec::encode(mu).dump(), R"({"moments":{"0":1,"1":"7/12"},"n":1})");
  EXPECT_EQ(codec::decode_moments(codec::encode(mu)), mu);
  EXPECT_THROW(codec::decode_moments(json::parse(R"({"n":1,"moments":{"1":"1/2"}})")), ParseError);
  EXPECT_THROW(codec::decode_moments(json::parse(R"({"n":1,"moments":{"0":1}})")), ParseError);
  EXPECT_THROW(codec::decode_moments(json::parse(R"({"n":1,"moments":{"0":1,"1":0,"2":0}})")),
               ParseError);
  EXPECT_THROW(codec::decode_moments(json::parse(R"({"n":1,"moments":{"0":1,"01":0}})")),
               ParseError);
  EXPECT_THROW(codec::decode_moments(json::parse(R"({"n":1,"moments":{"0":"1/2","1":0}})")),
               DomainError);
}

TEST(JsonIo, MatrixRoundTripProperty) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(testing::uniform(rng, 0, 4), testing::uniform(rng, 0, 4));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = testing::random_rational(rng, 1000);
    }
    ASSERT_EQ(codec::decode_matrix(json::parse(codec::encode(m).dump())), m);
  }
}

}  // namespace
}  // namespace hadex
