#include <doctest.h>

#include <random>

#include "uslev/ext_scalar.hpp"

using uslev::ExtScalar;

TEST_CASE("ext_add") {
  CHECK(ext_add(ExtScalar::real(-1), 2).same_as(ExtScalar::real(1)));
  CHECK(ext_add(ExtScalar::neg_inf(), 5).is_neg_inf());
  CHECK(ext_add(ExtScalar::nu(), 5).is_nu());
}

TEST_CASE("ext_scale divides by a positive factor") {
  CHECK(ext_scale(ExtScalar::real(3), 3).same_as(ExtScalar::real(1)));
  CHECK(ext_scale(ExtScalar::real(-2), 2).same_as(ExtScalar::real(-1)));
  CHECK(ext_scale(ExtScalar::nu(), 2).is_nu());
  CHECK_THROWS_AS(ext_scale(ExtScalar::real(1), 0.0), uslev::InputError);
  CHECK_THROWS_AS(ext_scale(ExtScalar::real(1), -2.0), uslev::InputError);
}

TEST_CASE("nu is incomparable") {
  CHECK_FALSE(ext_le(ExtScalar::nu(), 0));
  CHECK_FALSE(ext_gt(ExtScalar::nu(), 0));
  CHECK_FALSE(ext_lt(ExtScalar::nu(), 0));
  CHECK_FALSE(ext_ge(ExtScalar::nu(), 0));
  CHECK(ext_le(ExtScalar::neg_inf(), -1e9));
  CHECK((ExtScalar::nu() <=> ExtScalar::nu()) == std::partial_ordering::unordered);
  CHECK(ExtScalar::neg_inf() < ExtScalar::real(-1e300));
}

TEST_CASE("real payload must be finite") {
  CHECK_THROWS_AS(ExtScalar::real(std::numeric_limits<double>::infinity()), uslev::InputError);
  CHECK_THROWS_AS(ExtScalar::real(std::nan("")), uslev::InputError);
  CHECK_THROWS(ExtScalar::nu().value());
}

TEST_CASE("le/gt dichotomy except for nu") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 1000; ++i) {
    const double t = u(rng);
    for (const ExtScalar& v : {ExtScalar::real(u(rng)), ExtScalar::neg_inf(), ExtScalar::nu()}) {
      const bool le = ext_le(v, t), gt = ext_gt(v, t);
      if (v.is_nu())
        CHECK((!le && !gt));
      else
        CHECK(le != gt);
    }
  }
}

TEST_CASE("classes and text") {
  CHECK(ExtScalar::real(2.5).class_name() == "real");
  CHECK(ExtScalar::neg_inf().class_name() == "-inf");
  CHECK(ExtScalar::nu().class_name() == "nu");
  CHECK(ExtScalar::nu().to_string() == "nu");
  CHECK(ExtScalar::real(-1).to_string() == "-1");
}
