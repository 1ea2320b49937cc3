#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kop/verify.hpp"

using namespace kop;

TEST_CASE("kernel homogeneity suite passes and asserts its negative control") {
  const SuiteResult r = suite_kernel_homogeneity(400, 7);
  CHECK(r.pass);
  CHECK(r.cases == 400);
  CHECK(r.max_deviation <= 1e-12);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0].find("negative control") != std::string::npos);
  CHECK(r.notes[0].find("violate") != std::string::npos);
}

TEST_CASE("antisymmetry suite is machine-exact") {
  const SuiteResult r = suite_antisymmetry(500, 11);
  CHECK(r.pass);
  CHECK(r.max_deviation == 0.0);
}

TEST_CASE("radial null suite") {
  PVQuadratureConfig cfg;
  cfg.n = 512;
  const SuiteResult r = suite_radial_null(4, 16, cfg);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-8);
}

TEST_CASE("spectral suite at small size") {
  const SuiteResult r = suite_spectral(8, 1024);
  CHECK(r.pass);
  CHECK(r.cases == 17);
}

TEST_CASE("decomposition suite") {
  const SuiteResult r = suite_decomposition(4, 12, 3);
  CHECK(r.pass);
}

TEST_CASE("representation agreement and image homogeneity suites" * doctest::timeout(300)) {
  PVQuadratureConfig cfg;
  const SuiteResult rep = suite_representations(cfg);
  CHECK(rep.pass);
  const SuiteResult img = suite_image_homogeneity(cfg);
  CHECK(img.pass);
}

TEST_CASE("suites are deterministic: identical reruns bit for bit") {
  const SuiteResult a = suite_kernel_homogeneity(100, 5);
  const SuiteResult b = suite_kernel_homogeneity(100, 5);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.max_deviation == b.max_deviation);

  const SuiteResult c = suite_antisymmetry(100, 5);
  const SuiteResult d = suite_antisymmetry(100, 5);
  CHECK(c.to_json().dump() == d.to_json().dump());
}

TEST_CASE("suite result serialization carries the verdict") {
  SuiteResult r;
  r.suite = "demo";
  r.cases = 3;
  r.max_deviation = 0.5;
  r.tolerance = 1.0;
  r.pass = true;
  const auto j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["verdict"] == "pass");
  CHECK(j["cases"] == 3);
}
