#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include <json.hpp>

#include "frobenius.hpp"
#include "nfrob.h"
#include "report.hpp"
#include "spec_io.hpp"
#include "test_util.hpp"

using namespace nfrob;
using namespace nfrob::testutil;
using nlohmann::json;

namespace {

const Ring kQ = Ring::rationals();

const char* kTpoly2Spec = R"({
  "scalars": "Q",
  "algebra": {
    "kind": "structure_constants",
    "dim": 2,
    "unit": ["1", "0"],
    "table": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
    "labels": ["1", "x"]
  }
})";

const char* kA2Spec = R"({
  "scalars": "Q",
  "algebra": {
    "kind": "quiver",
    "vertices": ["1", "2"],
    "arrows": [{"name": "a", "src": "1", "tgt": "2"}],
    "relations": []
  }
})";

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse_spec: structure constants") {
  Algebra a = parse_spec(kTpoly2Spec);
  CHECK(a.dim() == 2);
  CHECK(a.ring() == kQ);
  CHECK(a.basis_labels() == std::vector<std::string>{"1", "x"});
  Algebra t2 = truncated_poly(2, kQ);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(a.c(i, j, k) == t2.c(i, j, k));
}

TEST_CASE("parse_spec: quiver routes through path_algebra") {
  Algebra a = parse_spec(kA2Spec);
  CHECK(a.dim() == 3);
  json cyclic = {
      {"scalars", "Q"},
      {"algebra",
       {{"kind", "quiver"},
        {"vertices", {"1", "2", "3"}},
        {"arrows",
         json::array({{{"name", "a"}, {"src", "1"}, {"tgt", "2"}},
                      {{"name", "b"}, {"src", "2"}, {"tgt", "3"}},
                      {{"name", "g"}, {"src", "3"}, {"tgt", "1"}}})},
        {"relations", json::array({json::array({"g", "a"})})}}}};
  CHECK(parse_spec(cyclic.dump()).dim() == 9);
}

TEST_CASE("parse_spec: error classes") {
  CHECK(code_of([] { parse_spec("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_spec("{\"scalars\": \"Q\"}"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_spec(R"({"scalars": "R", "algebra": {}})"); }) ==
        ErrorCode::ParseError);

  SUBCASE("broken associativity reports indices") {
    json bad = json::parse(kTpoly2Spec);
    bad["algebra"]["table"][0][0][0] = "2";  // 1*1 = 2 breaks (1*1)*x = 1*(1*x)
    try {
      parse_spec(bad.dump());
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationError);
      CHECK(std::string(e.what()).find("assoc(") != std::string::npos);
    }
    // the validate command path parses the same file without throwing
    Algebra unchecked = parse_spec(bad.dump(), /*check_table=*/false);
    CHECK_FALSE(validate(unchecked).ok());
  }

  SUBCASE("composite modulus") {
    json bad = json::parse(kTpoly2Spec);
    bad["scalars"] = json{{"Fp", 6}};
    CHECK(code_of([&] { parse_spec(bad.dump()); }) == ErrorCode::NotPrime);
  }

  SUBCASE("fraction literal outside Q") {
    json bad = json::parse(kTpoly2Spec);
    bad["scalars"] = "Z";
    bad["algebra"]["table"][0][0][0] = "1/2";
    CHECK(code_of([&] { parse_spec(bad.dump()); }) == ErrorCode::ParseError);
  }

  SUBCASE("infinite path algebra") {
    json q = {{"scalars", "Q"},
              {"algebra",
               {{"kind", "quiver"},
                {"vertices", {"v"}},
                {"arrows", {{{"name", "x"}, {"src", "v"}, {"tgt", "v"}}}},
                {"relations", json::array()}}}};
    CHECK(code_of([&] { parse_spec(q.dump()); }) ==
          ErrorCode::InfiniteDimensional);
  }
}

TEST_CASE("scalar serialization round-trips losslessly") {
  std::mt19937_64 rng(97);
  Matrix m(kQ, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      long num = static_cast<long>(rng() % 2001) - 1000;
      long den = static_cast<long>(rng() % 997) + 1;
      m.at(i, j) = Scalar::parse(kQ, std::to_string(num) + "/" + std::to_string(den));
    }
  Tensor2 back = parse_tensor2(kQ, render_matrix(m));
  CHECK(back.coeffs == m);

  Vec v = parse_vec(kQ, render_vec(m.row(0)));
  CHECK(v == m.row(0));

  Vec eps = parse_coeff_list(kQ, " 1/2, -3 , 0 ", 3);
  CHECK(eps == Vec{Scalar::parse(kQ, "1/2"), Scalar::of(kQ, -3), Scalar::zero(kQ)});
  CHECK_THROWS_AS(parse_coeff_list(kQ, "1,2", 3), Error);
}

TEST_CASE("run_command reports") {
  CommandOptions opts;
  SUBCASE("frobdim carries both counts") {
    json rep = run_command("frobdim", kA2Spec, opts);
    CHECK(rep["data"]["frobdim"] == 1);
    CHECK(rep["data"]["dim"] == 3);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["ring"] == "Q");
    CHECK(rep["schema"] == "nfrob-report/1");
    CHECK(rep["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  }
  SUBCASE("frobenius-check deterministic on A2") {
    opts.deterministic = true;
    json rep = run_command("frobenius-check", kA2Spec, opts);
    CHECK(rep["all_pass"] == false);
    CHECK(rep["data"]["verdict"] == "CertifiedNotFrobenius");
    CHECK(rep["verdicts"][0]["certified"] == true);
  }
  SUBCASE("probabilistic verdict always carries the failure bound") {
    json rep = run_command("frobenius-check", kA2Spec, opts);
    CHECK(rep["verdicts"][0]["certified"] == false);
    CHECK(rep["verdicts"][0].contains("failure_bound"));
  }
  SUBCASE("check mode over Q") {
    opts.epsilon = "0,1";
    json rep = run_command("frobenius-check", kTpoly2Spec, opts);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["data"]["det_gram"] == "-1");
  }
  SUBCASE("frobenius-data serializes the structure") {
    opts.epsilon = "0,1";
    json rep = run_command("frobenius-data", kTpoly2Spec, opts);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["data"]["q0"] ==
          json::parse(R"([["0","1"],["1","0"]])"));
    CHECK(rep["data"]["symmetric"] == true);
  }
  SUBCASE("central-basis round-trip flag") {
    opts.check_central = true;
    json rep = run_command("central-basis", kA2Spec, opts);
    CHECK(rep["data"]["count"] == 1);
    CHECK(rep["all_pass"] == true);
  }
  SUBCASE("ybe mult and twist") {
    opts.which = "mult";
    json rep = run_command("ybe", kA2Spec, opts);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["data"]["items"].size() == 1);
    CHECK(rep["data"]["items"][0]["central"] == true);
    opts.which = "twist";
    CHECK(run_command("ybe", kA2Spec, opts)["all_pass"] == true);
  }
  SUBCASE("ar on a central generator of a non-Frobenius algebra") {
    opts.generator = 0;
    json rep = run_command("ar", kA2Spec, opts);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["data"]["source_central"] == true);
  }
  SUBCASE("theorem-a") {
    opts.epsilon = "0,1";
    json rep = run_command("theorem-a", kTpoly2Spec, opts);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["data"]["frobdim"] == 2);
  }
  SUBCASE("unknown command and flags") {
    CHECK_THROWS_AS(run_command("spectral", kA2Spec, opts), Error);
    CHECK_THROWS_AS(options_from_json("{\"turbo\": true}"), Error);
  }
  SUBCASE("Z requires an explicit epsilon") {
    json spec = json::parse(kTpoly2Spec);
    spec["scalars"] = "Z";
    CHECK(code_of([&] {
            CommandOptions o;
            run_command("frobenius-data", spec.dump(), o);
          }) == ErrorCode::InvalidArgument);
  }
  SUBCASE("reports are deterministic apart from timing") {
    CommandOptions o;
    json a = run_command("theorem-a", kTpoly2Spec, o);
    json b = run_command("theorem-a", kTpoly2Spec, o);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("C API surface") {
  SUBCASE("handle lifecycle and introspection") {
    nf_algebra* a = nullptr;
    REQUIRE(nf_algebra_from_json(kTpoly2Spec, &a) == NF_OK);
    REQUIRE(a != nullptr);
    CHECK(nf_algebra_dim(a) == 2);
    CHECK(std::string(nf_algebra_ring(a)) == "Q");
    int64_t fd = 0;
    CHECK(nf_frobdim(a, &fd) == NF_OK);
    CHECK(fd == 2);
    char* basis = nullptr;
    REQUIRE(nf_central_basis_json(a, &basis) == NF_OK);
    json parsed = json::parse(basis);
    CHECK(parsed.size() == 2);
    int central = 0;
    CHECK(nf_is_central_json(a, parsed[0].dump().c_str(), &central) == NF_OK);
    CHECK(central == 1);
    CHECK(nf_is_central_json(a, R"([["1","0"],["1","0"]])", &central) == NF_OK);
    CHECK(central == 0);
    CHECK(nf_is_central_json(a, R"([["1"]])", &central) ==
          NF_ERROR_DIMENSION_MISMATCH);
    nf_string_free(basis);
    nf_algebra_free(a);
  }
  SUBCASE("run_command") {
    char* report = nullptr;
    REQUIRE(nf_run_command("frobdim", kA2Spec, "", &report) == NF_OK);
    json rep = json::parse(report);
    CHECK(rep["data"]["frobdim"] == 1);
    nf_string_free(report);
    REQUIRE(nf_run_command("ybe", kA2Spec, R"({"which":"twist"})", &report) ==
            NF_OK);
    CHECK(json::parse(report)["all_pass"] == true);
    nf_string_free(report);
  }
  SUBCASE("error codes and messages") {
    nf_algebra* a = nullptr;
    CHECK(nf_algebra_from_json("{oops", &a) == NF_ERROR_PARSE);
    CHECK(a == nullptr);
    CHECK(std::string(nf_last_error()).size() > 0);
    json bad = json::parse(kTpoly2Spec);
    bad["scalars"] = json{{"Fp", 6}};
    CHECK(nf_algebra_from_json(bad.dump().c_str(), &a) == NF_ERROR_NOT_PRIME);
    CHECK(nf_algebra_from_file("/nonexistent/algebra.json", &a) ==
          NF_ERROR_PARSE);
    char* report = nullptr;
    CHECK(nf_run_command("spectral", kA2Spec, "", &report) ==
          NF_ERROR_INVALID_ARGUMENT);
    CHECK(report == nullptr);
    CHECK(nf_run_command(nullptr, kA2Spec, "", &report) ==
          NF_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(nf_status_name(NF_ERROR_NOT_PRIME)) ==
          "NF_ERROR_NOT_PRIME");
    CHECK(std::string(nf_version()).size() > 0);
  }
  SUBCASE("infinite-dimensional quiver surfaces the right status") {
    json q = {{"scalars", "Q"},
              {"algebra",
               {{"kind", "quiver"},
                {"vertices", {"v"}},
                {"arrows", {{{"name", "x"}, {"src", "v"}, {"tgt", "v"}}}},
                {"relations", json::array()}}}};
    nf_algebra* a = nullptr;
    CHECK(nf_algebra_from_json(q.dump().c_str(), &a) ==
          NF_ERROR_INFINITE_DIMENSIONAL);
  }
}

TEST_CASE("handles and pure functions are safe to share across threads") {
  nf_algebra* a = nullptr;
  REQUIRE(nf_algebra_from_json(kTpoly2Spec, &a) == NF_OK);
  Algebra m2 = matrix_algebra(2, kQ);
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&] {
      for (int t = 0; t < 20; ++t) {
        int64_t fd = 0;
        if (nf_frobdim(a, &fd) != NF_OK || fd != 2) ++failures;
        if (frobdim(m2) != 4) ++failures;
        FrobeniusSpace space = central_basis(m2);
        for (const Tensor2& g : space.generators)
          if (!is_central(m2, g)) ++failures;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(failures == 0);
  nf_algebra_free(a);
}
