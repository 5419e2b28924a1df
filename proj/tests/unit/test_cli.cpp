#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "iml/cli.hpp"
#include "iml/config.hpp"

using namespace iml;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "iml");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_complex") {
  CHECK(parse_complex("0.5") == cplx{0.5, 0.0});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK(parse_complex("1-2i") == cplx{1.0, -2.0});
  CHECK(parse_complex("2.5i") == cplx{0.0, 2.5});
  CHECK(parse_complex_list("0.5,1-2i,i").size() == 3u);
  CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
}

TEST_CASE("domain specs") {
  CHECK(make_model_domain(parse_domain_spec("unit-disc")).dimension() == 1u);
  CHECK(make_model_domain(parse_domain_spec("polydisc:1,2")).dimension() == 2u);
  CHECK(make_model_domain(parse_domain_spec("ball:3")).dimension() == 3u);
  CHECK(make_model_domain(parse_domain_spec("balanced:max-geo:2")).dimension() == 2u);
  CHECK(make_model_domain(parse_domain_spec("product:unit-disc*ball:2")).dimension() == 3u);
  CHECK_THROWS_AS(parse_domain_spec("torus"), DomainError);
  CHECK_THROWS_AS(parse_domain_spec("balanced:nope"), DomainError);
}

TEST_CASE("config files") {
  ExperimentConfig cfg;
  cfg.load_text(
      "# comment\n"
      "seed = 7\n"
      "domain = { kind = \"balanced\", h = \"max-geo\", c = 2.0 }\n"
      "schedule = { levels = 4, factor = 0.25 }\n"
      "[search]\n"
      "degree = 6   # inline\n");
  CHECK(cfg.get_u64("seed") == 7u);
  CHECK(cfg.get_int("search.degree") == 6);
  CHECK(cfg.schedule().levels == 4);
  CHECK(cfg.schedule().factor == doctest::Approx(0.25));
  CHECK(make_model_domain(cfg.domain()).dimension() == 2u);
  CHECK_THROWS_AS(cfg.set("no.such.key", "1"), ConfigError);
  CHECK_THROWS_AS(cfg.load_text("seed 7\n"), ConfigError);
  CHECK_THROWS_AS(cfg.load_text("domain = { kind = \"ball\"\n"), ConfigError);
  ExperimentConfig again;
  again.load_text(cfg.dump());
  CHECK(again.dump() == cfg.dump());
}

TEST_CASE("metric on the polydisc") {
  const Outcome o = call({"metric", "--domain", "polydisc:1,1", "--z", "0,0", "--X", "1,2", "--format", "json"});
  CHECK(o.code == 0);
  CHECK(o.out.find("\"value\": 2") != std::string::npos);
}

TEST_CASE("verify theorem1 on the unit disc succeeds") {
  const Outcome o = call({"--set", "verify.samples=4", "verify", "theorem1", "--domain", "unit-disc"});
  CHECK(o.code == 0);
  CHECK(o.out.find("theorem1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"--config", "/nonexistent/iml.conf", "metric"}).code == 2);
  CHECK(call({"--set", "bogus=1", "metric"}).code == 2);
  CHECK(call({"metric", "--m", "notanumber"}).code == 2);
  CHECK(call({"metric", "--domain", "torus"}).code == 3);
  CHECK(call({"metric", "--domain", "unit-disc", "--z", "2"}).code == 3);
}

TEST_CASE("print-defaults lists every group") {
  const Outcome o = call({"--print-defaults"});
  CHECK(o.code == 0);
  for (const char* key : {"search.degree", "schedule.rho0", "chain.max_m", "example3.J", "verify.prop2_m"})
    CHECK(o.out.find(key) != std::string::npos);
}
