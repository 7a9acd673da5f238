#include <string>
#include <vector>

#include <doctest.h>

#include "su11net/config.hpp"

using namespace su11net;
using config::EncodingForm;
using config::ExperimentConfig;
using config::OutputFormat;

namespace {

ExperimentConfig must_parse(const std::string& text) {
  const auto res = config::parse_config(text);
  for (const auto& e : res.errors) MESSAGE(e);
  REQUIRE(res.ok());
  return *res.config;
}

bool any_error_contains(const std::vector<std::string>& errors,
                        const std::string& needle) {
  for (const auto& e : errors)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("a minimal config parses with defaults") {
  const auto c = must_parse("scheme = single-displacement\nr = 0.5\n");
  CHECK(c.scheme == circuit::Scheme::kSingleDisplacement);
  CHECK(c.modes == 1);
  REQUIRE(c.r.has_value());
  CHECK(*c.r == doctest::Approx(0.5));
  CHECK(!c.sweep.has_value());
  CHECK(!c.beta.has_value());
  CHECK(c.distributor == circuit::DistributorKind::kDft);
  CHECK(c.encoding.form == EncodingForm::kDefault);
  CHECK(c.backend.kind == circuit::Backend::Kind::kGaussian);
  CHECK(!c.eval_point.has_value());
  CHECK(!c.out_path.has_value());
  CHECK(c.format == OutputFormat::kCsv);
}

TEST_CASE("comments, blank lines and the M alias are accepted") {
  const auto c = must_parse(
      "# probe study\n"
      "scheme = network-displacement\n"
      "\n"
      "M = 4   # four nodes\n"
      "r = 1.0\n");
  CHECK(c.modes == 4);
}

TEST_CASE("a full config round-trips through its text form") {
  const std::string text =
      "scheme = network-phase-homodyne\n"
      "modes = 2\n"
      "r = 0.75\n"
      "beta = 0.1\n"
      "distributor = hadamard\n"
      "encoding = [0.001, -0.001]\n"
      "alpha_seed = 3.5\n"
      "backend = fock\n"
      "cutoff = 24\n"
      "eval_point = 0.0001\n"
      "[output]\n"
      "path = rows.json\n"
      "format = json\n";
  const auto c = must_parse(text);
  const std::string canon = config::to_text(c);
  const auto again = must_parse(canon);
  CHECK(config::to_text(again) == canon);
  CHECK(again.scheme == circuit::Scheme::kNetworkPhaseHomodyne);
  CHECK(again.modes == 2);
  CHECK(*again.r == doctest::Approx(0.75));
  CHECK(*again.beta == doctest::Approx(0.1));
  CHECK(again.distributor == circuit::DistributorKind::kHadamard);
  REQUIRE(again.encoding.form == EncodingForm::kExplicit);
  REQUIRE(again.encoding.values.size() == 2);
  CHECK(again.encoding.values[0] == doctest::Approx(1e-3));
  CHECK(again.encoding.values[1] == doctest::Approx(-1e-3));
  CHECK(*again.alpha_seed == doctest::Approx(3.5));
  CHECK(again.backend.kind == circuit::Backend::Kind::kFock);
  CHECK(again.backend.cutoff == 24);
  CHECK(*again.eval_point == doctest::Approx(1e-4));
  CHECK(*again.out_path == "rows.json");
  CHECK(again.format == OutputFormat::kJson);
}

TEST_CASE("a sweep config round-trips too") {
  const auto c = must_parse(
      "scheme = network-displacement\n"
      "modes = 4\n"
      "encoding = uniform 0.1\n"
      "[sweep]\n"
      "start = 0\n"
      "stop = 2\n"
      "steps = 9\n");
  REQUIRE(c.sweep.has_value());
  const auto vals = config::sweep_values(c);
  REQUIRE(vals.size() == 9);
  CHECK(vals.front() == doctest::Approx(0.0));
  CHECK(vals.back() == doctest::Approx(2.0));
  CHECK(vals[4] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] > vals[i - 1]);
  const auto again = must_parse(config::to_text(c));
  CHECK(config::to_text(again) == config::to_text(c));
}

TEST_CASE("a one-step sweep collapses to its start value") {
  const auto c = must_parse(
      "scheme = single-displacement\n"
      "[sweep]\n"
      "start = 0.7\n"
      "stop = 0.7\n"
      "steps = 1\n");
  const auto vals = config::sweep_values(c);
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == doctest::Approx(0.7));
}

TEST_CASE("all problems are reported at once, with line numbers") {
  const auto res = config::parse_config(
      "scheme = warp-drive\n"
      "modes = 0\n"
      "r = -1\n"
      "magic = 7\n");
  CHECK(!res.ok());
  CHECK(res.errors.size() >= 4);
  CHECK(any_error_contains(res.errors, "warp-drive"));
  CHECK(any_error_contains(res.errors, "line 1"));
  CHECK(any_error_contains(res.errors, "line 2"));
  CHECK(any_error_contains(res.errors, "line 3"));
  CHECK(any_error_contains(res.errors, "magic"));
}

TEST_CASE("structural problems are caught") {
  const auto dup = config::parse_config(
      "scheme = single-displacement\nr = 1\nr = 2\n");
  CHECK(!dup.ok());
  CHECK(any_error_contains(dup.errors, "line 3"));

  const auto bad_section = config::parse_config(
      "scheme = single-displacement\nr = 1\n[tuning]\nknob = 3\n");
  CHECK(!bad_section.ok());
  CHECK(any_error_contains(bad_section.errors, "tuning"));

  const auto bad_number = config::parse_config(
      "scheme = single-displacement\nr = fast\n");
  CHECK(!bad_number.ok());
  CHECK(any_error_contains(bad_number.errors, "line 2"));

  const auto no_scheme = config::parse_config("r = 1\n");
  CHECK(!no_scheme.ok());
  CHECK(any_error_contains(no_scheme.errors, "scheme"));

  const auto no_r = config::parse_config("scheme = single-displacement\n");
  CHECK(!no_r.ok());

  const auto both = config::parse_config(
      "scheme = single-displacement\nr = 1\n"
      "[sweep]\nstart = 0\nstop = 1\nsteps = 3\n");
  CHECK(!both.ok());
}

TEST_CASE("encoding forms parse and are validated") {
  const auto uni = must_parse(
      "scheme = network-phase\nmodes = 4\nr = 1\nencoding = uniform 1e-4\n");
  CHECK(uni.encoding.form == EncodingForm::kUniform);
  CHECK(uni.encoding.value == doctest::Approx(1e-4));
  CHECK(config::resolve_encoding(uni, 0.5) ==
        std::vector<double>{1e-4, 1e-4, 1e-4, 1e-4});

  const auto alt = must_parse(
      "scheme = network-displacement\nmodes = 4\nr = 1\n"
      "encoding = alternating 0.2\n");
  CHECK(alt.encoding.form == EncodingForm::kAlternating);
  CHECK(config::resolve_encoding(alt, 0.0) ==
        std::vector<double>{0.2, -0.2, 0.2, -0.2});

  const auto mismatch = config::parse_config(
      "scheme = network-displacement\nmodes = 4\nr = 1\n"
      "encoding = [0.1, 0.2, 0.3]\n");
  CHECK(!mismatch.ok());
  CHECK(any_error_contains(mismatch.errors, "3"));
  CHECK(any_error_contains(mismatch.errors, "4"));
}

TEST_CASE("the default encoding tracks the evaluation point") {
  const auto c = must_parse(
      "scheme = network-displacement\nmodes = 2\nr = 1\n");
  CHECK(config::resolve_encoding(c, 0.25) ==
        std::vector<double>{0.25, 0.25});
}

TEST_CASE("scheme constraints are enforced") {
  CHECK(!config::parse_config(
             "scheme = single-phase\nmodes = 2\nr = 1\n")
             .ok());
  CHECK(!config::parse_config(
             "scheme = network-phase\nmodes = 3\nr = 1\n"
             "distributor = hadamard\n")
             .ok());
  CHECK(!config::parse_config(
             "scheme = network-phase-homodyne\nmodes = 2\nr = 1\n")
             .ok());  // needs a positive coherent seed
  CHECK(!config::parse_config(
             "scheme = network-displacement\nmodes = 2\nr = 1\n"
             "alpha_seed = 2\n")
             .ok());
  CHECK(!config::parse_config(
             "scheme = single-displacement\nr = 1\nbackend = fock\n")
             .ok());  // fock needs a cutoff
  CHECK(!config::parse_config(
             "scheme = single-displacement\nr = 1\ncutoff = 20\n")
             .ok());  // cutoff needs the fock backend
  CHECK(!config::parse_config(
             "scheme = network-displacement\nmodes = 6\nr = 1\n"
             "backend = fock\ncutoff = 8\n")
             .ok());  // number basis tops out at four modes
  CHECK(!config::parse_config(
             "scheme = single-phase\nr = 1\neval_point = -0.1\n")
             .ok());
}

TEST_CASE("evaluation point resolution order") {
  const auto explicit_point = must_parse(
      "scheme = network-phase\nmodes = 2\nr = 1\neval_point = 0.05\n");
  CHECK(config::resolve_eval_point(explicit_point) == doctest::Approx(0.05));

  const auto from_encoding = must_parse(
      "scheme = network-displacement\nmodes = 2\nr = 1\n"
      "encoding = [0.1, 0.3]\n");
  CHECK(config::resolve_eval_point(from_encoding) == doctest::Approx(0.2));

  const auto fallback = must_parse(
      "scheme = network-phase\nmodes = 2\nr = 1\n");
  CHECK(config::resolve_eval_point(fallback) == doctest::Approx(1e-4));

  // A phase encoding whose mean is not positive cannot set the working
  // point on its own.
  CHECK(!config::parse_config(
             "scheme = network-phase\nmodes = 2\nr = 1\n"
             "encoding = alternating 1e-3\n")
             .ok());
  CHECK(config::parse_config(
            "scheme = network-phase\nmodes = 2\nr = 1\n"
            "encoding = alternating 1e-3\neval_point = 1e-4\n")
            .ok());
}

TEST_CASE("bare encoding text parses on its own") {
  std::string err;
  const auto arr = config::parse_encoding_text("[0.1, -0.2]", &err);
  REQUIRE(arr.has_value());
  CHECK(arr->form == EncodingForm::kExplicit);
  CHECK(arr->values == std::vector<double>{0.1, -0.2});

  const auto uni = config::parse_encoding_text("uniform 0.3", &err);
  REQUIRE(uni.has_value());
  CHECK(uni->form == EncodingForm::kUniform);
  CHECK(uni->value == doctest::Approx(0.3));

  const auto bad = config::parse_encoding_text("sideways 3", &err);
  CHECK(!bad.has_value());
  CHECK(!err.empty());
}
