#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"

using namespace edense;

namespace {
  void require_clean(Report const& r, std::string const& where) {
    for (auto const& f : r.findings) {
      INFO(where << ": " << f.name << " [" << f.witness << "]");
      CHECK(f.pass);
    }
  }
}  // namespace

TEST_CASE("every suite passes on the fixtures", "[properties]") {
  for (auto const& name : fixture_names()) {
    for (auto const& suite : suite_names()) {
      auto const r = verify_suite(suite, fixture(name));
      require_clean(r, name + "/" + suite);
    }
  }
}

TEST_CASE("every suite passes on all semigroups of order <= 3",
          "[properties][enumeration]") {
  std::size_t k = 0;
  for (auto const& S : testing::corpus()) {
    auto const r = verify_suite("all", S);
    require_clean(r, "corpus #" + std::to_string(k++));
  }
}

TEST_CASE("suites report on the expected fixtures", "[properties]") {
  CHECK(verify_suite("acts", fixture("T2")).findings.empty());
  CHECK(verify_suite("construction", fixture("B2")).findings.empty());
  CHECK_FALSE(verify_suite("construction", fixture("Z3")).findings.empty());
  CHECK_FALSE(verify_suite("cosets", fixture("Z3E")).findings.empty());
  CHECK(testing::error_code_of([] { verify_suite("nope", fixture("Z2")); })
        == ErrorCode::PreconditionFailed);
}

TEST_CASE("suites catch a broken act", "[properties]") {
  // B2 acting on itself by left multiplication is not cancellative, so the
  // cancellative equivalences must still agree
  auto const r = verify_total_act(regular_act(fixture("B2")), "B2 on itself");
  CHECK(r.all_pass());
  CHECK(r.findings.size() == 2);
}
