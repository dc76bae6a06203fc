#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wpc/errors.hpp>
#include <wpc/search.hpp>

#include <algorithm>
#include <set>

using namespace wpc;

TEST_CASE("enumerate_fuchsian_signatures") {
  {
    SearchBounds b;
    b.max_genus = 0;
    b.max_weight_count = 3;
    b.max_weight = 7;
    const auto sigs = enumerate_fuchsian_signatures(b);
    const auto has = [&](const char* text) {
      return std::find(sigs.begin(), sigs.end(), Signature::parse(text)) != sigs.end();
    };
    CHECK(has("0;2,3,7"));
    CHECK(!has("0;2,3,6")); // chi = 0
    for (const auto& sig : sigs) CHECK(sig.is_fuchsian());
  }
  {
    SearchBounds b;
    b.max_genus = 2;
    b.max_weight_count = 0;
    const auto sigs = enumerate_fuchsian_signatures(b);
    REQUIRE(sigs.size() == 1);
    CHECK(sigs[0] == Signature::parse("2;"));
  }
  {
    SearchBounds b;
    b.max_genus = 0;
    b.max_weight_count = 4;
    b.max_weight = 3;
    const auto sigs = enumerate_fuchsian_signatures(b);
    const auto has = [&](const char* text) {
      return std::find(sigs.begin(), sigs.end(), Signature::parse(text)) != sigs.end();
    };
    CHECK(!has("0;2,2,2,2")); // chi = 0
    CHECK(has("0;2,2,2,3"));  // chi = -1/6
  }
  {
    // deterministic order, no duplicates
    SearchBounds b;
    b.max_genus = 1;
    b.max_weight_count = 3;
    b.max_weight = 5;
    const auto sigs = enumerate_fuchsian_signatures(b);
    CHECK(std::is_sorted(sigs.begin(), sigs.end()));
    CHECK(std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end());
    CHECK(sigs == enumerate_fuchsian_signatures(b));
  }
}

TEST_CASE("find_hypersurfaces on the classical signatures") {
  SearchBounds b; // defaults: degree <= 25
  CHECK(find_hypersurfaces(Signature::parse("0;2,3,7"), b) ==
        std::vector<GradedCI>{GradedCI::parse("6,14,21|42")});
  CHECK(find_hypersurfaces(Signature::parse("0;2,4,6"), b) ==
        std::vector<GradedCI>{GradedCI::parse("4,6,11|22")});
  CHECK(find_hypersurfaces(Signature::parse("3;"), b) ==
        std::vector<GradedCI>{GradedCI::parse("1,1,1|4")});
  CHECK_THROWS_AS(find_hypersurfaces(Signature::parse("1;"), b), NonFuchsianError);
}

TEST_CASE("all seven table rows are rediscovered") {
  const std::pair<const char*, const char*> rows[] = {
      {"0;2,3,7", "21,14,6|42"}, {"0;2,4,5", "15,10,4|30"},
      {"0;2,4,6", "11,6,4|22"},  {"0;2,5,6", "4,6,5|16"},
      {"2;", "3,1,1|6"},         {"3;", "1,1,1|4"},
      {"3;", "1,1,1|4"},
  };
  SearchBounds b;
  for (const auto& [sig_text, ci_text] : rows) {
    const auto found = find_hypersurfaces(Signature::parse(sig_text), b);
    const GradedCI expected = GradedCI::parse(ci_text);
    INFO("signature ", sig_text);
    CHECK(std::find(found.begin(), found.end(), expected) != found.end());
    for (const auto& ci : found) CHECK(gorenstein_parameter(ci) == -1);
  }
}

TEST_CASE("pruning does not change the result") {
  SearchBounds b;
  b.max_generator_degree = 12;
  for (const char* text : {"0;2,3,7", "3;", "0;2,2,2,3"}) {
    const Signature sig = Signature::parse(text);
    INFO("signature ", text);
    CHECK(find_hypersurfaces(sig, b, PruneMode::on) ==
          find_hypersurfaces(sig, b, PruneMode::off));
  }
}

TEST_CASE("exhaustive scan is iteration-order independent") {
  SearchBounds b;
  b.max_generator_degree = 10;
  for (const char* text : {"2;", "3;"}) {
    const Signature sig = Signature::parse(text);
    // reversed iteration order, straight is_fuchsian_match on every triple
    std::set<GradedCI> reversed;
    for (long d3 = b.max_generator_degree; d3 >= 1; --d3) {
      for (long d2 = d3; d2 >= 1; --d2) {
        for (long d1 = d2; d1 >= 1; --d1) {
          GradedCI ci({d1, d2, d3}, {d1 + d2 + d3 + 1});
          if (is_fuchsian_match(ci, sig)) reversed.insert(ci);
        }
      }
    }
    const auto found = find_hypersurfaces(sig, b);
    CHECK(std::set<GradedCI>(found.begin(), found.end()) == reversed);
  }
}

TEST_CASE("genus-zero classification") {
  const ClassificationReport report = classify_genus_zero(SearchBounds{});
  CHECK(report.total() == 22);
  CHECK(report.three_weight_count() == 14);

  const auto find_entry = [&](const char* text) {
    const Signature sig = Signature::parse(text);
    for (const auto& entry : report.entries) {
      if (entry.signature == sig) return entry.presentations;
    }
    return std::vector<GradedCI>{};
  };
  const auto e12 = find_entry("0;2,3,7");
  REQUIRE(e12.size() == 1);
  CHECK(e12[0] == GradedCI::parse("6,14,21|42"));

  for (const auto& entry : report.entries) {
    CHECK(entry.signature.genus() == 0);
    CHECK(entry.signature.is_fuchsian());
    for (const auto& ci : entry.presentations) {
      CHECK(gorenstein_parameter(ci) == -1);
    }
  }
}

TEST_CASE("search bounds validation") {
  SearchBounds b;
  b.max_generator_degree = 0;
  CHECK_THROWS_AS(b.validate(), DomainError);
  SearchBounds c;
  c.max_weight = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
}
