#include <doctest.h>

#include "mia/format.hpp"
#include "support.hpp"

using namespace mia;

TEST_CASE("parses the documented example") {
  const char* text =
      "mia VendingSpec\n"
      "inputs  1euro 2euro coffee tea cups\n"
      "outputs change cup error\n"
      "states  q0 q1 q2 q3 q4 q5\n"
      "init    q0\n"
      "must q0 2euro q1\n"
      "may  q3 error q5\n";
  RawModel raw = parse_model(text);
  CHECK_EQ(raw.name, "VendingSpec");
  CHECK_EQ(raw.kind, RawModel::Kind::kMia);
  CHECK_EQ(raw.inputs.size(), 5);
  CHECK_EQ(raw.outputs.size(), 3);
  CHECK_EQ(raw.states.size(), 6);
  CHECK_EQ(raw.initial, "q0");
  REQUIRE_EQ(raw.transitions.size(), 2);
  CHECK_EQ(raw.transitions[0].modality, Modality::kMust);
  CHECK_EQ(raw.transitions[1].modality, Modality::kMay);
  CHECK_EQ(raw.transitions[1].line, 7);
}

TEST_CASE("comments and duplicate transition lines are tolerated") {
  const char* text =
      "# leading comment\n"
      "iolts tiny # trailing comment\n"
      "inputs a\n"
      "outputs x\n"
      "states q0\n"
      "init q0\n"
      "trans q0 a q0\n"
      "trans q0 a q0\n";
  Iolts m = Iolts::from_raw(parse_model(text));
  CHECK_EQ(m.transitions().size(), 1);
}

TEST_CASE("empty action lines declare empty alphabets") {
  const char* text =
      "mia outputsonly\n"
      "inputs\n"
      "outputs a\n"
      "states q0\n"
      "init q0\n";
  Mia m = Mia::from_raw(parse_model(text));
  CHECK(m.alphabet().inputs().empty());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_model("bogus header\n"),
                       doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(
      parse_model("mia m\ninputs a\noutputs x\nstates q0\ninit q0\nmust q0\n"),
      doctest::Contains("line 6"), Error);
  CHECK_THROWS_WITH_AS(
      parse_model("mia m\nwibble q0\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_model(""), doctest::Contains("missing model"),
                       Error);
  CHECK_THROWS_WITH_AS(
      parse_model("mia m\ninputs a\noutputs x\nstates q0\n"),
      doctest::Contains("missing init"), Error);
}

TEST_CASE("modality keywords are tied to the header kind") {
  CHECK_THROWS_WITH_AS(
      parse_model("iolts m\nstates q0\ninit q0\nmust q0 a q0\n"),
      doctest::Contains("mia keyword"), Error);
  CHECK_THROWS_WITH_AS(
      parse_model("mia m\nstates q0\ninit q0\ntrans q0 a q0\n"),
      doctest::Contains("iolts keyword"), Error);
}

TEST_CASE("serialization round-trips every fixture") {
  for (const char* name : {"fig3a.mia", "fig3b.mia", "fig3c.mia", "fig4_i.mia",
                           "fig4_s.mia", "fig5a.mia", "fig5b.mia",
                           "fig5c.mia"}) {
    Mia m = testsupport::fixture_mia(name);
    Mia again = Mia::from_raw(parse_model(serialize(m)));
    CHECK_MESSAGE(m == again, name);
  }
  for (const char* name : {"fig2a.iolts", "fig2b.iolts", "fig2c.iolts"}) {
    Iolts m = testsupport::fixture_iolts(name);
    Iolts again = Iolts::from_raw(parse_model(serialize(m)));
    CHECK_MESSAGE(m == again, name);
  }
}

TEST_CASE("load_mia embeds iolts files, load_iolts refuses mia files") {
  Mia embedded = load_mia(testsupport::fixture("fig2b.iolts"));
  CHECK(embedded.must_transitions() == embedded.may_transitions());
  CHECK_THROWS_AS(load_iolts(testsupport::fixture("fig3a.mia")), Error);
}
