#include <doctest.h>

#include "likit/suites.hpp"

using namespace likit;

TEST_CASE("weight multiset JSON round trip") {
  RootSystem f4 = build_root_system("F4");
  WeightMultiset ws = freudenthal_weights(f4, f4.fundamental_weights[0]);
  Json j = to_json(ws);
  CHECK(j["ambient_dim"] == 4);
  WeightMultiset back = weight_multiset_from_json(j);
  CHECK(back == ws);
  // Rationals as "p/q" strings.
  bool found_half = false;
  for (const auto& entry : j["weights"])
    for (const auto& c : entry["coords"])
      if (c.get<std::string>() == "1/2") found_half = true;
  CHECK(found_half);
}

TEST_CASE("toral embedding JSON round trip") {
  ToralEmbedding emb = preset_embedding("f4-sl3-rho2");
  Json j = to_json(emb);
  CHECK(j["source"] == "A2");
  CHECK(j["target"] == "F4");
  ToralEmbedding back = embedding_from_json(j);
  CHECK(back.coroot_images == emb.coroot_images);
  CHECK(back.source_name() == "A2");

  // Torus sources survive the trip too.
  ToralEmbedding torus = make_torus_embedding(1, build_root_system("B2"), {vec({1, 0})});
  ToralEmbedding torus_back = embedding_from_json(to_json(torus));
  CHECK(torus_back.source_name() == "T1");
  CHECK(torus_back.coroot_images == torus.coroot_images);
}

TEST_CASE("trace polynomial JSON round trip") {
  TracePolynomial p =
      rat(1, 2) * tp_word({1, 2, 1, 2}) - Rat(3) * tp_word({1}) * tp_word({2, 2});
  TracePolynomial back = trace_polynomial_from_json(to_json(p));
  CHECK(back == p);
}

TEST_CASE("stabilizer report serialization") {
  WeightMultiset ws(2);
  ws.add(vec({1, 0}));
  ws.add(vec({-1, 0}));
  ws.add(vec({0, 1}));
  ws.add(vec({0, -1}));
  StabilizerResult st = weight_multiset_stabilizer(ws);
  Json j = to_json(st);
  CHECK(j["order"] == "8");
  CHECK(j["search_stats"]["nodes"].get<long>() > 0);
  CHECK(j["generators"].size() == st.group.generators.size());
}

TEST_CASE("suite reports are byte-stable for a fixed seed") {
  SuiteOptions opt;
  opt.seed = 31337;
  for (const char* suite : {"disentangle", "so9-table"}) {
    std::string a = report_to_json(run_suite(suite, opt)).dump(2);
    std::string b = report_to_json(run_suite(suite, opt)).dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("suite report shape and text rendering") {
  SuiteReport r = run_suite("so9-table");
  CHECK(r.all_pass());
  Json j = report_to_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["checks"].size() == 5);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("provenance"));
  }
  std::string text = to_text(r);
  for (const auto& c : r.checks) {
    CHECK(text.find(c.id) != std::string::npos);
    CHECK(text.find(c.expected) != std::string::npos);
    CHECK(text.find(c.computed) != std::string::npos);
  }

  CHECK_THROWS_AS(run_suite("no-such-suite"), value_error);
}

TEST_CASE("parallel suite execution assembles the same report") {
  SuiteOptions seq, par;
  par.parallel = true;
  Json a = report_to_json(run_suite("so9-table", seq));
  Json b = report_to_json(run_suite("so9-table", par));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("the freudenthal suite carries the dimension-discrepancy note") {
  SuiteReport r = run_suite("freudenthal-vs-weyl");
  CHECK(r.all_pass());
  bool found = false;
  for (const std::string& n : r.notes) found = found || (n.find("gl_14") != std::string::npos);
  CHECK(found);
  Json j = report_to_json(r);
  CHECK(j["notes"].size() == r.notes.size());
}
