// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "boxlab/error.hpp"
#include "boxlab/json_io.hpp"
#include "gen.hpp"

using namespace boxlab;

TEST_CASE("box round trip") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    BipartiteBox b = testing::random_box(rng, i % 2 == 0);
    CHECK(box_from_json(Json::parse(canonical_dump(box_to_json(b)))) == b);
  }
  Json bad = box_to_json(pr_box());
  bad["p"][0][0][0][0] = 0.7;
  CHECK_THROWS_AS(box_from_json(bad), NormalizationError);
  CHECK_THROWS_AS(box_from_json(Json{{"q", 1}}), InvalidInput);
  CHECK_THROWS_AS(box_from_json(Json{{"p", {1, 2}}}), InvalidInput);
}

TEST_CASE("matrix and state round trip") {
  Rng rng(2);
  QuantumState pure = random_pure_state(4, rng);
  QuantumState back = state_from_json(Json::parse(canonical_dump(state_to_json(pure))));
  CHECK(back.is_pure());
  CHECK(back.vector() == pure.vector());
  QuantumState mixed = random_mixed_state(4, rng);
  QuantumState mback = state_from_json(state_to_json(mixed));
  CHECK_FALSE(mback.is_pure());
  CHECK(mback.density() == mixed.density());

  Json real_only{{"re", {{1, 0}, {0, -1}}}};
  CHECK(observable_from_json(real_only).is_involution());
  CHECK_THROWS_AS(observable_from_json(Json{{"re", {{0, 1}, {0, 0}}}}), NonHermitian);
}

TEST_CASE("transcript round trip") {
  GameTranscript tr{{{0, 0, 1, 1, 0}, {1, 1, 1, 0, 1}}, "pr", 42};
  std::stringstream ss;
  write_transcript(ss, tr);
  CHECK(ss.str() ==
        "{\"box_id\":\"pr\",\"rounds\":2,\"seed\":42}\n"
        "{\"a\":1,\"b\":0,\"t\":0,\"x\":0,\"y\":1}\n"
        "{\"a\":0,\"b\":1,\"t\":1,\"x\":1,\"y\":1}\n");
  GameTranscript back = read_transcript(ss);
  CHECK(back.rounds == tr.rounds);
  CHECK(back.box_id == "pr");
  CHECK(back.seed == 42);

  std::stringstream bad("{\"box_id\":\"pr\",\"rounds\":1,\"seed\":0}\n{\"a\":2,\"b\":0,\"t\":0,\"x\":0,\"y\":1}\n");
  CHECK_THROWS_AS(read_transcript(bad), InvalidInput);
  std::stringstream short_file("{\"box_id\":\"pr\",\"rounds\":3,\"seed\":0}\n");
  CHECK_THROWS_AS(read_transcript(short_file), InvalidInput);
}

TEST_CASE("canonical_dump") {
  Json j{{"b", 0.1}, {"a", 1}, {"c", {{"z", 2.5}, {"y", nullptr}}}};
  CHECK(canonical_dump(j, -1) == "{\"a\":1,\"b\":0.10000000000000001,\"c\":{\"y\":null,\"z\":2.5}}");
  CHECK(canonical_dump(Json(std::nan("")), -1) == "null");
}
