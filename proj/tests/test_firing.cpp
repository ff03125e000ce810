#include <doctest.h>

#include "chipfire/errors.hpp"
#include "chipfire/firing.hpp"

using namespace chipfire;

namespace {
const Graph P2(2, {{0, 1}});
const Graph P3(3, {{0, 1}, {1, 2}});
const Graph K1(1, {});
const Graph C3(3, {{0, 1}, {1, 2}, {0, 2}});
}  // namespace

TEST_CASE("total_chips") {
  CHECK(total_chips({2, 0}) == 2);
  CHECK(total_chips({0, 0, 0}) == 0);
  CHECK(total_chips({1, 0, 1}) == 2);
  CHECK_THROWS_AS(total_chips({~0ULL, 1}), ChipOverflow);
}

TEST_CASE("is_legal_fire") {
  CHECK(is_legal_fire(P2, {1, 0}, 0));
  CHECK_FALSE(is_legal_fire(P2, {0, 1}, 0));
  CHECK(is_legal_fire(K1, {0}, 0));
  CHECK_THROWS_AS(is_legal_fire(P2, {1, 0, 0}, 0), InputError);
  CHECK_THROWS_AS(is_legal_fire(P2, {1, 0}, 2), InputError);
}

TEST_CASE("fire") {
  CHECK(fire(P2, {2, 0}, 0) == ChipConfig{1, 1});
  CHECK(fire(P3, {0, 2, 0}, 1) == ChipConfig{1, 0, 1});
  CHECK(fire(K1, {3}, 0) == ChipConfig{3});
  CHECK_THROWS_AS(fire(P2, {0, 1}, 0), IllegalFiring);
}

TEST_CASE("apply_sequence") {
  CHECK(apply_sequence(P2, {1, 1}, {0, 1}) == ChipConfig{1, 1});
  CHECK(apply_sequence(P2, {2, 0}, {0, 0}) == ChipConfig{0, 2});
  CHECK(apply_sequence(P3, {1, 2, 3}, {}) == ChipConfig{1, 2, 3});

  try {
    apply_sequence(P3, {2, 0, 0}, {1});
    FAIL("expected IllegalFiring");
  } catch (const IllegalFiring& e) {
    CHECK(e.step() == 0);
    CHECK(e.vertex() == 1);
    CHECK(e.available() == 0);
    CHECK(e.required() == 2);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }

  try {
    apply_sequence(P3, {2, 0, 0}, {0, 0, 0});
    FAIL("expected IllegalFiring");
  } catch (const IllegalFiring& e) {
    CHECK(e.step() == 2);  // (2,0,0) -> (1,1,0) -> (0,2,0), then v0 is empty
    CHECK(e.vertex() == 0);
    CHECK(e.available() == 0);
  }
  CHECK_THROWS_AS(apply_sequence(P3, {1, 1, 1}, {3}), InputError);
}

TEST_CASE("apply_sequence equals iterated fire and the linear form") {
  ChipConfig c{3, 4, 2};
  FiringSequence seq{0, 1, 2, 1, 0};
  ChipConfig step = c;
  for (Vertex v : seq) step = fire(C3, step, v);
  CHECK(apply_sequence(C3, c, seq) == step);
  auto linear = apply_sequence_unchecked(C3, c, seq);
  for (Vertex v = 0; v < 3; ++v) CHECK(linear[v] == static_cast<std::int64_t>(step[v]));
}

TEST_CASE("apply_sequence_unchecked") {
  CHECK(apply_sequence_unchecked(P2, {0, 0}, {0}) == std::vector<std::int64_t>{-1, 1});
  CHECK(apply_sequence_unchecked(P3, {4, 0, 1}, {}) == std::vector<std::int64_t>{4, 0, 1});
  CHECK(apply_sequence_unchecked(P2, {1, 1}, {0, 1}) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("fire_count_vector") {
  CHECK(fire_count_vector({0, 1, 0}, 2) == std::vector<std::size_t>{2, 1});
  CHECK(fire_count_vector({}, 3) == std::vector<std::size_t>{0, 0, 0});
  CHECK(fire_count_vector({2}, 3) == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_AS(fire_count_vector({3}, 3), InputError);
}

TEST_CASE("reduce_sequence") {
  CHECK(reduce_sequence(P2, {1, 1}, {0, 1, 0, 1}) == FiringSequence{0, 1});
  CHECK(reduce_sequence(P2, {1, 1}, {0, 1}) == FiringSequence{});

  FiringSequence long_seq{1, 0, 2, 1, 0, 2};
  ChipConfig c{1, 2, 1};
  auto reduced = reduce_sequence(P3, c, long_seq);
  CHECK(reduced == FiringSequence{1, 0, 2});
  CHECK(apply_sequence(P3, c, reduced) == apply_sequence(P3, c, long_seq));
  CHECK(apply_sequence(P3, c, reduced) == c);
}

TEST_CASE("reduce_sequence preconditions") {
  CHECK_THROWS_AS(reduce_sequence(P3, {1, 2, 1}, {1, 0}), InputError);     // vertex 2 absent
  CHECK_THROWS_AS(reduce_sequence(P3, {0, 0, 0}, {0, 1, 2}), InputError);  // illegal
}

TEST_CASE("reduce_fully strips whole rounds") {
  FiringSequence seq{1, 0, 2, 1, 0, 2, 1, 0, 2, 1};
  ChipConfig c{1, 2, 1};
  auto reduced = reduce_fully(P3, c, seq);
  CHECK(reduced == FiringSequence{1});
  CHECK(apply_sequence(P3, c, reduced) == apply_sequence(P3, c, seq));
}

TEST_CASE("FiringSequence algebra") {
  CHECK(FiringSequence::range(2, 4) == FiringSequence{2, 3, 4});
  CHECK(FiringSequence::range(3, 2).empty());
  CHECK(concat(FiringSequence{0, 1}, FiringSequence{2}) == FiringSequence{0, 1, 2});
}

TEST_CASE("text forms") {
  CHECK(parse_config("1,0,2") == ChipConfig{1, 0, 2});
  CHECK(parse_config(" 3 , 4 ") == ChipConfig{3, 4});
  CHECK(format_config({1, 0, 2}) == "1,0,2");
  CHECK(parse_sequence("") == FiringSequence{});
  CHECK(parse_sequence("0,1,0") == FiringSequence{0, 1, 0});
  CHECK(format_sequence({}) == "");
  CHECK(format_sequence({2, 0}) == "2,0");
  CHECK_THROWS_AS(parse_config(""), InputError);
  CHECK_THROWS_AS(parse_config("1,,2"), InputError);
  CHECK_THROWS_AS(parse_config("1,-2"), InputError);
  CHECK_THROWS_AS(parse_sequence("a"), InputError);

  for (const ChipConfig& c : {ChipConfig{0}, ChipConfig{7, 0, 12345678901ULL}}) {
    CHECK(parse_config(format_config(c)) == c);
  }
}
