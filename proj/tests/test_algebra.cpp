#include "doctest.h"

#include "coev/algebra.hpp"
#include "support/oracles.hpp"

using namespace coev;
using coev::testing::make_space;

TEST_CASE("history space construction enforces its invariants") {
    CHECK_THROWS_AS(HistorySpace::make({}), std::invalid_argument);
    CHECK_THROWS_AS(HistorySpace::make({"a", ""}), std::invalid_argument);
    CHECK_THROWS_AS(HistorySpace::make({"a", "a"}), std::invalid_argument);

    std::vector<std::string> too_many;
    for (int i = 0; i < 25; ++i) too_many.push_back("h" + std::to_string(i));
    CHECK_THROWS_AS(HistorySpace::make(too_many), CapacityError);

    const SpacePtr space = HistorySpace::make({"up", "down"});
    CHECK(space->size() == 2);
    CHECK(space->event_count() == 4);
    CHECK(space->full_mask() == 0b11);
    CHECK(space->label(1) == "down");
    CHECK(space->index_of("up") == 0);
    CHECK_FALSE(space->index_of("sideways").has_value());
    CHECK_THROWS_AS(space->label(2), std::out_of_range);
}

TEST_CASE("events validate their mask and report members") {
    const SpacePtr space = make_space(3);
    CHECK_THROWS_AS(Event(space, 8), std::out_of_range);

    const Event e(space, 0b101);
    CHECK(e.cardinality() == 2);
    CHECK(e.contains(0));
    CHECK_FALSE(e.contains(1));
    CHECK(e.member_labels() == std::vector<std::string>{"h0", "h2"});
    CHECK_THROWS_AS(e.contains(3), std::out_of_range);

    const std::vector<std::string> labels{"h2", "h0"};
    CHECK(event_from_labels(space, labels) == e);
    const std::vector<std::size_t> indices{0, 2};
    CHECK(event_from_indices(space, indices) == e);
    CHECK_THROWS_AS(event_from_labels(space, std::vector<std::string>{"nope"}),
                    std::invalid_argument);
}

TEST_CASE("ring operations compute the set forms") {
    const SpacePtr space = make_space(3);
    const Event a(space, 0b011);  // {h0,h1}
    const Event b(space, 0b110);  // {h1,h2}

    CHECK(product(a, b).mask() == 0b010);
    CHECK(sum(a, b).mask() == 0b101);
    CHECK(product(unit_event(space), b) == b);
    CHECK(product(a, a) == a);
    CHECK(sum(a, a) == empty_event(space));
    CHECK(sum(a, empty_event(space)) == a);
    CHECK(complement(empty_event(space)) == unit_event(space));
    CHECK(complement(unit_event(space)) == empty_event(space));
    CHECK(complement(Event(space, 0b001)).mask() == 0b110);

    CHECK(join(Event(space, 0b001), Event(space, 0b010)).mask() == 0b011);
    CHECK(join(a, empty_event(space)) == a);
    CHECK(join(a, unit_event(space)) == unit_event(space));

    CHECK(is_subset(Event(space, 0b001), a));
    CHECK_FALSE(is_subset(a, Event(space, 0b001)));
    CHECK(is_subset(empty_event(space), b));
}

TEST_CASE("implication event agrees with both of its defining forms") {
    const SpacePtr space = make_space(2);
    const Event a(space, 0b01), b(space, 0b10);

    // A inside B makes the implication trivially the whole space.
    CHECK(implies(a, join(a, b)) == unit_event(space));
    CHECK(implies(unit_event(space), empty_event(space)) == empty_event(space));
    CHECK(implies(empty_event(space), unit_event(space)) == unit_event(space));

    for (std::size_t n = 1; n <= 4; ++n) {
        const SpacePtr s = make_space(n);
        enumerate_events(s, [&](const Event& x) {
            enumerate_events(s, [&](const Event& y) {
                const Event direct = implies(x, y);
                CHECK(direct == complement(product(x, complement(y))));
                CHECK(direct == sum(sum(unit_event(s), x), product(x, y)));
            });
        });
    }
}

TEST_CASE("ring axioms hold exhaustively on small spaces") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const SpacePtr s = make_space(n);
        const auto events = all_events(s);
        for (const Event& x : events) {
            CHECK(product(x, x) == x);
            CHECK(sum(x, x) == empty_event(s));
            CHECK(complement(complement(x)) == x);
            for (const Event& y : events) {
                CHECK(product(x, y) == product(y, x));
                CHECK(sum(x, y) == sum(y, x));
                CHECK(complement(join(x, y)) == product(complement(x), complement(y)));
                CHECK(join(x, y) == sum(sum(product(x, y), x), y));
                for (const Event& z : events) {
                    CHECK(product(product(x, y), z) == product(x, product(y, z)));
                    CHECK(sum(sum(x, y), z) == sum(x, sum(y, z)));
                    CHECK(product(x, sum(y, z)) == sum(product(x, y), product(x, z)));
                }
            }
        }
    }
}

TEST_CASE("subset is a partial order with bottom and top") {
    const SpacePtr s = make_space(3);
    const auto events = all_events(s);
    for (const Event& x : events) {
        CHECK(is_subset(x, x));
        CHECK(is_subset(empty_event(s), x));
        CHECK(is_subset(x, unit_event(s)));
        for (const Event& y : events) {
            if (is_subset(x, y) && is_subset(y, x)) CHECK(x == y);
            for (const Event& z : events) {
                if (is_subset(x, y) && is_subset(y, z)) CHECK(is_subset(x, z));
            }
        }
    }
}

TEST_CASE("cross-space operations are rejected, never coerced") {
    const SpacePtr a = HistorySpace::make({"x", "y"});
    const SpacePtr b = HistorySpace::make({"p", "q"});
    CHECK_THROWS_AS(product(Event(a, 1), Event(b, 1)), SpaceMismatchError);
    CHECK_THROWS_AS(sum(Event(a, 1), Event(b, 1)), SpaceMismatchError);
    CHECK_THROWS_AS(implies(Event(a, 1), Event(b, 1)), SpaceMismatchError);
    CHECK_THROWS_AS(join(Event(a, 1), Event(b, 1)), SpaceMismatchError);
    CHECK_THROWS_AS(is_subset(Event(a, 1), Event(b, 1)), SpaceMismatchError);

    // Equal labels mean the same space, wherever the handle came from.
    const SpacePtr a_again = HistorySpace::make({"x", "y"});
    CHECK(same_space(a, a_again));
    CHECK(product(Event(a, 1), Event(a_again, 3)).mask() == 1);
}

TEST_CASE("event enumeration is complete and ascending") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
        const SpacePtr s = make_space(n);
        const auto events = all_events(s);
        CHECK(events.size() == (std::size_t{1} << n));
        for (std::size_t k = 0; k < events.size(); ++k) {
            CHECK(events[k].mask() == k);
        }
    }
}
