#include <doctest.h>

#include "nbsim/core.hpp"

using namespace nbsim;

TEST_CASE("validate accepts a well-formed task") {
    Task t{"t1", 1000.0, 2000.0, 0.0, "u1", 0};
    CHECK(!validate(t).has_value());
}

TEST_CASE("validate reports the first violated invariant") {
    Task t{"t1", 0.0, 2000.0, 0.0, "u1", 0};
    REQUIRE(validate(t).has_value());
    CHECK(*validate(t) == "length_mi > 0");

    Resource r{"r1", 64.0, -1.0, 2000.0, "h1", "dc1"};
    REQUIRE(validate(r).has_value());
    CHECK(*validate(r) == "bandwidth > 0");

    Task negative_arrival{"t1", 10.0, 10.0, -1.0, "u1", 0};
    CHECK(*validate(negative_arrival) == "arrival_ms >= 0");
}

TEST_CASE("geo points must be finite") {
    CHECK(!validate(GeoPoint{3.0, 4.0}).has_value());
    CHECK(validate(GeoPoint{1.0 / 0.0, 0.0}).has_value());
}

TEST_CASE("data center needs at least one host") {
    DataCenter dc{"dc1", {0, 0}, {}};
    REQUIRE(validate(dc).has_value());
    CHECK(*validate(dc) == "at least one host");
    dc.hosts.push_back({"h1", 2000.0, 4096.0, 100.0, {}});
    CHECK(!validate(dc).has_value());
}

TEST_CASE("user class names round-trip") {
    for (auto c : {UserClass::HighEnd, UserClass::Privileged, UserClass::Casual,
                   UserClass::Naive, UserClass::Underprivileged}) {
        auto back = user_class_from_string(to_string(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK(!user_class_from_string("Root").has_value());
}
