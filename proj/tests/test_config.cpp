#include <doctest.h>

#include <string>
#include <vector>

#include "diffwalk/config.hpp"

using namespace diffwalk;

TEST_CASE("parser handles comments, blanks, and typed getters") {
    const Config c = Config::parse(
        "# experiment setup\n"
        "p0 = 0.2\n"
        "\n"
        "steps = 2000   # trailing comment\n"
        "name = two region\n"
        "renorm = true\n"
        "breaks = -1.0, 0.0, 1.0\n");
    CHECK(c.get_double("p0") == 0.2);
    CHECK(c.get_int("steps") == 2000);
    CHECK(c.get_string("name") == "two region");
    CHECK(c.get_bool("renorm", false) == true);
    CHECK(c.get_doubles("breaks") == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(c.has("p0"));
    CHECK_FALSE(c.has("missing"));
}

TEST_CASE("fallbacks apply only to absent keys") {
    const Config c = Config::parse("a = 1\n");
    CHECK(c.get_double("a", 9.0) == 1.0);
    CHECK(c.get_double("b", 9.0) == 9.0);
    CHECK(c.get_int("b", 7) == 7);
    CHECK(c.get_string("b", "x") == "x");
}

TEST_CASE("errors name the offending field") {
    const Config c = Config::parse("count = many\n");
    try {
        (void)c.get_int("count");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "count");
    }
    try {
        (void)c.get_double("absent");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "absent");
    }
    CHECK_THROWS_AS(Config::parse("not a pair\n"), ConfigError);
}

TEST_CASE("resolved text is deterministic and reparses to the same config") {
    Config c = Config::parse("b = 2\na = 1\n");
    c.set("c", "3");
    const std::string text = c.resolved_text();
    CHECK(text == "a = 1\nb = 2\nc = 3\n");
    const Config back = Config::parse(text);
    CHECK(back.get_int("a") == 1);
    CHECK(back.get_int("c") == 3);
}

TEST_CASE("numbers are parsed strictly") {
    const Config c = Config::parse("x = 1.5e2\ny = 12abc\n");
    CHECK(c.get_double("x") == 150.0);
    CHECK_THROWS_AS((void)c.get_double("y"), ConfigError);
    CHECK_THROWS_AS((void)c.get_int("x"), ConfigError);  // non-integral
}
