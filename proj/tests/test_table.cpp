#include <doctest.h>

#include <sstream>

#include "kunz/ng_series.hpp"
#include "kunz/table.hpp"

using namespace kunz;

TEST_CASE("csv rendering") {
  OutputTable table;
  table.name = "demo";
  table.columns = {"g", "value", "ratio", "note"};
  table.rows.push_back({Count(4), std::int64_t(-3), 1.5, std::string("x")});
  table.rows.push_back({Count(5), std::int64_t(7), std::monostate{}, std::string("y")});
  CHECK(table.to_csv() ==
        "# g,value,ratio,note\n"
        "4,-3,1.500000,x\n"
        "5,7,,y\n");
}

TEST_CASE("json rendering") {
  OutputTable table;
  table.name = "demo";
  table.columns = {"g", "ratio"};
  table.rows.push_back({Count(1), 0.0726});
  table.rows.push_back({Count(2), std::monostate{}});
  CHECK(table.to_json() ==
        "{\"name\":\"demo\",\"columns\":[\"g\",\"ratio\"],"
        "\"rows\":[[1,0.072600],[2,null]]}");
  CHECK(render_tables({table, table}, "json").front() == '[');
  CHECK_THROWS_AS(render_tables({table}, "yaml"), std::invalid_argument);
}

TEST_CASE("integers never pick up exponent notation") {
  OutputTable table;
  table.columns = {"big"};
  table.rows.push_back({Count(93635242237ull)});
  CHECK(table.to_csv() == "# big\n93635242237\n");
}

TEST_CASE("ng series parsing") {
  std::istringstream good("# comment\n0,1\n1,1\n2,2\n\n3,4\n");
  const NgSeries series = parse_ng_series(good);
  CHECK(series.values == std::vector<Count>({1, 1, 2, 4}));
  CHECK(series.max_genus() == 3);

  std::istringstream gap("0,1\n2,2\n");
  CHECK_THROWS_WITH_AS(parse_ng_series(gap), doctest::Contains("line 2"),
                       std::invalid_argument);

  std::istringstream junk("0,1\n1,x\n");
  CHECK_THROWS_WITH_AS(parse_ng_series(junk), doctest::Contains("line 2"),
                       std::invalid_argument);

  std::istringstream no_n0("0,2\n");
  CHECK_THROWS_AS(parse_ng_series(no_n0), std::invalid_argument);

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_ng_series(empty), std::invalid_argument);
}

TEST_CASE("emitted csv feeds back through the ng parser") {
  OutputTable table;
  table.columns = {"g", "n_g", "t_g"};
  table.rows.push_back({Count(0), Count(1), Count(1)});
  table.rows.push_back({Count(1), Count(1), Count(1)});
  table.rows.push_back({Count(2), Count(2), Count(2)});
  std::istringstream round_trip(table.to_csv());
  const NgSeries series = parse_ng_series(round_trip);
  CHECK(series.values == std::vector<Count>({1, 1, 2}));
}
