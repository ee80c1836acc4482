#include "lozenge/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace lozenge {
namespace {

TEST(Csv, ExactOutput) {
  std::ostringstream os;
  write_csv(os, count_dp(3));
  EXPECT_EQ(os.str(), "n,l,count\n3,0,1\n3,1,9\n3,2,24\n3,3,18\n");
}

TEST(Json, ExactOutput) {
  std::ostringstream os;
  write_json(os, count_dp(2));
  EXPECT_EQ(os.str(), "{\"counts\":[\"1\",\"3\"],\"n\":2}\n");
}

TEST(Plain, ExactOutput) {
  std::ostringstream os;
  write_plain(os, count_dp(2));
  EXPECT_EQ(os.str(), "L(2,0) = 1\nL(2,1) = 3\n");
}

TEST(Csv, RoundTrip) {
  std::stringstream buf;
  buf << kCsvHeader << '\n';
  std::vector<CountVector> written;
  for (int n = 1; n <= 12; ++n) {
    written.push_back(count_dp(n));
    write_csv_rows(buf, written.back());
  }
  EXPECT_EQ(parse_csv(buf), written);
}

TEST(Json, RoundTrip) {
  for (int n = 1; n <= 12; ++n) {
    const auto v = count_dp(n);
    std::ostringstream os;
    write_json(os, v);
    EXPECT_EQ(parse_json(os.str()), v) << "n=" << n;
  }
}

TEST(Json, LargeCountsStayExact) {
  const auto v = count_dp(15);
  const auto j = to_json(v);
  EXPECT_EQ(j["counts"][11].get<std::string>(), "32139701729335767774");
}

TEST(Parse, RejectsMalformedInput) {
  std::istringstream missing("3,0\n");
  EXPECT_THROW(parse_csv(missing), std::invalid_argument);
  std::istringstream skipped("3,0,1\n3,2,24\n");
  EXPECT_THROW(parse_csv(skipped), std::invalid_argument);
  std::istringstream letters("3,0,abc\n");
  EXPECT_THROW(parse_csv(letters), std::invalid_argument);
  EXPECT_THROW(parse_json("{\"n\":3}"), std::invalid_argument);
  EXPECT_THROW(parse_json("[1,2]"), std::invalid_argument);
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("plain"), OutputFormat::Plain);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace lozenge
