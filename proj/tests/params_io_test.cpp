#include <gtest/gtest.h>

#include <sstream>

#include "truncmul/error.hpp"
#include "truncmul/params_io.hpp"

using namespace truncmul;

namespace {

ErrorKind parse_error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_params(in);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NoCandidates;  // sentinel: parsed fine
}

}  // namespace

TEST(ParamsFile, ExactFormat) {
  std::ostringstream out;
  write_params(out, {13, 14, 22, 5, 2, Int(6173)});
  EXPECT_EQ(out.str(), "l=13\nm=14\np=22\nq=5\nr=2\nz=6173\n");
}

TEST(ParamsFile, RoundTripsLargeZ) {
  const auto p = gen_params(7, 2048, 512, 512, 129);
  std::stringstream io;
  write_params(io, p);
  const auto back = read_params(io);
  EXPECT_EQ(back.z, p.z);
  EXPECT_EQ(back.p, p.p);
  EXPECT_EQ(back.r, p.r);
}

TEST(ParamsFile, AcceptsAnyKeyOrderAndMissingFinalNewline) {
  std::istringstream in("z=6173\nr=2\nq=5\np=22\nm=14\nl=13");
  const auto p = read_params(in);
  EXPECT_EQ(p.l, 13u);
  EXPECT_EQ(p.z, 6173);
}

TEST(ParamsFile, RejectsMalformedInput) {
  const std::string good = "l=13\nm=14\np=22\nq=5\nr=2\n";
  EXPECT_EQ(parse_error_of(good + "z=6173\n"), ErrorKind::NoCandidates);
  EXPECT_EQ(parse_error_of(good + "z=6173\nw=1\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=0x181d\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z = 6173\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=6173 \n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=-6173\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=6173\r\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=1\nz=2\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "\nz=6173\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_of(good + "z=\n"), ErrorKind::ParseError);
}
