#include <gtest/gtest.h>

#include <filesystem>

#include "necklace/io.hpp"
#include "necklace/staircase.hpp"

using namespace necklace;

namespace {

std::string data(const std::string& name) { return std::string(NECKLACE_DATA_DIR) + "/" + name; }

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::resource_limit;
}

}  // namespace

TEST(Io, BundleRoundTrip) {
  for (const char* name : {"prism-bundle.json", "hopf-bundle.json"}) {
    const auto j = io::read_json(data(name));
    const auto b = io::bundle_from_json(j);
    EXPECT_EQ(io::bundle_to_json(b), j);
  }
}

TEST(Io, DecorationRoundTrip) {
  const auto j = io::read_json(data("hopf.json"));
  const auto d = io::decoration_from_json(j);
  EXPECT_TRUE(validate_decoration(d).ok());
  EXPECT_EQ(io::decoration_to_json(d), j);

  const auto tmp = std::filesystem::temp_directory_path() / "necklace-io-test.json";
  io::write_json(tmp.string(), io::decoration_to_json(d));
  EXPECT_EQ(io::decoration_from_json(io::read_json(tmp.string())), d);
  std::filesystem::remove(tmp);
}

TEST(Io, CycleRoundTrip) {
  FundamentalCycle fc;
  fc.signs = {{10, 1}, {11, -1}};
  EXPECT_EQ(io::cycle_from_json(io::cycle_to_json(fc)).signs, fc.signs);
}

TEST(Io, LoadBaseAcceptsComplexBundleAndDecoration) {
  const auto bt = io::load_base(data("boundary-tetrahedron.json"));
  EXPECT_EQ(bt.of_dim(2).size(), 4u);
  EXPECT_EQ(io::load_base(data("hopf.json")).simplices(), bt.simplices());
  EXPECT_EQ(io::load_base(data("hopf-bundle.json")).simplices(), bt.simplices());
}

TEST(Io, Errors) {
  auto j = io::read_json(data("hopf.json"));
  j.erase("v");
  EXPECT_EQ(code_of([&] { io::decoration_from_json(j); }), errc::malformed_input);
  j["v"] = 2;
  EXPECT_EQ(code_of([&] { io::decoration_from_json(j); }), errc::malformed_input);
  j["v"] = 1;
  j["shifts"].erase("13/0");
  EXPECT_EQ(code_of([&] { io::decoration_from_json(j); }), errc::malformed_input);
  j = io::read_json(data("hopf.json"));
  j["words"]["0"] = {0, 2};
  EXPECT_EQ(code_of([&] { io::decoration_from_json(j); }), errc::malformed_input);

  auto c = io::read_json(data("boundary-tetrahedron.json"));
  c["simplices"].push_back({2, 1});
  EXPECT_EQ(code_of([&] { io::complex_from_json(c); }), errc::malformed_input);
  EXPECT_EQ(code_of([] { io::read_json(data("no-such-file.json")); }), errc::malformed_input);
}
