#include "truncmul/params_io.hpp"

#include <array>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "truncmul/error.hpp"

namespace truncmul {

namespace {

constexpr std::array<std::string_view, 6> kKeys = {"l", "m", "p", "q", "r", "z"};

unsigned to_count(const Int& v, std::string_view key) {
  if (v > std::numeric_limits<unsigned>::max() / 2) {
    throw Error(ErrorKind::ParseError, std::string(key) + " out of range");
  }
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

void write_params(std::ostream& out, const ProtocolParams& params) {
  out << "l=" << params.l << '\n'
      << "m=" << params.m << '\n'
      << "p=" << params.p << '\n'
      << "q=" << params.q << '\n'
      << "r=" << params.r << '\n'
      << "z=" << to_decimal(params.z) << '\n';
}

ProtocolParams read_params(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  std::array<std::optional<Int>, kKeys.size()> values;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;

    const std::string where = "line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, where + ": expected key=value");
    }
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);

    std::size_t index = kKeys.size();
    for (std::size_t i = 0; i < kKeys.size(); ++i) {
      if (kKeys[i] == key) index = i;
    }
    if (index == kKeys.size()) {
      throw Error(ErrorKind::ParseError,
                  where + ": unknown key '" + std::string(key) + "'");
    }
    if (values[index]) {
      throw Error(ErrorKind::ParseError,
                  where + ": duplicate key '" + std::string(key) + "'");
    }
    values[index] = parse_decimal(value);
  }

  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (!values[i]) {
      throw Error(ErrorKind::ParseError,
                  "missing key '" + std::string(kKeys[i]) + "'");
    }
  }

  ProtocolParams params;
  params.l = to_count(*values[0], "l");
  params.m = to_count(*values[1], "m");
  params.p = to_count(*values[2], "p");
  params.q = to_count(*values[3], "q");
  params.r = to_count(*values[4], "r");
  params.z = *values[5];
  return params;
}

void save_params(const std::filesystem::path& path, const ProtocolParams& params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  }
  write_params(out, params);
}

ProtocolParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  }
  return read_params(in);
}

}  // namespace truncmul
