#pragma once

#include <filesystem>
#include <iosfwd>

#include "truncmul/protocol.hpp"

namespace truncmul {

// Parameter file: one `key=value` per line, keys exactly l,m,p,q,r,z, decimal
// values, '\n' line endings, no whitespace. Unknown, repeated or missing keys
// are rejected with Error(ParseError). Parsing does not validate constraints.

void write_params(std::ostream& out, const ProtocolParams& params);
ProtocolParams read_params(std::istream& in);

void save_params(const std::filesystem::path& path, const ProtocolParams& params);
ProtocolParams load_params(const std::filesystem::path& path);

}  // namespace truncmul
