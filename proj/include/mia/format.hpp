#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "mia/model.hpp"

namespace mia {

/// Parses the line-oriented model format:
///
///   mia VendingSpec            # or: iolts <name>
///   inputs  1euro 2euro coffee tea cups
///   outputs change cup error
///   states  q0 q1 q2 q3 q4 q5
///   init    q0
///   must q0 2euro q1           # iolts files use: trans <src> <action> <dst>
///   may  q3 error q5
///
/// '#' starts a comment, tokens are whitespace-separated, duplicate
/// transition lines are idempotent. Throws Error(kParse) with a line number
/// on malformed input; semantic problems are left to validate().
RawModel parse_model(std::string_view text, std::string_view origin = "");

RawModel load_raw(const std::string& path);

/// Parses + validates + constructs. Throws kParse or kInvalidModel.
std::variant<Mia, Iolts> load_model(const std::string& path);
Mia load_mia(const std::string& path);      // accepts iolts files via embedding
Iolts load_iolts(const std::string& path);  // rejects mia files

/// Canonical serialization; parse(serialize(m)) reconstructs m exactly.
/// `header_comment` lines, when given, are emitted as leading '#' comments.
std::string serialize(const Mia& m, const std::vector<std::string>& header_comment = {});
std::string serialize(const Iolts& m, const std::vector<std::string>& header_comment = {});

}  // namespace mia
