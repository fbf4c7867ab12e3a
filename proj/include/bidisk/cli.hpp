#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bidisk/json_io.hpp"
#include "bidisk/realization.hpp"

namespace bidisk::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kInputError = 3;

// args excludes the program name. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string fnv1a64(const std::string& bytes);

json to_json(const Eigen::MatrixXcd& m);
json to_json(const Realization& r);

}  // namespace bidisk::cli
