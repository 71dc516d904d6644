#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfc::cli {

// Exit statuses. Decision commands use Yes/No/Resource; the rest use Ok/Input.
enum Exit : int { Yes = 0, No = 1, Resource = 2, Input = 3, Internal = 4 };

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfc::cli
