#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace egor {

// exit status: 0 pass (or expected failure observed), 1 verification failure, 2 usage or input error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egor
