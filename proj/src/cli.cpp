// SPDX-License-Identifier: Apache-2.0
#include "lfrac/cli.hpp"

namespace lfrac {

int run_cli(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
  err << "not implemented yet\n";
  return 1;
}

}  // namespace lfrac
