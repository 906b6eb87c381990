#pragma once
/* Command-line front end. Exit codes: 0 pass, 1 mathematical failure (with a
   counterexample artifact), 2 structural or input error, 3 unsaturated cap
   under --strict. Worker count never changes output bytes. */
#include <string>
#include <vector>

namespace steiner {

int run_cli(const std::vector<std::string>& args); /* argv[1..] */

}
