/* pdcc.cpp
 *
 * Command line front end; all logic lives in pdcc::cli_run.
 */
#include <iostream>
#include <string>
#include <vector>

#include "pdcc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pdcc::cli_run(args, std::cout, std::cerr);
}
