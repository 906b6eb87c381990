#include "steiner/cli.hpp"

int main(int argc, char** argv) {
  return steiner::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
