#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "hsearch/cli.hpp"

namespace {

extern "C" void on_interrupt(int) { hsearch::cli::request_stop(); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  std::vector<std::string> args(argv + 1, argv + argc);
  return hsearch::cli::run(args, std::cout, std::cerr);
}
