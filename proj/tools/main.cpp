#include <cstdio>
#include <string>
#include <vector>

#include "transfinite/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  transfinite::CliResult r = transfinite::run_cli(args);
  std::FILE* stream = r.exit_code == 0 ? stdout : stderr;
  std::fwrite(r.payload.data(), 1, r.payload.size(), stream);
  return r.exit_code;
}
