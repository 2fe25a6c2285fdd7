#include "sepball/cli.hpp"

int main(int argc, char** argv) {
  return sepball::cli::run(argc, argv);
}
