#include "jcsim/cli.hpp"

int main(int argc, char** argv) { return jcsim::cli::run(argc, argv); }
