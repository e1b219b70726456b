#include "evio/cli/runner.hpp"

int main(int argc, char** argv) { return evio::cli::run(argc, argv); }
