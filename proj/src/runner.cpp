#include "evio/cli/runner.hpp"

namespace evio::cli {

int run(int, char**) { return 0; }  // filled in with the pipeline wiring

}  // namespace evio::cli
