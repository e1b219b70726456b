#pragma once

namespace evio::cli {

/// Exit codes: 0 success, 1 config error, 2 data error, 3 estimator divergence.
int run(int argc, char** argv);

}  // namespace evio::cli
