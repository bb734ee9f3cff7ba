#pragma once

namespace trendtrace {

/// Parses and runs one command. Returns the process exit code:
/// 0 success, 1 data error, 2 usage error.
int run_cli(int argc, char** argv);

} // namespace trendtrace
