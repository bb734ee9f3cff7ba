#include "trendtrace/cli.hpp"

int main(int argc, char** argv) { return trendtrace::run_cli(argc, argv); }
